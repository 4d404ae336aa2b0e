#include "uindex/corpus.hpp"

#include "uindex/errors.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace uindex {

namespace {

const std::vector<std::string> kNoIds{};

std::string edge_location(const CitationEdge& e) {
    return "edge " + e.citing_id + " -> " + e.cited_id;
}

} // namespace

std::string to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::dangling_edge: return "dangling-edge";
    case ViolationKind::duplicate_paper_id: return "duplicate-paper-id";
    case ViolationKind::duplicate_edge: return "duplicate-edge";
    case ViolationKind::self_edge: return "self-edge";
    case ViolationKind::empty_author_list: return "empty-author-list";
    case ViolationKind::empty_author_name: return "empty-author-name";
    }
    return "unknown";
}

std::string to_string(const Violation& v) {
    return to_string(v.kind) + " at " + v.location + ": " + v.message;
}

Corpus::Corpus(std::vector<Paper> papers, std::vector<CitationEdge> edges)
    : papers_(std::move(papers)), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < papers_.size(); ++i) {
        by_id_.emplace(papers_[i].id, i); // keeps the first on duplicates
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& e : edges_) {
        if (e.citing_id == e.cited_id) continue;
        if (!seen.emplace(e.citing_id, e.cited_id).second) continue;
        incoming_[e.cited_id].push_back(e.citing_id);
    }
    for (std::size_t i = 0; i < papers_.size(); ++i) {
        const Paper& p = papers_[i];
        if (by_id_.at(p.id) != i) continue; // shadowed duplicate id
        std::set<std::string> keys;
        for (const auto& a : p.authors) {
            if (trim(a.display_name).empty()) continue; // reported by corpus_validate
            std::string key = normalize_author(a);
            if (keys.insert(key).second) {
                author_papers_[std::move(key)].push_back(p.id);
            }
        }
    }
}

bool Corpus::has_paper(const std::string& id) const { return by_id_.contains(id); }

const Paper* Corpus::find_paper(const std::string& id) const {
    const auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &papers_[it->second];
}

const Paper& Corpus::paper(const std::string& id) const {
    if (const Paper* p = find_paper(id)) return *p;
    throw LookupError("unknown paper id: " + id);
}

const std::vector<std::string>& Corpus::incoming(const std::string& cited_id) const {
    const auto it = incoming_.find(cited_id);
    return it == incoming_.end() ? kNoIds : it->second;
}

std::vector<std::string> Corpus::author_keys() const {
    std::vector<std::string> keys;
    keys.reserve(author_papers_.size());
    for (const auto& [key, ids] : author_papers_) keys.push_back(key);
    return keys;
}

bool Corpus::has_author(const std::string& identity_key) const {
    return author_papers_.contains(identity_key);
}

const std::vector<std::string>& Corpus::papers_of(const std::string& identity_key) const {
    const auto it = author_papers_.find(identity_key);
    return it == author_papers_.end() ? kNoIds : it->second;
}

std::vector<Violation> corpus_validate(const Corpus& c) {
    std::vector<Violation> out;

    std::set<std::string> ids;
    for (const auto& p : c.papers()) {
        const std::string loc = "paper " + p.id;
        if (!ids.insert(p.id).second) {
            out.push_back({ViolationKind::duplicate_paper_id, loc,
                           "paper id \"" + p.id + "\" appears more than once"});
        }
        if (p.authors.empty()) {
            out.push_back({ViolationKind::empty_author_list, loc,
                           "paper \"" + p.id + "\" lists no authors"});
        }
        for (std::size_t i = 0; i < p.authors.size(); ++i) {
            if (trim(p.authors[i].display_name).empty()) {
                out.push_back({ViolationKind::empty_author_name,
                               loc + ", author #" + std::to_string(i + 1),
                               "author #" + std::to_string(i + 1) + " of paper \"" + p.id +
                                   "\" has an empty name"});
            }
        }
    }

    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& e : c.edges()) {
        const std::string loc = edge_location(e);
        if (e.citing_id == e.cited_id) {
            out.push_back({ViolationKind::self_edge, loc,
                           "paper \"" + e.citing_id + "\" cites itself"});
            continue;
        }
        if (!seen.emplace(e.citing_id, e.cited_id).second) {
            out.push_back({ViolationKind::duplicate_edge, loc, "edge repeated"});
            continue;
        }
        if (!c.has_paper(e.citing_id)) {
            out.push_back({ViolationKind::dangling_edge, loc,
                           "citing paper \"" + e.citing_id + "\" not in corpus"});
        }
        if (!c.has_paper(e.cited_id)) {
            out.push_back({ViolationKind::dangling_edge, loc,
                           "cited paper \"" + e.cited_id + "\" not in corpus"});
        }
    }
    return out;
}

} // namespace uindex
