#pragma once

#include "uindex/author.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace uindex {

/// A publication record. The number of authors (N in the scoring formula)
/// is the length of `authors` as given by the source.
struct Paper {
    std::string id;
    std::string title;
    int year = 0;
    std::vector<AuthorRef> authors;

    int author_count() const { return static_cast<int>(authors.size()); }
};

/// Directed citation: `citing_id` references `cited_id`. A citing paper
/// counts once per cited paper no matter how many in-text references it has.
struct CitationEdge {
    std::string citing_id;
    std::string cited_id;

    friend bool operator==(const CitationEdge&, const CitationEdge&) = default;
};

enum class ViolationKind {
    dangling_edge,
    duplicate_paper_id,
    duplicate_edge,
    self_edge,
    empty_author_list,
    empty_author_name,
};

/// One corpus invariant violation, with the record that caused it.
struct Violation {
    ViolationKind kind;
    std::string location; // e.g. "paper p3", "edge p1 -> p2"
    std::string message;
};

std::string to_string(ViolationKind kind);
std::string to_string(const Violation& v);

/// A closed set of papers and citation edges, immutable after construction.
///
/// Construction indexes the data as given, including invalid records, so
/// that validate() can report on them; call validate() (or load through
/// io::load_corpus, which does) before trusting derived counts.
class Corpus {
public:
    Corpus() = default;
    Corpus(std::vector<Paper> papers, std::vector<CitationEdge> edges);

    const std::vector<Paper>& papers() const { return papers_; }
    const std::vector<CitationEdge>& edges() const { return edges_; }

    bool has_paper(const std::string& id) const;
    /// nullptr when absent.
    const Paper* find_paper(const std::string& id) const;
    /// Throws LookupError when absent.
    const Paper& paper(const std::string& id) const;

    /// Ids of distinct papers citing `cited_id`, in first-seen edge order.
    const std::vector<std::string>& incoming(const std::string& cited_id) const;

    /// All identity keys appearing on at least one paper, sorted.
    std::vector<std::string> author_keys() const;
    bool has_author(const std::string& identity_key) const;
    std::size_t author_count() const { return author_papers_.size(); }

    /// Ids of papers listing the author, in corpus order, each paper once.
    /// Empty for unknown keys.
    const std::vector<std::string>& papers_of(const std::string& identity_key) const;

private:
    std::vector<Paper> papers_;
    std::vector<CitationEdge> edges_;
    std::unordered_map<std::string, std::size_t> by_id_;   // first occurrence wins
    std::unordered_map<std::string, std::vector<std::string>> incoming_;
    std::map<std::string, std::vector<std::string>> author_papers_;
};

/// Checks every corpus invariant and returns one entry per violation:
/// dangling edge endpoints, duplicate paper ids, duplicate edges,
/// self-edges, empty author lists, empty author names. Empty result
/// means the corpus is valid.
std::vector<Violation> corpus_validate(const Corpus& c);

} // namespace uindex
