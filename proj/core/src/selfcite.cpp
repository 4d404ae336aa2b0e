#include "uindex/selfcite.hpp"

#include "uindex/errors.hpp"

namespace uindex {

namespace {

std::optional<std::pair<std::string, std::string>>
find_shared_author(const Paper& citing, const Paper& cited) {
    for (const auto& ca : citing.authors) {
        for (const auto& oa : cited.authors) {
            if (same_author(ca, oa)) {
                return std::make_pair(ca.display_name, oa.display_name);
            }
        }
    }
    return std::nullopt;
}

} // namespace

CitationClass classify_citation(const Corpus& c, const CitationEdge& e) {
    const Paper& citing = c.paper(e.citing_id);
    const Paper& cited = c.paper(e.cited_id);
    return find_shared_author(citing, cited) ? CitationClass::self_citation
                                             : CitationClass::independent;
}

CitationBreakdown breakdown(const Corpus& c, const std::string& cited_id) {
    const Paper& cited = c.paper(cited_id);
    CitationBreakdown b;
    b.cited_id = cited_id;
    for (const auto& citing_id : c.incoming(cited_id)) {
        const Paper& citing = c.paper(citing_id);
        if (find_shared_author(citing, cited)) {
            ++b.self_cites;
        } else {
            ++b.independent;
        }
    }
    b.total = b.independent + b.self_cites;
    return b;
}

std::vector<CitationBreakdown> breakdown_all(const Corpus& c) {
    std::vector<CitationBreakdown> out;
    out.reserve(c.papers().size());
    for (const auto& p : c.papers()) {
        out.push_back(breakdown(c, p.id));
    }
    return out;
}

std::vector<ClassifiedCitation> classify_incoming(const Corpus& c, const std::string& cited_id) {
    const Paper& cited = c.paper(cited_id);
    std::vector<ClassifiedCitation> out;
    for (const auto& citing_id : c.incoming(cited_id)) {
        const Paper& citing = c.paper(citing_id);
        ClassifiedCitation cc;
        cc.citing_id = citing_id;
        cc.matched_pair = find_shared_author(citing, cited);
        cc.cls = cc.matched_pair ? CitationClass::self_citation : CitationClass::independent;
        out.push_back(std::move(cc));
    }
    return out;
}

} // namespace uindex
