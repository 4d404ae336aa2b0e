#pragma once

#include "uindex/corpus.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace uindex {

enum class CitationClass {
    independent,    // no author shared between citing and cited paper
    self_citation,  // at least one shared author
};

/// Per-paper citation split. `independent` and `self_cites` always sum to
/// `total`, the number of distinct citing papers.
struct CitationBreakdown {
    std::string cited_id;
    int independent = 0;
    int self_cites = 0;
    int total = 0;
};

/// Classifies one edge: self-citation iff any author of the citing paper
/// is the same identity as any author of the cited paper.
/// Throws LookupError when either endpoint is missing from the corpus.
CitationClass classify_citation(const Corpus& c, const CitationEdge& e);

/// Counts independent and self citations over all distinct papers citing
/// `cited_id`. Throws LookupError for an unknown id.
CitationBreakdown breakdown(const Corpus& c, const std::string& cited_id);

/// Breakdown for every paper, in corpus order.
std::vector<CitationBreakdown> breakdown_all(const Corpus& c);

/// One incoming citation with its class; for self-citations, the first
/// matching (citing author, cited author) display-name pair.
struct ClassifiedCitation {
    std::string citing_id;
    CitationClass cls = CitationClass::independent;
    std::optional<std::pair<std::string, std::string>> matched_pair;
};

/// Classifies each incoming citation of `cited_id`, in first-seen order.
std::vector<ClassifiedCitation> classify_incoming(const Corpus& c, const std::string& cited_id);

} // namespace uindex
