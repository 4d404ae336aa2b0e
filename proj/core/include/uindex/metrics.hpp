#pragma once

#include "uindex/corpus.hpp"
#include "uindex/selfcite.hpp"

#include <string>
#include <vector>

namespace uindex {

/// Per-paper u score: (independent + self/2) / sqrt(authors).
///
/// Independent citations count fully, self-citations at half weight, and
/// the result is tapered by the square root of the author count. Computed
/// in full double precision; rounding is a display concern.
///
/// Throws DomainError when authors < 1 or any count is negative.
double paper_u(int independent, int self_cites, int authors);

/// Full scorecard for one author identity.
struct AuthorMetrics {
    std::string author_key;
    int paper_count = 0;
    int total_citations = 0;   // sum of (independent + self) over the author's papers
    int independent_total = 0;
    int self_total = 0;
    double u_index = 0.0;      // sum of paper_u over all papers
    double u10_index = 0.0;    // sum of paper_u over the top-10 papers by total citations
    int h_index = 0;
    int i10_index = 0;
    int g_index = 0;
    double e_index = 0.0;
};

/// Sum of paper_u over every paper listing the author (once per paper,
/// regardless of byline position). Throws LookupError for unknown keys.
double author_u(const Corpus& c, const std::string& author_key);

/// Like author_u but restricted to the author's top min(10, paper_count)
/// papers ranked by total citations, ties broken by higher independent
/// count then lexicographic paper id.
double author_u10(const Corpus& c, const std::string& author_key);

/// Largest h such that at least h of the counts are >= h.
int h_index(std::vector<int> citation_counts);

/// Number of counts >= 10.
int i10_index(const std::vector<int>& citation_counts);

/// Largest g (capped at the number of papers, no zero-padding) such that
/// the top g counts sum to at least g^2.
int g_index(std::vector<int> citation_counts);

/// sqrt(excess citations in the h-core): with h = h_index and c_1..c_h the
/// top counts, e = sqrt(sum c_j - h^2). Zero when h = 0.
double e_index(std::vector<int> citation_counts);

/// Assembles the whole scorecard. The baseline indicators (h, i10, g, e,
/// total) run on total per-paper citation counts, the u fields on the
/// independent/self breakdowns.
AuthorMetrics author_metrics(const Corpus& c, const std::string& author_key);

/// Scorecards for every author in the corpus, sorted by author_key.
std::vector<AuthorMetrics> all_author_metrics(const Corpus& c);

/// Half-up rounding to one decimal, the table display convention.
double round1_half_up(double x);

/// Formats with one decimal after half-up rounding, e.g. 56.2916 -> "56.3".
std::string format1(double x);

} // namespace uindex
