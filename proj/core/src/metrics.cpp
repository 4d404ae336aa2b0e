#include "uindex/metrics.hpp"

#include "uindex/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>

namespace uindex {

namespace {

void require_nonnegative(const std::vector<int>& counts) {
    for (const int c : counts) {
        if (c < 0) throw DomainError("citation count must be nonnegative, got " +
                                     std::to_string(c));
    }
}

struct ScoredPaper {
    const Paper* paper;
    CitationBreakdown counts;
    double u;
};

// The author's papers with breakdowns and u scores, in corpus order.
std::vector<ScoredPaper> scored_papers(const Corpus& c, const std::string& author_key) {
    if (!c.has_author(author_key)) {
        throw LookupError("unknown author key \"" + author_key + "\" (corpus has " +
                          std::to_string(c.author_count()) + " known keys)");
    }
    std::vector<ScoredPaper> out;
    for (const auto& id : c.papers_of(author_key)) {
        const Paper& p = c.paper(id);
        CitationBreakdown b = breakdown(c, id);
        const double u = paper_u(b.independent, b.self_cites, p.author_count());
        out.push_back({&p, std::move(b), u});
    }
    return out;
}

// Top-10 selection: total citations descending, then more independent
// citations, then lexicographic paper id.
std::vector<std::size_t> top10_by_citations(const std::vector<ScoredPaper>& papers) {
    std::vector<std::size_t> order(papers.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ca = papers[a].counts;
        const auto& cb = papers[b].counts;
        if (ca.total != cb.total) return ca.total > cb.total;
        if (ca.independent != cb.independent) return ca.independent > cb.independent;
        return papers[a].paper->id < papers[b].paper->id;
    });
    if (order.size() > 10) order.resize(10);
    return order;
}

} // namespace

double paper_u(int independent, int self_cites, int authors) {
    if (authors < 1) {
        throw DomainError("author count must be >= 1, got " + std::to_string(authors));
    }
    if (independent < 0 || self_cites < 0) {
        throw DomainError("citation counts must be nonnegative, got independent=" +
                          std::to_string(independent) + " self=" + std::to_string(self_cites));
    }
    return (independent + self_cites / 2.0) / std::sqrt(static_cast<double>(authors));
}

double author_u(const Corpus& c, const std::string& author_key) {
    double sum = 0.0;
    for (const auto& sp : scored_papers(c, author_key)) sum += sp.u;
    return sum;
}

double author_u10(const Corpus& c, const std::string& author_key) {
    const auto papers = scored_papers(c, author_key);
    auto picked = top10_by_citations(papers);
    // Sum in corpus order so that an author with <= 10 papers accumulates
    // in exactly the same order as author_u.
    std::sort(picked.begin(), picked.end());
    double sum = 0.0;
    for (const std::size_t i : picked) sum += papers[i].u;
    return sum;
}

int h_index(std::vector<int> counts) {
    require_nonnegative(counts);
    std::sort(counts.begin(), counts.end(), std::greater<>());
    int h = 0;
    while (h < static_cast<int>(counts.size()) && counts[h] >= h + 1) ++h;
    return h;
}

int i10_index(const std::vector<int>& counts) {
    require_nonnegative(counts);
    return static_cast<int>(std::count_if(counts.begin(), counts.end(),
                                          [](int c) { return c >= 10; }));
}

int g_index(std::vector<int> counts) {
    require_nonnegative(counts);
    std::sort(counts.begin(), counts.end(), std::greater<>());
    long long running = 0;
    int g = 0;
    for (int i = 0; i < static_cast<int>(counts.size()); ++i) {
        running += counts[i];
        const long long next = static_cast<long long>(i + 1) * (i + 1);
        if (running >= next) g = i + 1;
    }
    return g;
}

double e_index(std::vector<int> counts) {
    const int h = h_index(counts); // validates nonnegativity
    if (h == 0) return 0.0;
    std::sort(counts.begin(), counts.end(), std::greater<>());
    long long core = 0;
    for (int i = 0; i < h; ++i) core += counts[i];
    return std::sqrt(static_cast<double>(core - static_cast<long long>(h) * h));
}

AuthorMetrics author_metrics(const Corpus& c, const std::string& author_key) {
    const auto papers = scored_papers(c, author_key);

    AuthorMetrics m;
    m.author_key = author_key;
    m.paper_count = static_cast<int>(papers.size());

    std::vector<int> totals;
    totals.reserve(papers.size());
    for (const auto& sp : papers) {
        totals.push_back(sp.counts.total);
        m.total_citations += sp.counts.total;
        m.independent_total += sp.counts.independent;
        m.self_total += sp.counts.self_cites;
        m.u_index += sp.u;
    }

    auto picked = top10_by_citations(papers);
    std::sort(picked.begin(), picked.end());
    for (const std::size_t i : picked) m.u10_index += papers[i].u;

    // Baselines run on raw totals: these are the incumbent indicators and
    // they count self-citations.
    m.h_index = h_index(totals);
    m.i10_index = i10_index(totals);
    m.g_index = g_index(totals);
    m.e_index = e_index(totals);
    return m;
}

std::vector<AuthorMetrics> all_author_metrics(const Corpus& c) {
    std::vector<AuthorMetrics> out;
    for (const auto& key : c.author_keys()) {
        out.push_back(author_metrics(c, key));
    }
    return out;
}

double round1_half_up(double x) {
    return std::floor(x * 10.0 + 0.5) / 10.0;
}

std::string format1(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1f", round1_half_up(x));
    return buf;
}

} // namespace uindex
