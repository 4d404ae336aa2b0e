#include "uindex/table1.hpp"

#include "uindex/metrics.hpp"
#include "uindex/selfcite.hpp"

#include <cstdio>
#include <ostream>

namespace uindex::table1 {

namespace {

// The scored author appears on every demo paper; co-authors fill up N.
const char* kSubject = "A. Rivera";

std::string filler_name(int row, int k) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "Collab A%d-%02d", row, k);
    return buf;
}

} // namespace

const std::array<Row, 6>& rows() {
    static const std::array<Row, 6> kRows{{
        {"d1", 100, 95, 5, 1},
        {"d2", 100, 95, 5, 3},
        {"d3", 100, 80, 20, 10},
        {"d4", 10, 8, 2, 2},
        {"d5", 10, 2, 8, 2},
        {"d6", 500, 10, 490, 20},
    }};
    return kRows;
}

Corpus corpus() {
    std::vector<Paper> papers;
    std::vector<CitationEdge> edges;

    for (std::size_t r = 0; r < rows().size(); ++r) {
        const Row& row = rows()[r];
        const int row_no = static_cast<int>(r) + 1;

        Paper target;
        target.id = row.paper_id;
        target.title = "Demo paper " + std::to_string(row_no);
        target.year = 2015 + row_no;
        target.authors.push_back({kSubject, std::nullopt});
        for (int k = 1; k < row.authors; ++k) {
            target.authors.push_back({filler_name(row_no, k), std::nullopt});
        }
        papers.push_back(target);

        for (int j = 0; j < row.independent; ++j) {
            char name[32];
            std::snprintf(name, sizeof(name), "Reader X%d-%03d", row_no, j);
            Paper citing;
            citing.id = row.paper_id + "-ind-" + std::to_string(j);
            citing.title = "Citing work";
            citing.year = 2020;
            citing.authors.push_back({name, std::nullopt});
            papers.push_back(citing);
            edges.push_back({citing.id, row.paper_id});
        }

        // Self-citing works are written by the target's own authors,
        // round-robin over the co-authors where the paper has any so the
        // subject's own paper list stays small.
        for (int j = 0; j < row.self_cites; ++j) {
            AuthorRef who = row.authors > 1
                                ? target.authors[1 + static_cast<std::size_t>(j) %
                                                         (target.authors.size() - 1)]
                                : target.authors[0];
            Paper citing;
            citing.id = row.paper_id + "-self-" + std::to_string(j);
            citing.title = "Follow-up work";
            citing.year = 2021;
            citing.authors.push_back(std::move(who));
            papers.push_back(citing);
            edges.push_back({citing.id, row.paper_id});
        }
    }
    return Corpus(std::move(papers), std::move(edges));
}

void print(std::ostream& out) {
    const Corpus c = corpus();
    out << "#  total    I    S   N  u-index\n";
    int row_no = 0;
    for (const Row& row : rows()) {
        ++row_no;
        const CitationBreakdown b = breakdown(c, row.paper_id);
        const int n = c.paper(row.paper_id).author_count();
        const double u = paper_u(b.independent, b.self_cites, n);
        char line[96];
        std::snprintf(line, sizeof(line), "%d  %5d  %3d  %3d  %2d  %7s\n", row_no, b.total,
                      b.independent, b.self_cites, n, format1(u).c_str());
        out << line;
    }
}

} // namespace uindex::table1
