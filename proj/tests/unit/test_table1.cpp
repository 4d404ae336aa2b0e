#include <doctest.h>

#include "tmpdir.hpp"

#include <uindex/harvest.hpp>
#include <uindex/io.hpp>
#include <uindex/metrics.hpp>
#include <uindex/selfcite.hpp>
#include <uindex/table1.hpp>

#include <sstream>

TEST_CASE("demo fixture realizes every target citation mix") {
    const auto corpus = uindex::table1::corpus();
    CHECK(uindex::corpus_validate(corpus).empty());

    for (const auto& row : uindex::table1::rows()) {
        const auto b = uindex::breakdown(corpus, row.paper_id);
        CHECK(b.independent == row.independent);
        CHECK(b.self_cites == row.self_cites);
        CHECK(b.total == row.total);
        CHECK(corpus.paper(row.paper_id).author_count() == row.authors);
    }
}

TEST_CASE("demo row one reproduces the highest-impact single-author mix") {
    const auto corpus = uindex::table1::corpus();
    const auto b = uindex::breakdown(corpus, "d1");
    CHECK(b.independent == 95);
    CHECK(b.self_cites == 5);
    CHECK(b.total == 100);
}

TEST_CASE("demo table prints the six expected u values") {
    std::ostringstream out;
    uindex::table1::print(out);
    const std::string text = out.str();
    for (const char* expected : {"97.5", "56.3", "28.5", "6.4", "4.2", "57.0"}) {
        CHECK(text.find(expected) != std::string::npos);
    }
}

TEST_CASE("the demo corpus survives a file round-trip") {
    testsupport::TmpDir dir("uindex-demo-rt");
    const auto corpus = uindex::table1::corpus();
    const auto [pp, cp] = uindex::export_corpus(corpus.papers(), corpus.edges(), dir.path());
    const auto loaded = uindex::load_corpus(pp, cp);
    CHECK(loaded.papers().size() == corpus.papers().size());
    for (const auto& row : uindex::table1::rows()) {
        const auto b = uindex::breakdown(loaded, row.paper_id);
        CHECK(b.independent == row.independent);
        CHECK(b.self_cites == row.self_cites);
    }
}

TEST_CASE("the subject author's u-index sums the six demo papers") {
    const auto corpus = uindex::table1::corpus();
    // the subject also signs the five self-citers of the single-author
    // paper; those have no incoming citations and add nothing to u
    const double u = uindex::author_u(corpus, "name:rivera/a");
    CHECK(uindex::format1(u) == "249.9");

    const auto m = uindex::author_metrics(corpus, "name:rivera/a");
    CHECK(m.u_index == u);
    CHECK(m.total_citations == 820);
    CHECK(m.paper_count == 11); // six demo papers + five follow-ups
}
