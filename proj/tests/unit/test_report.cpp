#include <doctest.h>

#include "corpus_gen.hpp"

#include <uindex/errors.hpp>
#include <uindex/report.hpp>

#include <random>
#include <sstream>

using uindex::AuthorMetrics;
using uindex::ReportFormat;

namespace {

AuthorMetrics row(std::string key, double u, int papers = 1) {
    AuthorMetrics m;
    m.author_key = std::move(key);
    m.u_index = u;
    m.u10_index = u;
    m.paper_count = papers;
    return m;
}

} // namespace

TEST_CASE("rows come out sorted by descending u, ties by key") {
    std::ostringstream out;
    uindex::write_report({row("b", 1.0), row("a", 5.0), row("aa", 1.0)}, ReportFormat::csv,
                         out);
    const std::string text = out.str();
    const auto pos_a = text.find("\na,");
    const auto pos_aa = text.find("\naa,");
    const auto pos_b = text.find("\nb,");
    REQUIRE(pos_a != std::string::npos);
    CHECK(pos_a < pos_aa);
    CHECK(pos_aa < pos_b);
}

TEST_CASE("table mode displays one half-up-rounded decimal") {
    std::ostringstream out;
    uindex::write_report({row("solo", 97.5)}, ReportFormat::table, out);
    CHECK(out.str().find("97.5") != std::string::npos);

    std::ostringstream out2;
    uindex::write_report({row("solo", 56.25)}, ReportFormat::table, out2);
    CHECK(out2.str().find("56.3") != std::string::npos);
}

TEST_CASE("zero rows still emit the header") {
    std::ostringstream csv;
    uindex::write_report({}, ReportFormat::csv, csv);
    CHECK(csv.str().rfind("author_key,", 0) == 0);
    CHECK(csv.str().find('\n') == csv.str().size() - 1);

    std::ostringstream table;
    uindex::write_report({}, ReportFormat::table, table);
    CHECK(table.str().find("author") != std::string::npos);
}

TEST_CASE("json report round-trips bit-exactly") {
    std::mt19937 rng(41);
    const auto corpus = testsupport::random_corpus(rng);
    const auto rows = uindex::build_report(corpus);
    const std::string text = uindex::report_to_string(rows, ReportFormat::json);
    const auto parsed = uindex::parse_report_json(text);

    REQUIRE(parsed.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(parsed[i].author_key == rows[i].author_key);
        CHECK(parsed[i].paper_count == rows[i].paper_count);
        CHECK(parsed[i].total_citations == rows[i].total_citations);
        CHECK(parsed[i].independent_total == rows[i].independent_total);
        CHECK(parsed[i].self_total == rows[i].self_total);
        // bit-exact reals
        CHECK(parsed[i].u_index == rows[i].u_index);
        CHECK(parsed[i].u10_index == rows[i].u10_index);
        CHECK(parsed[i].e_index == rows[i].e_index);
        CHECK(parsed[i].h_index == rows[i].h_index);
        CHECK(parsed[i].i10_index == rows[i].i10_index);
        CHECK(parsed[i].g_index == rows[i].g_index);
    }

    // and the reserialized text is identical
    CHECK(uindex::report_to_string(parsed, ReportFormat::json) == text);
}

TEST_CASE("identical corpora produce byte-identical reports in every format") {
    std::mt19937 rng_a(42);
    std::mt19937 rng_b(42);
    const auto ca = testsupport::random_corpus(rng_a);
    const auto cb = testsupport::random_corpus(rng_b);
    for (const auto fmt : {ReportFormat::table, ReportFormat::csv, ReportFormat::json}) {
        CHECK(uindex::report_to_string(uindex::build_report(ca), fmt) ==
              uindex::report_to_string(uindex::build_report(cb), fmt));
    }
}

TEST_CASE("rank_by orders by the chosen metric") {
    auto a = row("a", 1.0);
    a.h_index = 5;
    a.total_citations = 10;
    auto b = row("b", 9.0);
    b.h_index = 2;
    b.total_citations = 30;

    const auto by_u = uindex::rank_by({a, b}, uindex::RankMetric::u);
    CHECK(by_u[0].author_key == "b");
    const auto by_h = uindex::rank_by({a, b}, uindex::RankMetric::h);
    CHECK(by_h[0].author_key == "a");
    const auto by_c = uindex::rank_by({a, b}, uindex::RankMetric::citations);
    CHECK(by_c[0].author_key == "b");
}

TEST_CASE("format parsing") {
    CHECK(uindex::parse_report_format("table") == ReportFormat::table);
    CHECK(uindex::parse_report_format("csv") == ReportFormat::csv);
    CHECK(uindex::parse_report_format("json") == ReportFormat::json);
    CHECK_THROWS_AS(uindex::parse_report_format("xml"), uindex::ValidationError);
    CHECK_THROWS_AS(uindex::parse_rank_metric("zindex"), uindex::ValidationError);
}
