#include <doctest.h>

#include "corpus_gen.hpp"
#include "tmpdir.hpp"

#include <uindex/errors.hpp>
#include <uindex/io.hpp>

#include <fstream>
#include <random>
#include <sstream>

using uindex::CitationsParse;
using uindex::Corpus;
using uindex::ParseMode;
using uindex::parse_citations;
using uindex::parse_papers;
using uindex::PapersParse;

namespace {

void write_file(const std::filesystem::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    out << content;
}

} // namespace

TEST_CASE("one valid line yields one paper with two authors") {
    std::istringstream in(
        R"({"id": "p1", "title": "T", "year": 2020, "authors": [{"name": "A One"}, {"name": "B Two", "pid": "X"}]})"
        "\n");
    const auto r = parse_papers(in, "papers.jsonl");
    REQUIRE(r.papers.size() == 1);
    CHECK(r.papers[0].author_count() == 2);
    CHECK(r.papers[0].authors[1].persistent_id == "X");
    CHECK(r.papers[0].year == 2020);
}

TEST_CASE("missing authors field is a parse error with the line number") {
    std::istringstream in("{\"id\": \"p1\", \"title\": \"T\", \"year\": 2020}\n");
    try {
        parse_papers(in, "papers.jsonl");
        FAIL("expected ParseError");
    } catch (const uindex::ParseError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("papers.jsonl:1") != std::string::npos);
        CHECK(msg.find("authors") != std::string::npos);
    }
}

TEST_CASE("error messages carry the failing line, not line one") {
    std::istringstream in(
        R"({"id": "p1", "title": "T", "year": 2020, "authors": [{"name": "A One"}]})"
        "\nnot json at all\n");
    try {
        parse_papers(in, "papers.jsonl");
        FAIL("expected ParseError");
    } catch (const uindex::ParseError& e) {
        CHECK(std::string(e.what()).find("papers.jsonl:2") != std::string::npos);
    }
}

TEST_CASE("duplicate ids are validation errors") {
    const std::string line =
        R"({"id": "p1", "title": "T", "year": 2020, "authors": [{"name": "A One"}]})";
    std::istringstream in(line + "\n" + line + "\n");
    CHECK_THROWS_AS(parse_papers(in, "papers.jsonl"), uindex::ValidationError);
}

TEST_CASE("lenient mode collects every error and keeps the good lines") {
    std::istringstream in(
        "garbage\n"
        R"({"id": "p1", "title": "T", "year": 2020, "authors": [{"name": "A One"}]})"
        "\n"
        R"({"id": "p2", "title": "T", "year": 2020, "authors": []})"
        "\n");
    const auto r = parse_papers(in, "papers.jsonl", ParseMode::lenient);
    CHECK(r.papers.size() == 1);
    REQUIRE(r.errors.size() == 2);
    CHECK(r.errors[0].find("papers.jsonl:1") != std::string::npos);
    CHECK(r.errors[1].find("papers.jsonl:3") != std::string::npos);
}

TEST_CASE("six-line demo-shaped fixture parses with the right author counts") {
    std::ostringstream fixture;
    const int ns[] = {1, 3, 10, 2, 2, 20};
    for (int i = 0; i < 6; ++i) {
        fixture << R"({"id": "d)" << i + 1 << R"(", "title": "D", "year": 2020, "authors": [)";
        for (int a = 0; a < ns[i]; ++a) {
            if (a) fixture << ",";
            fixture << R"({"name": "A)" << i << "x" << a << R"( Fam)" << i << "x" << a << R"("})";
        }
        fixture << "]}\n";
    }
    std::istringstream in(fixture.str());
    const auto r = parse_papers(in, "fixture.jsonl");
    REQUIRE(r.papers.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(r.papers[static_cast<std::size_t>(i)].author_count() == ns[i]);
}

TEST_CASE("citations: header plus two rows yields two edges") {
    std::istringstream in("citing_id,cited_id\na,b\nb,c\n");
    const auto r = parse_citations(in, "c.csv");
    REQUIRE(r.edges.size() == 2);
    CHECK(r.edges[0].citing_id == "a");
    CHECK(r.warnings.empty());
}

TEST_CASE("repeated citation rows collapse with a warning") {
    std::istringstream in("citing_id,cited_id\na,b\na,b\n");
    const auto r = parse_citations(in, "c.csv");
    CHECK(r.edges.size() == 1);
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0].find("c.csv:3") != std::string::npos);
}

TEST_CASE("self-citing row is a validation error") {
    std::istringstream in("citing_id,cited_id\np1,p1\n");
    CHECK_THROWS_AS(parse_citations(in, "c.csv"), uindex::ValidationError);
}

TEST_CASE("wrong column count is a parse error naming the row") {
    std::istringstream in("citing_id,cited_id\na,b,c\n");
    try {
        parse_citations(in, "c.csv");
        FAIL("expected ParseError");
    } catch (const uindex::ParseError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("c.csv:2") != std::string::npos);
        CHECK(msg.find("3") != std::string::npos);
    }
}

TEST_CASE("load_corpus: empty citations file gives a valid zero-breakdown corpus") {
    testsupport::TmpDir dir;
    write_file(dir / "p.jsonl",
               R"({"id": "p1", "title": "T", "year": 2020, "authors": [{"name": "A One"}]})"
               "\n");
    write_file(dir / "c.csv", "citing_id,cited_id\n");
    const Corpus c = uindex::load_corpus(dir / "p.jsonl", dir / "c.csv");
    CHECK(c.papers().size() == 1);
    CHECK(c.edges().empty());
}

TEST_CASE("load_corpus: unknown citation endpoint is a hard error") {
    testsupport::TmpDir dir;
    write_file(dir / "p.jsonl",
               R"({"id": "p1", "title": "T", "year": 2020, "authors": [{"name": "A One"}]})"
               "\n");
    write_file(dir / "c.csv", "citing_id,cited_id\np1,ghost\n");
    try {
        uindex::load_corpus(dir / "p.jsonl", dir / "c.csv");
        FAIL("expected ValidationError");
    } catch (const uindex::ValidationError& e) {
        CHECK(std::string(e.what()).find("ghost") != std::string::npos);
    }
}

TEST_CASE("load_corpus: missing file is an io error naming the path") {
    testsupport::TmpDir dir;
    try {
        uindex::load_corpus(dir / "nope.jsonl", dir / "c.csv");
        FAIL("expected IoError");
    } catch (const uindex::IoError& e) {
        CHECK(std::string(e.what()).find("nope.jsonl") != std::string::npos);
    }
}

TEST_CASE("ids with csv-reserved characters are rejected on both sides") {
    std::istringstream in(
        R"({"id": "a,b", "title": "T", "year": 2020, "authors": [{"name": "A One"}]})"
        "\n");
    CHECK_THROWS_AS(parse_papers(in, "papers.jsonl"), uindex::ValidationError);

    std::ostringstream out;
    CHECK_THROWS_AS(uindex::write_citations({{"x,y", "b"}}, out), uindex::ValidationError);
}

TEST_CASE("serialization round-trips random corpora byte-identically") {
    std::mt19937 rng(31);
    testsupport::TmpDir dir;
    for (int round = 0; round < 25; ++round) {
        const Corpus c = testsupport::random_corpus(rng);
        const std::string papers_text = uindex::papers_to_string(c.papers());
        const std::string cites_text = uindex::citations_to_string(c.edges());
        write_file(dir / "p.jsonl", papers_text);
        write_file(dir / "c.csv", cites_text);

        const Corpus loaded = uindex::load_corpus(dir / "p.jsonl", dir / "c.csv");
        CHECK(uindex::papers_to_string(loaded.papers()) == papers_text);
        CHECK(uindex::citations_to_string(loaded.edges()) == cites_text);
    }
}

TEST_CASE("serialization is deterministic") {
    std::mt19937 rng_a(32);
    std::mt19937 rng_b(32);
    const Corpus a = testsupport::random_corpus(rng_a);
    const Corpus b = testsupport::random_corpus(rng_b);
    CHECK(uindex::papers_to_string(a.papers()) == uindex::papers_to_string(b.papers()));
    CHECK(uindex::citations_to_string(a.edges()) == uindex::citations_to_string(b.edges()));
}
