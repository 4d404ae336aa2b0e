#include "uindex/errors.hpp"
#include "uindex/harvest.hpp"
#include "uindex/io.hpp"
#include "uindex/metrics.hpp"
#include "uindex/report.hpp"
#include "uindex/selfcite.hpp"
#include "uindex/table1.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1; // validation / parse / lookup / fetch failures
constexpr int kExitUsage = 2;

struct CorpusArgs {
    std::string papers_path;
    std::string citations_path;
};

void add_corpus_options(CLI::App& cmd, CorpusArgs& args) {
    cmd.add_option("--papers", args.papers_path, "Line-delimited paper records (jsonl)")
        ->required();
    cmd.add_option("--citations", args.citations_path,
                   "Two-column citing_id,cited_id file with header")
        ->required();
}

std::ostream& open_sink(const std::string& out_path, std::ofstream& file) {
    if (out_path.empty()) return std::cout;
    file.open(out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw uindex::IoError("cannot open output file: " + out_path);
    return file;
}

int run_compute(const CorpusArgs& corpus_args, const std::vector<std::string>& authors,
                const std::string& format, const std::string& out_path) {
    const uindex::Corpus corpus =
        uindex::load_corpus(corpus_args.papers_path, corpus_args.citations_path);

    std::vector<uindex::AuthorMetrics> rows;
    if (authors.empty()) {
        rows = uindex::build_report(corpus);
    } else {
        for (const auto& key : authors) rows.push_back(uindex::author_metrics(corpus, key));
    }

    std::ofstream file;
    std::ostream& sink = open_sink(out_path, file);
    uindex::write_report(std::move(rows), uindex::parse_report_format(format), sink);
    sink.flush();
    if (!sink) throw uindex::IoError("writing the report failed" +
                                     (out_path.empty() ? "" : ": " + out_path));
    return kExitOk;
}

int run_classify(const CorpusArgs& corpus_args, const std::string& paper_id) {
    const uindex::Corpus corpus =
        uindex::load_corpus(corpus_args.papers_path, corpus_args.citations_path);
    const auto classified = uindex::classify_incoming(corpus, paper_id);

    const auto b = uindex::breakdown(corpus, paper_id);
    std::cout << "paper " << paper_id << ": " << b.total << " citation(s), " << b.independent
              << " independent, " << b.self_cites << " self\n";
    for (const auto& cc : classified) {
        if (cc.cls == uindex::CitationClass::self_citation) {
            std::cout << cc.citing_id << "  self-citation  [" << cc.matched_pair->first
                      << " = " << cc.matched_pair->second << "]\n";
        } else {
            std::cout << cc.citing_id << "  independent\n";
        }
    }
    return kExitOk;
}

int run_rank(const CorpusArgs& corpus_args, const std::string& metric_name) {
    const uindex::Corpus corpus =
        uindex::load_corpus(corpus_args.papers_path, corpus_args.citations_path);
    const auto metric = uindex::parse_rank_metric(metric_name);
    const auto rows = uindex::rank_by(uindex::build_report(corpus), metric);

    int rank = 0;
    for (const auto& m : rows) {
        const double v = uindex::metric_value(m, metric);
        const bool integral = metric == uindex::RankMetric::h ||
                              metric == uindex::RankMetric::i10 ||
                              metric == uindex::RankMetric::g ||
                              metric == uindex::RankMetric::citations;
        std::cout << ++rank << "  " << m.author_key << "  "
                  << (integral ? std::to_string(static_cast<long long>(v))
                               : uindex::format1(v))
                  << "\n";
    }
    return kExitOk;
}

// Lenient pass over both files: report every parse error, then every corpus
// violation. Clean corpus exits 0.
int run_validate(const CorpusArgs& corpus_args) {
    std::ifstream pf(corpus_args.papers_path);
    if (!pf) throw uindex::IoError("cannot open papers file: " + corpus_args.papers_path);
    std::ifstream cf(corpus_args.citations_path);
    if (!cf) throw uindex::IoError("cannot open citations file: " + corpus_args.citations_path);

    auto papers = uindex::parse_papers(pf, corpus_args.papers_path, uindex::ParseMode::lenient);
    auto cites =
        uindex::parse_citations(cf, corpus_args.citations_path, uindex::ParseMode::lenient);

    for (const auto& w : cites.warnings) std::cout << "warning: " << w << "\n";
    for (const auto& e : papers.errors) std::cout << "error: " << e << "\n";
    for (const auto& e : cites.errors) std::cout << "error: " << e << "\n";

    const uindex::Corpus corpus(std::move(papers.papers), std::move(cites.edges));
    const auto violations = uindex::corpus_validate(corpus);
    for (const auto& v : violations) std::cout << "violation: " << uindex::to_string(v) << "\n";

    const std::size_t problems = papers.errors.size() + cites.errors.size() + violations.size();
    if (problems > 0) {
        std::cout << problems << " problem(s) found\n";
        return kExitDataError;
    }
    std::cout << "ok: " << corpus.papers().size() << " paper(s), " << corpus.edges().size()
              << " edge(s), " << corpus.author_count() << " author(s)\n";
    return kExitOk;
}

int run_harvest(const uindex::HarvestConfig& cfg, const std::string& out_dir) {
    const uindex::HarvestResult harvested = uindex::fetch_author_works(cfg);
    for (const auto& w : harvested.warnings) std::cerr << "warning: " << w << "\n";

    const auto [papers_path, citations_path] =
        uindex::export_corpus(harvested.papers, harvested.edges, out_dir);
    std::cout << "wrote " << papers_path.string() << " (" << harvested.papers.size()
              << " paper(s))\n";
    std::cout << "wrote " << citations_path.string() << " (" << harvested.edges.size()
              << " edge(s))\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Citation-corpus analysis: u-index scoring with baseline indicators"};
    app.require_subcommand(1);

    CorpusArgs compute_corpus;
    std::vector<std::string> compute_authors;
    std::string compute_format = "table";
    std::string compute_out;
    auto* compute = app.add_subcommand("compute", "Full scorecards for authors");
    add_corpus_options(*compute, compute_corpus);
    compute->add_option("--author", compute_authors,
                        "Restrict to these author identity keys (repeatable)");
    compute->add_option("--format", compute_format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    compute->add_option("--out", compute_out, "Write the report to this file");

    CorpusArgs classify_corpus;
    std::string classify_paper;
    auto* classify = app.add_subcommand("classify",
                                        "Classify each incoming citation of one paper");
    add_corpus_options(*classify, classify_corpus);
    classify->add_option("--paper", classify_paper, "Cited paper id")->required();

    CorpusArgs rank_corpus;
    std::string rank_metric;
    auto* rank = app.add_subcommand("rank", "Authors sorted by one metric");
    add_corpus_options(*rank, rank_corpus);
    rank->add_option("--metric", rank_metric, "Sort key")
        ->required()
        ->check(CLI::IsMember({"u", "u10", "h", "i10", "g", "e", "citations"}));

    auto* demo = app.add_subcommand("demo-table1", "Score the bundled demo corpus");

    CorpusArgs validate_corpus;
    auto* validate = app.add_subcommand("validate", "Check corpus files, list every problem");
    add_corpus_options(*validate, validate_corpus);

    uindex::HarvestConfig harvest_cfg;
    std::string harvest_out = ".";
    auto* harvest = app.add_subcommand("harvest",
                                       "Fetch an author's works into corpus files");
    harvest->add_option("--base-url", harvest_cfg.base_url, "Works endpoint base url")
        ->required();
    harvest->add_option("--author-id", harvest_cfg.author_id, "Persistent author id")
        ->required();
    harvest->add_option("--max-works", harvest_cfg.max_works, "Cap on the author's own works")
        ->check(CLI::PositiveNumber);
    harvest->add_option("--out", harvest_out, "Directory for papers.jsonl / citations.csv")
        ->required();
    harvest->add_option("--rate-limit", harvest_cfg.rate_limit, "Max requests per second")
        ->check(CLI::PositiveNumber);
    harvest->add_option("--cache-dir", harvest_cfg.cache_dir, "Response cache directory");
    harvest->add_option("--timeout", harvest_cfg.timeout_seconds, "Request timeout in seconds")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute->parsed()) {
            return run_compute(compute_corpus, compute_authors, compute_format, compute_out);
        }
        if (classify->parsed()) return run_classify(classify_corpus, classify_paper);
        if (rank->parsed()) return run_rank(rank_corpus, rank_metric);
        if (demo->parsed()) {
            uindex::table1::print(std::cout);
            return kExitOk;
        }
        if (validate->parsed()) return run_validate(validate_corpus);
        if (harvest->parsed()) return run_harvest(harvest_cfg, harvest_out);
    } catch (const uindex::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitDataError;
    }
    return kExitUsage;
}
