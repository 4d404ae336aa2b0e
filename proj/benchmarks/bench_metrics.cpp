#include <benchmark/benchmark.h>

#include <uindex/corpus.hpp>
#include <uindex/metrics.hpp>
#include <uindex/selfcite.hpp>

#include <random>
#include <string>
#include <vector>

namespace {

using uindex::Corpus;
using uindex::Paper;

std::vector<int> make_counts(std::size_t n) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(0, 200);
    std::vector<int> counts(n);
    for (auto& c : counts) c = d(rng);
    return counts;
}

// Corpus with `papers` papers, ~3 authors per paper from a 40-identity
// pool, ~4 incoming citations per paper.
Corpus make_corpus(int papers) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick_author(0, 39);
    std::uniform_int_distribution<int> pick_paper(0, papers - 1);

    std::vector<Paper> ps;
    for (int i = 0; i < papers; ++i) {
        Paper p;
        p.id = "p" + std::to_string(i);
        p.title = "T";
        p.year = 2000;
        for (int a = 0; a < 3; ++a) {
            const int who = pick_author(rng);
            p.authors.push_back({"Given F" + std::to_string(who),
                                 "A" + std::to_string(who)});
        }
        ps.push_back(std::move(p));
    }
    std::vector<uindex::CitationEdge> edges;
    for (int i = 0; i < papers * 4; ++i) {
        const int citing = pick_paper(rng);
        const int cited = pick_paper(rng);
        if (citing == cited) continue;
        edges.push_back({"p" + std::to_string(citing), "p" + std::to_string(cited)});
    }
    return Corpus(std::move(ps), std::move(edges));
}

void BM_paper_u(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(uindex::paper_u(95, 5, 3));
    }
}
BENCHMARK(BM_paper_u);

void BM_h_index(benchmark::State& state) {
    const auto counts = make_counts(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(uindex::h_index(counts));
    }
}
BENCHMARK(BM_h_index)->Arg(50)->Arg(500)->Arg(5000);

void BM_g_index(benchmark::State& state) {
    const auto counts = make_counts(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(uindex::g_index(counts));
    }
}
BENCHMARK(BM_g_index)->Arg(50)->Arg(500)->Arg(5000);

void BM_e_index(benchmark::State& state) {
    const auto counts = make_counts(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(uindex::e_index(counts));
    }
}
BENCHMARK(BM_e_index)->Arg(500);

void BM_breakdown_all(benchmark::State& state) {
    const Corpus c = make_corpus(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(uindex::breakdown_all(c));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_breakdown_all)->Arg(100)->Arg(1000);

void BM_all_author_metrics(benchmark::State& state) {
    const Corpus c = make_corpus(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(uindex::all_author_metrics(c));
    }
}
BENCHMARK(BM_all_author_metrics)->Arg(100)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
