// Serial vs OpenMP kernels on a synthetic corpus.

#include "rtv/kernels.hpp"

#include <benchmark/benchmark.h>

#include <chrono>
#include <map>
#include <random>

namespace {

std::vector<rtv::PaperRecord> synthetic(std::size_t papers) {
    static const char* words[] = {"neural", "graph", "learning", "model", "speech", "vision", "data",
                                  "robust", "clinical", "network", "attention", "retrieval", "the", "of"};
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> word(0, 13), author(0, 499), nauth(1, 6), year(2000, 2020), month(1, 12);
    std::vector<rtv::PaperRecord> out(papers);
    for (std::size_t i = 0; i < papers; ++i) {
        auto& r = out[i];
        r.id = std::to_string(i);
        r.title = "Paper " + std::to_string(i);
        for (int a = nauth(rng); a > 0; --a) r.authors.push_back("Author " + std::to_string(author(rng)));
        for (int w = 0; w < 60; ++w) {
            r.abstract += words[word(rng)];
            r.abstract += ' ';
        }
        r.pub_date = rtv::Date{std::chrono::year{year(rng)}, std::chrono::month{static_cast<unsigned>(month(rng))},
                               std::chrono::day{1}};
        r.venue = "V";
    }
    return out;
}

const std::vector<rtv::PaperRecord>& corpus(std::size_t n) {
    static std::map<std::size_t, std::vector<rtv::PaperRecord>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, synthetic(n)).first;
    return it->second;
}

void BM_WordsSerial(benchmark::State& st) {
    const auto& recs = corpus(static_cast<std::size_t>(st.range(0)));
    auto stop = rtv::StopwordSet::english();
    for (auto _ : st) benchmark::DoNotOptimize(rtv::kernels::count_words_serial(recs, rtv::Granularity::month, stop));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_WordsOmp(benchmark::State& st) {
    const auto& recs = corpus(static_cast<std::size_t>(st.range(0)));
    auto stop = rtv::StopwordSet::english();
    for (auto _ : st) benchmark::DoNotOptimize(rtv::kernels::count_words_omp(recs, rtv::Granularity::month, stop));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_PairsSerial(benchmark::State& st) {
    const auto& recs = corpus(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(rtv::kernels::count_pairs_serial(recs));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_PairsOmp(benchmark::State& st) {
    const auto& recs = corpus(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(rtv::kernels::count_pairs_omp(recs));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

} // namespace

BENCHMARK(BM_WordsSerial)->Arg(1000)->Arg(10000);
BENCHMARK(BM_WordsOmp)->Arg(1000)->Arg(10000);
BENCHMARK(BM_PairsSerial)->Arg(1000)->Arg(10000);
BENCHMARK(BM_PairsOmp)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
