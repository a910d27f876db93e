#include "rtv/kernels.hpp"

#include <omp.h>

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace rtv::kernels {

BucketWordCounts count_words_omp(std::span<const PaperRecord> records, Granularity g,
                                 const StopwordSet& stop) {
    using LocalCounts = std::unordered_map<BucketId, std::unordered_map<std::string, std::int64_t>>;
    const auto n = static_cast<std::ptrdiff_t>(records.size());
    std::vector<LocalCounts> partial(static_cast<std::size_t>(omp_get_max_threads()));

#pragma omp parallel
    {
        auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 64)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const auto& r = records[static_cast<std::size_t>(i)];
            auto& bucket = local[bucket_of(r.pub_date, g)];
            for (auto& tok : tokenize(r.abstract, stop)) ++bucket[std::move(tok)];
        }
    }

    BucketWordCounts counts;
    for (auto& local : partial) {
        for (auto& [bucket, words] : local) {
            auto& dst = counts[bucket];
            for (auto& [w, c] : words) dst[w] += c;
        }
    }
    return counts;
}

CoGraph count_pairs_omp(std::span<const PaperRecord> records) {
    // Intern author names so the parallel loop only touches integer keys.
    std::unordered_map<std::string, std::uint32_t> ids;
    std::vector<std::string> names;
    std::vector<std::vector<std::uint32_t>> papers(records.size());
    for (std::size_t p = 0; p < records.size(); ++p) {
        for (const auto& a : records[p].authors) {
            auto [it, inserted] = ids.try_emplace(a, static_cast<std::uint32_t>(names.size()));
            if (inserted) names.push_back(a);
            papers[p].push_back(it->second);
        }
    }

    using PairCounts = std::unordered_map<std::uint64_t, std::int64_t>;
    const auto n = static_cast<std::ptrdiff_t>(papers.size());
    std::vector<PairCounts> partial(static_cast<std::size_t>(omp_get_max_threads()));

#pragma omp parallel
    {
        auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 64)
        for (std::ptrdiff_t p = 0; p < n; ++p) {
            const auto& authors = papers[static_cast<std::size_t>(p)];
            for (std::size_t i = 0; i < authors.size(); ++i) {
                for (std::size_t j = i + 1; j < authors.size(); ++j) {
                    auto a = authors[i], b = authors[j];
                    if (a == b) continue;
                    if (b < a) std::swap(a, b);
                    ++local[(static_cast<std::uint64_t>(a) << 32) | b];
                }
            }
        }
    }

    PairCounts merged;
    for (auto& local : partial) {
        for (auto [key, c] : local) merged[key] += c;
    }

    CoGraph g;
    for (const auto& name : names) g.nodes.try_emplace(name);
    for (auto [key, c] : merged) {
        const auto& a = names[key >> 32];
        const auto& b = names[key & 0xffffffffu];
        g.edges.emplace(make_pair_key(a, b), c);
    }
    return g;
}

} // namespace rtv::kernels
