#include "rtv/kernels.hpp"

namespace rtv::kernels {

BucketWordCounts count_words_serial(std::span<const PaperRecord> records, Granularity g,
                                    const StopwordSet& stop) {
    BucketWordCounts counts;
    for (const auto& r : records) {
        auto& bucket = counts[bucket_of(r.pub_date, g)];
        for (auto& tok : tokenize(r.abstract, stop)) ++bucket[std::move(tok)];
    }
    return counts;
}

CoGraph count_pairs_serial(std::span<const PaperRecord> records) {
    CoGraph g;
    for (const auto& r : records) {
        for (std::size_t i = 0; i < r.authors.size(); ++i) {
            g.nodes.try_emplace(r.authors[i]);
            for (std::size_t j = i + 1; j < r.authors.size(); ++j) {
                if (r.authors[i] == r.authors[j]) continue;
                ++g.edges[make_pair_key(r.authors[i], r.authors[j])];
            }
        }
    }
    return g;
}

} // namespace rtv::kernels
