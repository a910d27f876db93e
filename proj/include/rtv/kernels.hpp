#pragma once

// Aggregation kernels behind the text and co-authorship views. Each has an
// OpenMP implementation used in production and a serial reference kept for
// tests and benchmarks. Both must produce identical results.

#include "rtv/coauthor.hpp"
#include "rtv/corpus.hpp"
#include "rtv/text.hpp"

#include <span>

namespace rtv::kernels {

/// Token counts per bucket, only for buckets that contain at least one record.
BucketWordCounts count_words_serial(std::span<const PaperRecord> records, Granularity g,
                                    const StopwordSet& stop);
BucketWordCounts count_words_omp(std::span<const PaperRecord> records, Granularity g,
                                 const StopwordSet& stop);

/// Nodes carry zero metrics; call recompute_metrics afterwards.
CoGraph count_pairs_serial(std::span<const PaperRecord> records);
CoGraph count_pairs_omp(std::span<const PaperRecord> records);

} // namespace rtv::kernels
