#pragma once

#include "rtv/corpus.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rtv {

struct NodeMetrics {
    std::int64_t collaborator_count = 0;  // distinct co-authors (unweighted degree)
    std::int64_t weighted_degree = 0;     // sum of incident edge weights

    bool operator==(const NodeMetrics&) const = default;
};

/// Unordered author pair stored with first < second.
using AuthorPair = std::pair<std::string, std::string>;

AuthorPair make_pair_key(std::string a, std::string b);

/// Weighted undirected co-authorship graph. Edge weight = number of joint papers.
struct CoGraph {
    std::map<std::string, NodeMetrics> nodes;
    std::map<AuthorPair, std::int64_t> edges;

    bool operator==(const CoGraph&) const = default;
};

CoGraph build_cooccurrence(std::span<const PaperRecord> records);

/// Recomputes node metrics from the edge set; nodes without edges get zeros.
void recompute_metrics(CoGraph& g);

/// Ranking key: collaborator_count desc, weighted_degree desc, name asc.
bool ranks_before(const std::pair<const std::string, NodeMetrics>& a,
                  const std::pair<const std::string, NodeMetrics>& b);

/// Author names of `g` in ranking order.
std::vector<std::string> ranked_authors(const CoGraph& g);

/// Induced subgraph on the first min(n, |nodes|) ranked authors. Node metrics
/// are carried over from `g` unchanged; only edges internal to the selection
/// survive. Throws Error("InvalidN") when n < 1.
CoGraph top_n_subgraph(const CoGraph& g, int n);

} // namespace rtv
