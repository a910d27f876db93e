#include "rtv/coauthor.hpp"

#include "rtv/error.hpp"
#include "rtv/kernels.hpp"

#include <algorithm>
#include <set>

namespace rtv {

AuthorPair make_pair_key(std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

void recompute_metrics(CoGraph& g) {
    for (auto& [name, m] : g.nodes) m = {};
    for (const auto& [pair, w] : g.edges) {
        for (const auto* end : {&pair.first, &pair.second}) {
            auto& m = g.nodes[*end];
            m.collaborator_count += 1;
            m.weighted_degree += w;
        }
    }
}

CoGraph build_cooccurrence(std::span<const PaperRecord> records) {
    CoGraph g = kernels::count_pairs_omp(records);
    recompute_metrics(g);
    return g;
}

bool ranks_before(const std::pair<const std::string, NodeMetrics>& a,
                  const std::pair<const std::string, NodeMetrics>& b) {
    if (a.second.collaborator_count != b.second.collaborator_count) {
        return a.second.collaborator_count > b.second.collaborator_count;
    }
    if (a.second.weighted_degree != b.second.weighted_degree) {
        return a.second.weighted_degree > b.second.weighted_degree;
    }
    return a.first < b.first;
}

std::vector<std::string> ranked_authors(const CoGraph& g) {
    std::vector<const std::pair<const std::string, NodeMetrics>*> order;
    order.reserve(g.nodes.size());
    for (const auto& node : g.nodes) order.push_back(&node);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return ranks_before(*a, *b); });
    std::vector<std::string> names;
    names.reserve(order.size());
    for (auto* node : order) names.push_back(node->first);
    return names;
}

CoGraph top_n_subgraph(const CoGraph& g, int n) {
    if (n < 1) throw Error("InvalidN", "n must be a positive integer");
    auto ranked = ranked_authors(g);
    ranked.resize(std::min(ranked.size(), static_cast<std::size_t>(n)));
    const std::set<std::string> selected(ranked.begin(), ranked.end());

    CoGraph sub;
    for (const auto& name : selected) sub.nodes.emplace(name, g.nodes.at(name));
    for (const auto& [pair, w] : g.edges) {
        if (selected.contains(pair.first) && selected.contains(pair.second)) sub.edges.emplace(pair, w);
    }
    return sub;
}

} // namespace rtv
