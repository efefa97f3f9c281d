#include "cyclekit/prune.hpp"

#include <queue>

namespace cyclekit {

std::optional<std::vector<char>> build_view(const WeightedGraph& graph,
                                            std::span<const VertexId> seeds,
                                            const PruneConfig& config) {
    const int n = graph.vertex_count();
    std::vector<char> mask(static_cast<size_t>(n), 0);
    std::vector<int> hops(static_cast<size_t>(n), -1);
    std::queue<VertexId> q;
    for (VertexId s : seeds) {
        if (hops[static_cast<size_t>(s)] == 0) continue;
        hops[static_cast<size_t>(s)] = 0;
        mask[static_cast<size_t>(s)] = 1;
        q.push(s);
    }
    int count = static_cast<int>(q.size());
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        if (hops[static_cast<size_t>(u)] >= config.distance_threshold) continue;
        for (const Neighbor& nb : graph.neighbors(u)) {
            if (hops[static_cast<size_t>(nb.to)] >= 0) continue;
            hops[static_cast<size_t>(nb.to)] = hops[static_cast<size_t>(u)] + 1;
            mask[static_cast<size_t>(nb.to)] = 1;
            ++count;
            q.push(nb.to);
        }
    }
    if (static_cast<double>(count) < config.min_fraction * static_cast<double>(n))
        return std::nullopt;
    return mask;
}

SearchScope prune_step(PruneState& state, const PruneConfig& config) {
    if (config.enabled && state.view && state.steps_in_view < config.reset_interval) {
        ++state.steps_in_view;
        return SearchScope::View;
    }
    expire_view(state);
    return SearchScope::Full;
}

void install_view(PruneState& state, const WeightedGraph& graph,
                  std::span<const VertexId> seeds, const PruneConfig& config) {
    expire_view(state);
    if (!config.enabled || seeds.empty()) return;
    auto mask = build_view(graph, seeds, config);
    if (!mask) return;
    int count = 0;
    for (char c : *mask) count += c;
    state.view = std::move(mask);
    state.view_size = count;
    state.steps_in_view = 0;
}

void expire_view(PruneState& state) {
    state.view.reset();
    state.view_size = 0;
    state.steps_in_view = 0;
}

}  // namespace cyclekit
