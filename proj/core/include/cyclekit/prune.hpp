#ifndef CYCLEKIT_PRUNE_HPP
#define CYCLEKIT_PRUNE_HPP

#include <optional>
#include <span>
#include <vector>

#include "cyclekit/graph.hpp"

namespace cyclekit {

/// Knobs of the search-localization heuristic: keep searching inside a hop
/// ball around recently found cycles, and fall back to the full graph at
/// least every `reset_interval` steps.
struct PruneConfig {
    bool enabled = false;
    int reset_interval = 5;     // consecutive view-scoped steps before a forced reset
    int distance_threshold = 3; // hop radius of the ball
    double min_fraction = 0.3;  // views smaller than this fraction of |V| are rejected
};

struct PruneState {
    std::optional<std::vector<char>> view; // membership mask over vertices
    int view_size = 0;
    int steps_in_view = 0;
};

enum class SearchScope { Full, View };

/// Hop-limited BFS ball around `seeds` on the original graph. Returns absent
/// when the ball covers less than min_fraction of the vertices, which forces
/// full-graph scope until the next install.
std::optional<std::vector<char>> build_view(const WeightedGraph& graph,
                                            std::span<const VertexId> seeds,
                                            const PruneConfig& config);

/// Scope decision for the next search step. Uses the active view while its
/// step budget lasts, incrementing the counter; otherwise clears the state and
/// returns full scope.
SearchScope prune_step(PruneState& state, const PruneConfig& config);

/// Installs a fresh view around `seeds` (or clears the state when build_view
/// rejects the ball). The new view's step counter starts at zero.
void install_view(PruneState& state, const WeightedGraph& graph,
                  std::span<const VertexId> seeds, const PruneConfig& config);

/// Drops the active view so the next step runs at full scope.
void expire_view(PruneState& state);

}  // namespace cyclekit

#endif
