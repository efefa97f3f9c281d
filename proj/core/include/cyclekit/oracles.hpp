#ifndef CYCLEKIT_ORACLES_HPP
#define CYCLEKIT_ORACLES_HPP

#include <vector>

#include "cyclekit/graph.hpp"
#include "cyclekit/mwc.hpp"

namespace cyclekit {

/// Baseline girth algorithm: for every edge e=(u,v), the shortest u-v distance
/// with e masked, plus w(e); the minimum over edges is the girth. Each Dijkstra
/// stops as soon as v is finalized. Stats count the arg-min extractions of all
/// |E| runs.
MwcResult rooted_girth(const WeightedGraph& graph);

/// Every simple cycle of the graph, each exactly once in canonical form with
/// its exact length. Exponential; refuses graphs larger than `max_vertices`.
std::vector<CycleRecord> enumerate_cycles(const WeightedGraph& graph, int max_vertices = 14);

/// Textbook single-source shortest path distances, no cutoff, no cycle logic.
std::vector<double> reference_dijkstra(const WeightedGraph& graph, VertexId source);

/// Hop distances from a seed set (plain BFS); -1 for unreachable vertices.
std::vector<int> reference_bfs_hops(const WeightedGraph& graph,
                                    std::span<const VertexId> seeds);

/// Fraction of surviving edges as vertices are removed one by one in
/// degree-descending order (ties to the smaller id). fractions[k] is |E_k|/|E|
/// after k removals: starts at 1, ends at 0.
struct FFactorCurve {
    std::vector<double> fractions;
    double area() const; // mean of the fractions, in [0,1]
};

FFactorCurve f_factor_simulation(const WeightedGraph& graph);

}  // namespace cyclekit

#endif
