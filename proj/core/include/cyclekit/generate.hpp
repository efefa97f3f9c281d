#ifndef CYCLEKIT_GENERATE_HPP
#define CYCLEKIT_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclekit/graph.hpp"

namespace cyclekit {

enum class GraphKind {
    Grid,
    LightTree,
    ErdosRenyi,
    BarabasiAlbert,
    WattsStrogatz,
    SingleCycle,
    Complete,
    Proximity,
};

/// Fully determines a generated graph: same spec, same bytes.
struct GraphSpec {
    GraphKind kind = GraphKind::SingleCycle;
    int a = 0;      // grid/proximity side, or vertex count
    int b = 0;      // ba: edges per new vertex; ws: ring degree (even)
    double p = 0.0; // er: edge probability; ws: rewire probability; light-tree: base density
    int extra = -1; // proximity: doubled diagonals; -1 means min(40, cells)
    std::uint64_t seed = 0;
    bool seed_explicit = false;
    // Weight range; wmin == wmax == 1 means unit weights. Random weights are
    // drawn on a 1/64 grid so that all downstream arithmetic stays exact.
    double wmin = 1.0;
    double wmax = 1.0;

    std::string to_string() const;
};

/// Parses specs of the form `kind:params[:key=value...]`, e.g. `grid:5`,
/// `er:100:0.05:seed=3`, `ws:64:4:0.1:seed=2`, `light-tree:50:seed=9`.
GraphSpec parse_graph_spec(const std::string& text);

/// True for kinds whose output depends on the seed.
bool spec_is_randomized(const GraphSpec& spec);

/// Construction details of a light-tree graph, for tests and sidecar output.
struct LightTreeMeta {
    std::vector<std::pair<VertexId, VertexId>> tree_edges;
    std::pair<VertexId, VertexId> non_tree_edge;
    double fundamental_cycle_length; // tree path between the endpoints, plus 1
};

struct GenResult {
    WeightedGraph graph;
    std::optional<LightTreeMeta> light_tree;
};

GenResult generate_detailed(const GraphSpec& spec);
WeightedGraph generate(const GraphSpec& spec);

}  // namespace cyclekit

#endif
