#include "cyclekit/graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace cyclekit {

namespace {

uint64_t pair_key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) | static_cast<uint32_t>(v);
}

}  // namespace

WeightedGraph WeightedGraph::from_edges(int vertex_count, std::vector<Edge> edges,
                                        std::vector<std::string> labels) {
    if (vertex_count < 0) throw ValidationError("negative vertex count");
    WeightedGraph g;
    g.vertex_count_ = vertex_count;
    g.edges_ = std::move(edges);

    std::unordered_set<uint64_t> seen;
    seen.reserve(g.edges_.size() * 2);
    for (size_t i = 0; i < g.edges_.size(); ++i) {
        const Edge& e = g.edges_[i];
        const std::string ctx = "edge " + std::to_string(i) + " (" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + ")";
        if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
            throw ValidationError(ctx + ": vertex id out of range");
        if (e.u == e.v) throw ValidationError(ctx + ": self-loop");
        if (!(e.w > 0.0)) throw ValidationError(ctx + ": weight must be positive");
        if (!seen.insert(pair_key(e.u, e.v)).second)
            throw ValidationError(ctx + ": duplicate edge");
    }

    g.weights_.reserve(g.edges_.size());
    for (const Edge& e : g.edges_) g.weights_.push_back(e.w);

    g.adjacency_.assign(static_cast<size_t>(vertex_count), {});
    for (size_t i = 0; i < g.edges_.size(); ++i) {
        const Edge& e = g.edges_[i];
        g.adjacency_[static_cast<size_t>(e.u)].push_back({e.v, static_cast<EdgeId>(i)});
        g.adjacency_[static_cast<size_t>(e.v)].push_back({e.u, static_cast<EdgeId>(i)});
    }
    for (auto& nbrs : g.adjacency_)
        std::sort(nbrs.begin(), nbrs.end(),
                  [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });

    if (labels.empty()) {
        g.labels_.reserve(static_cast<size_t>(vertex_count));
        for (int v = 0; v < vertex_count; ++v) g.labels_.push_back(std::to_string(v));
    } else {
        if (static_cast<int>(labels.size()) != vertex_count)
            throw ValidationError("label count does not match vertex count");
        g.labels_ = std::move(labels);
    }
    return g;
}

std::optional<EdgeId> WeightedGraph::find_edge(VertexId u, VertexId v) const {
    if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_) return std::nullopt;
    const auto& nbrs = adjacency_[static_cast<size_t>(u)];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                               [](const Neighbor& a, VertexId id) { return a.to < id; });
    if (it != nbrs.end() && it->to == v) return it->edge;
    return std::nullopt;
}

bool WeightedGraph::edges_equal(const WeightedGraph& other) const {
    if (edges_.size() != other.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& a = edges_[i];
        const Edge& b = other.edges_[i];
        if (a.u != b.u || a.v != b.v || a.w != b.w) return false;
    }
    return true;
}

std::vector<VertexId> canonical_cycle_order(std::span<const VertexId> vertices) {
    const size_t n = vertices.size();
    std::vector<VertexId> out(vertices.begin(), vertices.end());
    if (n == 0) return out;
    size_t start = 0;
    for (size_t i = 1; i < n; ++i)
        if (vertices[i] < vertices[start]) start = i;
    std::rotate(out.begin(), out.begin() + static_cast<long>(start), out.end());
    // Orient so the second vertex is the smaller neighbor of the first.
    if (n >= 3 && out.back() < out[1]) {
        std::reverse(out.begin() + 1, out.end());
    }
    return out;
}

double cycle_length(std::span<const VertexId> vertices, const WeightedGraph& graph,
                    std::span<const double> weights) {
    double total = 0.0;
    const size_t n = vertices.size();
    for (size_t i = 0; i < n; ++i) {
        VertexId a = vertices[i];
        VertexId b = vertices[(i + 1) % n];
        auto e = graph.find_edge(a, b);
        if (!e)
            throw ValidationError("cycle vertices " + std::to_string(a) + " and " +
                                  std::to_string(b) + " are not adjacent");
        total += weights[static_cast<size_t>(*e)];
    }
    return total;
}

CycleRecord canonicalize_cycle(std::span<const VertexId> vertices, const WeightedGraph& graph) {
    if (vertices.size() < 3) throw ValidationError("cycle needs at least 3 vertices");
    std::unordered_set<VertexId> distinct(vertices.begin(), vertices.end());
    if (distinct.size() != vertices.size()) throw ValidationError("cycle repeats a vertex");
    for (VertexId v : vertices)
        if (v < 0 || v >= graph.vertex_count()) throw ValidationError("cycle vertex out of range");

    CycleRecord rec;
    rec.vertices = canonical_cycle_order(vertices);
    rec.length = cycle_length(rec.vertices, graph, graph.weights());
    return rec;
}

}  // namespace cyclekit
