#ifndef CYCLEKIT_GRAPH_HPP
#define CYCLEKIT_GRAPH_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclekit {

using VertexId = int;
using EdgeId = int;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input stream (carries a 1-based line number when known).
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Input violates the graph model (self-loop, duplicate edge, weight <= 0, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

struct Edge {
    VertexId u;
    VertexId v;
    double w;
};

struct Neighbor {
    VertexId to;
    EdgeId edge;
};

/// Undirected simple graph with positive edge weights and dense vertex ids
/// 0..n-1. Immutable after construction; safe to share across threads.
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Validates and builds the adjacency structure. Throws ValidationError on
    /// self-loops, duplicate unordered pairs, weights <= 0, or out-of-range ids.
    /// `labels` (optional) preserves the original vertex names; defaults to the
    /// decimal id.
    static WeightedGraph from_edges(int vertex_count, std::vector<Edge> edges,
                                    std::vector<std::string> labels = {});

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }

    /// Edge weights indexed by edge id; usable as an alternative weight
    /// function for the search routines.
    std::span<const double> weights() const { return weights_; }
    double weight(EdgeId e) const { return weights_[static_cast<size_t>(e)]; }

    /// Neighbors of v, sorted by neighbor id.
    std::span<const Neighbor> neighbors(VertexId v) const {
        return {adjacency_[static_cast<size_t>(v)].data(), adjacency_[static_cast<size_t>(v)].size()};
    }
    int degree(VertexId v) const { return static_cast<int>(adjacency_[static_cast<size_t>(v)].size()); }

    /// Edge id between u and v, if present.
    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

    const std::string& label(VertexId v) const { return labels_[static_cast<size_t>(v)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const WeightedGraph& other) const {
        return vertex_count_ == other.vertex_count_ && labels_ == other.labels_ &&
               edges_equal(other);
    }

private:
    bool edges_equal(const WeightedGraph& other) const;

    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<double> weights_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<std::string> labels_;
};

/// A simple cycle in canonical form: rotated so the smallest vertex id comes
/// first, oriented so the second id is the smaller of the first vertex's two
/// cycle neighbors. Two equal cycles always compare identical.
struct CycleRecord {
    std::vector<VertexId> vertices;
    double length = 0.0;

    // Provenance when the cycle was found by a rooted search.
    std::optional<VertexId> root;
    std::optional<double> dist_to_cycle;
    std::optional<double> composite;

    bool same_cycle(const CycleRecord& other) const { return vertices == other.vertices; }
};

/// Canonicalizes `vertices` as a simple cycle of `graph` and computes its
/// length from the graph weights. Throws ValidationError if the sequence has
/// fewer than 3 vertices, repeats a vertex, or has a non-adjacent consecutive
/// pair (cyclically).
CycleRecord canonicalize_cycle(std::span<const VertexId> vertices, const WeightedGraph& graph);

/// Canonical rotation/orientation only; no adjacency check, length computed
/// with the supplied per-edge weights (used when searching under a density
/// weighting instead of the graph's own weights).
std::vector<VertexId> canonical_cycle_order(std::span<const VertexId> vertices);

/// Sum of edge weights along the (cyclic) vertex sequence, taken from `weights`
/// indexed by edge id. Throws ValidationError if a consecutive pair is not an
/// edge of the graph.
double cycle_length(std::span<const VertexId> vertices, const WeightedGraph& graph,
                    std::span<const double> weights);

}  // namespace cyclekit

#endif
