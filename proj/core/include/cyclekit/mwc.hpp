#ifndef CYCLEKIT_MWC_HPP
#define CYCLEKIT_MWC_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "cyclekit/graph.hpp"
#include "cyclekit/prune.hpp"

namespace cyclekit {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct SearchStats {
    std::uint64_t argmin_extractions = 0; // non-stale heap pops
    std::uint64_t edge_relaxations = 0;   // successful distance decreases
    std::uint64_t cycles_detected = 0;
    std::uint64_t vertices_discarded = 0;
    std::uint64_t inner_searches = 0;
};

/// State of one rooted search: the finalized set, tentative distances, the
/// shortest-path tree, and the best-composite trackers. Reusable across roots;
/// `touched` lists every vertex with a finite distance so resets are O(touched).
struct MwcSearchState {
    VertexId root = -1;
    std::vector<double> dist;      // tentative distance from root, inf if unseen
    std::vector<VertexId> pred;    // shortest-path-tree parent, -1 at root/unseen
    std::vector<int> depth;        // tree depth, for ancestor walks
    std::vector<char> finalized;   // membership in the finalized set Q
    std::vector<VertexId> finalize_order;
    std::vector<VertexId> touched;

    // Best (distance-to-cycle + cycle-length) seen from this root, with the
    // pieces of the minimizing cycle.
    double best_composite = kInf;
    double best_composite_dist = kInf;
    double best_composite_len = kInf;
    std::vector<VertexId> best_composite_cycle;

    void resize(int n);
    void reset(VertexId new_root);
};

/// One cycle-detection event: scanning edge (y,z) with both endpoints
/// finalized closed the tree paths through their deepest common ancestor.
struct CycleDetection {
    VertexId y = -1;
    VertexId z = -1;
    VertexId ancestor = -1;
    double length = 0.0;        // dist(y) + dist(z) + w(y,z) - 2*dist(ancestor)
    double dist_to_cycle = 0.0; // dist(ancestor)
    double composite = 0.0;     // dist_to_cycle + length
    std::vector<VertexId> vertices; // the cycle, ancestor first (not canonical)
};

/// Observation hook for instrumentation and invariant checking. Callbacks fire
/// synchronously inside the search; implementations must not mutate the state.
class SearchObserver {
public:
    virtual ~SearchObserver() = default;
    virtual void root_started(VertexId /*root*/) {}
    virtual void extracted(const MwcSearchState& /*s*/, VertexId /*y*/, double /*gamma*/) {}
    virtual void cycle_detected(const MwcSearchState& /*s*/, const CycleDetection& /*d*/,
                                double /*gamma*/) {}
    virtual void discarded(VertexId /*root*/, VertexId /*z*/, double /*dist_z*/,
                           double /*dist_to_cycle*/) {}
    virtual void root_finished(const MwcSearchState& /*s*/, double /*gamma*/) {}
};

/// Vertices still eligible as outer-loop roots. Discarding never touches
/// vertices already used as a root.
struct ActiveSet {
    std::vector<char> active;
    std::vector<char> processed;
    int active_count = 0;

    explicit ActiveSet(int n)
        : active(static_cast<size_t>(n), 1), processed(static_cast<size_t>(n), 0),
          active_count(n) {}
};

enum class RootOrder { AscendingId, DegreeDescending };

struct MwcOptions {
    bool discarding = true;
    PruneConfig prune{}; // disabled by default
    bool collect_witness = true;
    RootOrder order = RootOrder::AscendingId;
    SearchObserver* observer = nullptr;
};

struct MwcResult {
    double gamma = kInf;
    std::optional<CycleRecord> witness;
    SearchStats stats;
};

/// Minimum weight cycle of `graph` (the weighted girth). Returns gamma = inf
/// with no witness on forests. The result is the same with discarding and/or
/// pruning on or off; those options only change how much work is done.
MwcResult find_mwc(const WeightedGraph& graph, const MwcOptions& options = {});

struct InnerSearchResult {
    double gamma_out = kInf;
    MwcSearchState state;
    std::vector<CycleRecord> detected; // canonical, deduplicated
};

/// One rooted search: Dijkstra from x expanding only vertices with tentative
/// distance below gamma/2 (gamma updates live as cycles are found). `view`,
/// when given, restricts both extraction and relaxation to the marked
/// vertices. Returns the updated gamma, the final state, and every detected
/// cycle with its root-relative distance and composite distance.
InnerSearchResult inner_search(const WeightedGraph& graph, VertexId x, double gamma_in,
                               const std::vector<char>* view = nullptr,
                               SearchObserver* observer = nullptr);

/// Deepest common vertex of the predecessor chains of y and z. Both must have
/// finite distances in `state`.
VertexId lca(const MwcSearchState& state, VertexId y, VertexId z);

/// Applies the vertex-discarding rule after a completed full-scope search:
/// when a cycle was seen, the best-composite cycle is not the current best
/// cycle, and best_composite < 3*gamma/2, every explored vertex z != root that
/// has not yet served as a root and has dist(z) <= best_composite_dist cannot
/// lie on any minimum weight cycle. Returns the vertices removed.
std::vector<VertexId> apply_discarding(const MwcSearchState& state, double gamma,
                                       ActiveSet& active, SearchObserver* observer = nullptr);

/// All simple cycles of `graph`, under per-edge weights `rho`, whose
/// rho-length is below `threshold`... up to the k shortest. Runs the rooted
/// search from every vertex of `scope` (full graph when absent) with the
/// expansion cutoff fixed at threshold/2, deduplicates canonically, and
/// re-verifies each cycle's edges and rho-length against the full graph.
/// Returned pairs are sorted by ascending rho-length.
std::vector<std::pair<CycleRecord, double>> find_top_k_violated(
    const WeightedGraph& graph, std::span<const double> rho, int k, double threshold,
    const std::vector<char>* scope = nullptr, SearchStats* stats = nullptr);

}  // namespace cyclekit

#endif
