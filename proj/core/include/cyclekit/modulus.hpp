#ifndef CYCLEKIT_MODULUS_HPP
#define CYCLEKIT_MODULUS_HPP

#include <string>
#include <vector>

#include "cyclekit/graph.hpp"
#include "cyclekit/mwc.hpp"
#include "cyclekit/prune.hpp"
#include "cyclekit/qp.hpp"

namespace cyclekit {

struct ModulusConfig {
    double epsilon = 1e-6;    // violation tolerance: cycles shorter than 1 - epsilon
    int max_iters = 0;        // 0 means 10 * |V|
    int init_target = 0;      // 0 means min(|E|/3, 50), at least 1
    int cycles_per_iter = 5;  // constraints added per iteration
    PruneConfig prune{true, 5, 3, 0.3};
    double qp_tolerance = 1e-8;
};

struct ModulusIteration {
    int iteration = 0;
    bool full_scope = true;
    int view_size = 0;
    int violated_found = 0;
    int added = 0;
    double min_rho_length = kInf;
    double modulus = 0.0;
};

struct ModulusResult {
    std::vector<double> rho;          // per edge, >= 0
    double modulus = 0.0;             // Σ rho^2
    std::vector<CycleRecord> constraints;
    int qp_solves = 0;
    int iterations = 0;
    bool converged = false;
    bool qp_all_converged = true;     // false if any restricted solve hit its cap
    double total_seconds = 0.0;
    std::vector<ModulusIteration> trace;
};

/// All triangles of the graph, canonical, each once.
std::vector<CycleRecord> find_triangles(const WeightedGraph& graph);

/// A simple cycle with the fewest edges (ties resolved by the deterministic
/// search order); absent for forests.
std::optional<CycleRecord> shortest_hop_cycle(const WeightedGraph& graph);

/// Picks up to `target` candidates, repeatedly taking the one covering the
/// most not-yet-covered edges (ties: larger endpoint degree sum, then
/// canonical order).
std::vector<CycleRecord> greedy_select(const WeightedGraph& graph,
                                       std::vector<CycleRecord> candidates, int target);

/// Iterative loop-modulus computation (p = 2): seed constraints from triangles
/// (or the shortest-hop cycle), then alternate a warm-started restricted QP
/// solve with a search for rho-violated cycles until none remain. A final
/// full-graph violation check backs the converged flag even when the loop
/// stopped inside a pruned view.
ModulusResult compute_modulus(const WeightedGraph& graph, const ModulusConfig& config = {});

/// Result JSON: modulus, per-edge rho as [u, v, value], constraint vertex
/// lists, counters, and the per-iteration trace.
std::string modulus_report_json(const WeightedGraph& graph, const ModulusResult& result,
                                int indent = -1);

}  // namespace cyclekit

#endif
