#ifndef CYCLEKIT_QP_HPP
#define CYCLEKIT_QP_HPP

#include <span>
#include <vector>

#include "cyclekit/graph.hpp"

namespace cyclekit {

/// Binary loop/edge incidence matrix: one row per loop, each row the sorted
/// set of edge ids on that loop. Rows are deduplicated as sets.
struct ConstraintMatrix {
    int edge_count = 0;
    std::vector<std::vector<EdgeId>> rows;

    explicit ConstraintMatrix(int edges = 0) : edge_count(edges) {}

    /// Adds a row unless an identical edge set is already present.
    /// Returns true when the row was added.
    bool add_row(std::span<const EdgeId> edge_ids);
};

/// Solution of min Σ_e rho(e)^2 subject to Σ_{e in row} rho(e) >= 1, rho >= 0,
/// restricted to the rows of a ConstraintMatrix. rho is tied to the duals by
/// rho(e) = Σ_{rows r containing e} lambda(r) / 2; with a nonnegative matrix
/// and lambda >= 0 that makes rho >= 0 automatic.
struct QpSolution {
    std::vector<double> rho;     // per edge
    std::vector<double> lambda;  // per row, >= 0
    double modulus = 0.0;        // Σ rho^2
    int iterations = 0;          // full coordinate passes
    double max_violation = 0.0;  // max over rows of (1 - rho-length)
    bool converged = false;
};

/// Dual coordinate ascent: cyclically set
///   lambda_r <- max(0, lambda_r + 2 (1 - rho-length(r)) / |r|)
/// (the exact one-dimensional maximizer, since the dual Hessian diagonal is
/// |r|/2), keeping rho = N^T lambda / 2 incrementally. Stops when both the
/// worst violation and the largest per-pass lambda change drop to `tolerance`.
/// `warm`, when given, seeds lambda for the shared row prefix; rows beyond it
/// start at zero. max_iters < 0 means 200 passes per row. `dual_trace`, when
/// given, receives the dual objective after every pass.
QpSolution solve_qp(const ConstraintMatrix& matrix, const QpSolution* warm = nullptr,
                    double tolerance = 1e-8, int max_iters = -1,
                    std::vector<double>* dual_trace = nullptr);

/// Dual objective of a stationarity-consistent solution,
/// Σ lambda - (1/4)|N^T lambda|^2 = Σ lambda - Σ rho^2.
double qp_dual_value(const QpSolution& solution);

}  // namespace cyclekit

#endif
