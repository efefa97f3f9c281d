#include "cyclekit/qp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cyclekit {

bool ConstraintMatrix::add_row(std::span<const EdgeId> edge_ids) {
    std::vector<EdgeId> row(edge_ids.begin(), edge_ids.end());
    std::sort(row.begin(), row.end());
    if (row.size() < 3) throw ValidationError("constraint row needs at least 3 edges");
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
        throw ValidationError("constraint row repeats an edge");
    for (EdgeId e : row)
        if (e < 0 || e >= edge_count) throw ValidationError("constraint edge id out of range");
    for (const auto& existing : rows)
        if (existing == row) return false;
    rows.push_back(std::move(row));
    return true;
}

namespace {

double row_length(const std::vector<EdgeId>& row, const std::vector<double>& rho) {
    double len = 0.0;
    for (EdgeId e : row) len += rho[static_cast<size_t>(e)];
    return len;
}

}  // namespace

double qp_dual_value(const QpSolution& solution) {
    double lam = 0.0;
    for (double l : solution.lambda) lam += l;
    double sq = 0.0;
    for (double r : solution.rho) sq += r * r;
    return lam - sq;
}

QpSolution solve_qp(const ConstraintMatrix& matrix, const QpSolution* warm, double tolerance,
                    int max_iters, std::vector<double>* dual_trace) {
    const int rows = static_cast<int>(matrix.rows.size());
    const size_t edges = static_cast<size_t>(matrix.edge_count);
    QpSolution s;
    s.rho.assign(edges, 0.0);
    s.lambda.assign(static_cast<size_t>(rows), 0.0);
    if (rows == 0) {
        s.converged = true;
        return s;
    }
    if (warm) {
        const size_t shared = std::min(warm->lambda.size(), s.lambda.size());
        for (size_t r = 0; r < shared; ++r) s.lambda[r] = warm->lambda[r];
        for (size_t r = 0; r < shared; ++r)
            for (EdgeId e : matrix.rows[r]) s.rho[static_cast<size_t>(e)] += s.lambda[r] * 0.5;
    }
    if (max_iters < 0) max_iters = 200 * rows;

    bool converged = false;
    int pass = 0;
    while (pass < max_iters) {
        ++pass;
        double max_change = 0.0;
        for (int r = 0; r < rows; ++r) {
            const auto& row = matrix.rows[static_cast<size_t>(r)];
            const double len = row_length(row, s.rho);
            const double stepped =
                s.lambda[static_cast<size_t>(r)] + 2.0 * (1.0 - len) / static_cast<double>(row.size());
            const double next = std::max(0.0, stepped);
            const double change = next - s.lambda[static_cast<size_t>(r)];
            if (change != 0.0) {
                s.lambda[static_cast<size_t>(r)] = next;
                for (EdgeId e : row) s.rho[static_cast<size_t>(e)] += change * 0.5;
                max_change = std::max(max_change, std::abs(change));
            }
        }
        if (dual_trace) dual_trace->push_back(qp_dual_value(s));
        if (max_change <= tolerance) {
            double worst = -std::numeric_limits<double>::infinity();
            for (const auto& row : matrix.rows)
                worst = std::max(worst, 1.0 - row_length(row, s.rho));
            if (worst <= tolerance) {
                converged = true;
                break;
            }
        }
    }

    // Re-derive rho from the final duals so stationarity holds exactly, not
    // just up to the incremental-update drift.
    std::fill(s.rho.begin(), s.rho.end(), 0.0);
    for (int r = 0; r < rows; ++r)
        for (EdgeId e : matrix.rows[static_cast<size_t>(r)])
            s.rho[static_cast<size_t>(e)] += s.lambda[static_cast<size_t>(r)];
    for (double& v : s.rho) v *= 0.5;

    s.max_violation = -std::numeric_limits<double>::infinity();
    for (const auto& row : matrix.rows)
        s.max_violation = std::max(s.max_violation, 1.0 - row_length(row, s.rho));
    s.modulus = 0.0;
    for (double v : s.rho) s.modulus += v * v;
    s.iterations = pass;
    s.converged = converged;
    return s;
}

}  // namespace cyclekit
