#pragma once

// Experiments across levels: self-convergence of u^n on the coarse vertex
// sets V^k, monotonicity of F^n(u, V^n) in n, and the level-1 versus level-2
// counterexample.

#include <array>
#include <cmath>
#include <deque>
#include <string>
#include <vector>

#include "gasket/infinity.hpp"
#include "gasket/lipschitz.hpp"

namespace gasket {

/// Values of `fine` (on a finer graph) at the vertices of `coarse`.
inline VertexField transfer_down(const VertexField& fine, const PreFractalGraph& coarse) {
    const auto& g = fine.graph();
    detail::require(coarse.level() <= g.level(), "target graph must not be finer than the source");
    VertexField out(coarse);
    for (VertexId id = 0; id < coarse.vertex_count(); ++id) out.set(id, fine.at(g.id_of(coarse.vertex(id))));
    return out;
}

struct ConvergenceRow {
    int n = 0;
    int k = 0;
    /// sup over V^k of |u^n - u^ref|.
    double sup_diff = 0.0;
    /// F^n(u^n, V^n).
    double f_n = 0.0;
    std::size_t iterations = 0;
    double residual = 0.0;
    bool ok = true;
    std::string error;
};

struct ConvergenceTable {
    std::array<double, 3> corners{};
    int reference_level = 0;
    Method method = Method::iterate;
    std::vector<ConvergenceRow> rows;
};

struct LevelSweep {
    ConvergenceTable table;
    /// Graphs and solutions for n = 1..nMax (index n - 1). Fields point into
    /// `graphs`, whose elements never move.
    std::deque<PreFractalGraph> graphs;
    std::vector<VertexField> fields;
    std::vector<SolveReport> reports;
    std::vector<std::string> errors;
};

/// Solves the full-domain problem for n = 1..nMax and compares every level
/// below nMax with level nMax on V^k, k = 0..n. A failed level is recorded in
/// its rows and the sweep continues.
inline LevelSweep level_sweep(const std::array<double, 3>& corners, int n_max, Method method = Method::iterate,
                              int max_level = kDefaultMaxLevel) {
    detail::require(n_max >= 2, "level sweep needs nMax >= 2");
    LevelSweep out;
    out.table.corners = corners;
    out.table.reference_level = n_max;
    out.table.method = method;
    for (int n = 1; n <= n_max; ++n) {
        const auto& g = out.graphs.emplace_back(build_graph(n, max_level));
        try {
            auto sol = solve(full_problem(g, corners), method);
            if (!sol.report.converged) out.errors.push_back("solver did not converge");
            else out.errors.emplace_back();
            out.fields.push_back(std::move(sol.field));
            out.reports.push_back(std::move(sol.report));
        } catch (const Error& e) {
            out.fields.emplace_back(g);
            out.reports.emplace_back();
            out.errors.push_back(e.what());
        }
    }
    if (!out.errors.back().empty()) throw Error("reference level failed: " + out.errors.back());

    const VertexField& ref = out.fields.back();
    const PreFractalGraph& gref = out.graphs.back();
    for (int n = 1; n < n_max; ++n) {
        const auto& g = out.graphs[static_cast<std::size_t>(n - 1)];
        const auto& u = out.fields[static_cast<std::size_t>(n - 1)];
        const auto& rep = out.reports[static_cast<std::size_t>(n - 1)];
        const auto& err = out.errors[static_cast<std::size_t>(n - 1)];
        const double fn = err.empty() ? max_local_slope(g, u) : 0.0;
        for (int k = 0; k <= n; ++k) {
            ConvergenceRow row;
            row.n = n;
            row.k = k;
            row.iterations = rep.iterations;
            row.residual = rep.residual;
            row.f_n = fn;
            row.ok = err.empty();
            row.error = err;
            if (row.ok)
                for (VertexId id : restrict_ids(g, k))
                    row.sup_diff = std::max(row.sup_diff, std::abs(u.at(id) - ref.at(gref.id_of(g.vertex(id)))));
            out.table.rows.push_back(std::move(row));
        }
    }
    return out;
}

struct MonotoneRow {
    int n = 0;
    double f_n = 0.0;
    double f_next = 0.0;
    bool ok = true;
};

struct MonotoneReport {
    bool ok = true;
    std::vector<MonotoneRow> rows;
};

/// For a field on V^N, checks F^n(u|V^n, V^n) <= F^{n+1}(u|V^{n+1}, V^{n+1})
/// for n_lo <= n < n_hi <= N.
inline MonotoneReport monotone_functional_check(const VertexField& u, int n_lo, int n_hi, double slack = 1e-12) {
    const auto& fine = u.graph();
    detail::require(n_lo >= 1 && n_lo < n_hi && n_hi <= fine.level(), "level range must satisfy 1 <= lo < hi <= N");
    std::vector<double> f;
    for (int n = n_lo; n <= n_hi; ++n) {
        if (n == fine.level()) {
            f.push_back(max_local_slope(fine, u));
            continue;
        }
        const auto g = build_graph(n, fine.level());
        f.push_back(max_local_slope(g, transfer_down(u, g)));
    }
    MonotoneReport rep;
    for (int n = n_lo; n < n_hi; ++n) {
        const double a = f[static_cast<std::size_t>(n - n_lo)];
        const double b = f[static_cast<std::size_t>(n - n_lo + 1)];
        const bool ok = a <= b + slack * (1.0 + std::abs(b));
        rep.rows.push_back({n, a, b, ok});
        rep.ok = rep.ok && ok;
    }
    return rep;
}

struct CounterexampleReport {
    double e = 0.0;
    double u1_q12 = 0.0;
    double u2_q12 = 0.0;
    double difference = 0.0;
    /// Delta_inf at level 1 of u^2 restricted to V^1, at q12.
    double level1_laplacian = 0.0;
    double expected_u1 = 0.0; ///< (1 + e) / 4
    double expected_u2 = 0.0; ///< (3 + 4 e) / 12
    double expected_difference = 0.0; ///< e / 12
};

/// Boundary data (0, e, 1) with e in (0, 1/7]: the level-2 solution does not
/// restrict to the level-1 solution.
inline CounterexampleReport counterexample_report(double e, Method method = Method::lazarus) {
    detail::require(e > 0.0 && e <= 1.0 / 7.0 + 1e-15, "e must lie in (0, 1/7]");
    const std::array<double, 3> corners{0.0, e, 1.0};
    const auto g1 = build_graph(1);
    const auto g2 = build_graph(2);
    const auto u1 = solve(full_problem(g1, corners), method).field;
    const auto u2 = solve(full_problem(g2, corners), method).field;
    const Vertex q12 = Vertex::make(1, 1, 0, 1);

    CounterexampleReport r;
    r.e = e;
    r.u1_q12 = u1.at(q12);
    r.u2_q12 = u2.at(q12);
    r.difference = r.u2_q12 - r.u1_q12;
    r.level1_laplacian = infinity_laplacian(g1, transfer_down(u2, g1), g1.id_of(q12));
    r.expected_u1 = (1.0 + e) / 4.0;
    r.expected_u2 = (3.0 + 4.0 * e) / 12.0;
    r.expected_difference = e / 12.0;
    return r;
}

} // namespace gasket
