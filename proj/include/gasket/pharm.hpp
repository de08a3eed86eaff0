#pragma once

// Discrete p-energy on V^n and its minimizers with data fixed on V^0.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "gasket/domain.hpp"
#include "gasket/field.hpp"
#include "gasket/infinity.hpp"
#include "gasket/lipschitz.hpp"

namespace gasket {

/// I_p(u) = ( sum_{x in V^n} sum_{y ~ x} |(u(y) - u(x)) / delta_n|^p )^(1/p).
/// Each edge enters twice, once from each endpoint. Powers are taken of
/// slopes divided by the largest slope so large p cannot overflow.
inline double p_energy(const PreFractalGraph& g, const VertexField& u, double p) {
    detail::require(p >= 1.0, "p-energy requires p >= 1");
    double smax = 0.0;
    for (auto [x, y] : g.edges()) smax = std::max(smax, std::abs(u.at(x) - u.at(y)));
    if (smax == 0.0) return 0.0;
    double sum = 0.0;
    for (auto [x, y] : g.edges()) sum += 2.0 * std::pow(std::abs(u.at(x) - u.at(y)) / smax, p);
    return smax * g.inverse_mesh_size() * std::pow(sum, 1.0 / p);
}

/// I_p(u, x): the star energy at a single vertex.
inline double local_p_energy(const PreFractalGraph& g, const VertexField& u, VertexId x, double p) {
    detail::require(p >= 1.0, "p-energy requires p >= 1");
    const double ux = u.at(x);
    double smax = 0.0;
    for (VertexId y : g.neighbors(x)) smax = std::max(smax, std::abs(u.at(y) - ux));
    if (smax == 0.0) return 0.0;
    double sum = 0.0;
    for (VertexId y : g.neighbors(x)) sum += std::pow(std::abs(u.at(y) - ux) / smax, p);
    return smax * g.inverse_mesh_size() * std::pow(sum, 1.0 / p);
}

/// argmin_t sum_i |t - v_i|^p for p > 1, by bisection on the (strictly
/// increasing) derivative over [min v, max v].
inline double minimize_star(const std::vector<double>& v, double p, double tol) {
    const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
    double lo = *mn, hi = *mx;
    const double spread = hi - lo;
    if (spread == 0.0) return lo;
    auto slope = [&](double t) {
        double s = 0.0;
        for (double vi : v) {
            const double r = (t - vi) / spread;
            s += std::copysign(std::pow(std::abs(r), p - 1.0), r);
        }
        return s;
    };
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (slope(mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

struct PEnergyProblem {
    const PreFractalGraph* graph = nullptr;
    double p = 2.0;
    /// Data on V^0.
    std::array<double, 3> corners{};
};

struct PSolveOptions {
    /// Default 1e-10 * (1 + boundary range).
    std::optional<double> tol;
    std::size_t max_sweeps = 1'000'000;
    /// Default: midpoint of the McShane-Whitney extensions.
    std::optional<VertexField> initial;
};

struct PSolveReport {
    std::size_t sweeps = 0;
    /// I_p after the initial guess and after each sweep.
    std::vector<double> energy_trace;
    double final_change = 0.0;
    bool converged = false;
};

struct PSolution {
    VertexField field;
    PSolveReport report;
};

/// (M_* + M^*) / 2 for the full-domain problem with the given corner data.
inline VertexField mcshane_midpoint(const PreFractalGraph& g, const std::array<double, 3>& corners) {
    const Subdomain dom = full_domain(g);
    const auto mw = mcshane_whitney(dom, VertexField::on_corners(g, corners));
    VertexField mid(g);
    for (VertexId x = 0; x < g.vertex_count(); ++x) mid.set(x, 0.5 * (mw.lower.at(x) + mw.upper.at(x)));
    return mid;
}

/// Cyclic coordinate minimization of I_p over fields equal to the corner data
/// on V^0. Stops when a sweep moves no vertex by more than tol.
inline PSolution solve_p_harmonic(const PEnergyProblem& prob, const PSolveOptions& opt = {}) {
    detail::require(prob.graph != nullptr, "p-energy problem has no graph");
    detail::require(prob.p > 1.0, "p-harmonic solve requires p > 1");
    for (double c : prob.corners) detail::require(std::isfinite(c), "boundary data must be finite");
    const auto& g = *prob.graph;
    detail::require(g.level() >= 1, "V^0 has no interior vertices");
    const auto [mn, mx] = std::minmax_element(prob.corners.begin(), prob.corners.end());
    const double tol = opt.tol.value_or(1e-10 * (1.0 + (*mx - *mn)));
    detail::require(tol > 0.0, "tolerance must be positive");

    VertexField u = opt.initial ? *opt.initial : mcshane_midpoint(g, prob.corners);
    for (int i = 0; i < 3; ++i) u.set(g.boundary()[i], prob.corners[i]);

    PSolution out;
    auto& rep = out.report;
    rep.energy_trace.push_back(p_energy(g, u, prob.p));
    std::vector<double> nb;
    for (std::size_t sweep = 1; sweep <= opt.max_sweeps; ++sweep) {
        double change = 0.0;
        for (VertexId x = 0; x < g.vertex_count(); ++x) {
            if (g.is_boundary(x)) continue;
            nb.clear();
            for (VertexId y : g.neighbors(x)) nb.push_back(u.at(y));
            const double t = minimize_star(nb, prob.p, 0.1 * tol);
            change = std::max(change, std::abs(t - u.at(x)));
            u.set(x, t);
        }
        rep.sweeps = sweep;
        rep.final_change = change;
        rep.energy_trace.push_back(p_energy(g, u, prob.p));
        if (change <= tol) {
            rep.converged = true;
            break;
        }
    }
    out.field = std::move(u);
    return out;
}

struct PSweepRow {
    double p = 0.0;
    /// sup over V^n of |u_p - u^n|.
    double gap = 0.0;
    double energy = 0.0;
    std::size_t sweeps = 0;
    bool converged = false;
};

/// For each p (increasing, > 1) solves the p-harmonic problem, warm-started
/// from the previous p, and measures its sup distance to the infinity-harmonic
/// solution (computed by the constructive solver unless given).
inline std::vector<PSweepRow> p_sweep_to_infinity(const PreFractalGraph& g, const std::array<double, 3>& corners,
                                                  const std::vector<double>& ps, std::optional<double> tol = {},
                                                  std::optional<VertexField> reference = {}) {
    detail::require(!ps.empty(), "empty exponent list");
    for (std::size_t i = 0; i < ps.size(); ++i) {
        detail::require(ps[i] > 1.0, "all exponents must exceed 1");
        if (i > 0) detail::require(ps[i] > ps[i - 1], "exponents must be increasing");
    }
    const VertexField ref = reference ? *reference : solve_lazarus(full_problem(g, corners)).field;
    std::vector<VertexId> all(g.vertex_count());
    for (VertexId i = 0; i < all.size(); ++i) all[i] = i;

    std::vector<PSweepRow> rows;
    std::optional<VertexField> warm;
    for (double p : ps) {
        PSolveOptions opt;
        opt.tol = tol;
        opt.initial = warm;
        auto sol = solve_p_harmonic({&g, p, corners}, opt);
        rows.push_back({p, sup_distance(sol.field, ref, all), sol.report.energy_trace.back(), sol.report.sweeps,
                        sol.report.converged});
        warm = std::move(sol.field);
    }
    return rows;
}

} // namespace gasket
