#pragma once

// The graph infinity Laplacian, two independent solvers for the Dirichlet
// problem Delta_inf u = 0 in K, u = g on dK, and checks of the properties that
// characterize the solution (comparison, Harnack alternative, comparison with
// cones, absolute minimality).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gasket/domain.hpp"
#include "gasket/field.hpp"
#include "gasket/lipschitz.hpp"

namespace gasket {

// =============================================================================
// Operator
// =============================================================================

/// max_y {u(y) - u(x)} + min_y {u(y) - u(x)} over all V^n-neighbors of x.
inline double infinity_laplacian(const PreFractalGraph& g, const VertexField& u, VertexId x) {
    detail::require(!g.is_boundary(x), "the infinity Laplacian is not defined on V^0");
    const double ux = u.at(x);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (VertexId y : g.neighbors(x)) {
        const double d = u.at(y) - ux;
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return hi + lo;
}

/// Same operator with neighbors restricted to the closure of dom.
inline double infinity_laplacian(const Subdomain& dom, const VertexField& u, VertexId x) {
    const auto& g = dom.graph();
    detail::require(!g.is_boundary(x), "the infinity Laplacian is not defined on V^0");
    const double ux = u.at(x);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (VertexId y : g.neighbors(x)) {
        if (!dom.in_closure(y)) continue;
        const double d = u.at(y) - ux;
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return hi + lo;
}

/// sup over K of |Delta_inf u|.
inline double residual(const Subdomain& dom, const VertexField& u) {
    double r = 0.0;
    for (VertexId x : dom.interior()) r = std::max(r, std::abs(infinity_laplacian(dom, u, x)));
    return r;
}

// =============================================================================
// Problem and reports
// =============================================================================

struct InfinityProblem {
    Subdomain domain;
    /// Defined exactly on dK.
    VertexField boundary;
};

/// Validates connectivity and that g covers dK; keeps only the dK values.
inline InfinityProblem make_problem(Subdomain dom, const VertexField& g) {
    require_connected(dom);
    detail::require(g.defined_on(dom.boundary()), "boundary data must be defined on the whole boundary");
    VertexField data = restrict_field(g, dom.boundary());
    return {std::move(dom), std::move(data)};
}

/// K = V^n \ V^0 with g(q1), g(q2), g(q3).
inline InfinityProblem full_problem(const PreFractalGraph& g, const std::array<double, 3>& corners) {
    detail::require(g.level() >= 1, "V^0 has no interior vertices");
    return make_problem(full_domain(g), VertexField::on_corners(g, corners));
}

enum class Method { iterate, lazarus };

inline const char* to_string(Method m) { return m == Method::iterate ? "iterate" : "lazarus"; }

struct LazarusStage {
    VertexId from = 0;
    VertexId to = 0;
    double slope = 0.0;
    std::vector<VertexId> path;
    std::size_t component_size = 0;
    /// Constant boundary values: the component was filled with that value.
    bool constant_fill = false;
};

struct SolveReport {
    Method method = Method::iterate;
    bool converged = false;
    /// Sweeps (iterate) or stages (lazarus).
    std::size_t iterations = 0;
    double residual = 0.0;
    double last_change = 0.0;
    double elapsed_seconds = 0.0;
    std::vector<LazarusStage> stages;
};

struct Solution {
    VertexField field;
    SolveReport report;
};

namespace detail {

inline std::pair<double, double> boundary_range(const InfinityProblem& p) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (VertexId b : p.domain.boundary()) {
        lo = std::min(lo, p.boundary.at(b));
        hi = std::max(hi, p.boundary.at(b));
    }
    return {lo, hi};
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace detail

// =============================================================================
// Iterative solver
// =============================================================================

enum class SweepMode {
    /// In-place sweeps in ascending vertex order; bit-reproducible.
    gauss_seidel,
    /// Every update reads the previous iterate; may use several threads.
    jacobi,
};

struct IterateOptions {
    /// Default 1e-13 * (1 + boundary range).
    std::optional<double> tol;
    std::size_t max_iter = 10'000'000;
    SweepMode mode = SweepMode::gauss_seidel;
    unsigned threads = 1;
    /// Starting values on K; default is the midpoint of the boundary range.
    std::optional<VertexField> initial;
};

/// Midrange fixed point u(x) <- (max_y u(y) + min_y u(y)) / 2 over neighbors
/// in the closure, until the sup-change of a sweep is <= tol and the residual
/// is <= tol. On exhaustion returns the last iterate with converged = false.
inline Solution solve_iterate(const InfinityProblem& p, const IterateOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto& dom = p.domain;
    const auto& g = dom.graph();
    const auto [lo, hi] = detail::boundary_range(p);
    const double tol = opt.tol.value_or(1e-13 * (1.0 + (hi - lo)));
    detail::require(tol > 0.0, "tolerance must be positive");

    const auto& inner = dom.interior();
    std::vector<double> cur(g.vertex_count(), 0.0);
    for (VertexId b : dom.boundary()) cur[b] = p.boundary.at(b);
    for (VertexId x : inner) cur[x] = opt.initial ? opt.initial->at(x) : 0.5 * (lo + hi);

    // every neighbor of an interior vertex lies in the closure
    auto midrange = [&](const std::vector<double>& v, VertexId x) {
        double a = std::numeric_limits<double>::infinity(), b = -a;
        for (VertexId y : g.neighbors(x)) {
            a = std::min(a, v[y]);
            b = std::max(b, v[y]);
        }
        return 0.5 * (a + b);
    };

    SolveReport rep;
    rep.method = Method::iterate;
    std::vector<double> next;
    if (opt.mode == SweepMode::jacobi) next = cur;
    const unsigned threads = std::max(1u, opt.threads);

    auto jacobi_range = [&](std::size_t begin, std::size_t end, double& change) {
        double c = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            const VertexId x = inner[i];
            next[x] = midrange(cur, x);
            c = std::max(c, std::abs(next[x] - cur[x]));
        }
        change = c;
    };

    VertexField field(g);
    for (std::size_t it = 1; it <= opt.max_iter; ++it) {
        double change = 0.0;
        if (opt.mode == SweepMode::gauss_seidel) {
            for (VertexId x : inner) {
                const double v = midrange(cur, x);
                change = std::max(change, std::abs(v - cur[x]));
                cur[x] = v;
            }
        } else if (threads == 1 || inner.size() < 2 * threads) {
            jacobi_range(0, inner.size(), change);
            std::swap(cur, next);
        } else {
            std::vector<double> part(threads, 0.0);
            std::vector<std::thread> pool;
            const std::size_t chunk = (inner.size() + threads - 1) / threads;
            for (unsigned t = 0; t < threads; ++t) {
                const std::size_t b = std::min(inner.size(), t * chunk);
                const std::size_t e = std::min(inner.size(), b + chunk);
                pool.emplace_back([&, b, e, t] { jacobi_range(b, e, part[t]); });
            }
            for (auto& th : pool) th.join();
            change = *std::max_element(part.begin(), part.end());
            std::swap(cur, next);
        }
        rep.iterations = it;
        rep.last_change = change;
        if (change <= tol) {
            double res = 0.0;
            for (VertexId x : inner) res = std::max(res, 2.0 * std::abs(midrange(cur, x) - cur[x]));
            rep.residual = res;
            if (res <= tol) {
                rep.converged = true;
                break;
            }
        }
    }

    for (VertexId x : dom.closure()) field.set(x, cur[x]);
    rep.residual = residual(dom, field);
    rep.elapsed_seconds = detail::seconds_since(t0);
    return {std::move(field), std::move(rep)};
}

// =============================================================================
// Constructive (Lazarus) solver
// =============================================================================

/// Repeatedly picks, on a component of the unfixed vertices, the boundary
/// pair of maximal slope |g(x)-g(y)| / d_{n,K'}(x,y) (smallest id pair on
/// ties), fixes u linearly along the deterministic geodesic between them, and
/// recurses on the components that remain.
///
/// Throws LazarusError if two assignments to one vertex disagree or the
/// result is not infinity harmonic.
inline Solution solve_lazarus(const InfinityProblem& p) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto& dom = p.domain;
    const auto& g = dom.graph();
    const auto [lo, hi] = detail::boundary_range(p);
    const double consistency = 1e-12 * (1.0 + (hi - lo));
    const double scale = g.inverse_mesh_size();

    std::vector<double> val(g.vertex_count(), 0.0);
    std::vector<bool> fixed(g.vertex_count(), false);
    for (VertexId b : dom.boundary()) {
        val[b] = p.boundary.at(b);
        fixed[b] = true;
    }

    SolveReport rep;
    rep.method = Method::lazarus;
    std::ostringstream log;

    auto assign = [&](VertexId x, double v) {
        if (fixed[x]) {
            if (std::abs(val[x] - v) > consistency) {
                log << "vertex " << g.vertex(x).address() << " assigned " << val[x] << " and " << v << "\n";
                throw LazarusError("inconsistent assignment in constructive solver:\n" + log.str());
            }
            return;
        }
        val[x] = v;
        fixed[x] = true;
    };

    std::vector<bool> mask(g.vertex_count(), false);
    for (VertexId x : dom.interior()) mask[x] = true;
    std::deque<std::vector<VertexId>> work;
    for (auto& c : interior_components(g, mask, dom.interior())) work.push_back(std::move(c));

    while (!work.empty()) {
        std::vector<VertexId> comp = std::move(work.front());
        work.pop_front();
        const Subdomain sub = boundary_closure(g, comp);
        const auto& bd = sub.boundary();
        for (VertexId b : bd)
            if (!fixed[b]) throw LazarusError("component boundary contains an unfixed vertex");

        LazarusStage stage;
        stage.component_size = comp.size();
        // one boundary point, or all boundary values equal: the solution is
        // that constant
        const bool flat = std::all_of(bd.begin(), bd.end(), [&](VertexId b) { return val[b] == val[bd.front()]; });
        if (flat) {
            for (VertexId x : comp) assign(x, val[bd.front()]);
            stage.from = stage.to = bd.front();
            stage.constant_fill = true;
            stage.path = comp;
            log << "stage " << rep.stages.size() << ": constant fill of " << comp.size() << " vertices\n";
            rep.stages.push_back(std::move(stage));
            continue;
        }

        double best = -1.0;
        std::size_t bi = 0, bj = 1;
        std::int32_t best_hops = 0;
        std::vector<std::vector<std::int32_t>> rows;
        rows.reserve(bd.size());
        for (VertexId b : bd) rows.push_back(restricted_hops(sub, b));
        for (std::size_t i = 0; i < bd.size(); ++i)
            for (std::size_t j = i + 1; j < bd.size(); ++j) {
                const std::int32_t h = rows[i][bd[j]];
                if (h == kUnreached) throw LazarusError("component boundary pair without an admissible path");
                const double s = std::abs(val[bd[i]] - val[bd[j]]) * scale / h;
                if (s > best) {
                    best = s;
                    bi = i;
                    bj = j;
                    best_hops = h;
                }
            }

        const auto path = shortest_path(sub, bd[bi], bd[bj]);
        const std::size_t n = path.vertices.size() - 1;
        if (static_cast<std::int32_t>(n) != best_hops || n < 2)
            throw LazarusError("geodesic length does not match the restricted distance");
        const double ux = val[bd[bi]], uy = val[bd[bj]];
        for (std::size_t i = 1; i < n; ++i)
            assign(path.vertices[i], (static_cast<double>(i) * uy + static_cast<double>(n - i) * ux) /
                                         static_cast<double>(n));

        stage.from = bd[bi];
        stage.to = bd[bj];
        stage.slope = best;
        stage.path = path.vertices;
        log << "stage " << rep.stages.size() << ": pair " << g.vertex(stage.from).address() << " "
            << g.vertex(stage.to).address() << " slope " << best << " fixes " << (n - 1) << " vertices\n";
        rep.stages.push_back(std::move(stage));

        std::vector<VertexId> rest;
        std::vector<bool> rest_mask(g.vertex_count(), false);
        for (VertexId x : comp)
            if (!fixed[x]) {
                rest.push_back(x);
                rest_mask[x] = true;
            }
        for (auto& c : interior_components(g, rest_mask, rest)) work.push_back(std::move(c));
    }

    VertexField field(g);
    for (VertexId x : dom.closure()) field.set(x, val[x]);
    rep.iterations = rep.stages.size();
    rep.residual = residual(dom, field);
    rep.converged = true;
    if (rep.residual > 1e-9 * (1.0 + (hi - lo)))
        throw LazarusError("constructive solution is not infinity harmonic (residual " +
                           std::to_string(rep.residual) + "):\n" + log.str());
    rep.elapsed_seconds = detail::seconds_since(t0);
    return {std::move(field), std::move(rep)};
}

inline Solution solve(const InfinityProblem& p, Method m, const IterateOptions& opt = {}) {
    return m == Method::iterate ? solve_iterate(p, opt) : solve_lazarus(p);
}

// =============================================================================
// Boundary normalization
// =============================================================================

/// Affine map of the boundary data onto [0, 1] with the middle
/// corner value at most 1/2 (reflecting v -> 1 - v when needed).
struct BoundaryNormalization {
    double lo = 0.0;
    double hi = 1.0;
    bool reflected = false;
    bool constant = false;

    /// (u - lo)/(hi - lo), or (hi - u)/(hi - lo) when reflected; u - lo when
    /// the data are constant.
    double apply(double u) const {
        if (constant) return u - lo;
        return reflected ? (hi - u) / (hi - lo) : (u - lo) / (hi - lo);
    }
    double invert(double v) const {
        if (constant) return v + lo;
        return reflected ? hi - v * (hi - lo) : lo + v * (hi - lo);
    }

    static BoundaryNormalization from(const std::vector<double>& values) {
        detail::require(!values.empty(), "no boundary values");
        BoundaryNormalization nm;
        const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
        nm.lo = *mn;
        nm.hi = *mx;
        if (nm.hi == nm.lo) {
            nm.constant = true;
            return nm;
        }
        // "e": the largest normalized value below the maximum (the middle corner)
        double e = 0.0;
        for (double v : values)
            if (v < nm.hi) e = std::max(e, nm.apply(v));
        nm.reflected = e > 0.5;
        return nm;
    }
};

/// Solves the normalized problem and maps the result back.
inline Solution solve_normalized(const InfinityProblem& p, Method m, const IterateOptions& opt = {}) {
    std::vector<double> vals;
    for (VertexId b : p.domain.boundary()) vals.push_back(p.boundary.at(b));
    const auto nm = BoundaryNormalization::from(vals);
    VertexField data(p.domain.graph());
    for (VertexId b : p.domain.boundary()) data.set(b, nm.apply(p.boundary.at(b)));
    IterateOptions inner = opt;
    if (opt.initial) {
        VertexField init(p.domain.graph());
        for (VertexId x : p.domain.interior()) init.set(x, nm.apply(opt.initial->at(x)));
        inner.initial = std::move(init);
    }
    auto sol = solve(InfinityProblem{p.domain, std::move(data)}, m, inner);
    VertexField out(p.domain.graph());
    for (VertexId x : p.domain.closure())
        out.set(x, p.domain.on_boundary(x) ? p.boundary.at(x) : nm.invert(sol.field.at(x)));
    sol.field = std::move(out);
    sol.report.residual = residual(p.domain, sol.field);
    return sol;
}

// =============================================================================
// Verification
// =============================================================================

struct ComparisonResult {
    bool hypotheses_hold = true;
    bool conclusion_holds = true;
    /// Vertices where sub is not a subsolution, sup not a supersolution, or
    /// sub > sup on dK.
    std::vector<VertexId> hypothesis_violations;
    std::vector<VertexId> conclusion_violations;

    bool ok() const { return hypotheses_hold && conclusion_holds; }
};

/// Delta sub >= 0, Delta sup <= 0 in K and sub <= sup on dK imply sub <= sup on
/// the closure. Hypotheses and conclusion are reported separately.
inline ComparisonResult verify_comparison(const Subdomain& dom, const VertexField& sub, const VertexField& sup,
                                          double tol = 1e-9) {
    ComparisonResult r;
    for (VertexId x : dom.interior())
        if (infinity_laplacian(dom, sub, x) < -tol || infinity_laplacian(dom, sup, x) > tol)
            r.hypothesis_violations.push_back(x);
    for (VertexId b : dom.boundary())
        if (sub.at(b) > sup.at(b) + tol) r.hypothesis_violations.push_back(b);
    r.hypotheses_hold = r.hypothesis_violations.empty();
    for (VertexId x : dom.closure())
        if (sub.at(x) > sup.at(x) + tol) r.conclusion_violations.push_back(x);
    r.conclusion_holds = r.conclusion_violations.empty();
    return r;
}

struct ConeViolation {
    VertexId apex = 0;
    double lambda = 0.0;
    VertexId vertex = 0;
    /// true: cone from above (u <= lambda d + alpha) failed.
    bool upper = true;
    double excess = 0.0;
};

struct CCReport {
    bool ok = true;
    std::vector<ConeViolation> violations;
    std::size_t cones_checked = 0;
};

/// Comparison with cones on dom: for every apex x0 in dK and every slope in
/// {0, L0/2, L0, 2 L0, lambda*(x0)}, the tightest alpha with
/// u <= lambda d_{n,K}(x0,.) + alpha on dK must bound u on K; dually from below.
inline CCReport verify_cc(const Subdomain& dom, const VertexField& u, double tol = 1e-9) {
    require_connected(dom);
    CCReport rep;
    const auto& g = dom.graph();
    const double l0 = lip_boundary(dom, u).value;
    for (VertexId apex : dom.boundary()) {
        const auto hops = restricted_hops(dom, apex);
        auto d = [&](VertexId y) { return std::ldexp(static_cast<double>(hops[y]), -g.level()); };
        double tight = 0.0;
        for (VertexId y : dom.boundary())
            if (y != apex) tight = std::max(tight, std::abs(u.at(y) - u.at(apex)) / d(y));
        for (double lambda : {0.0, 0.5 * l0, l0, 2.0 * l0, tight}) {
            double alpha_up = -std::numeric_limits<double>::infinity();
            double alpha_lo = std::numeric_limits<double>::infinity();
            for (VertexId y : dom.boundary()) {
                alpha_up = std::max(alpha_up, u.at(y) - lambda * d(y));
                alpha_lo = std::min(alpha_lo, u.at(y) + lambda * d(y));
            }
            rep.cones_checked += 2;
            for (VertexId x : dom.interior()) {
                const double up = u.at(x) - (lambda * d(x) + alpha_up);
                if (up > tol) rep.violations.push_back({apex, lambda, x, true, up});
                const double dn = (alpha_lo - lambda * d(x)) - u.at(x);
                if (dn > tol) rep.violations.push_back({apex, lambda, x, false, dn});
            }
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

struct VertexCheck {
    bool ok = true;
    std::vector<VertexId> failures;
};

/// At each x in K: either the neighbor increments change sign strictly, or
/// they all vanish (within tol).
template <class Range>
VertexCheck verify_harnack_alternative(const PreFractalGraph& g, const VertexField& u, const Range& set,
                                       double tol = 1e-9) {
    VertexCheck r;
    for (VertexId x : set) {
        const double ux = u.at(x);
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (VertexId y : g.neighbors(x)) {
            lo = std::min(lo, u.at(y) - ux);
            hi = std::max(hi, u.at(y) - ux);
        }
        const bool sign_change = lo < 0.0 && hi > 0.0;
        const bool flat = std::abs(lo) <= tol && std::abs(hi) <= tol;
        if (!sign_change && !flat) r.failures.push_back(x);
    }
    r.ok = r.failures.empty();
    return r;
}

/// u(x) minimizes t -> max_y |t - u(y)| / delta_n, i.e. sits at the midrange.
inline bool verify_am_local(const PreFractalGraph& g, const VertexField& u, VertexId x, double tol = 1e-9) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (VertexId y : g.neighbors(x)) {
        lo = std::min(lo, u.at(y));
        hi = std::max(hi, u.at(y));
    }
    return std::abs(u.at(x) - 0.5 * (lo + hi)) <= tol;
}

struct AmleViolation {
    std::vector<VertexId> subset;
    double lip_u = 0.0;
    double lip_competitor = 0.0;
    bool competitor_is_resolve = true;
};

struct AmleReport {
    bool ok = true;
    std::size_t subsets_checked = 0;
    std::vector<AmleViolation> violations;
};

/// A random connected subset of dom's interior grown from a random seed.
inline std::vector<VertexId> random_connected_subset(const Subdomain& dom, std::mt19937_64& rng,
                                                     std::size_t max_size = 0) {
    const auto& inner = dom.interior();
    detail::require(!inner.empty(), "cannot sample from an empty subdomain");
    const auto& g = dom.graph();
    const std::size_t cap = max_size == 0 ? inner.size() : std::min(max_size, inner.size());
    const std::size_t target = std::uniform_int_distribution<std::size_t>(1, cap)(rng);
    std::vector<bool> in(g.vertex_count(), false);
    std::vector<VertexId> set{inner[std::uniform_int_distribution<std::size_t>(0, inner.size() - 1)(rng)]};
    in[set.front()] = true;
    std::vector<VertexId> frontier;
    auto push_frontier = [&](VertexId v) {
        for (VertexId y : g.neighbors(v))
            if (dom.contains(y) && !in[y]) frontier.push_back(y);
    };
    push_frontier(set.front());
    while (set.size() < target && !frontier.empty()) {
        const std::size_t k = std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng);
        const VertexId y = frontier[k];
        frontier[k] = frontier.back();
        frontier.pop_back();
        if (in[y]) continue;
        in[y] = true;
        set.push_back(y);
        push_frontier(y);
    }
    std::sort(set.begin(), set.end());
    return set;
}

/// For `samples` random connected K' within dom: Lip(u, K') must not exceed
/// the Lipschitz constant of the re-solved extension of u|dK', nor of random
/// competitors that agree with u on dK'.
inline AmleReport verify_amle_global(const Subdomain& dom, const VertexField& u, std::size_t samples,
                                     std::uint64_t seed, double tol = 1e-9, std::size_t max_subset = 0) {
    AmleReport rep;
    std::mt19937_64 rng(seed);
    const auto& g = dom.graph();
    for (std::size_t s = 0; s < samples; ++s) {
        auto ids = random_connected_subset(dom, rng, max_subset);
        const Subdomain sub = boundary_closure(g, ids);
        const double lip_u = lip_interior(sub, u).value;
        double range = 0.0;
        for (VertexId b : sub.boundary()) range = std::max(range, std::abs(u.at(b)));

        auto v = solve_iterate(make_problem(sub, u)).field;
        const double lip_v = lip_interior(sub, v).value;
        if (lip_u > lip_v + tol) rep.violations.push_back({ids, lip_u, lip_v, true});

        std::uniform_real_distribution<double> noise(-0.1 * (1.0 + range), 0.1 * (1.0 + range));
        for (int c = 0; c < 2; ++c) {
            VertexField w = v;
            for (VertexId x : sub.interior()) w.set(x, u.at(x) + noise(rng));
            const double lip_w = lip_interior(sub, w).value;
            if (lip_u > lip_w + tol) rep.violations.push_back({ids, lip_u, lip_w, false});
        }
        ++rep.subsets_checked;
    }
    rep.ok = rep.violations.empty();
    return rep;
}

/// Delta_inf d_{n,K}(x0, .) <= tol and Delta_inf (-d_{n,K}(x0, .)) >= -tol in K
/// for every apex x0 in dK. Returns the apexes that fail.
inline VertexCheck verify_distance_solutions(const Subdomain& dom, double tol = 1e-12) {
    VertexCheck r;
    const auto& g = dom.graph();
    for (VertexId apex : dom.boundary()) {
        const auto hops = restricted_hops(dom, apex);
        VertexField d(g), neg(g);
        for (VertexId x : dom.closure()) {
            const double v = std::ldexp(static_cast<double>(hops[x]), -g.level());
            d.set(x, v);
            neg.set(x, -v);
        }
        bool ok = true;
        for (VertexId x : dom.interior())
            if (infinity_laplacian(dom, d, x) > tol || infinity_laplacian(dom, neg, x) < -tol) ok = false;
        if (!ok) r.failures.push_back(apex);
    }
    r.ok = r.failures.empty();
    return r;
}

struct LinearityReport {
    bool ok = true;
    std::size_t paths_checked = 0;
    double max_deviation = 0.0;
};

/// For the boundary pair attaining Lip(u, dK), u interpolates linearly in
/// d_{n,K} along every minimal path between them (up to `cap` paths).
inline LinearityReport verify_geodesic_linearity(const Subdomain& dom, const VertexField& u, double tol = 1e-9,
                                                 std::size_t cap = 256) {
    LinearityReport r;
    const auto lb = lip_boundary(dom, u);
    if (!lb.witness) return r;
    const auto [x, y] = *lb.witness;
    const auto set = all_geodesics(dom, x, y, cap);
    for (const auto& path : set.paths) {
        const std::size_t n = path.vertices.size() - 1;
        for (std::size_t i = 0; i <= n; ++i) {
            const double expect =
                (static_cast<double>(i) * u.at(y) + static_cast<double>(n - i) * u.at(x)) / static_cast<double>(n);
            r.max_deviation = std::max(r.max_deviation, std::abs(u.at(path.vertices[i]) - expect));
        }
        ++r.paths_checked;
    }
    r.ok = r.max_deviation <= tol;
    return r;
}

/// min_dK g <= u <= max_dK g on the closure.
inline bool verify_maximum_principle(const Subdomain& dom, const VertexField& u, double tol = 1e-12) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (VertexId b : dom.boundary()) {
        lo = std::min(lo, u.at(b));
        hi = std::max(hi, u.at(b));
    }
    for (VertexId x : dom.closure())
        if (u.at(x) < lo - tol || u.at(x) > hi + tol) return false;
    return true;
}

} // namespace gasket
