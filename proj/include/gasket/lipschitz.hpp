#pragma once

// Discrete Lipschitz functionals Lip^n(u,K), Lip^n(u,dK), the local slope
// F^n(u,x), and the McShane-Whitney extremal extensions.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "gasket/domain.hpp"
#include "gasket/field.hpp"

namespace gasket {

struct LipschitzReport {
    double value = 0.0;
    /// Smallest (lexicographic) id pair attaining the max.
    std::optional<std::pair<VertexId, VertexId>> witness;
    std::optional<DistanceValue> witness_distance;
    /// Fewer than two points to compare.
    bool degenerate = false;
};

/// Relative-plus-absolute tolerance used for real comparisons.
inline double tolerance_for(double scale, double rel = 1e-12) { return rel * (1.0 + std::abs(scale)); }

namespace detail {

// Max of |u(x)-u(y)| / d(x,y) over pairs x < y of `points`, where
// hops(x, y) gives restricted hop counts.
template <class HopFn>
LipschitzReport max_pair_slope(const PreFractalGraph& g, const std::vector<VertexId>& points,
                               const VertexField& u, HopFn&& hops) {
    LipschitzReport r;
    if (points.size() < 2) {
        r.degenerate = true;
        return r;
    }
    const double scale = g.inverse_mesh_size();
    double best = -1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double ui = u.at(points[i]);
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const std::int32_t h = hops(i, j);
            if (h == kUnreached) throw InputError("pair without an admissible path; subdomain not connected");
            const double slope = std::abs(ui - u.at(points[j])) * scale / h;
            if (slope > best) {
                best = slope;
                r.witness = std::make_pair(points[i], points[j]);
                r.witness_distance = DistanceValue::hops(g.level(), static_cast<std::uint32_t>(h));
            }
        }
    }
    r.value = best;
    return r;
}

} // namespace detail

/// Lip^n(u, K): max over distinct closure pairs, measured in d_{n,K}.
inline LipschitzReport lip_interior(const Subdomain& dom, const VertexField& u) {
    require_connected(dom);
    detail::require(u.defined_on(dom.closure()), "field must be defined on the closure");
    const ClosureDistances dist(dom);
    const auto& cl = dom.closure();
    return detail::max_pair_slope(dom.graph(), cl, u,
                                  [&](std::size_t i, std::size_t j) { return dist.hops(cl[i], cl[j]); });
}

/// Lip^n(g, dK): max over distinct boundary pairs, measured in d_{n,K}.
/// With a single boundary point the result is 0, flagged degenerate.
inline LipschitzReport lip_boundary(const Subdomain& dom, const VertexField& g) {
    require_connected(dom);
    const auto& bd = dom.boundary();
    detail::require(!bd.empty(), "subdomain has no boundary");
    detail::require(g.defined_on(bd), "boundary data must be defined on the whole boundary");
    std::vector<std::vector<std::int32_t>> rows;
    rows.reserve(bd.size());
    for (VertexId b : bd) rows.push_back(restricted_hops(dom, b));
    return detail::max_pair_slope(dom.graph(), bd, g,
                                  [&](std::size_t i, std::size_t j) { return rows[i][bd[j]]; });
}

/// F^n(u, x) = max over all V^n-neighbors y of |u(x) - u(y)| / delta_n.
inline double local_slope(const PreFractalGraph& g, const VertexField& u, VertexId x) {
    const double ux = u.at(x);
    double m = 0.0;
    for (VertexId y : g.neighbors(x)) m = std::max(m, std::abs(ux - u.at(y)));
    return m * g.inverse_mesh_size();
}

/// F^n(u, x) with the neighbor max restricted to the closure of dom.
///
/// For x in K every neighbor lies in K or dK, so this agrees with the
/// unrestricted form there; they differ only for x on the boundary.
inline double local_slope(const Subdomain& dom, const VertexField& u, VertexId x) {
    const auto& g = dom.graph();
    const double ux = u.at(x);
    double m = 0.0;
    for (VertexId y : g.neighbors(x))
        if (dom.in_closure(y)) m = std::max(m, std::abs(ux - u.at(y)));
    return m * g.inverse_mesh_size();
}

/// F^n(u, V^n) = max over V^n \ V^0 of F^n(u, x).
inline double max_local_slope(const PreFractalGraph& g, const VertexField& u) {
    double m = 0.0;
    for (VertexId x = 0; x < g.vertex_count(); ++x)
        if (!g.is_boundary(x)) m = std::max(m, local_slope(g, u, x));
    return m;
}

struct SlopeCheck {
    bool equal = false;
    LipschitzReport lip;
    double max_slope = 0.0;
    VertexId argmax = 0;
};

/// Compares Lip^n(u, K) with max over x in K of F^n(u, x) (restricted form).
inline SlopeCheck lip_equals_max_slope_check(const Subdomain& dom, const VertexField& u) {
    SlopeCheck c;
    c.lip = lip_interior(dom, u);
    double best = -1.0;
    for (VertexId x : dom.interior()) {
        const double s = local_slope(dom, u, x);
        if (s > best) {
            best = s;
            c.argmax = x;
        }
    }
    c.max_slope = std::max(best, 0.0);
    c.equal = std::abs(c.lip.value - c.max_slope) <= tolerance_for(c.lip.value);
    return c;
}

struct McShaneWhitney {
    VertexField lower; ///< M_*
    VertexField upper; ///< M^*
    double lipschitz = 0.0;
};

/// M_*(x) = max_y { g(y) - L0 d(x,y) } and M^*(x) = min_y { g(y) + L0 d(x,y) }
/// over y in dK, with L0 = Lip^n(g, dK). Both equal g on dK.
inline McShaneWhitney mcshane_whitney(const Subdomain& dom, const VertexField& g) {
    const auto l0 = lip_boundary(dom, g).value;
    const auto& graph = dom.graph();
    McShaneWhitney mw{VertexField(graph), VertexField(graph), l0};

    std::vector<double> lo(graph.vertex_count(), -std::numeric_limits<double>::infinity());
    std::vector<double> hi(graph.vertex_count(), std::numeric_limits<double>::infinity());
    for (VertexId b : dom.boundary()) {
        const auto hops = restricted_hops(dom, b);
        const double gb = g.at(b);
        for (VertexId x : dom.interior()) {
            const double d = std::ldexp(static_cast<double>(hops[x]), -graph.level());
            lo[x] = std::max(lo[x], gb - l0 * d);
            hi[x] = std::min(hi[x], gb + l0 * d);
        }
    }
    for (VertexId x : dom.interior()) {
        mw.lower.set(x, lo[x]);
        mw.upper.set(x, hi[x]);
    }
    for (VertexId b : dom.boundary()) {
        mw.lower.set(b, g.at(b));
        mw.upper.set(b, g.at(b));
    }
    return mw;
}

} // namespace gasket
