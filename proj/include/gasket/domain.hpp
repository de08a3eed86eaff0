#pragma once

// Subdomains K of V^n \ V^0, their boundary and closure, and the vertex
// distances d_n and d_{n,K}.
//
// Admissible paths for d_{n,K}: every vertex strictly inside the path lies in
// K, and every edge of the path touches K. In particular two boundary points
// are never joined by the bare edge between them; they must be connected
// through K.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "gasket/error.hpp"
#include "gasket/graph.hpp"

namespace gasket {

// =============================================================================
// DistanceValue
// =============================================================================

/// A finite multiple of delta_n, or UNREACHABLE. No arithmetic is defined on it.
class DistanceValue {
public:
    static DistanceValue unreachable(int level) { return DistanceValue(level, std::nullopt); }
    static DistanceValue hops(int level, std::uint32_t h) { return DistanceValue(level, h); }

    bool reachable() const { return hops_.has_value(); }
    int level() const { return level_; }

    std::uint32_t hop_count() const {
        if (!hops_) throw InputError("distance is unreachable");
        return *hops_;
    }

    /// hops * 2^-n; throws for UNREACHABLE.
    double value() const { return std::ldexp(static_cast<double>(hop_count()), -level_); }

    friend bool operator==(const DistanceValue&, const DistanceValue&) = default;

private:
    DistanceValue(int level, std::optional<std::uint32_t> h) : level_(level), hops_(h) {}

    int level_ = 0;
    std::optional<std::uint32_t> hops_;
};

inline constexpr std::int32_t kUnreached = -1;

// =============================================================================
// Subdomain
// =============================================================================

class Subdomain {
public:
    const PreFractalGraph& graph() const { return *graph_; }

    /// Sorted ascending.
    const std::vector<VertexId>& interior() const { return interior_; }
    const std::vector<VertexId>& boundary() const { return boundary_; }
    const std::vector<VertexId>& closure() const { return closure_; }

    bool contains(VertexId id) const { return id < in_interior_.size() && in_interior_[id]; }
    bool on_boundary(VertexId id) const { return id < in_boundary_.size() && in_boundary_[id]; }
    bool in_closure(VertexId id) const { return contains(id) || on_boundary(id); }
    bool empty() const { return interior_.empty(); }

private:
    friend Subdomain boundary_closure(const PreFractalGraph&, std::vector<VertexId>);

    const PreFractalGraph* graph_ = nullptr;
    std::vector<VertexId> interior_, boundary_, closure_;
    std::vector<bool> in_interior_, in_boundary_;
};

/// Builds K with dK = { y not in K : y ~ x for some x in K } and closure K u dK.
/// Throws InputError for ids outside the graph or in V^0.
inline Subdomain boundary_closure(const PreFractalGraph& g, std::vector<VertexId> interior) {
    std::sort(interior.begin(), interior.end());
    interior.erase(std::unique(interior.begin(), interior.end()), interior.end());

    Subdomain d;
    d.graph_ = &g;
    d.in_interior_.assign(g.vertex_count(), false);
    d.in_boundary_.assign(g.vertex_count(), false);
    for (VertexId x : interior) {
        detail::require(x < g.vertex_count(), "subdomain vertex id out of range");
        detail::require(!g.is_boundary(x), "subdomain must not contain vertices of V^0 (" +
                                               g.vertex(x).address() + ")");
        d.in_interior_[x] = true;
    }
    for (VertexId x : interior)
        for (VertexId y : g.neighbors(x))
            if (!d.in_interior_[y]) d.in_boundary_[y] = true;

    d.interior_ = std::move(interior);
    for (VertexId id = 0; id < g.vertex_count(); ++id) {
        if (d.in_boundary_[id]) d.boundary_.push_back(id);
        if (d.in_boundary_[id] || d.in_interior_[id]) d.closure_.push_back(id);
    }
    return d;
}

inline Subdomain boundary_closure(const PreFractalGraph& g, const std::vector<Vertex>& interior) {
    std::vector<VertexId> ids;
    ids.reserve(interior.size());
    for (const auto& v : interior) ids.push_back(g.id_of(v));
    return boundary_closure(g, std::move(ids));
}

/// K = V^n \ V^0.
inline Subdomain full_domain(const PreFractalGraph& g) {
    std::vector<VertexId> ids;
    for (VertexId id = 0; id < g.vertex_count(); ++id)
        if (!g.is_boundary(id)) ids.push_back(id);
    return boundary_closure(g, std::move(ids));
}

// =============================================================================
// Breadth-first distances
// =============================================================================

/// Hop counts from source over the whole graph.
inline std::vector<std::int32_t> graph_hops(const PreFractalGraph& g, VertexId source) {
    std::vector<std::int32_t> dist(g.vertex_count(), kUnreached);
    std::deque<VertexId> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId y : g.neighbors(v))
            if (dist[y] == kUnreached) {
                dist[y] = dist[v] + 1;
                queue.push_back(y);
            }
    }
    return dist;
}

/// Hop counts of admissible paths from a closure vertex; kUnreached elsewhere
/// (including every vertex outside the closure).
inline std::vector<std::int32_t> restricted_hops(const Subdomain& dom, VertexId source) {
    const auto& g = dom.graph();
    detail::require(dom.in_closure(source), "source vertex is not in the closure of the subdomain");
    std::vector<std::int32_t> dist(g.vertex_count(), kUnreached);
    std::deque<VertexId> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        // only the source and interior vertices relay a path
        if (v != source && !dom.contains(v)) continue;
        const bool v_inside = dom.contains(v);
        for (VertexId y : g.neighbors(v)) {
            if (dist[y] != kUnreached || !dom.in_closure(y)) continue;
            if (!v_inside && !dom.contains(y)) continue;
            dist[y] = dist[v] + 1;
            queue.push_back(y);
        }
    }
    return dist;
}

/// d_n(x, y).
inline DistanceValue vertex_distance(const PreFractalGraph& g, const Vertex& x, const Vertex& y) {
    const auto dist = graph_hops(g, g.id_of(x));
    const auto h = dist[g.id_of(y)];
    return h == kUnreached ? DistanceValue::unreachable(g.level())
                           : DistanceValue::hops(g.level(), static_cast<std::uint32_t>(h));
}

inline DistanceValue restricted_distance(const Subdomain& dom, VertexId x, VertexId y) {
    detail::require(dom.in_closure(x) && dom.in_closure(y),
                    "restricted distance endpoints must lie in the closure");
    const auto dist = restricted_hops(dom, x);
    return dist[y] == kUnreached ? DistanceValue::unreachable(dom.graph().level())
                                 : DistanceValue::hops(dom.graph().level(), static_cast<std::uint32_t>(dist[y]));
}

/// d_{n,K}(x, y).
inline DistanceValue restricted_distance(const Subdomain& dom, const Vertex& x, const Vertex& y) {
    return restricted_distance(dom, dom.graph().id_of(x), dom.graph().id_of(y));
}

/// Restricted hop counts between every ordered pair of closure vertices,
/// indexed by position in dom.closure().
class ClosureDistances {
public:
    explicit ClosureDistances(const Subdomain& dom) : dom_(&dom) {
        const auto& cl = dom.closure();
        pos_.assign(dom.graph().vertex_count(), kUnreached);
        for (std::size_t i = 0; i < cl.size(); ++i) pos_[cl[i]] = static_cast<std::int32_t>(i);
        rows_.reserve(cl.size());
        for (VertexId x : cl) {
            const auto full = restricted_hops(dom, x);
            std::vector<std::int32_t> row(cl.size());
            for (std::size_t j = 0; j < cl.size(); ++j) row[j] = full[cl[j]];
            rows_.push_back(std::move(row));
        }
    }

    /// kUnreached when no admissible path exists.
    std::int32_t hops(VertexId x, VertexId y) const {
        const auto i = pos_.at(x), j = pos_.at(y);
        detail::require(i != kUnreached && j != kUnreached, "vertex is not in the closure");
        return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    DistanceValue distance(VertexId x, VertexId y) const {
        const auto h = hops(x, y);
        const int n = dom_->graph().level();
        return h == kUnreached ? DistanceValue::unreachable(n)
                               : DistanceValue::hops(n, static_cast<std::uint32_t>(h));
    }

private:
    const Subdomain* dom_;
    std::vector<std::int32_t> pos_;
    std::vector<std::vector<std::int32_t>> rows_;
};

// =============================================================================
// Connectivity
// =============================================================================

/// Components of the subgraph induced by K, each sorted, ordered by smallest id.
inline std::vector<std::vector<VertexId>> interior_components(const PreFractalGraph& g,
                                                              const std::vector<bool>& in_set,
                                                              const std::vector<VertexId>& members) {
    std::vector<std::vector<VertexId>> out;
    std::vector<bool> seen(g.vertex_count(), false);
    for (VertexId start : members) {
        if (seen[start]) continue;
        std::vector<VertexId> comp{start};
        seen[start] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (VertexId y : g.neighbors(comp[i]))
                if (in_set[y] && !seen[y]) {
                    seen[y] = true;
                    comp.push_back(y);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return out;
}

/// d_{n,K}(x, y) < infinity for every x, y in the closure. An empty K is
/// vacuously connected.
///
/// Every boundary vertex is adjacent to K, so this is equivalent to K inducing
/// a connected subgraph.
inline bool is_connected(const Subdomain& dom) {
    if (dom.empty()) return true;
    std::vector<bool> mask(dom.graph().vertex_count(), false);
    for (VertexId x : dom.interior()) mask[x] = true;
    return interior_components(dom.graph(), mask, dom.interior()).size() == 1;
}

inline std::vector<Subdomain> connected_components(const Subdomain& dom) {
    std::vector<bool> mask(dom.graph().vertex_count(), false);
    for (VertexId x : dom.interior()) mask[x] = true;
    std::vector<Subdomain> out;
    for (auto& comp : interior_components(dom.graph(), mask, dom.interior()))
        out.push_back(boundary_closure(dom.graph(), std::move(comp)));
    return out;
}

inline void require_connected(const Subdomain& dom) {
    detail::require(!dom.empty(), "subdomain is empty");
    detail::require(is_connected(dom), "subdomain is not connected");
}

// =============================================================================
// Geodesics
// =============================================================================

struct GeodesicPath {
    std::vector<VertexId> vertices;
    int level = 0;

    std::uint32_t hop_count() const {
        return vertices.empty() ? 0 : static_cast<std::uint32_t>(vertices.size() - 1);
    }
    DistanceValue length() const { return DistanceValue::hops(level, hop_count()); }
};

enum class TieBreak {
    /// Walk back from the target choosing the smallest-index predecessor.
    lowest_index,
    /// Same walk, choosing the largest-index predecessor.
    highest_index,
};

/// A minimal admissible path from x to y. Throws InputError when y is
/// unreachable from x.
inline GeodesicPath shortest_path(const Subdomain& dom, VertexId x, VertexId y,
                                  TieBreak tie = TieBreak::lowest_index) {
    const auto& g = dom.graph();
    const auto from_x = restricted_hops(dom, x);
    detail::require(dom.in_closure(y), "path endpoint is not in the closure");
    if (from_x[y] == kUnreached)
        throw InputError("no admissible path between " + g.vertex(x).address() + " and " + g.vertex(y).address());

    // p precedes v on some geodesic iff p relays paths (p == x or p in K), the
    // edge touches K, and from_x[p] == from_x[v] - 1.
    std::vector<VertexId> rev{y};
    VertexId cur = y;
    while (cur != x) {
        std::optional<VertexId> pick;
        for (VertexId p : g.neighbors(cur)) {
            if (from_x[p] != from_x[cur] - 1) continue;
            if (p != x && !dom.contains(p)) continue;
            if (!dom.contains(p) && !dom.contains(cur)) continue;
            if (!pick || (tie == TieBreak::lowest_index ? p < *pick : p > *pick)) pick = p;
        }
        if (!pick) throw LazarusError("geodesic reconstruction failed");
        cur = *pick;
        rev.push_back(cur);
    }
    std::reverse(rev.begin(), rev.end());
    return {std::move(rev), g.level()};
}

inline GeodesicPath shortest_path(const Subdomain& dom, const Vertex& x, const Vertex& y,
                                  TieBreak tie = TieBreak::lowest_index) {
    return shortest_path(dom, dom.graph().id_of(x), dom.graph().id_of(y), tie);
}

struct GeodesicSet {
    std::vector<GeodesicPath> paths;
    /// More than `cap` minimal paths exist; `paths` holds the first `cap`.
    bool truncated = false;
};

/// Minimal admissible paths from x to y in lexicographic order of their id
/// sequences, at most cap of them.
inline GeodesicSet all_geodesics(const Subdomain& dom, VertexId x, VertexId y, std::size_t cap) {
    detail::require(cap >= 1, "geodesic cap must be at least 1");
    const auto& g = dom.graph();
    const auto from_x = restricted_hops(dom, x);
    detail::require(dom.in_closure(y), "path endpoint is not in the closure");
    if (from_x[y] == kUnreached) throw InputError("no admissible path between the endpoints");
    const auto from_y = restricted_hops(dom, y);
    const std::int32_t total = from_x[y];

    GeodesicSet out;
    std::vector<VertexId> stack{x};
    // Depth-first in ascending neighbor order yields lexicographic output.
    auto extend = [&](auto&& self, VertexId v) -> bool {
        if (v == y) {
            if (out.paths.size() == cap) {
                out.truncated = true;
                return false;
            }
            out.paths.push_back({stack, g.level()});
            return true;
        }
        if (v != x && !dom.contains(v)) return true;
        for (VertexId w : g.neighbors(v)) {
            if (from_x[w] != from_x[v] + 1 || from_y[w] != total - from_x[w]) continue;
            if (!dom.contains(v) && !dom.contains(w)) continue;
            stack.push_back(w);
            const bool go_on = self(self, w);
            stack.pop_back();
            if (!go_on) return false;
        }
        return true;
    };
    extend(extend, x);
    return out;
}

} // namespace gasket
