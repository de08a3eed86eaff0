#pragma once

// Pre-fractal graphs (V^n, ~n) of the Sierpinski gasket.
//
// Vertices are addressed exactly by dyadic barycentric coordinates with
// respect to the corners q1, q2, q3 of the unit triangle, so vertex identity
// never depends on floating point.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gasket/error.hpp"

namespace gasket {

using VertexId = std::uint32_t;

inline constexpr int kDefaultMaxLevel = 12;

// =============================================================================
// Word
// =============================================================================

/// Address of a triangular cell: the composition psi_{w1} o ... o psi_{wn}.
/// Symbols are 1, 2, 3.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {
        for (auto s : symbols_)
            detail::require(s >= 1 && s <= 3, "word symbols must be in {1,2,3}");
    }

    std::size_t size() const { return symbols_.size(); }
    std::uint8_t operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<std::uint8_t>& symbols() const { return symbols_; }

private:
    std::vector<std::uint8_t> symbols_;
};

// =============================================================================
// Vertex
// =============================================================================

/// The point (a q1 + b q2 + c q3) / 2^k in canonical (fully reduced) form.
class Vertex {
public:
    /// Validates a + b + c == 2^k and reduces by the largest common power of 2.
    static Vertex make(std::uint64_t a, std::uint64_t b, std::uint64_t c, unsigned k) {
        detail::require(k < 62, "vertex denominator exponent too large");
        detail::require(a + b + c == (std::uint64_t{1} << k),
                        "barycentric numerators must sum to 2^denomExp");
        Vertex v;
        v.a_ = a;
        v.b_ = b;
        v.c_ = c;
        v.k_ = k;
        v.reduce();
        return v;
    }

    static Vertex corner(int i) {
        detail::require(i >= 1 && i <= 3, "corner index must be 1, 2 or 3");
        return make(i == 1, i == 2, i == 3, 0);
    }

    std::uint64_t a() const { return a_; }
    std::uint64_t b() const { return b_; }
    std::uint64_t c() const { return c_; }
    unsigned denom_exp() const { return k_; }

    /// Numerators over the denominator 2^level (level >= denom_exp()).
    std::array<std::uint64_t, 3> scaled(unsigned level) const {
        const unsigned s = level - k_;
        return {a_ << s, b_ << s, c_ << s};
    }

    bool is_corner() const { return k_ == 0; }

    /// "[a,b,c,k]", the literal used by the file formats.
    std::string address() const {
        return "[" + std::to_string(a_) + "," + std::to_string(b_) + "," + std::to_string(c_) + "," +
               std::to_string(k_) + "]";
    }

    friend bool operator==(const Vertex&, const Vertex&) = default;

    /// Level-independent order: descending lexicographic on the numerators at a
    /// common denominator. q1 sorts first, q3 last.
    friend std::strong_ordering operator<=>(const Vertex& x, const Vertex& y) {
        const unsigned level = std::max(x.k_, y.k_);
        const auto sx = x.scaled(level);
        const auto sy = y.scaled(level);
        return sy <=> sx;
    }

private:
    void reduce() {
        while (k_ > 0 && (a_ % 2 == 0) && (b_ % 2 == 0) && (c_ % 2 == 0)) {
            a_ /= 2;
            b_ /= 2;
            c_ /= 2;
            --k_;
        }
    }

    std::uint64_t a_ = 1, b_ = 0, c_ = 0;
    unsigned k_ = 0;
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Planar position with q1 = (0,0), q2 = (1,0), q3 = (1/2, sqrt(3)/2).
inline Point2 euclid_coords(const Vertex& v) {
    const double den = std::ldexp(1.0, static_cast<int>(v.denom_exp()));
    const double b = static_cast<double>(v.b());
    const double c = static_cast<double>(v.c());
    return {(b + 0.5 * c) / den, (0.5 * std::sqrt(3.0) * c) / den};
}

/// The three corners psi_w(q1), psi_w(q2), psi_w(q3) of the cell addressed by w.
inline std::array<Vertex, 3> cell_corners(const Word& w) {
    std::array<Vertex, 3> out;
    for (int i = 0; i < 3; ++i) {
        std::array<std::uint64_t, 3> p{0, 0, 0};
        p[i] = 1;
        unsigned k = 0;
        // innermost map first: psi_s(x) = (x + q_s) / 2
        for (std::size_t j = w.size(); j-- > 0;) {
            p[w[j] - 1] += std::uint64_t{1} << k;
            ++k;
        }
        out[i] = Vertex::make(p[0], p[1], p[2], k);
    }
    return out;
}

// =============================================================================
// PreFractalGraph
// =============================================================================

/// The graph (V^n, ~n). Immutable once built; vertex ids follow the Vertex order.
class PreFractalGraph {
public:
    int level() const { return level_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const Vertex& vertex(VertexId id) const { return vertices_.at(id); }

    /// Sorted ascending.
    const std::vector<VertexId>& neighbors(VertexId id) const { return adjacency_.at(id); }
    std::size_t degree(VertexId id) const { return adjacency_.at(id).size(); }

    /// Unordered pairs (i < j), sorted.
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    /// Ids of q1, q2, q3 in that order.
    const std::array<VertexId, 3>& boundary() const { return boundary_; }
    bool is_boundary(VertexId id) const {
        return id == boundary_[0] || id == boundary_[1] || id == boundary_[2];
    }

    /// delta_n = 2^-n.
    double mesh_size() const { return std::ldexp(1.0, -level_); }
    /// 1 / delta_n = 2^n, exact.
    double inverse_mesh_size() const { return std::ldexp(1.0, level_); }

    bool adjacent(VertexId x, VertexId y) const {
        const auto& nb = adjacency_.at(x);
        return std::binary_search(nb.begin(), nb.end(), y);
    }

    std::optional<VertexId> find(const Vertex& v) const {
        if (static_cast<int>(v.denom_exp()) > level_) return std::nullopt;
        const auto s = v.scaled(static_cast<unsigned>(level_));
        auto it = index_.find(pack(s[0], s[1]));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    VertexId id_of(const Vertex& v) const {
        auto id = find(v);
        if (!id) throw InputError("vertex " + v.address() + " is not in V^" + std::to_string(level_));
        return *id;
    }

private:
    friend PreFractalGraph build_graph(int, int);

    static std::uint64_t pack(std::uint64_t a, std::uint64_t b) { return (a << 32) | b; }

    int level_ = 0;
    std::vector<Vertex> vertices_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::array<VertexId, 3> boundary_{};
    std::unordered_map<std::uint64_t, VertexId> index_;
};

/// Builds V^n from the images of V^0 under all words of length n.
/// Throws InputError if n < 0 or n > max_level.
inline PreFractalGraph build_graph(int n, int max_level = kDefaultMaxLevel) {
    detail::require(n >= 0, "level must be nonnegative");
    detail::require(n <= max_level, "level " + std::to_string(n) + " exceeds the configured maximum " +
                                        std::to_string(max_level));
    detail::require(n <= 30, "level exceeds the supported address range");

    using Triple = std::array<std::uint64_t, 3>;
    const std::uint64_t den = std::uint64_t{1} << n;

    // Dedup on (a, b); c is implied by a + b + c = 2^n.
    std::unordered_map<std::uint64_t, std::uint32_t> provisional;
    std::vector<Triple> points;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> raw_edges;
    raw_edges.reserve(3 * static_cast<std::size_t>(std::pow(3.0, n)));

    auto intern = [&](const Triple& t) {
        auto [it, inserted] = provisional.try_emplace(PreFractalGraph::pack(t[0], t[1]),
                                                      static_cast<std::uint32_t>(points.size()));
        if (inserted) points.push_back(t);
        return it->second;
    };

    // Cell corners at depth m are held at scale 2^m; the child s of a cell with
    // corners c_j has corners c_s + c_j at scale 2^(m+1).
    std::function<void(const std::array<Triple, 3>&, int)> visit =
        [&](const std::array<Triple, 3>& cell, int depth) {
            if (depth == n) {
                std::array<std::uint32_t, 3> ids{intern(cell[0]), intern(cell[1]), intern(cell[2])};
                raw_edges.emplace_back(ids[0], ids[1]);
                raw_edges.emplace_back(ids[0], ids[2]);
                raw_edges.emplace_back(ids[1], ids[2]);
                return;
            }
            for (int s = 0; s < 3; ++s) {
                std::array<Triple, 3> child;
                for (int j = 0; j < 3; ++j)
                    for (int t = 0; t < 3; ++t) child[j][t] = cell[s][t] + cell[j][t];
                visit(child, depth + 1);
            }
        };
    visit({Triple{1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, 1}}, 0);

    // Final ids follow descending lexicographic order of (a, b, c).
    std::vector<std::uint32_t> order(points.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t x, std::uint32_t y) { return points[x] > points[y]; });
    std::vector<VertexId> remap(points.size());
    for (std::uint32_t r = 0; r < order.size(); ++r) remap[order[r]] = r;

    PreFractalGraph g;
    g.level_ = n;
    g.vertices_.reserve(points.size());
    g.index_.reserve(points.size());
    for (std::uint32_t r = 0; r < order.size(); ++r) {
        const Triple& t = points[order[r]];
        g.vertices_.push_back(Vertex::make(t[0], t[1], t[2], static_cast<unsigned>(n)));
        g.index_.emplace(PreFractalGraph::pack(t[0], t[1]), r);
    }

    g.edges_.reserve(raw_edges.size());
    for (auto [x, y] : raw_edges) {
        VertexId i = remap[x], j = remap[y];
        if (i > j) std::swap(i, j);
        g.edges_.emplace_back(i, j);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.adjacency_.assign(g.vertices_.size(), {});
    for (auto [i, j] : g.edges_) {
        g.adjacency_[i].push_back(j);
        g.adjacency_[j].push_back(i);
    }
    for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());

    g.boundary_ = {g.index_.at(PreFractalGraph::pack(den, 0)), g.index_.at(PreFractalGraph::pack(0, den)),
                   g.index_.at(PreFractalGraph::pack(0, 0))};
    return g;
}

/// The vertices of V^k as they sit inside g (denominator exponent <= k), in
/// graph order.
inline std::vector<VertexId> restrict_ids(const PreFractalGraph& g, int k) {
    detail::require(k >= 0 && k <= g.level(), "restriction level must satisfy 0 <= k <= level");
    std::vector<VertexId> out;
    for (VertexId id = 0; id < g.vertex_count(); ++id)
        if (static_cast<int>(g.vertex(id).denom_exp()) <= k) out.push_back(id);
    return out;
}

inline std::vector<Vertex> restrict_vertices(const PreFractalGraph& g, int k) {
    std::vector<Vertex> out;
    for (VertexId id : restrict_ids(g, k)) out.push_back(g.vertex(id));
    return out;
}

/// (3^(n+1) + 3) / 2.
inline std::uint64_t expected_vertex_count(int n) {
    std::uint64_t p = 1;
    for (int i = 0; i <= n; ++i) p *= 3;
    return (p + 3) / 2;
}

/// 3^(n+1).
inline std::uint64_t expected_edge_count(int n) {
    std::uint64_t p = 1;
    for (int i = 0; i <= n; ++i) p *= 3;
    return p;
}

} // namespace gasket

template <>
struct std::hash<gasket::Vertex> {
    std::size_t operator()(const gasket::Vertex& v) const noexcept {
        std::size_t h = std::hash<std::uint64_t>{}(v.a());
        h = h * 1000003u ^ std::hash<std::uint64_t>{}(v.b());
        h = h * 1000003u ^ std::hash<std::uint64_t>{}(v.c());
        return h * 31u + v.denom_exp();
    }
};
