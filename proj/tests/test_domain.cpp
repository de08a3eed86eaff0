#include "catch_amalgamated.hpp"

#include <random>

#include "gasket/domain.hpp"
#include "oracles.hpp"

using namespace gasket;

namespace {

// Level-1 vertices.
const Vertex q1 = Vertex::corner(1), q2 = Vertex::corner(2), q3 = Vertex::corner(3);
const Vertex q12 = Vertex::make(1, 1, 0, 1), q13 = Vertex::make(1, 0, 1, 1), q23 = Vertex::make(0, 1, 1, 1);

std::vector<VertexId> ids_of(const PreFractalGraph& g, std::initializer_list<Vertex> vs) {
    std::vector<VertexId> out;
    for (const auto& v : vs) out.push_back(g.id_of(v));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> random_subset(const PreFractalGraph& g, std::mt19937_64& rng, double p) {
    std::bernoulli_distribution keep(p);
    std::vector<VertexId> out;
    for (VertexId x = 0; x < g.vertex_count(); ++x)
        if (!g.is_boundary(x) && keep(rng)) out.push_back(x);
    return out;
}

} // namespace

TEST_CASE("boundary and closure", "[domain]") {
    const auto g1 = build_graph(1);
    SECTION("single vertex at level 1 has the four neighbors as boundary") {
        const auto dom = boundary_closure(g1, ids_of(g1, {q12}));
        CHECK(dom.boundary() == ids_of(g1, {q1, q2, q13, q23}));
        CHECK(dom.closure().size() == 5);
    }
    SECTION("empty K") {
        const auto dom = boundary_closure(g1, std::vector<VertexId>{});
        CHECK(dom.boundary().empty());
        CHECK(dom.closure().empty());
        CHECK(is_connected(dom));
    }
    SECTION("full domain at level 2 has boundary V^0") {
        const auto g2 = build_graph(2);
        const auto dom = full_domain(g2);
        std::vector<VertexId> scan;
        for (VertexId y = 0; y < g2.vertex_count(); ++y) {
            if (dom.contains(y)) continue;
            for (VertexId x : dom.interior())
                if (g2.adjacent(x, y)) {
                    scan.push_back(y);
                    break;
                }
        }
        CHECK(dom.boundary() == scan);
        CHECK(dom.boundary() == std::vector<VertexId>{g2.boundary().begin(), g2.boundary().end()});
    }
    SECTION("V^0 vertices are rejected") {
        CHECK_THROWS_AS(boundary_closure(g1, ids_of(g1, {q1, q12})), InputError);
    }
    SECTION("closure is the disjoint union of interior and boundary") {
        std::mt19937_64 rng(7);
        const auto g3 = build_graph(3);
        for (int t = 0; t < 20; ++t) {
            const auto dom = boundary_closure(g3, random_subset(g3, rng, 0.3));
            CHECK(dom.closure().size() == dom.interior().size() + dom.boundary().size());
            for (VertexId b : dom.boundary()) CHECK_FALSE(dom.contains(b));
        }
    }
}

TEST_CASE("vertex distance", "[domain][distance]") {
    const auto g1 = build_graph(1);
    CHECK(vertex_distance(g1, q1, q3).value() == 1.0);
    CHECK(vertex_distance(g1, q1, q3).hop_count() == 2);
    CHECK(vertex_distance(g1, q12, q12).value() == 0.0);

    const auto g2 = build_graph(2);
    // brute force: shortest among all simple paths of at most 4 hops
    std::size_t best = 100;
    const VertexId s = g2.id_of(q1), t = g2.id_of(q3);
    std::vector<VertexId> path{s};
    auto rec = [&](auto&& self, VertexId v) -> void {
        if (v == t) {
            best = std::min(best, path.size() - 1);
            return;
        }
        if (path.size() - 1 == 4) return;
        for (VertexId w : g2.neighbors(v)) {
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            path.push_back(w);
            self(self, w);
            path.pop_back();
        }
    };
    rec(rec, s);
    CHECK(best == 4);
    CHECK(vertex_distance(g2, q1, q3).value() == 1.0);
    CHECK_THROWS_AS(vertex_distance(g1, Vertex::make(1, 1, 2, 2), q1), InputError);
}

TEST_CASE("restricted distance", "[domain][distance]") {
    const auto g1 = build_graph(1);
    const auto k = boundary_closure(g1, ids_of(g1, {q12, q23}));
    CHECK(restricted_distance(k, q1, q3).value() == 1.5);
    CHECK(restricted_distance(k, q1, q1).value() == 0.0);
    CHECK(restricted_distance(k, q12, q23).value() == 0.5);
    // q1 and q13 are adjacent but both on the boundary: the path must enter K
    CHECK(restricted_distance(k, q1, q13).value() == 1.0);

    const auto single = boundary_closure(g1, ids_of(g1, {q12}));
    const auto paths = oracle::minimal_paths(single, g1.id_of(q13), g1.id_of(q23), 6);
    REQUIRE_FALSE(paths.empty());
    CHECK(restricted_distance(single, q13, q23).value() == 1.0);
    CHECK(restricted_distance(single, q13, q23).hop_count() == paths.front().size() - 1);

    CHECK_THROWS_AS(restricted_distance(single, q3, q1), InputError);
}

TEST_CASE("restricted hops agree with Floyd-Warshall; metric axioms", "[domain][distance][property]") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 3; ++n) {
        const auto g = build_graph(n);
        for (int t = 0; t < 15; ++t) {
            const auto dom = boundary_closure(g, random_subset(g, rng, 0.5));
            const auto fw = oracle::floyd_restricted(dom);
            const auto& cl = dom.closure();
            const ClosureDistances cd(dom);
            for (std::size_t i = 0; i < cl.size(); ++i) {
                const auto plain = graph_hops(g, cl[i]);
                for (std::size_t j = 0; j < cl.size(); ++j) {
                    const long expect = fw[i][j] >= oracle::floyd_inf() ? -1 : fw[i][j];
                    CHECK(cd.hops(cl[i], cl[j]) == expect);
                    CHECK(cd.hops(cl[i], cl[j]) == cd.hops(cl[j], cl[i]));
                    CHECK((cd.hops(cl[i], cl[j]) == 0) == (i == j));
                    if (expect >= 0) CHECK(plain[cl[j]] <= expect);
                }
            }
            // triangle inequality through interior midpoints (boundary
            // vertices do not relay paths)
            for (const auto& comp : connected_components(dom)) {
                const ClosureDistances c(comp);
                for (VertexId x : comp.closure())
                    for (VertexId y : comp.interior())
                        for (VertexId z : comp.closure())
                            CHECK(c.hops(x, z) <= c.hops(x, y) + c.hops(y, z));
            }
        }
    }
    SECTION("random pairs at level 6") {
        const auto g = build_graph(6);
        const auto dom = full_domain(g);
        std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(g.vertex_count() - 1));
        for (int t = 0; t < 30; ++t) {
            const VertexId x = pick(rng), y = pick(rng), z = pick(rng);
            const auto hx = restricted_hops(dom, x), hy = restricted_hops(dom, y);
            CHECK(hx[y] == hy[x]);
            CHECK(hx[z] <= hx[y] + hy[z]);
            CHECK(graph_hops(g, x)[y] <= hx[y]);
        }
    }
}

TEST_CASE("connectivity", "[domain][connected]") {
    const auto g1 = build_graph(1);
    CHECK(is_connected(boundary_closure(g1, ids_of(g1, {q12, q23}))));

    const auto g2 = build_graph(2);
    const auto k = boundary_closure(g2, ids_of(g2, {q12, q13, q23}));
    CHECK_FALSE(is_connected(k));
    const auto comps = connected_components(k);
    REQUIRE(comps.size() == 3);
    for (const auto& c : comps) CHECK(c.interior().size() == 1);
    // boundary is V^2 minus V^1
    CHECK(k.boundary().size() == g2.vertex_count() - 6);

    const auto connected = boundary_closure(g1, ids_of(g1, {q12, q23}));
    REQUIRE(connected_components(connected).size() == 1);
    CHECK(connected_components(connected).front().interior() == connected.interior());
}

TEST_CASE("components agree with union-find; partition properties", "[domain][connected][property]") {
    std::mt19937_64 rng(23);
    const auto g = build_graph(3);
    for (int t = 0; t < 40; ++t) {
        const auto dom = boundary_closure(g, random_subset(g, rng, 0.35));
        const auto comps = connected_components(dom);
        std::vector<std::vector<VertexId>> got;
        for (const auto& c : comps) got.push_back(c.interior());
        auto sorted = got;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == oracle::union_find_components(dom));
        for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1].front() < got[i].front());

        // definition: connected iff all closure pairs at finite restricted distance
        const auto fw = oracle::floyd_restricted(dom);
        bool all_finite = true;
        for (const auto& row : fw)
            for (long d : row) all_finite = all_finite && d < oracle::floyd_inf();
        CHECK(is_connected(dom) == all_finite);

        std::size_t total = 0;
        for (const auto& c : comps) {
            CHECK(is_connected(c));
            total += c.interior().size();
        }
        CHECK(total == dom.interior().size());
        for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
            auto merged = comps[i].interior();
            merged.insert(merged.end(), comps[i + 1].interior().begin(), comps[i + 1].interior().end());
            CHECK_FALSE(is_connected(boundary_closure(g, merged)));
        }
    }
}

TEST_CASE("shortest path", "[domain][geodesic]") {
    const auto g1 = build_graph(1);
    const auto k = boundary_closure(g1, ids_of(g1, {q12, q23}));
    const auto p = shortest_path(k, q1, q3);
    CHECK(p.vertices == std::vector<VertexId>{g1.id_of(q1), g1.id_of(q12), g1.id_of(q23), g1.id_of(q3)});
    CHECK(p.length() == restricted_distance(k, q1, q3));

    const auto trivial = shortest_path(k, q12, q12);
    CHECK(trivial.vertices.size() == 1);
    CHECK(trivial.length().value() == 0.0);

    const auto g2 = build_graph(2);
    const auto cut = boundary_closure(g2, ids_of(g2, {q12, q13, q23}));
    CHECK_THROWS_AS(shortest_path(cut, q12, q13), InputError);
}

TEST_CASE("geodesics between level-3 vertices", "[domain][geodesic][property]") {
    const auto g = build_graph(3);
    const auto dom = full_domain(g);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(g.vertex_count() - 1));
    for (int t = 0; t < 25; ++t) {
        const VertexId x = pick(rng), y = pick(rng);
        const auto d = restricted_distance(dom, x, y);
        if (d.hop_count() > 6) continue;
        const auto oracle_paths = oracle::minimal_paths(dom, x, y, d.hop_count());
        const auto set = all_geodesics(dom, x, y, 100000);
        CHECK_FALSE(set.truncated);
        std::vector<std::vector<VertexId>> got;
        for (const auto& p : set.paths) {
            CHECK(p.length() == d);
            got.push_back(p.vertices);
        }
        CHECK(got == oracle_paths);
        for (auto tie : {TieBreak::lowest_index, TieBreak::highest_index}) {
            const auto sp = shortest_path(dom, x, y, tie);
            CHECK(sp.length() == d);
            CHECK(std::find(got.begin(), got.end(), sp.vertices) != got.end());
            for (std::size_t i = 1; i < sp.vertices.size(); ++i) CHECK(g.adjacent(sp.vertices[i - 1], sp.vertices[i]));
        }
    }
}

TEST_CASE("all_geodesics", "[domain][geodesic]") {
    const auto g1 = build_graph(1);
    const auto dom = full_domain(g1);
    const auto set = all_geodesics(dom, g1.id_of(q1), g1.id_of(q3), 10);
    const std::vector<VertexId> expect{g1.id_of(q1), g1.id_of(q13), g1.id_of(q3)};
    CHECK(std::any_of(set.paths.begin(), set.paths.end(), [&](const auto& p) { return p.vertices == expect; }));

    const auto adj = all_geodesics(dom, g1.id_of(q12), g1.id_of(q13), 10);
    REQUIRE(adj.paths.size() == 1);
    CHECK(adj.paths.front().vertices.size() == 2);

    const auto g2 = build_graph(2);
    const auto full2 = full_domain(g2);
    const auto x = g2.id_of(q1), y = g2.id_of(q3);
    const auto brute = oracle::minimal_paths(full2, x, y, 4);
    const auto got = all_geodesics(full2, x, y, 1000);
    CHECK(got.paths.size() == brute.size());
    CHECK_FALSE(got.truncated);

    const auto capped = all_geodesics(full2, x, y, 1);
    CHECK(capped.paths.size() == 1);
    CHECK(capped.truncated == (brute.size() > 1));
    CHECK_THROWS_AS(all_geodesics(full2, x, y, 0), InputError);
}

TEST_CASE("DistanceValue", "[domain]") {
    const auto u = DistanceValue::unreachable(3);
    CHECK_FALSE(u.reachable());
    CHECK_THROWS_AS(u.value(), InputError);
    CHECK(DistanceValue::hops(3, 6).value() == 0.75);
}
