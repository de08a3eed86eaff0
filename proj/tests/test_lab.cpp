#include "catch_amalgamated.hpp"

#include <random>

#include "gasket/lab.hpp"
#include "oracles.hpp"

using namespace gasket;
using Catch::Approx;

namespace {
const Vertex q12 = Vertex::make(1, 1, 0, 1);
}

TEST_CASE("transfer_down", "[lab]") {
    const auto g1 = build_graph(1);
    const auto g3 = build_graph(3);
    std::mt19937_64 rng(3);
    const auto f = oracle::random_field(g3, oracle::all_ids(g3), rng);
    const auto r = transfer_down(f, g1);
    for (VertexId id = 0; id < g1.vertex_count(); ++id) CHECK(r.at(id) == f.at(g1.vertex(id)));
    CHECK_THROWS_AS(transfer_down(r, g3), InputError);
}

TEST_CASE("level_sweep", "[lab][sweep]") {
    SECTION("zero data") {
        const auto s = level_sweep({0, 0, 0}, 3);
        CHECK(s.table.rows.size() == 2 + 3);
        for (const auto& row : s.table.rows) {
            CHECK(row.ok);
            CHECK(row.sup_diff == 0.0);
            CHECK(row.f_n == 0.0);
        }
    }
    SECTION("rows against an independent level-2 solve") {
        for (double e : {0.1, 0.2}) {
            const auto s = level_sweep({0.0, e, 1.0}, 2, Method::lazarus);
            REQUIRE(s.table.rows.size() == 2);
            CHECK(s.table.rows[0].k == 0);
            CHECK(s.table.rows[0].sup_diff == 0.0);
            const auto g2 = build_graph(2);
            const auto prob = full_problem(g2, {0.0, e, 1.0});
            const auto ref = oracle::reverse_sweep_amle(prob.domain, prob.boundary);
            const auto l1 = oracle::level1_closed_form(e);
            const double expect = std::max(
                {std::abs(ref.at(q12) - l1.q12), std::abs(ref.at(Vertex::make(1, 0, 1, 1)) - l1.q13),
                 std::abs(ref.at(Vertex::make(0, 1, 1, 1)) - l1.q23)});
            CHECK(s.table.rows[1].sup_diff == Approx(expect).margin(1e-10));
            if (e <= 1.0 / 7.0) CHECK(std::abs(ref.at(q12) - l1.q12) == Approx(e / 12.0).margin(1e-10));
        }
    }
    SECTION("deviation on V^1 shrinks with n; Lipschitz bound across levels") {
        const auto s = level_sweep({0.0, 0.2, 1.0}, 5);
        std::vector<double> dev;
        for (const auto& row : s.table.rows)
            if (row.k == 1) dev.push_back(row.sup_diff);
        REQUIRE(dev.size() == 4);
        for (std::size_t i = 1; i < dev.size(); ++i) CHECK(dev[i] <= dev[i - 1] + 1e-12);
        for (std::size_t i = 0; i < s.fields.size(); ++i) {
            CHECK(s.reports[i].converged);
            const auto dom = full_domain(s.graphs[i]);
            CHECK(lip_interior(dom, s.fields[i]).value <= 1.0 + 1e-9);
        }
        // rows are ordered by (n, k)
        for (std::size_t i = 1; i < s.table.rows.size(); ++i) {
            const auto& a = s.table.rows[i - 1];
            const auto& b = s.table.rows[i];
            CHECK(std::make_pair(a.n, a.k) < std::make_pair(b.n, b.k));
        }
    }
    CHECK_THROWS_AS(level_sweep({0, 0.2, 1}, 1), InputError);
}

TEST_CASE("monotone functional", "[lab][monotone]") {
    const auto g4 = build_graph(4);
    const auto c = monotone_functional_check(VertexField::constant(g4, 1.0), 1, 4);
    CHECK(c.ok);
    for (const auto& r : c.rows) CHECK(r.f_n == 0.0);

    const auto g5 = build_graph(5);
    const auto u5 = solve_lazarus(full_problem(g5, {0.0, 0.2, 1.0})).field;
    const auto m = monotone_functional_check(u5, 1, 5);
    CHECK(m.ok);
    REQUIRE(m.rows.size() == 4);
    for (const auto& r : m.rows) CHECK(r.f_n <= r.f_next + 1e-12);

    std::mt19937_64 rng(19);
    for (int t = 0; t < 30; ++t) {
        const auto f = oracle::random_field(g4, oracle::all_ids(g4), rng);
        const auto r = monotone_functional_check(f, 3, 4);
        CHECK(r.ok);
        // direct evaluation of F^3 on the restriction
        const auto g3 = build_graph(3);
        double f3 = 0.0;
        for (VertexId x = 0; x < g3.vertex_count(); ++x) {
            if (g3.is_boundary(x)) continue;
            for (VertexId y : g3.neighbors(x))
                f3 = std::max(f3, std::abs(f.at(g3.vertex(x)) - f.at(g3.vertex(y))) * 8.0);
        }
        CHECK(r.rows.front().f_n == f3);
    }
    CHECK_THROWS_AS(monotone_functional_check(u5, 3, 3), InputError);
    CHECK_THROWS_AS(monotone_functional_check(u5, 1, 6), InputError);
}

TEST_CASE("counterexample_report", "[lab][counterexample]") {
    const auto r = counterexample_report(0.1);
    CHECK(r.u1_q12 == Approx(0.275).margin(1e-12));
    CHECK(r.u2_q12 == Approx(3.4 / 12.0).margin(1e-12));
    CHECK(r.difference == Approx(0.1 / 12.0).margin(1e-12));
    CHECK(std::abs(r.level1_laplacian) > 1e-3);

    const auto s = counterexample_report(1.0 / 7.0);
    CHECK(s.difference == Approx(1.0 / 84.0).margin(1e-12));
    CHECK(counterexample_report(1.0 / 7.0, Method::iterate).difference == Approx(1.0 / 84.0).margin(1e-10));

    // at e = 0 the two formulas coincide, which is why the range excludes it
    CHECK((3.0 + 4.0 * 0.0) / 12.0 == (1.0 + 0.0) / 4.0);
    CHECK_THROWS_AS(counterexample_report(0.0), InputError);
    CHECK_THROWS_AS(counterexample_report(0.2), InputError);
}
