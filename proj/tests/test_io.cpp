#include "catch_amalgamated.hpp"

#include <filesystem>
#include <random>

#include "gasket/io.hpp"
#include "oracles.hpp"

using namespace gasket;
namespace fs = std::filesystem;

TEST_CASE("addresses", "[io]") {
    const auto v = io::parse_address(std::string("[1,1,0,1]"));
    CHECK(v == Vertex::make(1, 1, 0, 1));
    CHECK(io::parse_address(io::json::parse("[2,2,0,2]")) == v);
    CHECK(v.address() == "[1,1,0,1]");
    CHECK(io::parse_address(v.address()) == v);
    CHECK_THROWS_AS(io::parse_address(std::string("[1,1,0]")), InputError);
    CHECK_THROWS_AS(io::parse_address(std::string("[1,1,1,1]")), InputError);
    CHECK_THROWS_AS(io::parse_address(std::string("[-1,2,1,1]")), InputError);
    CHECK_THROWS_AS(io::parse_address(std::string("nonsense")), InputError);
}

TEST_CASE("format_double round-trips", "[io]") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> d(-1e3, 1e3);
    for (int i = 0; i < 1000; ++i) {
        const double x = d(rng);
        CHECK(std::stod(io::format_double(x)) == x);
    }
    CHECK(io::format_double(0.5) == "0.5");
}

TEST_CASE("graph export", "[io]") {
    const auto g = build_graph(1);
    const auto j = io::graph_to_json(g);
    CHECK(j["level"] == 1);
    CHECK(j["vertices"].size() == 6);
    CHECK(j["edges"].size() == 9);
    CHECK(j["vertices"][0] == io::ordered_json::parse("[1,0,0,0]"));
    CHECK(j["boundary"] == io::ordered_json::parse("[0,3,5]"));
}

TEST_CASE("subdomain literal", "[io]") {
    const auto g = build_graph(2);
    const auto dom = io::subdomain_from_json(g, io::json::parse(R"(["[1,1,0,1]", [1,0,1,1]])"));
    CHECK(dom.interior().size() == 2);
    const auto back = io::subdomain_from_json(g, io::subdomain_to_json(dom));
    CHECK(back.interior() == dom.interior());
    CHECK_THROWS_AS(io::subdomain_from_json(g, io::json::parse("{}")), InputError);
    CHECK_THROWS_AS(io::subdomain_from_json(g, io::json::parse(R"(["[1,0,0,0]"])")), InputError);
    CHECK_THROWS_AS(io::subdomain_from_json(g, io::json::parse(R"(["[1,1,2,3]"])")), InputError);
}

TEST_CASE("field JSON and CSV round trip", "[io]") {
    const auto g = build_graph(3);
    std::mt19937_64 rng(8);
    const auto f = oracle::random_field(g, oracle::all_ids(g), rng);

    const auto j = io::field_to_json(f);
    CHECK(j.size() == g.vertex_count());
    CHECK(j.begin().key() == "[1,0,0,0]");
    const auto fj = io::field_from_json(g, io::json::parse(j.dump()));
    CHECK(fj.raw() == f.raw());

    const auto csv = io::field_to_csv(f);
    CHECK(csv.rfind("a,b,c,k,value\n", 0) == 0);
    const auto fc = io::field_from_csv(g, csv);
    CHECK(fc.raw() == f.raw());

    const auto dir = fs::temp_directory_path() / "gasket_io_test";
    fs::create_directories(dir);
    for (const char* name : {"f.json", "f.csv"}) {
        const auto path = (dir / name).string();
        io::write_field(f, path);
        CHECK(io::read_field(g, path).raw() == f.raw());
    }
    fs::remove_all(dir);

    CHECK_THROWS_AS(io::field_from_csv(g, "a,b,c,k,value\n1,0,0,0\n"), InputError);
    CHECK_THROWS_AS(io::field_from_csv(g, "1,0,0,0,x\n"), InputError);
    CHECK_THROWS_AS(io::field_from_json(g, io::json::parse(R"({"[1,0,0,0]": "a"})")), InputError);
    CHECK_THROWS_AS(io::read_field(g, "/nonexistent/field.json"), InputError);
}

TEST_CASE("solve report JSON", "[io]") {
    const auto g = build_graph(1);
    const auto sol = solve_lazarus(full_problem(g, {0.0, 0.45, 1.0}));
    const auto j = io::report_to_json(sol.report, g);
    CHECK(j["method"] == "lazarus");
    CHECK(j["converged"] == true);
    CHECK(j["iterations"] == 2);
    CHECK(j["stages"].size() == 2);
    CHECK(j["stages"][0]["from"] == "[1,0,0,0]");
    CHECK_FALSE(j.contains("elapsed_seconds"));
}
