#pragma once

// Command-line front end. Kept in a header so the tests can drive it
// in-process; main.cpp only forwards argv.
//
// Exit status: 0 success, 1 verification failure, 2 solver did not converge,
// 3 input error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gasket/gasket.hpp"
#include "gasket/io.hpp"

namespace gasket::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kNotConverged = 2, kInputError = 3 };

using io::ordered_json;

/// Level cap from GASKET_MAX_LEVEL, else the library default.
inline int max_level_from_env() {
    const char* s = std::getenv("GASKET_MAX_LEVEL");
    if (!s || !*s) return kDefaultMaxLevel;
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (*end != '\0' || v < 0 || v > 30) throw InputError(std::string("invalid GASKET_MAX_LEVEL: ") + s);
    return static_cast<int>(v);
}

struct ProblemArgs {
    int level = 1;
    std::vector<double> boundary;
    std::string domain_file;
    std::string boundary_field;
};

// Graph, domain and boundary data from the shared flags. The corner triple
// applies to the full domain; a --domain file needs --boundary-field.
struct LoadedProblem {
    std::unique_ptr<PreFractalGraph> graph;
    std::optional<Subdomain> domain;
    std::optional<VertexField> data;
};

inline std::array<double, 3> corner_triple(const std::vector<double>& b) {
    if (b.size() != 3) throw InputError("--boundary expects three values g(q1),g(q2),g(q3)");
    for (double v : b)
        if (!std::isfinite(v)) throw InputError("boundary values must be finite");
    return {b[0], b[1], b[2]};
}

inline LoadedProblem load_problem(const ProblemArgs& a, bool need_data, const VertexField* fallback = nullptr) {
    LoadedProblem lp;
    lp.graph = std::make_unique<PreFractalGraph>(build_graph(a.level, max_level_from_env()));
    const auto& g = *lp.graph;
    if (a.domain_file.empty()) {
        if (g.level() < 1) throw InputError("level 0 has no interior vertices");
        lp.domain = full_domain(g);
    } else {
        lp.domain = io::subdomain_from_json(g, io::read_json_file(a.domain_file));
        require_connected(*lp.domain);
    }
    if (!a.boundary_field.empty()) {
        lp.data = io::read_field(g, a.boundary_field);
    } else if (!a.boundary.empty()) {
        if (!a.domain_file.empty()) throw InputError("with --domain, give boundary data via --boundary-field");
        lp.data = VertexField::on_corners(g, corner_triple(a.boundary));
    } else if (fallback) {
        lp.data = restrict_field(*fallback, lp.domain->boundary());
    } else if (need_data) {
        throw InputError("boundary data required: --boundary g1,g2,g3 or --boundary-field FILE");
    }
    if (lp.data && !lp.data->defined_on(lp.domain->boundary()))
        throw InputError("boundary data does not cover the whole boundary of the domain");
    return lp;
}

inline ordered_json lip_json(const PreFractalGraph& g, const LipschitzReport& r) {
    ordered_json j;
    j["value"] = r.value;
    if (r.witness) {
        j["witness"] = {g.vertex(r.witness->first).address(), g.vertex(r.witness->second).address()};
        j["distance"] = r.witness_distance->value();
    } else {
        j["witness"] = nullptr;
    }
    j["degenerate"] = r.degenerate;
    return j;
}

inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-")
        out << text;
    else
        io::write_text_file(path, text);
}

inline std::string csv_double(double x) { return io::format_double(x); }

// -----------------------------------------------------------------------------
// verify suites
// -----------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"residual", "comparison", "cc",        "harnack",  "am",
                                                "amle",     "distance",   "linearity", "maximum",  "sandwich",
                                                "lipslope", "uniqueness", "monotone"};
    return names;
}

struct SuiteContext {
    const Subdomain& dom;
    const VertexField& u;
    const VertexField& data;
    bool full = false;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    double tol = 1e-9;
};

inline ordered_json addresses(const PreFractalGraph& g, const std::vector<VertexId>& ids, std::size_t cap = 20) {
    ordered_json a = ordered_json::array();
    for (std::size_t i = 0; i < ids.size() && i < cap; ++i) a.push_back(g.vertex(ids[i]).address());
    return a;
}

inline ordered_json run_suite(const std::string& name, const SuiteContext& c) {
    const auto& g = c.dom.graph();
    ordered_json r;
    r["name"] = name;
    bool passed = true;
    std::vector<VertexId> witnesses;
    ordered_json details = ordered_json::object();

    if (name == "residual") {
        const double res = residual(c.dom, c.u);
        details["residual"] = res;
        passed = res <= c.tol;
        for (VertexId x : c.dom.interior())
            if (std::abs(infinity_laplacian(c.dom, c.u, x)) > c.tol) witnesses.push_back(x);
    } else if (name == "comparison") {
        // cones -d(x0,.)+a below u and d(x0,.)+b above u, for each apex in dK
        for (VertexId apex : c.dom.boundary()) {
            const auto hops = restricted_hops(c.dom, apex);
            auto d = [&](VertexId y) { return std::ldexp(static_cast<double>(hops[y]), -g.level()); };
            double a = std::numeric_limits<double>::infinity(), b = -a;
            for (VertexId y : c.dom.boundary()) {
                a = std::min(a, c.u.at(y) + d(y));
                b = std::max(b, c.u.at(y) - d(y));
            }
            VertexField lo(g), hi(g);
            for (VertexId y : c.dom.closure()) {
                lo.set(y, a - d(y));
                hi.set(y, b + d(y));
            }
            const auto below = verify_comparison(c.dom, lo, c.u, c.tol);
            const auto above = verify_comparison(c.dom, c.u, hi, c.tol);
            // the cone side of each hypothesis always holds; a failure on the
            // u side means u is not a solution
            for (const auto* res : {&below, &above}) {
                if (!res->ok()) passed = false;
                witnesses.insert(witnesses.end(), res->hypothesis_violations.begin(),
                                 res->hypothesis_violations.end());
                witnesses.insert(witnesses.end(), res->conclusion_violations.begin(),
                                 res->conclusion_violations.end());
            }
        }
    } else if (name == "cc") {
        const auto rep = verify_cc(c.dom, c.u, c.tol);
        passed = rep.ok;
        details["cones_checked"] = rep.cones_checked;
        details["violations"] = rep.violations.size();
        for (const auto& v : rep.violations) witnesses.push_back(v.vertex);
    } else if (name == "harnack") {
        const auto rep = verify_harnack_alternative(g, c.u, c.dom.interior(), c.tol);
        passed = rep.ok;
        witnesses = rep.failures;
    } else if (name == "am") {
        for (VertexId x : c.dom.interior())
            if (!verify_am_local(g, c.u, x, c.tol)) witnesses.push_back(x);
        passed = witnesses.empty();
    } else if (name == "amle") {
        const auto rep = verify_amle_global(c.dom, c.u, c.samples, c.seed, c.tol, 64);
        passed = rep.ok;
        details["subsets_checked"] = rep.subsets_checked;
        details["violations"] = rep.violations.size();
        if (!rep.violations.empty()) {
            const auto& v = rep.violations.front();
            details["first_violation"] = {{"subset", addresses(g, v.subset)},
                                          {"lip_u", v.lip_u},
                                          {"lip_competitor", v.lip_competitor}};
            witnesses = v.subset;
        }
    } else if (name == "distance") {
        const auto rep = verify_distance_solutions(c.dom, std::max(c.tol, 1e-12));
        passed = rep.ok;
        witnesses = rep.failures;
    } else if (name == "linearity") {
        const auto rep = verify_geodesic_linearity(c.dom, c.u, c.tol);
        passed = rep.ok;
        details["paths_checked"] = rep.paths_checked;
        details["max_deviation"] = rep.max_deviation;
    } else if (name == "maximum") {
        passed = verify_maximum_principle(c.dom, c.u, c.tol);
    } else if (name == "sandwich") {
        const auto mw = mcshane_whitney(c.dom, c.data);
        for (VertexId x : c.dom.interior())
            if (mw.lower.at(x) > c.u.at(x) + c.tol || c.u.at(x) > mw.upper.at(x) + c.tol) witnesses.push_back(x);
        passed = witnesses.empty();
        details["boundary_lipschitz"] = mw.lipschitz;
    } else if (name == "lipslope") {
        const auto chk = lip_equals_max_slope_check(c.dom, c.u);
        passed = chk.equal;
        details["lip"] = chk.lip.value;
        details["max_slope"] = chk.max_slope;
    } else if (name == "uniqueness") {
        const auto prob = make_problem(c.dom, c.data);
        const auto a = solve_iterate(prob);
        const auto b = solve_lazarus(prob);
        const double ab = sup_distance(a.field, b.field, c.dom.closure());
        const double au = sup_distance(a.field, c.u, c.dom.closure());
        details["iterate_vs_lazarus"] = ab;
        details["field_vs_iterate"] = au;
        passed = a.report.converged && ab <= c.tol && au <= c.tol;
        for (VertexId x : c.dom.interior())
            if (std::abs(a.field.at(x) - c.u.at(x)) > c.tol) witnesses.push_back(x);
    } else if (name == "monotone") {
        if (!c.full || g.level() < 2) {
            details["applicable"] = false;
        } else {
            const auto rep = monotone_functional_check(c.u, 1, g.level());
            passed = rep.ok;
            auto& rows = details["rows"] = ordered_json::array();
            for (const auto& row : rep.rows) rows.push_back({{"n", row.n}, {"F_n", row.f_n}, {"F_next", row.f_next}});
        }
    } else {
        throw InputError("unknown suite: " + name);
    }
    r["passed"] = passed;
    r["details"] = details;
    r["witnesses"] = addresses(g, witnesses);
    return r;
}

// -----------------------------------------------------------------------------
// run
// -----------------------------------------------------------------------------

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Infinity-harmonic functions on Sierpinski gasket graphs", "gasket"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a TOML/INI file");
    std::string dump_config;
    app.add_option("--dump-config", dump_config, "Write the effective configuration to FILE and continue");
    unsigned threads = 1;
    app.add_option("--threads", threads, "Worker threads for the Jacobi sweep mode")->capture_default_str();

    ProblemArgs pa;
    auto add_level = [&](CLI::App* sub) {
        sub->add_option("-n,--level", pa.level, "Graph level n")->required()->check(CLI::NonNegativeNumber);
    };
    auto add_boundary = [&](CLI::App* sub) {
        sub->add_option("--boundary", pa.boundary, "Corner values g(q1),g(q2),g(q3)")->delimiter(',')->expected(3);
    };
    auto add_domain = [&](CLI::App* sub) {
        sub->add_option("--domain", pa.domain_file, "JSON array of interior vertex addresses (default V^n\\V^0)");
        sub->add_option("--boundary-field", pa.boundary_field, "Field file with boundary values on dK");
    };

    // build
    auto* build = app.add_subcommand("build", "Export the level-n graph as JSON");
    add_level(build);
    std::string out_path;
    build->add_option("-o,--out", out_path, "Output file (default stdout)");

    // dist
    auto* dist = app.add_subcommand("dist", "Restricted distance and one geodesic between two vertices");
    add_level(dist);
    add_domain(dist);
    std::string from_addr, to_addr;
    dist->add_option("--from", from_addr, "Vertex address [a,b,c,k]")->required();
    dist->add_option("--to", to_addr, "Vertex address [a,b,c,k]")->required();
    dist->add_option("-o,--out", out_path, "Output file (default stdout)");

    // lip
    auto* lip = app.add_subcommand("lip", "Lipschitz functionals of a field");
    add_level(lip);
    add_domain(lip);
    std::string field_path;
    lip->add_option("--field", field_path, "Field file (JSON or .csv)")->required();
    lip->add_option("-o,--out", out_path, "Output file (default stdout)");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Solve the Dirichlet problem for the infinity Laplacian");
    add_level(solve_cmd);
    add_boundary(solve_cmd);
    add_domain(solve_cmd);
    std::string method_name = "iterate";
    solve_cmd->add_option("--method", method_name, "iterate | lazarus")
        ->check(CLI::IsMember({"iterate", "lazarus"}))
        ->capture_default_str();
    std::optional<double> tol;
    solve_cmd->add_option("--tol", tol, "Sweep tolerance (default 1e-13*(1+range))")->check(CLI::PositiveNumber);
    std::size_t max_iter = 10'000'000;
    solve_cmd->add_option("--max-iter", max_iter, "Sweep budget")->capture_default_str();
    std::string sweep_mode = "gauss-seidel";
    solve_cmd->add_option("--sweep-mode", sweep_mode, "gauss-seidel | jacobi")
        ->check(CLI::IsMember({"gauss-seidel", "jacobi"}))
        ->capture_default_str();
    bool normalize = false;
    solve_cmd->add_flag("--normalize", normalize, "Solve for data mapped onto (0,e,1), e <= 1/2, and map back");
    std::string report_path;
    solve_cmd->add_option("-o,--out", out_path, "Field output (.json or .csv; default stdout)");
    solve_cmd->add_option("--report", report_path, "Report JSON (default OUT.report.json)");

    // pharm
    auto* pharm = app.add_subcommand("pharm", "p-energy minimizers and the p -> infinity sweep");
    add_level(pharm);
    add_boundary(pharm);
    double p = 2.0;
    pharm->add_option("--p", p, "Exponent p > 1")->capture_default_str();
    std::vector<double> sweep;
    pharm->add_option("--sweep", sweep, "Increasing exponents P1,P2,...")->delimiter(',');
    std::optional<double> ptol;
    pharm->add_option("--tol", ptol, "Sweep tolerance (default 1e-10*(1+range))")->check(CLI::PositiveNumber);
    std::size_t max_sweeps = 1'000'000;
    pharm->add_option("--max-sweeps", max_sweeps, "Coordinate-descent sweep budget")->capture_default_str();
    pharm->add_option("-o,--out", out_path, "Field JSON, or CSV p,gap,energy,sweeps with --sweep");

    // lab
    auto* lab = app.add_subcommand("lab", "Experiments across levels");
    lab->require_subcommand(1);
    auto* lab_sweep = lab->add_subcommand("sweep", "Self-convergence table against the finest level");
    lab_sweep->add_option("--boundary", pa.boundary, "Corner values g(q1),g(q2),g(q3)")
        ->delimiter(',')
        ->expected(3)
        ->required();
    int lab_max = 6;
    lab_sweep->add_option("--max-level", lab_max, "Reference level nMax")->capture_default_str();
    lab_sweep->add_option("--method", method_name, "iterate | lazarus")
        ->check(CLI::IsMember({"iterate", "lazarus"}))
        ->capture_default_str();
    std::string out_dir;
    lab_sweep->add_option("--out", out_dir, "Output directory")->required();
    auto* lab_cx = lab->add_subcommand("counterexample", "Level-1 versus level-2 values at q12");
    double e_value = 0.1;
    lab_cx->add_option("--e", e_value, "Middle corner value e in (0, 1/7]")->required();
    lab_cx->add_option("--method", method_name, "iterate | lazarus")
        ->check(CLI::IsMember({"iterate", "lazarus"}))
        ->capture_default_str();
    lab_cx->add_option("-o,--out", out_path, "Output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "Run property suites on a solution");
    add_level(verify);
    add_boundary(verify);
    add_domain(verify);
    std::string suites = "all";
    verify->add_option("--suite", suites, "Comma-separated suites, 'all', or '' for none")->capture_default_str();
    verify->add_option("--field", field_path, "Check this field instead of a fresh solve");
    std::uint64_t seed = 1;
    verify->add_option("--seed", seed, "Seed for the sampled suites")->capture_default_str();
    std::size_t samples = 100;
    verify->add_option("--samples", samples, "Random subsets for the amle suite")->capture_default_str();
    double vtol = 1e-9;
    verify->add_option("--tol", vtol, "Tolerance for every check")->capture_default_str();
    verify->add_option("-o,--out", out_path, "Report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (!dump_config.empty()) {
            // only options given on this run; unset ones would read back as empty values
            std::istringstream all(app.config_to_str(false, false));
            std::string kept, line;
            while (std::getline(all, line))
                if (line.rfind("dump-config", 0) != 0) kept += line + "\n";
            io::write_text_file(dump_config, kept);
        }
        const Method method = method_name == "lazarus" ? Method::lazarus : Method::iterate;

        if (*build) {
            const auto g = build_graph(pa.level, max_level_from_env());
            emit(out_path, io::graph_to_json(g).dump(2) + "\n", out);
            return kOk;
        }

        if (*dist) {
            auto lp = load_problem(pa, false);
            const auto& g = *lp.graph;
            const auto x = g.id_of(io::parse_address(from_addr));
            const auto y = g.id_of(io::parse_address(to_addr));
            if (!lp.domain->in_closure(x) || !lp.domain->in_closure(y))
                throw InputError("both endpoints must lie in the closure of the domain");
            const auto d = restricted_distance(*lp.domain, x, y);
            ordered_json j;
            j["from"] = g.vertex(x).address();
            j["to"] = g.vertex(y).address();
            j["reachable"] = d.reachable();
            if (d.reachable()) {
                j["hops"] = d.hop_count();
                j["distance"] = d.value();
                j["path"] = addresses(g, shortest_path(*lp.domain, x, y).vertices, SIZE_MAX);
            }
            emit(out_path, j.dump(2) + "\n", out);
            return kOk;
        }

        if (*lip) {
            auto lp = load_problem(pa, false);
            const auto& g = *lp.graph;
            const auto u = io::read_field(g, field_path);
            ordered_json j;
            j["interior"] = lip_json(g, lip_interior(*lp.domain, u));
            j["boundary"] = lip_json(g, lip_boundary(*lp.domain, u));
            const auto chk = lip_equals_max_slope_check(*lp.domain, u);
            j["max_local_slope"] = chk.max_slope;
            j["equal"] = chk.equal;
            emit(out_path, j.dump(2) + "\n", out);
            return kOk;
        }

        if (*solve_cmd) {
            auto lp = load_problem(pa, true);
            const auto prob = make_problem(*lp.domain, *lp.data);
            IterateOptions opt;
            opt.tol = tol;
            opt.max_iter = max_iter;
            opt.mode = sweep_mode == "jacobi" ? SweepMode::jacobi : SweepMode::gauss_seidel;
            opt.threads = threads;
            const auto sol = normalize ? solve_normalized(prob, method, opt) : solve(prob, method, opt);
            const auto& g = *lp.graph;
            const bool csv = out_path.size() >= 4 && out_path.compare(out_path.size() - 4, 4, ".csv") == 0;
            const std::string field_text =
                csv ? io::field_to_csv(sol.field) : io::field_to_json(sol.field).dump(2) + "\n";
            emit(out_path, field_text, out);
            if (report_path.empty() && !out_path.empty() && out_path != "-") report_path = out_path + ".report.json";
            if (!report_path.empty()) {
                io::write_text_file(report_path, io::report_to_json(sol.report, g).dump(2) + "\n");
                ordered_json meta;
                meta["elapsed_seconds"] = sol.report.elapsed_seconds;
                meta["threads"] = threads;
                io::write_text_file(report_path + ".meta.json", meta.dump(2) + "\n");
            }
            if (!sol.report.converged) {
                err << "solver did not converge after " << sol.report.iterations << " sweeps (residual "
                    << sol.report.residual << ")\n";
                return kNotConverged;
            }
            return kOk;
        }

        if (*pharm) {
            const auto corners = corner_triple(pa.boundary);
            const auto g = build_graph(pa.level, max_level_from_env());
            if (!sweep.empty()) {
                const auto rows = p_sweep_to_infinity(g, corners, sweep, ptol);
                std::string csv = "p,gap,energy,sweeps\n";
                bool all = true;
                for (const auto& r : rows) {
                    csv += csv_double(r.p) + "," + csv_double(r.gap) + "," + csv_double(r.energy) + "," +
                           std::to_string(r.sweeps) + "\n";
                    if (!r.converged) {
                        all = false;
                        err << "p = " << r.p << " did not converge\n";
                    }
                }
                emit(out_path, csv, out);
                return all ? kOk : kNotConverged;
            }
            PSolveOptions opt;
            opt.tol = ptol;
            opt.max_sweeps = max_sweeps;
            const auto sol = solve_p_harmonic({&g, p, corners}, opt);
            emit(out_path, io::field_to_json(sol.field).dump(2) + "\n", out);
            if (!sol.report.converged) {
                err << "p-harmonic solve did not converge after " << sol.report.sweeps << " sweeps\n";
                return kNotConverged;
            }
            return kOk;
        }

        if (*lab_sweep) {
            const auto corners = corner_triple(pa.boundary);
            const auto s = level_sweep(corners, lab_max, method, max_level_from_env());
            std::filesystem::create_directories(out_dir);
            std::string csv = "n,k,sup_diff,F_n,iterations,residual\n";
            for (const auto& r : s.table.rows)
                csv += std::to_string(r.n) + "," + std::to_string(r.k) + "," + csv_double(r.sup_diff) + "," +
                       csv_double(r.f_n) + "," + std::to_string(r.iterations) + "," + csv_double(r.residual) + "\n";
            io::write_text_file((std::filesystem::path(out_dir) / "table.csv").string(), csv);
            bool ok = true;
            for (std::size_t i = 0; i < s.fields.size(); ++i) {
                const auto name = "u" + std::to_string(i + 1) + ".json";
                io::write_text_file((std::filesystem::path(out_dir) / name).string(),
                                    io::field_to_json(s.fields[i]).dump(2) + "\n");
                if (!s.errors[i].empty()) {
                    ok = false;
                    err << "level " << (i + 1) << ": " << s.errors[i] << "\n";
                }
            }
            return ok ? kOk : kNotConverged;
        }

        if (*lab_cx) {
            const auto r = counterexample_report(e_value, method);
            ordered_json j;
            j["e"] = r.e;
            j["u1_q12"] = r.u1_q12;
            j["u2_q12"] = r.u2_q12;
            j["difference"] = r.difference;
            j["level1_laplacian_of_u2"] = r.level1_laplacian;
            j["expected_u1"] = r.expected_u1;
            j["expected_u2"] = r.expected_u2;
            j["expected_difference"] = r.expected_difference;
            emit(out_path, j.dump(2) + "\n", out);
            return kOk;
        }

        if (*verify) {
            std::vector<std::string> names;
            if (suites == "all")
                names = suite_names();
            else
                names = split_list(suites);
            for (const auto& n : names)
                if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
                    throw InputError("unknown suite: " + n);

            ordered_json rep;
            rep["level"] = pa.level;
            auto& results = rep["suites"] = ordered_json::array();
            bool all = true;
            if (!names.empty()) {
                std::unique_ptr<PreFractalGraph> holder;
                std::optional<VertexField> given;
                if (!field_path.empty()) {
                    holder = std::make_unique<PreFractalGraph>(build_graph(pa.level, max_level_from_env()));
                    given = io::read_field(*holder, field_path);
                }
                auto lp = load_problem(pa, true, given ? &*given : nullptr);
                const auto& g = *lp.graph;
                VertexField u(g);
                if (given) {
                    // re-key onto the problem's graph instance
                    for (VertexId id : given->support()) u.set(id, given->at(id));
                    if (!u.defined_on(lp.domain->closure()))
                        throw InputError("--field must be defined on the closure of the domain");
                } else {
                    u = solve(make_problem(*lp.domain, *lp.data), Method::lazarus).field;
                }
                const bool full = pa.domain_file.empty();
                const SuiteContext ctx{*lp.domain, u, *lp.data, full, seed, samples, vtol};
                for (const auto& n : names) {
                    auto r = run_suite(n, ctx);
                    all = all && r["passed"].get<bool>();
                    results.push_back(std::move(r));
                }
            }
            rep["passed"] = all;
            emit(out_path, rep.dump(2) + "\n", out);
            return all ? kOk : kVerifyFailed;
        }
    } catch (const LazarusError& e) {
        err << "error: " << e.what() << "\n";
        return kNotConverged;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}

} // namespace gasket::cli
