#pragma once

// File formats: graph export (JSON), subdomain literals, vertex fields (JSON
// map keyed by "[a,b,c,k]" or CSV rows a,b,c,k,value) and solve reports.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gasket/domain.hpp"
#include "gasket/field.hpp"
#include "gasket/infinity.hpp"

namespace gasket::io {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

/// 17 significant digits; round-trips every binary64 value.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline json address_json(const Vertex& v) { return json::array({v.a(), v.b(), v.c(), v.denom_exp()}); }

/// Accepts [a,b,c,k] as a JSON array or as its string literal.
inline Vertex parse_address(const json& j) {
    if (j.is_string()) {
        json parsed;
        try {
            parsed = json::parse(j.get<std::string>());
        } catch (const json::exception&) {
            throw InputError("malformed vertex address: " + j.get<std::string>());
        }
        return parse_address(parsed);
    }
    if (!j.is_array() || j.size() != 4) throw InputError("vertex address must be [a,b,c,denomExp]");
    for (const auto& x : j)
        if (!x.is_number_integer() || x.get<long long>() < 0)
            throw InputError("vertex address entries must be nonnegative integers");
    return Vertex::make(j[0].get<std::uint64_t>(), j[1].get<std::uint64_t>(), j[2].get<std::uint64_t>(),
                        j[3].get<unsigned>());
}

inline Vertex parse_address(const std::string& s) { return parse_address(json(s)); }

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError("invalid JSON in " + path + ": " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

// -----------------------------------------------------------------------------
// Graph
// -----------------------------------------------------------------------------

inline ordered_json graph_to_json(const PreFractalGraph& g) {
    ordered_json j;
    j["level"] = g.level();
    auto& verts = j["vertices"] = ordered_json::array();
    for (const auto& v : g.vertices()) verts.push_back({v.a(), v.b(), v.c(), v.denom_exp()});
    auto& edges = j["edges"] = ordered_json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    j["boundary"] = {g.boundary()[0], g.boundary()[1], g.boundary()[2]};
    return j;
}

// -----------------------------------------------------------------------------
// Subdomain literal: JSON array of addresses
// -----------------------------------------------------------------------------

inline Subdomain subdomain_from_json(const PreFractalGraph& g, const json& j) {
    if (!j.is_array()) throw InputError("subdomain literal must be a JSON array of vertex addresses");
    std::vector<VertexId> ids;
    for (const auto& a : j) ids.push_back(g.id_of(parse_address(a)));
    return boundary_closure(g, std::move(ids));
}

inline json subdomain_to_json(const Subdomain& dom) {
    json j = json::array();
    for (VertexId x : dom.interior()) j.push_back(address_json(dom.graph().vertex(x)));
    return j;
}

// -----------------------------------------------------------------------------
// VertexField
// -----------------------------------------------------------------------------

inline ordered_json field_to_json(const VertexField& f) {
    ordered_json j = ordered_json::object();
    for (VertexId id : f.support()) j[f.graph().vertex(id).address()] = f.at(id);
    return j;
}

inline VertexField field_from_json(const PreFractalGraph& g, const json& j) {
    if (!j.is_object()) throw InputError("vertex field JSON must be an object keyed by addresses");
    VertexField f(g);
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number()) throw InputError("field value for " + key + " is not a number");
        f.set(g.id_of(parse_address(key)), value.get<double>());
    }
    return f;
}

inline std::string field_to_csv(const VertexField& f) {
    std::string out = "a,b,c,k,value\n";
    for (VertexId id : f.support()) {
        const auto& v = f.graph().vertex(id);
        out += std::to_string(v.a()) + "," + std::to_string(v.b()) + "," + std::to_string(v.c()) + "," +
               std::to_string(v.denom_exp()) + "," + format_double(f.at(id)) + "\n";
    }
    return out;
}

inline VertexField field_from_csv(const PreFractalGraph& g, const std::string& text) {
    VertexField f(g);
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.rfind("a,", 0) == 0) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() != 5) throw InputError("CSV line " + std::to_string(lineno) + ": expected a,b,c,k,value");
        try {
            const auto v = Vertex::make(std::stoull(cells[0]), std::stoull(cells[1]), std::stoull(cells[2]),
                                        static_cast<unsigned>(std::stoul(cells[3])));
            f.set(g.id_of(v), std::stod(cells[4]));
        } catch (const std::logic_error&) {
            throw InputError("CSV line " + std::to_string(lineno) + ": malformed number");
        }
    }
    return f;
}

/// Reads JSON or CSV, chosen by extension (".csv" is CSV, anything else JSON).
inline VertexField read_field(const PreFractalGraph& g, const std::string& path) {
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        return field_from_csv(g, ss.str());
    }
    return field_from_json(g, read_json_file(path));
}

inline void write_field(const VertexField& f, const std::string& path) {
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0)
        write_text_file(path, field_to_csv(f));
    else
        write_text_file(path, field_to_json(f).dump(2) + "\n");
}

// -----------------------------------------------------------------------------
// SolveReport (no timings; those go to a separate metadata file)
// -----------------------------------------------------------------------------

inline ordered_json report_to_json(const SolveReport& r, const PreFractalGraph& g) {
    ordered_json j;
    j["method"] = to_string(r.method);
    j["converged"] = r.converged;
    j["iterations"] = r.iterations;
    j["residual"] = r.residual;
    auto& stages = j["stages"] = ordered_json::array();
    for (const auto& s : r.stages) {
        ordered_json st;
        st["from"] = g.vertex(s.from).address();
        st["to"] = g.vertex(s.to).address();
        st["slope"] = s.slope;
        st["component_size"] = s.component_size;
        st["constant_fill"] = s.constant_fill;
        auto& path = st["path"] = ordered_json::array();
        for (VertexId x : s.path) path.push_back(g.vertex(x).address());
        stages.push_back(std::move(st));
    }
    return j;
}

} // namespace gasket::io
