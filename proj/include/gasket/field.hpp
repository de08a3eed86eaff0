#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "gasket/error.hpp"
#include "gasket/graph.hpp"

namespace gasket {

/// A finite real value on each vertex of a declared support set.
class VertexField {
public:
    VertexField() = default;
    explicit VertexField(const PreFractalGraph& g)
        : graph_(&g), values_(g.vertex_count(), 0.0), defined_(g.vertex_count(), false) {}

    /// Defined on every vertex, all equal to value.
    static VertexField constant(const PreFractalGraph& g, double value) {
        VertexField f(g);
        for (VertexId id = 0; id < g.vertex_count(); ++id) f.set(id, value);
        return f;
    }

    /// g(q1), g(q2), g(q3) on V^0 only.
    static VertexField on_corners(const PreFractalGraph& g, const std::array<double, 3>& values) {
        VertexField f(g);
        for (int i = 0; i < 3; ++i) f.set(g.boundary()[i], values[i]);
        return f;
    }

    const PreFractalGraph& graph() const { return *graph_; }
    bool valid() const { return graph_ != nullptr; }

    bool defined(VertexId id) const { return id < defined_.size() && defined_[id]; }

    double at(VertexId id) const {
        if (!defined(id)) throw InputError("field is undefined at vertex " + describe(id));
        return values_[id];
    }
    double operator[](VertexId id) const { return at(id); }
    double at(const Vertex& v) const { return at(graph_->id_of(v)); }

    void set(VertexId id, double value) {
        detail::require(id < values_.size(), "vertex id out of range");
        detail::require(std::isfinite(value), "field values must be finite");
        values_[id] = value;
        defined_[id] = true;
    }
    void set(const Vertex& v, double value) { set(graph_->id_of(v), value); }

    void erase(VertexId id) {
        detail::require(id < values_.size(), "vertex id out of range");
        defined_[id] = false;
    }

    std::vector<VertexId> support() const {
        std::vector<VertexId> out;
        for (VertexId id = 0; id < defined_.size(); ++id)
            if (defined_[id]) out.push_back(id);
        return out;
    }

    template <class Range>
    bool defined_on(const Range& ids) const {
        for (VertexId id : ids)
            if (!defined(id)) return false;
        return true;
    }

    /// Raw storage; entries outside the support are meaningless.
    const std::vector<double>& raw() const { return values_; }

private:
    std::string describe(VertexId id) const {
        if (graph_ && id < graph_->vertex_count()) return graph_->vertex(id).address();
        return "#" + std::to_string(id);
    }

    const PreFractalGraph* graph_ = nullptr;
    std::vector<double> values_;
    std::vector<bool> defined_;
};

/// The restriction of f to the given ids.
template <class Range>
VertexField restrict_field(const VertexField& f, const Range& ids) {
    VertexField out(f.graph());
    for (VertexId id : ids) out.set(id, f.at(id));
    return out;
}

/// sup |f - h| over ids.
template <class Range>
double sup_distance(const VertexField& f, const VertexField& h, const Range& ids) {
    double m = 0.0;
    for (VertexId id : ids) m = std::max(m, std::abs(f.at(id) - h.at(id)));
    return m;
}

} // namespace gasket
