#include "wpl/report.hpp"

namespace wpl {

json to_json(const BundleSum& s) {
    json items = json::array();
    for (const auto& [b, mult] : s.items()) {
        items.push_back({{"bundle", b.str()}, {"multiplicity", mult}});
    }
    return {{"weights", s.weights().str()}, {"expression", s.str()}, {"summands", items}};
}

json to_json(const StableHomResult& r) {
    return {{"coherent_dimension", r.coherent_dimension},
            {"factoring_dimension", r.factoring_dimension},
            {"dimension", r.dimension},
            {"window", r.window_size},
            {"stable_window_check", r.window_stable}};
}

json to_json(const GluingStep& s) {
    json out = {{"condition", s.description}, {"verdict", s.pass ? "pass" : "fail"}};
    if (!s.computed.items().empty()) out["computed"] = s.computed.str();
    if (!s.pass) out["witness"] = s.witness;
    return out;
}

json to_json(const TiltingReport& r) {
    const std::vector<Bundle> items = r.object.distinct();
    json cells = json::array();
    for (const RigidityCell& c : r.nonzero_cells) {
        cells.push_back({{"source", items[static_cast<std::size_t>(c.source)].str()},
                         {"target", items[static_cast<std::size_t>(c.target)].str()},
                         {"n", c.shift},
                         {"dimension", c.dimension},
                         {"method", c.method}});
    }
    json trace = json::array();
    for (const GluingStep& s : r.trace) trace.push_back(to_json(s));
    json out = {{"object", to_json(r.object)},
                {"verdict", r.pass ? "pass" : "fail"},
                {"summand_count", r.summand_count},
                {"expected_count", r.expected_count},
                {"rigidity",
                 {{"window", r.window},
                  {"cells_checked", r.cells_checked},
                  {"boundary_cells_checked", r.boundary_cells_checked},
                  {"exact_pairs", r.exact_pairs},
                  {"nonzero_cells", cells}}},
                {"gluing_trace", trace},
                {"notes", r.notes}};
    if (!r.pass) out["witness"] = r.witness;
    return out;
}

json to_json(const Assembly& a) {
    json trace = json::array();
    for (const GluingStep& s : a.trace) trace.push_back(to_json(s));
    json out = {{"object", to_json(a.object)}, {"verdict", a.pass ? "pass" : "fail"}, {"trace", trace}};
    if (!a.pass) out["witness"] = a.witness;
    return out;
}

json to_json(const CuboidTrace& t) {
    json steps = json::array();
    for (const GluingStep& s : t.steps) steps.push_back(to_json(s));
    json out = {{"verdict", t.pass ? "pass" : "fail"}, {"object", to_json(t.result)}, {"steps", steps}};
    if (!t.pass) out["failed_step"] = t.failed_step;
    return out;
}

json to_json(const Quiver& q) {
    json vertices = json::array();
    for (std::size_t i = 0; i < q.vertices.size(); ++i) {
        vertices.push_back({{"id", i}, {"bundle", q.vertices[i].str()}, {"multiplicity", q.vertex_multiplicity[i]}});
    }
    json arrows = json::array();
    for (const QuiverArrow& a : q.arrows) {
        arrows.push_back({{"source", a.source}, {"target", a.target}, {"multiplicity", a.multiplicity}});
    }
    return {{"vertices", vertices},
            {"arrows", arrows},
            {"arrow_count", q.arrow_count()},
            {"stable_hom_dimensions", q.stable_dims},
            {"dot", q.dot()}};
}

json to_json(const Crosscheck& c) {
    json out = {{"agree", c.agree}, {"formula", c.formula.str()}};
    json engine = json::array();
    for (const BundleSum& m : c.engine.matches) engine.push_back(m.str());
    out["engine_isomorphism_class"] = engine;
    if (!c.detail.empty()) out["detail"] = c.detail;
    return out;
}

json to_json(const HomReport& r) {
    return {{"source", r.source},
            {"target", r.target},
            {"mode", r.mode},
            {"dimension", r.dimension},
            {"window", r.window},
            {"stable_window_check", r.stable_window_check}};
}

json envelope(const std::string& command, json inputs, json result, json evidence, double timing_ms) {
    return {{"command", command},
            {"inputs", std::move(inputs)},
            {"result", std::move(result)},
            {"evidence", std::move(evidence)},
            {"timing_ms", timing_ms}};
}

}  // namespace wpl
