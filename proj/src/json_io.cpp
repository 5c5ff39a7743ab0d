#include "sharpmax/json_io.hpp"

#include "sharpmax/errors.hpp"

namespace sharpmax {

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    return {{"n", g.n}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw validation_error("graph json needs fields n and edges");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw validation_error("graph json: bad edge entry");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return from_edge_list(j.at("n").get<int>(), edges);
}

json vertex_function_to_json(const VertexFunction& f) { return {{"values", f}}; }

VertexFunction vertex_function_from_json(const json& j) {
    if (!j.contains("values")) throw validation_error("vertex function json needs field values");
    return j.at("values").get<VertexFunction>();
}

json profile_to_json(const MaximalProfile& prof) {
    return {{"values", prof.values}, {"best_radius", prof.best_radius}};
}

json search_result_to_json(const SearchResult& r) {
    return {{"best_value", r.best_value}, {"argmax", r.argmax},
            {"objective", objective_name(r.objective)}, {"p", r.p},
            {"evaluations", r.evaluations}, {"structure_note", r.structure_note}};
}

SearchResult search_result_from_json(const json& j) {
    SearchResult r;
    r.best_value = j.at("best_value").get<double>();
    r.argmax = j.at("argmax").get<VertexFunction>();
    r.objective = j.at("objective").get<std::string>() == "variation_ratio"
                      ? Objective::variation_ratio
                      : Objective::norm_ratio;
    r.p = j.at("p").get<double>();
    r.evaluations = j.at("evaluations").get<std::uint64_t>();
    r.structure_note = j.at("structure_note").get<std::string>();
    return r;
}

json lattice_to_json(const LatticeFunction& f) {
    return {{"offset", f.offset}, {"values", f.values}};
}

LatticeFunction lattice_from_json(const json& j) {
    return LatticeFunction::from(j.at("offset").get<long long>(),
                                 j.at("values").get<std::vector<double>>());
}

json tail_bound_to_json(const TailBound& t) {
    return {{"value", t.value}, {"error", t.error}, {"terms_used", t.terms_used}};
}

json bound_report_to_json(const BoundReport& rep) {
    return {{"lhs", rep.lhs},
            {"rhs", rep.rhs},
            {"ratio", rep.ratio},
            {"error_bounds", {{"lhs", rep.lhs_error}, {"rhs", rep.rhs_error}}}};
}

json atlas_record_to_json(const AtlasRecord& rec) {
    json j = {{"graph", graph_to_json(rec.graph)}, {"canonical_code", rec.canonical_code}};
    if (rec.norm_estimate) j["norm_estimate"] = search_result_to_json(*rec.norm_estimate);
    if (rec.variation_estimate)
        j["variation_estimate"] = search_result_to_json(*rec.variation_estimate);
    if (rec.prop43_k)
        j["prop43_k"] = *rec.prop43_k;
    else
        j["prop43_k"] = nullptr;
    return j;
}

json constant_row(const std::string& name, int n, std::optional<double> p, double value,
                  bool exact, const json& attaining) {
    json j = {{"name", name}, {"n", n}, {"value", value}, {"exact", exact}};
    if (p) j["p"] = *p;
    if (!attaining.is_null()) j["attaining_params"] = attaining;
    return j;
}

}  // namespace sharpmax
