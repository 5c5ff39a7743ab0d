#pragma once
#include <json.hpp>

#include "sharpmax/atlas.hpp"
#include "sharpmax/constants.hpp"
#include "sharpmax/graph.hpp"
#include "sharpmax/maximal.hpp"
#include "sharpmax/search.hpp"
#include "sharpmax/zline.hpp"

namespace sharpmax {

using json = nlohmann::json;

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json vertex_function_to_json(const VertexFunction& f);
VertexFunction vertex_function_from_json(const json& j);

json profile_to_json(const MaximalProfile& prof);

json search_result_to_json(const SearchResult& r);
SearchResult search_result_from_json(const json& j);

json lattice_to_json(const LatticeFunction& f);
LatticeFunction lattice_from_json(const json& j);

json tail_bound_to_json(const TailBound& t);

json bound_report_to_json(const BoundReport& rep);

json atlas_record_to_json(const AtlasRecord& rec);

// one closed-form constant, as a report row
json constant_row(const std::string& name, int n, std::optional<double> p, double value,
                  bool exact, const json& attaining = json());

}  // namespace sharpmax
