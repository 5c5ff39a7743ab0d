#pragma once
#include <vector>

#include "sharpmax/graph.hpp"

namespace sharpmax {

// Real values on the vertex set; length must equal the graph's n.
using VertexFunction = std::vector<double>;

struct MaximalProfile {
    std::vector<double> values;   // M_G f per vertex
    std::vector<int> best_radius; // smallest maximizing radius per vertex
};

// Exact centered maximal function: at each vertex, the best average of |f|
// over balls of integer radius 0..eccentricity.
MaximalProfile graph_maximal(const Graph& g, const VertexFunction& f);

// ell^p (quasi-)norm, p > 0. p < 1 is permitted.
double p_norm(const VertexFunction& f, double p);

// (sum over edges |f(u)-f(v)|^p)^(1/p), p > 0.
double p_variation(const Graph& g, const VertexFunction& f, double p);

}  // namespace sharpmax
