#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "sharpmax/graph.hpp"
#include "sharpmax/maximal.hpp"

namespace sharpmax {

struct SearchConfig {
    double grid_step = 0.01;
    int restarts = 32;
    int max_iters = 500;
    double tolerance = 1e-9;
    std::uint64_t seed = 12345;

    void validate() const;
};

enum class Objective { norm_ratio, variation_ratio };

std::string objective_name(Objective o);

struct SearchResult {
    double best_value = 0.0;
    VertexFunction argmax;
    Objective objective = Objective::norm_ratio;
    double p = 0.0;
    std::uint64_t evaluations = 0;
    std::string structure_note;
};

// ||M_G f||_p / ||f||_p for nonzero f.
double norm_ratio(const Graph& g, const VertexFunction& f, double p);
// Var_p(M_G f) / Var_p(f) for non-constant f.
double variation_ratio(const Graph& g, const VertexFunction& f, double p);

// Rescales a nonnegative nonzero f so its maximum is 1; the norm ratio is
// unchanged.
VertexFunction normalize_norm_candidate(const VertexFunction& f);
// Shifts and rescales a nonnegative non-constant f to min 0, max 1; the
// variation ratio is unchanged.
VertexFunction normalize_variation_candidate(const VertexFunction& f);

// Partition of the vertices into classes of pairwise-interchangeable
// vertices (swapping any two members is a graph automorphism). Returns a
// class id per vertex; ids are dense and ordered by smallest member.
std::vector<int> interchange_classes(const Graph& g);

// Exhaustive maximum of the norm ratio over grid points of [0,1]^n with one
// coordinate pinned to 1. Values within an interchangeability class are
// enumerated in sorted order, which covers the full grid up to automorphism.
SearchResult grid_oracle_norm(const Graph& g, double p, double step, int jobs = 0);

// Same for the variation ratio; pins one coordinate to 1 and one to 0.
SearchResult grid_oracle_variation(const Graph& g, double p, double step, int jobs = 0);

// Multi-start cyclic coordinate ascent with golden-section line searches.
// Delta functions at every vertex are always among the starts.
SearchResult ascent_norm(const Graph& g, double p, const SearchConfig& cfg, int jobs = 0);
SearchResult ascent_variation(const Graph& g, double p, const SearchConfig& cfg, int jobs = 0);

struct StarFormula {
    double value = 0.0;   // sup^(1/p)
    double x_star = 0.0;  // maximizing leaf value in [0,1)
    bool heuristic = false;  // set when p lies outside (1,2]
};

// One-parameter star extremal family: center 1, all leaves x; the exact
// operator norm of the star for p in (1,2].
StarFormula star_norm_formula(int n, double p);

// Star family with center 1, s leaves at x and n-1-s leaves at y, x <= y.
SearchResult star_norm_structured(int n, double p);

// Complete-graph family taking two values: 1 on k vertices, x on the rest.
SearchResult complete_norm_structured(int n, double p);

}  // namespace sharpmax
