#pragma once
#include <utility>

#include "sharpmax/graph.hpp"
#include "sharpmax/maximal.hpp"

namespace sharpmax {

// Classical bracket (lower, upper) for the p-th power of the star operator
// norm: 1 + (n-1)/2^p and (n+5)/2.
std::pair<double, double> soria_tradacete_star_bounds(int n, double p);

// Two-valued lower bound for ||M_{K_n}||_p^p at parameters (alpha, k).
double kn_lower_bound(int n, double p, double alpha, int k);

struct KnLimit {
    double value = 0.0;
    double alpha_star = 0.0;
    int k_star = 0;
};

// lim_{p->inf} ||M_{K_n}||_p^p = sup over alpha > 1 and k of
// (k a^{n/k} + a(n-k)) / (k a^{n/k} + n-k).
KnLimit kn_limit(int n);

// Lower bound for ||M_{S_n}||_p^p, decreasing in p with limit (1+sqrt n)/2.
double star_lower_bound(int n, double p);

struct StarNormStar {
    double value = 0.0;     // sup^(1/p)
    double y_star = 1.0;    // interior maximizer (meaningful when attained)
    bool attained = false;  // false when the sup is only approached as y -> inf
};

// sup_{y>=1} ((y^p + (n-1)((1+y)/2)^p) / (y^p + n-1))^(1/p).
StarNormStar star_norm_star(int n, double p);

struct StarLimit {
    double value = 0.0;
    bool exact = false;  // closed form holds for n >= 25; below that the
                         // constrained sup is estimated numerically
};

StarLimit star_limit(int n);

// sqrt(n^2 - n - 1) / n, the sharp 2-variation constant of the star.
double star_var2_constant(int n);

// The attaining family: center x, one leaf x + c(n-1), remaining leaves x - c.
VertexFunction star_var2_extremizer(int n, double x, double c);

// 1 - 1/n.
double kn_var_constant(int n);

// Var_p(M delta_v) / Var_p(delta_v); maximizing over v certifies a lower
// bound for the graph's variation constant.
double delta_variation_ratio(const Graph& g, double p, int v);

}  // namespace sharpmax
