#include "sharpmax/constants.hpp"

#include <algorithm>
#include <cmath>

#include "sharpmax/errors.hpp"
#include "sharpmax/golden.hpp"

namespace sharpmax {

std::pair<double, double> soria_tradacete_star_bounds(int n, double p) {
    if (n < 2) throw validation_error("soria_tradacete_star_bounds: n must be >= 2");
    if (!(p >= 1)) throw validation_error("soria_tradacete_star_bounds: p must be >= 1");
    return {1.0 + (n - 1) / std::pow(2.0, p), (n + 5) / 2.0};
}

double kn_lower_bound(int n, double p, double alpha, int k) {
    if (n < 2) throw validation_error("kn_lower_bound: n must be >= 2");
    if (!(p >= 1)) throw validation_error("kn_lower_bound: p must be >= 1");
    if (!(alpha > 1)) throw validation_error("kn_lower_bound: alpha must exceed 1");
    if (k < 1 || k > n) throw validation_error("kn_lower_bound: k out of range");
    if (k == n) return 1.0;
    double y = (n * std::pow(alpha, 1.0 / p) - (n - k)) / k;
    double yp = std::pow(y, p);
    return (k * yp + (n - k) * alpha) / (k * yp + (n - k));
}

namespace {

// objective normalized by alpha^{n/k} so large alpha cannot overflow
double kn_limit_objective(int n, int k, double alpha) {
    double t = std::pow(alpha, -static_cast<double>(n) / k);
    return (k + (n - k) * alpha * t) / (k + (n - k) * t);
}

}  // namespace

KnLimit kn_limit(int n) {
    if (n < 3) throw validation_error("kn_limit: n must be >= 3");
    KnLimit best;
    best.value = 1.0;
    best.alpha_star = 1.0;
    best.k_star = n;  // k = n collapses to 1
    for (int k = 1; k < n; ++k) {
        // bracket: double alpha_max until the endpoint value has decreased
        // five doublings in a row
        double alpha_max = 2.0;
        double prev = kn_limit_objective(n, k, alpha_max);
        int decreases = 0;
        while (decreases < 5 && alpha_max < 1e18) {
            alpha_max *= 2.0;
            double cur = kn_limit_objective(n, k, alpha_max);
            decreases = cur < prev ? decreases + 1 : 0;
            prev = cur;
        }
        double lo = 0.0, hi = std::log(alpha_max);
        auto [u_star, val] = golden_max(
            [&](double u) { return kn_limit_objective(n, k, std::exp(u)); }, lo, hi, 1e-13, 2000);
        if (val > best.value) {
            best.value = val;
            best.alpha_star = std::exp(u_star);
            best.k_star = k;
        }
    }
    return best;
}

double star_lower_bound(int n, double p) {
    if (n < 3) throw validation_error("star_lower_bound: n must be >= 3");
    if (!(p >= 1)) throw validation_error("star_lower_bound: p must be >= 1");
    double c = 1.0 + std::sqrt(static_cast<double>(n));
    double t = std::pow(2.0 * std::pow(c, 1.0 / p) - 1.0, p);
    return (t + (n - 1) * c) / (t + (n - 1));
}

namespace {

// (1 + (n-1)((1+y)/(2y))^p) / (1 + (n-1) y^{-p}), the y^p-normalized form
double star_star_objective(int n, double p, double y) {
    double w = std::pow((1.0 + y) / (2.0 * y), p);
    double inv = std::pow(y, -p);
    return (1.0 + (n - 1) * w) / (1.0 + (n - 1) * inv);
}

}  // namespace

StarNormStar star_norm_star(int n, double p) {
    if (n < 3) throw validation_error("star_norm_star: n must be >= 3");
    if (!(p >= 1)) throw validation_error("star_norm_star: p must be >= 1");

    double y_max = 4.0;
    double prev = star_star_objective(n, p, y_max);
    int decreases = 0;
    while (decreases < 5 && y_max < 1e12) {
        y_max *= 2.0;
        double cur = star_star_objective(n, p, y_max);
        decreases = cur < prev ? decreases + 1 : 0;
        prev = cur;
    }
    auto [u_star, interior] = golden_max(
        [&](double u) { return star_star_objective(n, p, std::exp(u)); }, 0.0, std::log(y_max),
        1e-13, 4000);

    double at_infinity = 1.0 + (n - 1) * std::pow(2.0, -p);  // y -> inf limit
    StarNormStar out;
    if (interior >= at_infinity) {
        out.value = std::pow(interior, 1.0 / p);
        out.y_star = std::exp(u_star);
        out.attained = true;
    } else {
        out.value = std::pow(at_infinity, 1.0 / p);
        out.y_star = std::exp(u_star);
        out.attained = false;
    }
    return out;
}

namespace {

struct RemarkPoint {
    double a2 = 1.0;
    double a4 = 1.0;
};

bool remark_feasible(int n, int s, double a2, double a4) {
    // a2^{2/n} a4^{(n-s-1)/n} > a2 sqrt(a4), strictly
    double lhs = std::pow(a2, 2.0 / n) * std::pow(a4, static_cast<double>(n - s - 1) / n);
    return lhs > a2 * std::sqrt(a4);
}

double remark_objective(int n, int s, double a2, double a4) {
    double e4 = static_cast<double>(n - s - 1) / n;
    double num = a2 * a2 + s * a2 + (n - s - 1) * std::pow(a2, 2.0 / n) * std::pow(a4, e4);
    double den = a2 * a2 + s + (n - s - 1) * a4;
    return num / den;
}

}  // namespace

StarLimit star_limit(int n) {
    if (n < 3) throw validation_error("star_limit: n must be >= 3");
    double base = (1.0 + std::sqrt(static_cast<double>(n))) / 2.0;
    if (n >= 25) return {base, true};

    // constrained numeric sup for small n; the bracket a2 <= (6/5)^n comes
    // from where the large-a2 regime takes over
    double a2_max = std::pow(1.2, n);
    double best = base;
    for (int s = 1; s <= n - 2; ++s) {
        double grid_best = -1.0;
        RemarkPoint at;
        const int G = 240;
        for (int i = 0; i <= G; ++i) {
            double a2 = std::exp(std::log(a2_max) * i / G);
            for (int j = 0; j <= G; ++j) {
                double a4 = static_cast<double>(j) / G;
                if (!remark_feasible(n, s, a2, a4)) continue;
                double v = remark_objective(n, s, a2, a4);
                if (v > grid_best) {
                    grid_best = v;
                    at = {a2, a4};
                }
            }
        }
        if (grid_best < 0) continue;
        for (int round = 0; round < 40; ++round) {
            double before = grid_best;
            auto f2 = [&](double u) {
                double a2 = std::exp(u);
                return remark_feasible(n, s, a2, at.a4) ? remark_objective(n, s, a2, at.a4) : -1.0;
            };
            auto [u2, v2] = golden_max(f2, 0.0, std::log(a2_max), 1e-12, 200);
            if (v2 > grid_best) {
                grid_best = v2;
                at.a2 = std::exp(u2);
            }
            auto f4 = [&](double a4) {
                return remark_feasible(n, s, at.a2, a4) ? remark_objective(n, s, at.a2, a4) : -1.0;
            };
            auto [a41, v4] = golden_max(f4, 0.0, 1.0, 1e-12, 200);
            if (v4 > grid_best) {
                grid_best = v4;
                at.a4 = a41;
            }
            if (grid_best - before < 1e-13) break;
        }
        best = std::max(best, grid_best);
    }
    return {best, false};
}

double star_var2_constant(int n) {
    if (n < 3) throw validation_error("star_var2_constant: n must be >= 3");
    return std::sqrt(static_cast<double>(n) * n - n - 1) / n;
}

VertexFunction star_var2_extremizer(int n, double x, double c) {
    if (n < 3) throw validation_error("star_var2_extremizer: n must be >= 3");
    if (!(x > 0)) throw validation_error("star_var2_extremizer: x must be positive");
    if (!(c > 0) || !(c < x))
        throw validation_error("star_var2_extremizer: c must lie in (0, x)");
    VertexFunction f(static_cast<size_t>(n), x - c);
    f[0] = x;
    f[1] = x + c * (n - 1);
    return f;
}

double kn_var_constant(int n) {
    if (n < 2) throw validation_error("kn_var_constant: n must be >= 2");
    return 1.0 - 1.0 / n;
}

double delta_variation_ratio(const Graph& g, double p, int v) {
    if (v < 0 || v >= g.n) throw validation_error("delta_variation_ratio: vertex out of range");
    if (!(p > 0)) throw validation_error("delta_variation_ratio: p must be positive");
    VertexFunction delta(static_cast<size_t>(g.n), 0.0);
    delta[static_cast<size_t>(v)] = 1.0;
    MaximalProfile prof = graph_maximal(g, delta);
    return p_variation(g, prof.values, p) / p_variation(g, delta, p);
}

}  // namespace sharpmax
