#include "sharpmax/maximal.hpp"

#include <algorithm>
#include <cmath>

#include "sharpmax/errors.hpp"

namespace sharpmax {

MaximalProfile graph_maximal(const Graph& g, const VertexFunction& f) {
    if (static_cast<int>(f.size()) != g.n)
        throw validation_error("graph_maximal: function length " + std::to_string(f.size()) +
                               " does not match n=" + std::to_string(g.n));
    for (double x : f)
        if (!std::isfinite(x)) throw validation_error("graph_maximal: non-finite value");

    MaximalProfile out;
    out.values.assign(static_cast<size_t>(g.n), 0.0);
    out.best_radius.assign(static_cast<size_t>(g.n), 0);

    // Bucket vertices by distance from v; averages over balls are prefix sums.
    std::vector<std::vector<int>> buckets;
    for (int v = 0; v < g.n; ++v) {
        const auto& d = g.dist[static_cast<size_t>(v)];
        int ecc = *std::max_element(d.begin(), d.end());
        buckets.assign(static_cast<size_t>(ecc) + 1, {});
        for (int u = 0; u < g.n; ++u) buckets[static_cast<size_t>(d[static_cast<size_t>(u)])].push_back(u);

        double sum = 0.0;
        int cnt = 0;
        double best = -1.0;
        int best_r = 0;
        for (int r = 0; r <= ecc; ++r) {
            for (int u : buckets[static_cast<size_t>(r)]) {
                sum += std::fabs(f[static_cast<size_t>(u)]);
                ++cnt;
            }
            double avg = sum / cnt;
            if (avg > best) {
                best = avg;
                best_r = r;
            }
        }
        out.values[static_cast<size_t>(v)] = best;
        out.best_radius[static_cast<size_t>(v)] = best_r;
    }
    return out;
}

double p_norm(const VertexFunction& f, double p) {
    if (!(p > 0.0)) throw validation_error("p_norm: p must be positive");
    double s = 0.0;
    if (p == 2.0) {
        for (double x : f) s += x * x;
        return std::sqrt(s);
    }
    if (p == 1.0) {
        for (double x : f) s += std::fabs(x);
        return s;
    }
    for (double x : f) s += std::pow(std::fabs(x), p);
    return std::pow(s, 1.0 / p);
}

double p_variation(const Graph& g, const VertexFunction& f, double p) {
    if (!(p > 0.0)) throw validation_error("p_variation: p must be positive");
    if (static_cast<int>(f.size()) != g.n)
        throw validation_error("p_variation: function length does not match n");
    double s = 0.0;
    if (p == 2.0) {
        for (auto [u, v] : g.edges) {
            double d = f[static_cast<size_t>(u)] - f[static_cast<size_t>(v)];
            s += d * d;
        }
        return std::sqrt(s);
    }
    if (p == 1.0) {
        for (auto [u, v] : g.edges) s += std::fabs(f[static_cast<size_t>(u)] - f[static_cast<size_t>(v)]);
        return s;
    }
    for (auto [u, v] : g.edges)
        s += std::pow(std::fabs(f[static_cast<size_t>(u)] - f[static_cast<size_t>(v)]), p);
    return std::pow(s, 1.0 / p);
}

}  // namespace sharpmax
