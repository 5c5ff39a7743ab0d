#include "sharpmax/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "sharpmax/errors.hpp"

namespace sharpmax {

Family family_from_string(const std::string& name) {
    if (name == "complete") return Family::complete;
    if (name == "star") return Family::star;
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "hypercube") return Family::hypercube;
    throw validation_error("unknown graph family: " + name);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::star: return "star";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::hypercube: return "hypercube";
    }
    return "?";
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 1) throw validation_error("vertex count must be positive");
    Graph g;
    g.n = n;
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw validation_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw validation_error("self-loop at vertex " + std::to_string(u));
        auto e = std::minmax(u, v);
        if (!seen.insert({e.first, e.second}).second)
            throw validation_error("duplicate edge (" + std::to_string(e.first) + "," +
                                   std::to_string(e.second) + ")");
    }
    g.edges.assign(seen.begin(), seen.end());
    g.adj.assign(static_cast<size_t>(n), {});
    for (auto [u, v] : g.edges) {
        g.adj[static_cast<size_t>(u)].push_back(v);
        g.adj[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());

    g.dist.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
    for (int s = 0; s < n; ++s) {
        auto& d = g.dist[static_cast<size_t>(s)];
        d[static_cast<size_t>(s)] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : g.adj[static_cast<size_t>(u)]) {
                if (d[static_cast<size_t>(w)] < 0) {
                    d[static_cast<size_t>(w)] = d[static_cast<size_t>(u)] + 1;
                    q.push_back(w);
                }
            }
        }
        for (int v = 0; v < n; ++v)
            if (d[static_cast<size_t>(v)] < 0)
                throw validation_error("graph is disconnected: no path from " +
                                       std::to_string(s) + " to " + std::to_string(v));
    }
    return g;
}

Graph build_named(Family family, int size) {
    std::vector<std::pair<int, int>> e;
    switch (family) {
        case Family::complete: {
            if (size < 2) throw validation_error("complete graph needs size >= 2");
            for (int u = 0; u < size; ++u)
                for (int v = u + 1; v < size; ++v) e.emplace_back(u, v);
            return from_edge_list(size, e);
        }
        case Family::star: {
            if (size < 2) throw validation_error("star graph needs size >= 2");
            for (int v = 1; v < size; ++v) e.emplace_back(0, v);
            return from_edge_list(size, e);
        }
        case Family::path: {
            if (size < 2) throw validation_error("path graph needs size >= 2");
            for (int v = 0; v + 1 < size; ++v) e.emplace_back(v, v + 1);
            return from_edge_list(size, e);
        }
        case Family::cycle: {
            if (size < 3) throw validation_error("cycle graph needs size >= 3");
            for (int v = 0; v + 1 < size; ++v) e.emplace_back(v, v + 1);
            e.emplace_back(0, size - 1);
            return from_edge_list(size, e);
        }
        case Family::hypercube: {
            if (size < 1) throw validation_error("hypercube needs dimension >= 1");
            if (size > 12) throw validation_error("hypercube dimension too large");
            int n = 1 << size;
            for (int u = 0; u < n; ++u)
                for (int b = 0; b < size; ++b) {
                    int v = u ^ (1 << b);
                    if (u < v) e.emplace_back(u, v);
                }
            return from_edge_list(n, e);
        }
    }
    throw validation_error("unknown family");
}

VertexSet ball(const Graph& g, int v, int r) {
    if (v < 0 || v >= g.n) throw validation_error("ball: vertex out of range");
    if (r < 0) throw validation_error("ball: radius must be non-negative");
    VertexSet s(g.n);
    const auto& d = g.dist[static_cast<size_t>(v)];
    for (int u = 0; u < g.n; ++u)
        if (d[static_cast<size_t>(u)] <= r) s.add(u);
    return s;
}

Geometry geometry(const Graph& g) {
    Geometry geo;
    geo.eccentricity.assign(static_cast<size_t>(g.n), 0);
    for (int v = 0; v < g.n; ++v) {
        int ecc = 0;
        for (int u = 0; u < g.n; ++u) ecc = std::max(ecc, g.dist[static_cast<size_t>(v)][static_cast<size_t>(u)]);
        geo.eccentricity[static_cast<size_t>(v)] = ecc;
        geo.diameter = std::max(geo.diameter, ecc);
    }
    geo.omega = VertexSet(g.n);
    for (int v = 0; v < g.n; ++v)
        if (geo.eccentricity[static_cast<size_t>(v)] == geo.diameter) geo.omega.add(v);
    return geo;
}

int min_degree_vertex(const Graph& g, const VertexSet& subset) {
    int best = -1;
    for (int v = 0; v < g.n; ++v) {
        if (!subset.contains(v)) continue;
        if (best < 0 || g.degree(v) < g.degree(best)) best = v;
    }
    if (best < 0) throw validation_error("min_degree_vertex: empty subset");
    return best;
}

Graph read_edge_list_text(std::istream& is) {
    int n = 0, m = 0;
    if (!(is >> n >> m)) throw validation_error("edge list: expected header 'n m'");
    std::vector<std::pair<int, int>> e;
    e.reserve(static_cast<size_t>(std::max(m, 0)));
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(is >> u >> v))
            throw validation_error("edge list: expected " + std::to_string(m) + " edges, got " +
                                   std::to_string(i));
        e.emplace_back(u, v);
    }
    return from_edge_list(n, e);
}

void write_edge_list_text(std::ostream& os, const Graph& g) {
    os << g.n << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges) os << u << ' ' << v << '\n';
}

}  // namespace sharpmax
