#pragma once
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace sharpmax {

// Subset of the vertex range 0..n-1.
struct VertexSet {
    std::vector<uint8_t> in;

    VertexSet() = default;
    explicit VertexSet(int n) : in(static_cast<size_t>(n), 0) {}

    int universe() const { return static_cast<int>(in.size()); }
    bool contains(int v) const { return in[static_cast<size_t>(v)] != 0; }
    void add(int v) { in[static_cast<size_t>(v)] = 1; }

    int count() const {
        int c = 0;
        for (uint8_t b : in) c += b;
        return c;
    }
    std::vector<int> indices() const {
        std::vector<int> out;
        for (int v = 0; v < universe(); ++v)
            if (in[static_cast<size_t>(v)]) out.push_back(v);
        return out;
    }
};

// Simple connected graph on vertices 0..n-1 with the hop metric
// precomputed at construction. Immutable once built.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted
    std::vector<std::vector<int>> adj;       // sorted neighbor lists
    std::vector<std::vector<int>> dist;      // n x n hop distances

    int degree(int v) const { return static_cast<int>(adj[static_cast<size_t>(v)].size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

enum class Family { complete, star, path, cycle, hypercube };

Family family_from_string(const std::string& name);
std::string family_name(Family f);

// Canonical graph of a named family. The star places its center at index 0;
// the hypercube takes `size` as the dimension (n = 2^size) with vertices
// adjacent when their indices differ in one bit.
Graph build_named(Family family, int size);

// Validates (simple, in-range, connected) and computes the distance table
// by breadth-first search from every vertex.
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

// B(v, r): vertices at hop distance <= r from v.
VertexSet ball(const Graph& g, int v, int r);

struct Geometry {
    int diameter = 0;
    VertexSet omega;                 // vertices realizing the diameter
    std::vector<int> eccentricity;   // per vertex
};

Geometry geometry(const Graph& g);

// Minimum-degree vertex within `subset` (degree taken in g); ties go to the
// smallest index.
int min_degree_vertex(const Graph& g, const VertexSet& subset);

// Text format: first line "n m", then m lines "u v" (0-based).
Graph read_edge_list_text(std::istream& is);
void write_edge_list_text(std::ostream& os, const Graph& g);

}  // namespace sharpmax
