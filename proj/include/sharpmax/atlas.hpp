#pragma once
#include <optional>
#include <string>
#include <vector>

#include "sharpmax/graph.hpp"
#include "sharpmax/search.hpp"

namespace sharpmax {

// Adjacency bit-string in the pair order (0,1),(0,2),(1,2),(0,3),...;
// the canonical code is the lexicographic minimum over all vertex
// relabelings. Two graphs get the same code exactly when isomorphic.
std::string canonical_code(const Graph& g);

// All connected simple graphs on n vertices, one per isomorphism class,
// in increasing canonical-code order. Guarded to n <= 7.
std::vector<Graph> enumerate_connected(int n);

enum class PathMode { vertex_disjoint, edge_disjoint };

// Number of disjoint s-t paths (internally-vertex-disjoint by default),
// computed as a unit-capacity max-flow.
int disjoint_paths(const Graph& g, int s, int t, PathMode mode = PathMode::vertex_disjoint);

// Checks the structural hypothesis that certifies the delta lower bound
// 1 - 1/n for the variation constant: let a be a minimum-degree vertex of
// Omega_G with degree k; some vertex x must have a among its farthest
// vertices and admit k disjoint paths to it. Returns k when it holds.
std::optional<int> check_prop43(const Graph& g, PathMode mode = PathMode::vertex_disjoint);

struct AtlasRecord {
    Graph graph;
    std::string canonical_code;
    std::optional<SearchResult> norm_estimate;
    std::optional<SearchResult> variation_estimate;
    std::optional<int> prop43_k;
};

struct AtlasScan {
    std::vector<AtlasRecord> records;
    double c_hat = 0.0;  // min over the family
    double C_hat = 0.0;  // max over the family
    std::string argmin_code;
    std::string argmax_code;
};

// Estimates the variation constant of every graph in the family: ascent
// everywhere, the grid oracle as certification for n <= 4, and the delta
// ratio as a floor.
AtlasScan scan_variation_constants(int n, double p, const SearchConfig& cfg, int jobs = 0);

}  // namespace sharpmax
