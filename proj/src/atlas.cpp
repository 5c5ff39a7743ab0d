#include "sharpmax/atlas.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <queue>

#include "sharpmax/constants.hpp"
#include "sharpmax/errors.hpp"
#include "sharpmax/parallel.hpp"

namespace sharpmax {

namespace {

constexpr int kMaxAtlasN = 7;

// Adjacency as a flat bit mask over pairs in the order
// (0,1),(0,2),(1,2),(0,3),(1,2),... : placing vertex k fixes the k bits
// against the already-placed vertices, which makes prefix pruning work.
struct DenseAdj {
    int n = 0;
    std::array<std::array<uint8_t, kMaxAtlasN>, kMaxAtlasN> a{};

    static DenseAdj of(const Graph& g) {
        DenseAdj d;
        d.n = g.n;
        for (auto [u, v] : g.edges) {
            d.a[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
            d.a[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
        }
        return d;
    }
};

int pair_bits(int n) { return n * (n - 1) / 2; }

// bits of the identity labeling in placement order
std::vector<uint8_t> identity_bits(const DenseAdj& d) {
    std::vector<uint8_t> bits;
    bits.reserve(static_cast<size_t>(pair_bits(d.n)));
    for (int k = 1; k < d.n; ++k)
        for (int i = 0; i < k; ++i) bits.push_back(d.a[static_cast<size_t>(i)][static_cast<size_t>(k)]);
    return bits;
}

// Branch-and-bound over placements. Invariant: the bits of the current
// partial permutation equal best's prefix. A placement whose new bit
// segment exceeds best's segment is pruned; one that is smaller either
// aborts (canonical test) or rewrites best with an achievable completion
// and continues minimizing.
struct CanonSearch {
    const DenseAdj& d;
    std::vector<uint8_t> best;
    std::array<int, kMaxAtlasN> perm{};
    std::array<uint8_t, kMaxAtlasN> used{};
    bool canonical_mode = false;  // only detect whether something smaller exists
    bool found_smaller = false;

    explicit CanonSearch(const DenseAdj& dd) : d(dd) {}

    void place(int k, int pos) {
        if (found_smaller || k == d.n) return;
        for (int u = 0; u < d.n; ++u) {
            if (used[static_cast<size_t>(u)]) continue;
            int cmp = 0;
            std::array<uint8_t, kMaxAtlasN> seg{};
            for (int i = 0; i < k; ++i) {
                uint8_t b = d.a[static_cast<size_t>(perm[static_cast<size_t>(i)])][static_cast<size_t>(u)];
                seg[static_cast<size_t>(i)] = b;
                if (cmp == 0) {
                    uint8_t bb = best[static_cast<size_t>(pos + i)];
                    if (b > bb) {
                        cmp = 1;
                        break;
                    }
                    if (b < bb) cmp = -1;
                }
            }
            if (cmp > 0) continue;
            if (cmp < 0) {
                if (canonical_mode) {
                    found_smaller = true;
                    return;
                }
                for (int i = 0; i < k; ++i) best[static_cast<size_t>(pos + i)] = seg[static_cast<size_t>(i)];
            }
            used[static_cast<size_t>(u)] = 1;
            perm[static_cast<size_t>(k)] = u;
            if (cmp < 0) complete_from(k + 1, pos + k);
            place(k + 1, pos + k);
            used[static_cast<size_t>(u)] = 0;
            if (found_smaller) return;
        }
    }

    // rewrite best's tail with the bits of the current partial permutation
    // extended by the remaining vertices in ascending order
    void complete_from(int k, int pos) {
        std::array<int, kMaxAtlasN> tmp = perm;
        std::array<uint8_t, kMaxAtlasN> tused = used;
        int kk = k;
        for (int u = 0; u < d.n && kk < d.n; ++u) {
            if (tused[static_cast<size_t>(u)]) continue;
            tmp[static_cast<size_t>(kk)] = u;
            tused[static_cast<size_t>(u)] = 1;
            ++kk;
        }
        int q = pos;
        for (int m = k; m < d.n; ++m)
            for (int i = 0; i < m; ++i)
                best[static_cast<size_t>(q++)] =
                    d.a[static_cast<size_t>(tmp[static_cast<size_t>(i)])][static_cast<size_t>(tmp[static_cast<size_t>(m)])];
    }
};

std::vector<uint8_t> canonical_bits(const DenseAdj& d) {
    CanonSearch cs(d);
    cs.best = identity_bits(d);
    cs.place(0, 0);
    return cs.best;
}

bool is_canonical(const DenseAdj& d) {
    CanonSearch cs(d);
    cs.best = identity_bits(d);
    cs.canonical_mode = true;
    cs.place(0, 0);
    return !cs.found_smaller;
}

bool connected_mask(int n, uint32_t mask) {
    // adjacency by pair index in placement order
    std::array<uint8_t, kMaxAtlasN> seen{};
    std::array<int, kMaxAtlasN> stack{};
    std::array<std::array<uint8_t, kMaxAtlasN>, kMaxAtlasN> adj{};
    int t = 0;
    for (int k = 1; k < n; ++k)
        for (int i = 0; i < k; ++i, ++t)
            if (mask >> t & 1u) {
                adj[static_cast<size_t>(i)][static_cast<size_t>(k)] = 1;
                adj[static_cast<size_t>(k)][static_cast<size_t>(i)] = 1;
            }
    int sp = 0;
    stack[sp++] = 0;
    seen[0] = 1;
    int cnt = 1;
    while (sp > 0) {
        int u = stack[--sp];
        for (int v = 0; v < n; ++v)
            if (adj[static_cast<size_t>(u)][static_cast<size_t>(v)] && !seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = 1;
                ++cnt;
                stack[sp++] = v;
            }
    }
    return cnt == n;
}

std::string bits_to_string(const std::vector<uint8_t>& bits) {
    std::string s(bits.size(), '0');
    for (size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) s[i] = '1';
    return s;
}

}  // namespace

std::string canonical_code(const Graph& g) {
    if (g.n > kMaxAtlasN)
        throw budget_error("canonical_code: graphs above n=7 are not supported");
    return bits_to_string(canonical_bits(DenseAdj::of(g)));
}

std::vector<Graph> enumerate_connected(int n) {
    if (n < 2) throw validation_error("enumerate_connected: n must be >= 2");
    if (n > kMaxAtlasN)
        throw budget_error("enumerate_connected: n=" + std::to_string(n) + " exceeds the n<=7 guard");
    int bits = pair_bits(n);
    std::vector<std::pair<std::string, Graph>> found;
    for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
        if (static_cast<int>(std::popcount(mask)) < n - 1) continue;
        if (!connected_mask(n, mask)) continue;
        DenseAdj d;
        d.n = n;
        int t = 0;
        std::vector<std::pair<int, int>> edges;
        std::vector<uint8_t> code(static_cast<size_t>(bits), 0);
        for (int k = 1; k < n; ++k)
            for (int i = 0; i < k; ++i, ++t)
                if (mask >> t & 1u) {
                    d.a[static_cast<size_t>(i)][static_cast<size_t>(k)] = 1;
                    d.a[static_cast<size_t>(k)][static_cast<size_t>(i)] = 1;
                    edges.emplace_back(i, k);
                    code[static_cast<size_t>(t)] = 1;
                }
        if (!is_canonical(d)) continue;  // emit each class at its own code
        found.emplace_back(bits_to_string(code), from_edge_list(n, edges));
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(found.size());
    for (auto& [code, g] : found) out.push_back(std::move(g));
    return out;
}

namespace {

// Edmonds-Karp with unit capacities on a tiny residual network.
struct FlowNet {
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit FlowNet(int nodes) : arcs(static_cast<size_t>(nodes)) {}

    void add(int u, int v, int cap) {
        arcs[static_cast<size_t>(u)].push_back({v, cap, static_cast<int>(arcs[static_cast<size_t>(v)].size())});
        arcs[static_cast<size_t>(v)].push_back({u, 0, static_cast<int>(arcs[static_cast<size_t>(u)].size()) - 1});
    }

    int max_flow(int s, int t) {
        int flow = 0;
        for (;;) {
            std::vector<std::pair<int, int>> pred(arcs.size(), {-1, -1});
            std::queue<int> q;
            q.push(s);
            pred[static_cast<size_t>(s)] = {s, -1};
            while (!q.empty() && pred[static_cast<size_t>(t)].first < 0) {
                int u = q.front();
                q.pop();
                for (size_t i = 0; i < arcs[static_cast<size_t>(u)].size(); ++i) {
                    const Arc& a = arcs[static_cast<size_t>(u)][i];
                    if (a.cap > 0 && pred[static_cast<size_t>(a.to)].first < 0) {
                        pred[static_cast<size_t>(a.to)] = {u, static_cast<int>(i)};
                        q.push(a.to);
                    }
                }
            }
            if (pred[static_cast<size_t>(t)].first < 0) return flow;
            for (int v = t; v != s;) {
                auto [u, i] = pred[static_cast<size_t>(v)];
                Arc& a = arcs[static_cast<size_t>(u)][static_cast<size_t>(i)];
                --a.cap;
                ++arcs[static_cast<size_t>(a.to)][static_cast<size_t>(a.rev)].cap;
                v = u;
            }
            ++flow;
        }
    }
};

}  // namespace

int disjoint_paths(const Graph& g, int s, int t, PathMode mode) {
    if (s < 0 || s >= g.n || t < 0 || t >= g.n || s == t)
        throw validation_error("disjoint_paths: bad endpoints");
    if (mode == PathMode::edge_disjoint) {
        FlowNet net(g.n);
        for (auto [u, v] : g.edges) {
            net.add(u, v, 1);
            net.add(v, u, 1);
        }
        return net.max_flow(s, t);
    }
    // vertex splitting: v_in = 2v, v_out = 2v+1; interior vertices carry
    // capacity 1, so counted paths share no internal vertex
    FlowNet net(2 * g.n);
    for (int v = 0; v < g.n; ++v) net.add(2 * v, 2 * v + 1, (v == s || v == t) ? g.n : 1);
    for (auto [u, v] : g.edges) {
        net.add(2 * u + 1, 2 * v, 1);
        net.add(2 * v + 1, 2 * u, 1);
    }
    return net.max_flow(2 * s + 1, 2 * t);
}

std::optional<int> check_prop43(const Graph& g, PathMode mode) {
    Geometry geo = geometry(g);
    int a = min_degree_vertex(g, geo.omega);
    int k = g.degree(a);
    for (int x = 0; x < g.n; ++x) {
        if (x == a) continue;
        if (g.dist[static_cast<size_t>(x)][static_cast<size_t>(a)] !=
            geo.eccentricity[static_cast<size_t>(x)])
            continue;  // a must be among the farthest vertices from x
        if (disjoint_paths(g, a, x, mode) >= k) return k;
    }
    return std::nullopt;
}

AtlasScan scan_variation_constants(int n, double p, const SearchConfig& cfg, int jobs) {
    if (n < 2) throw validation_error("scan_variation_constants: n must be >= 2");
    if (n > 6)
        throw budget_error("scan_variation_constants: n=" + std::to_string(n) +
                           " exceeds the n<=6 guard");
    cfg.validate();
    if (!(p > 0)) throw validation_error("scan_variation_constants: p must be positive");

    std::vector<Graph> family = enumerate_connected(n);

    std::vector<AtlasRecord> records = parallel_reduce(
        family.size(), jobs,
        [&](size_t i) {
            const Graph& g = family[i];
            AtlasRecord rec;
            rec.graph = g;
            rec.canonical_code = canonical_code(g);
            double floor = 0.0;
            for (int v = 0; v < g.n; ++v) floor = std::max(floor, delta_variation_ratio(g, p, v));
            SearchResult est = ascent_variation(g, p, cfg, 1);
            if (n <= 4) {
                SearchResult oracle = grid_oracle_variation(g, p, cfg.grid_step, 1);
                if (oracle.best_value > est.best_value) est = oracle;
            }
            if (est.best_value < floor - 1e-9)
                throw internal_error("variation estimate fell below the delta floor");
            rec.variation_estimate = est;
            rec.prop43_k = check_prop43(g);
            return std::vector<AtlasRecord>{rec};
        },
        std::vector<AtlasRecord>{}, [](std::vector<AtlasRecord> acc, std::vector<AtlasRecord>&& r) {
            for (auto& x : r) acc.push_back(std::move(x));
            return acc;
        });

    AtlasScan scan;
    scan.records = std::move(records);
    bool first = true;
    for (const auto& rec : scan.records) {
        double v = rec.variation_estimate->best_value;
        if (first || v < scan.c_hat) {
            scan.c_hat = v;
            scan.argmin_code = rec.canonical_code;
        }
        if (first || v > scan.C_hat) {
            scan.C_hat = v;
            scan.argmax_code = rec.canonical_code;
        }
        first = false;
    }
    return scan;
}

}  // namespace sharpmax
