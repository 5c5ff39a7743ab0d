#include "sharpmax/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>

#include "sharpmax/errors.hpp"
#include "sharpmax/golden.hpp"
#include "sharpmax/parallel.hpp"

namespace sharpmax {

namespace {

// Admissible symmetry-reduced grid sizes. The norm oracle prunes subtrees
// against the running best, so it sustains a larger budget than the plain
// variation enumeration.
constexpr double kGridBudgetNorm = 2e10;
constexpr double kGridBudgetVariation = 1e9;

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

// "delta", "two-valued", ... from the distinct values of f.
std::string classify_structure(const VertexFunction& f) {
    std::vector<double> vals(f.begin(), f.end());
    std::sort(vals.begin(), vals.end());
    std::vector<double> uniq;
    for (double v : vals)
        if (uniq.empty() || v > uniq.back() + 1e-9) uniq.push_back(v);
    int nonzero = 0;
    for (double v : f)
        if (v > 1e-9) ++nonzero;
    if (uniq.size() <= 1) return "constant";
    if (nonzero == 1) return "delta";
    if (uniq.size() == 2) return "two-valued";
    if (uniq.size() == 3) return "three-valued";
    return std::to_string(uniq.size()) + "-valued";
}

int grid_points(double step) {
    if (!(step > 0.0) || !(step < 1.0 + 1e-15))
        throw validation_error("grid step must lie in (0,1]");
    long long m = std::llround(1.0 / step);
    if (m < 1 || std::fabs(m * step - 1.0) > 1e-12 * static_cast<double>(m))
        throw validation_error("grid step must divide 1");
    if (m > 100000) throw validation_error("grid step too fine");
    return static_cast<int>(m);
}

double multiset_count(int values, int k) {
    // number of sorted k-tuples from `values` symbols: C(values+k-1, k)
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * (values - 1 + i) / i;
    return c;
}

struct DSU {
    std::vector<int> parent;
    explicit DSU(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

// ----- shared grid-oracle machinery ------------------------------------

struct GridTables {
    const Graph* g = nullptr;
    double p = 0.0;
    double step = 0.0;
    int M = 0;
    int n = 0;
    std::vector<std::vector<int>> order;   // per v: vertices sorted by distance
    std::vector<std::vector<int>> bcount;  // per v: |B(v,r)| for r = 0..ecc(v)
    std::vector<int> ecc;
    std::vector<std::vector<double>> pow_avg;  // [den][num] = ((num*step)/den)^p
    std::vector<double> pow_val;               // [i] = (i*step)^p

    void init(const Graph& gg, double pp, double st) {
        g = &gg;
        p = pp;
        step = st;
        M = grid_points(st);
        n = gg.n;
        order.assign(static_cast<size_t>(n), {});
        bcount.assign(static_cast<size_t>(n), {});
        ecc.assign(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            const auto& d = gg.dist[static_cast<size_t>(v)];
            auto& ord = order[static_cast<size_t>(v)];
            ord.resize(static_cast<size_t>(n));
            std::iota(ord.begin(), ord.end(), 0);
            std::stable_sort(ord.begin(), ord.end(),
                             [&](int a, int b) { return d[static_cast<size_t>(a)] < d[static_cast<size_t>(b)]; });
            int e = d[static_cast<size_t>(ord.back())];
            ecc[static_cast<size_t>(v)] = e;
            auto& bc = bcount[static_cast<size_t>(v)];
            bc.assign(static_cast<size_t>(e) + 1, 0);
            for (int u = 0; u < n; ++u) ++bc[static_cast<size_t>(d[static_cast<size_t>(u)])];
            for (int r = 1; r <= e; ++r) bc[static_cast<size_t>(r)] += bc[static_cast<size_t>(r) - 1];
        }
        pow_val.resize(static_cast<size_t>(M) + 1);
        for (int i = 0; i <= M; ++i) pow_val[static_cast<size_t>(i)] = std::pow(i * step, p);
        pow_avg.assign(static_cast<size_t>(n) + 1, {});
        for (int den = 1; den <= n; ++den) {
            auto& t = pow_avg[static_cast<size_t>(den)];
            t.resize(static_cast<size_t>(den) * static_cast<size_t>(M) + 1);
            for (size_t num = 0; num < t.size(); ++num)
                t[num] = std::pow(static_cast<double>(num) * step / den, p);
        }
    }

    // Best ball-average at v as an exact fraction of grid indices.
    void best_average(const std::vector<int>& idx, int v, int& num_out, int& den_out) const {
        const auto& ord = order[static_cast<size_t>(v)];
        const auto& bc = bcount[static_cast<size_t>(v)];
        int sum = 0;
        int pos = 0;
        int bn = -1, bd = 1;
        for (int r = 0; r < static_cast<int>(bc.size()); ++r) {
            int upto = bc[static_cast<size_t>(r)];
            for (; pos < upto; ++pos) sum += idx[static_cast<size_t>(ord[static_cast<size_t>(pos)])];
            if (bn < 0 || static_cast<long long>(sum) * bd > static_cast<long long>(bn) * upto) {
                bn = sum;
                bd = upto;
            }
        }
        num_out = bn;
        den_out = bd;
    }

    double norm_num_p(const std::vector<int>& idx) const {
        double s = 0.0;
        for (int v = 0; v < n; ++v) {
            int num = 0, den = 1;
            best_average(idx, v, num, den);
            s += pow_avg[static_cast<size_t>(den)][static_cast<size_t>(num)];
        }
        return s;
    }

    double norm_den_p(const std::vector<int>& idx) const {
        double s = 0.0;
        for (int i : idx) s += pow_val[static_cast<size_t>(i)];
        return s;
    }
};

// enumeration slots: free vertices grouped by interchangeability class; each
// slot's value is bounded by the previous slot of the same run (sorted
// non-increasing within a class), which covers the grid up to automorphism.
struct SlotPlan {
    std::vector<int> vertex;      // slot -> vertex
    std::vector<int> prev_in_run; // slot -> previous slot of same class run, or -1
};

SlotPlan make_slots(const Graph& g, const std::vector<int>& classes, const std::vector<int>& pinned) {
    SlotPlan plan;
    std::vector<char> is_pinned(static_cast<size_t>(g.n), 0);
    for (int v : pinned) is_pinned[static_cast<size_t>(v)] = 1;
    int nclasses = 0;
    for (int c : classes) nclasses = std::max(nclasses, c + 1);
    for (int c = 0; c < nclasses; ++c) {
        int prev = -1;
        for (int v = 0; v < g.n; ++v) {
            if (classes[static_cast<size_t>(v)] != c || is_pinned[static_cast<size_t>(v)]) continue;
            plan.prev_in_run.push_back(prev);
            plan.vertex.push_back(v);
            prev = static_cast<int>(plan.vertex.size()) - 1;
        }
    }
    return plan;
}

double plan_count(const SlotPlan& plan, int M) {
    // product over class runs of multiset counts
    double total = 1.0;
    int run_len = 0;
    for (size_t s = 0; s < plan.vertex.size(); ++s) {
        if (plan.prev_in_run[s] < 0) {
            if (run_len > 0) total *= multiset_count(M + 1, run_len);
            run_len = 1;
        } else {
            ++run_len;
        }
    }
    if (run_len > 0) total *= multiset_count(M + 1, run_len);
    return total;
}

// count of assignments below slot `depth` given current run bounds
double remaining_count(const SlotPlan& plan, const std::vector<int>& idx, int M, size_t depth) {
    double total = 1.0;
    size_t s = depth;
    while (s < plan.vertex.size()) {
        int bound = plan.prev_in_run[s] < 0
                        ? M
                        : idx[static_cast<size_t>(plan.vertex[static_cast<size_t>(plan.prev_in_run[s])])];
        size_t run = s + 1;
        while (run < plan.vertex.size() && plan.prev_in_run[run] >= 0 &&
               static_cast<size_t>(plan.prev_in_run[run]) >= s)
            ++run;
        total *= multiset_count(bound + 1, static_cast<int>(run - s));
        s = run;
    }
    return total;
}

struct BestState {
    double ratio_p = -1.0;
    std::vector<int> idx;
    std::uint64_t evals = 0;
};

void consider(BestState& st, double ratio_p, const std::vector<int>& idx) {
    if (ratio_p > st.ratio_p) {
        st.ratio_p = ratio_p;
        st.idx = idx;
    } else if (ratio_p == st.ratio_p && !st.idx.empty() &&
               std::lexicographical_compare(idx.begin(), idx.end(), st.idx.begin(), st.idx.end())) {
        st.idx = idx;
    }
}

void merge_state(BestState& acc, BestState&& chunk) {
    acc.evals += chunk.evals;
    if (chunk.ratio_p < 0) return;
    if (chunk.idx.empty()) return;
    if (acc.ratio_p < 0 || chunk.ratio_p > acc.ratio_p) {
        acc.ratio_p = chunk.ratio_p;
        acc.idx = std::move(chunk.idx);
    } else if (chunk.ratio_p == acc.ratio_p &&
               std::lexicographical_compare(chunk.idx.begin(), chunk.idx.end(), acc.idx.begin(),
                                            acc.idx.end())) {
        acc.idx = std::move(chunk.idx);
    }
}

void atomic_max(std::atomic<double>& target, double v) {
    double cur = target.load(std::memory_order_relaxed);
    while (v > cur && !target.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
    }
}

// One affine ball-average candidate in the innermost grid coordinate.
struct AffineCand {
    int s0;
    int cnt;
};

struct NormEnumerator {
    const GridTables& T;
    const SlotPlan& plan;
    std::atomic<double>& gbest;
    std::vector<int> idx;
    BestState local;

    // innermost-slot scratch
    std::vector<int> const_num, const_den;
    std::vector<std::vector<AffineCand>> affine;

    NormEnumerator(const GridTables& t, const SlotPlan& pl, std::atomic<double>& gb)
        : T(t), plan(pl), gbest(gb) {
        idx.assign(static_cast<size_t>(T.n), 0);
        const_num.assign(static_cast<size_t>(T.n), -1);
        const_den.assign(static_cast<size_t>(T.n), 1);
        affine.assign(static_cast<size_t>(T.n), {});
    }

    double snapshot() const { return std::max(gbest.load(std::memory_order_relaxed), local.ratio_p); }

    bool prune(size_t depth) {
        // upper bound: numerator at coordinate-wise max, denominator at min
        double snap = snapshot();
        if (snap < 0) return false;
        std::vector<int> hi = idx;
        for (size_t s = depth; s < plan.vertex.size(); ++s) {
            int bound = plan.prev_in_run[s] < 0
                            ? T.M
                            : hi[static_cast<size_t>(plan.vertex[static_cast<size_t>(plan.prev_in_run[s])])];
            hi[static_cast<size_t>(plan.vertex[s])] = bound;
        }
        double bound_num = T.norm_num_p(hi);
        std::vector<int>& lo = hi;
        for (size_t s = depth; s < plan.vertex.size(); ++s) lo[static_cast<size_t>(plan.vertex[s])] = 0;
        double den_lo = T.norm_den_p(lo);
        return bound_num < snap * den_lo * (1.0 - 1e-12);
    }

    void run(size_t depth) {
        if (depth + 1 == plan.vertex.size()) {
            inner_loop(depth);
            return;
        }
        if (depth + 1 < plan.vertex.size() && prune(depth)) {
            local.evals += static_cast<std::uint64_t>(remaining_count(plan, idx, T.M, depth));
            return;
        }
        int s_bound = plan.prev_in_run[depth] < 0
                          ? T.M
                          : idx[static_cast<size_t>(plan.vertex[static_cast<size_t>(plan.prev_in_run[depth])])];
        int v = plan.vertex[depth];
        for (int val = s_bound; val >= 0; --val) {
            idx[static_cast<size_t>(v)] = val;
            run(depth + 1);
        }
        idx[static_cast<size_t>(v)] = 0;
    }

    void inner_loop(size_t depth) {
        int w = plan.vertex[depth];
        int hi = plan.prev_in_run[depth] < 0
                     ? T.M
                     : idx[static_cast<size_t>(plan.vertex[static_cast<size_t>(plan.prev_in_run[depth])])];
        idx[static_cast<size_t>(w)] = 0;

        // quick range bound before the per-i work
        {
            double snap = snapshot();
            if (snap >= 0) {
                idx[static_cast<size_t>(w)] = hi;
                double bound_num = T.norm_num_p(idx);
                idx[static_cast<size_t>(w)] = 0;
                double den_lo = T.norm_den_p(idx);
                if (bound_num < snap * den_lo * (1.0 - 1e-12)) {
                    local.evals += static_cast<std::uint64_t>(hi) + 1;
                    return;
                }
            }
        }

        double den_base = 0.0;
        for (int v = 0; v < T.n; ++v)
            if (v != w) den_base += T.pow_val[static_cast<size_t>(idx[static_cast<size_t>(v)])];

        for (int v = 0; v < T.n; ++v) {
            const auto& ord = T.order[static_cast<size_t>(v)];
            const auto& bc = T.bcount[static_cast<size_t>(v)];
            int dvw = T.g->dist[static_cast<size_t>(v)][static_cast<size_t>(w)];
            int sum = 0, pos = 0;
            int bn = -1, bd = 1;
            auto& aff = affine[static_cast<size_t>(v)];
            aff.clear();
            for (int r = 0; r < static_cast<int>(bc.size()); ++r) {
                int upto = bc[static_cast<size_t>(r)];
                for (; pos < upto; ++pos) sum += idx[static_cast<size_t>(ord[static_cast<size_t>(pos)])];
                if (r < dvw) {
                    if (bn < 0 || static_cast<long long>(sum) * bd > static_cast<long long>(bn) * upto) {
                        bn = sum;
                        bd = upto;
                    }
                } else {
                    aff.push_back({sum, upto});  // idx[w] == 0 here, so sum excludes w
                }
            }
            const_num[static_cast<size_t>(v)] = bn;
            const_den[static_cast<size_t>(v)] = bd;
        }

        double snap = snapshot();
        for (int i = 0; i <= hi; ++i) {
            double num_p = 0.0;
            for (int v = 0; v < T.n; ++v) {
                int bn = const_num[static_cast<size_t>(v)];
                int bd = const_den[static_cast<size_t>(v)];
                for (const auto& a : affine[static_cast<size_t>(v)]) {
                    int num = a.s0 + i;
                    if (bn < 0 || static_cast<long long>(num) * bd > static_cast<long long>(bn) * a.cnt) {
                        bn = num;
                        bd = a.cnt;
                    }
                }
                num_p += T.pow_avg[static_cast<size_t>(bd)][static_cast<size_t>(bn)];
            }
            double den_p = den_base + T.pow_val[static_cast<size_t>(i)];
            ++local.evals;
            if (num_p >= snap * den_p) {
                idx[static_cast<size_t>(w)] = i;
                double ratio_p = num_p / den_p;
                consider(local, ratio_p, idx);
                atomic_max(gbest, local.ratio_p);
                snap = snapshot();
            }
        }
        idx[static_cast<size_t>(w)] = 0;
    }
};

SearchResult finalize_grid(const GridTables& T, const BestState& best, Objective obj,
                           const std::string& method_note) {
    if (best.ratio_p < 0 || best.idx.empty())
        throw internal_error("grid oracle found no candidate");
    SearchResult out;
    out.objective = obj;
    out.p = T.p;
    out.evaluations = best.evals;
    out.best_value = std::pow(best.ratio_p, 1.0 / T.p);
    out.argmax.resize(static_cast<size_t>(T.n));
    for (int v = 0; v < T.n; ++v) out.argmax[static_cast<size_t>(v)] = best.idx[static_cast<size_t>(v)] * T.step;
    out.structure_note = method_note + "; " + classify_structure(out.argmax);
    return out;
}

}  // namespace

void SearchConfig::validate() const {
    grid_points(grid_step);
    if (restarts < 1) throw validation_error("restarts must be positive");
    if (max_iters < 1) throw validation_error("max_iters must be positive");
    if (!(tolerance > 0)) throw validation_error("tolerance must be positive");
}

std::string objective_name(Objective o) {
    return o == Objective::norm_ratio ? "norm_ratio" : "variation_ratio";
}

double norm_ratio(const Graph& g, const VertexFunction& f, double p) {
    double den = p_norm(f, p);
    if (!(den > 0)) throw validation_error("norm_ratio: zero function");
    return p_norm(graph_maximal(g, f).values, p) / den;
}

double variation_ratio(const Graph& g, const VertexFunction& f, double p) {
    double den = p_variation(g, f, p);
    if (!(den > 0)) throw validation_error("variation_ratio: constant function");
    return p_variation(g, graph_maximal(g, f).values, p) / den;
}

VertexFunction normalize_norm_candidate(const VertexFunction& f) {
    double mx = 0.0;
    for (double x : f) {
        if (x < 0) throw validation_error("normalize_norm_candidate: negative value");
        mx = std::max(mx, x);
    }
    if (!(mx > 0)) throw validation_error("normalize_norm_candidate: zero function");
    VertexFunction out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = f[i] / mx;
    return out;
}

VertexFunction normalize_variation_candidate(const VertexFunction& f) {
    double mn = f.empty() ? 0.0 : f[0], mx = mn;
    for (double x : f) {
        if (x < 0) throw validation_error("normalize_variation_candidate: negative value");
        mn = std::min(mn, x);
        mx = std::max(mx, x);
    }
    if (!(mx > mn)) throw validation_error("normalize_variation_candidate: constant function");
    VertexFunction out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = (f[i] - mn) / (mx - mn);
    return out;
}

std::vector<int> interchange_classes(const Graph& g) {
    std::vector<std::vector<char>> adj(static_cast<size_t>(g.n),
                                       std::vector<char>(static_cast<size_t>(g.n), 0));
    for (auto [u, v] : g.edges) {
        adj[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
        adj[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
    }
    DSU dsu(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            bool ok = true;
            for (int x = 0; x < g.n && ok; ++x) {
                if (x == u || x == v) continue;
                if (adj[static_cast<size_t>(u)][static_cast<size_t>(x)] !=
                    adj[static_cast<size_t>(v)][static_cast<size_t>(x)])
                    ok = false;
            }
            if (ok) dsu.unite(u, v);
        }
    std::vector<int> cls(static_cast<size_t>(g.n), -1);
    int next = 0;
    for (int v = 0; v < g.n; ++v) {
        int root = dsu.find(v);
        if (cls[static_cast<size_t>(root)] < 0) cls[static_cast<size_t>(root)] = next++;
        cls[static_cast<size_t>(v)] = cls[static_cast<size_t>(root)];
    }
    return cls;
}

SearchResult grid_oracle_norm(const Graph& g, double p, double step, int jobs) {
    if (!(p > 0)) throw validation_error("grid_oracle_norm: p must be positive");
    GridTables T;
    T.init(g, p, step);

    std::vector<int> classes = interchange_classes(g);
    std::vector<int> reps;
    for (int v = 0; v < g.n; ++v)
        if (std::find(classes.begin(), classes.begin() + v, classes[static_cast<size_t>(v)]) ==
            classes.begin() + v)
            reps.push_back(v);

    std::vector<SlotPlan> plans;
    double total = 0.0;
    for (int rep : reps) {
        plans.push_back(make_slots(g, classes, {rep}));
        total += plan_count(plans.back(), T.M);
    }
    if (total > kGridBudgetNorm)
        throw budget_error("grid_oracle_norm: " + fmt(total) + " grid evaluations exceed the budget");

    std::atomic<double> gbest{-1.0};
    // warm start with the delta at each pinned representative
    for (int rep : reps) {
        std::vector<int> idx(static_cast<size_t>(g.n), 0);
        idx[static_cast<size_t>(rep)] = T.M;
        atomic_max(gbest, T.norm_num_p(idx) / T.norm_den_p(idx));
    }

    struct Chunk {
        size_t rep;
        int first_val;  // -1 when the plan has no free slot
    };
    std::vector<Chunk> chunks;
    for (size_t r = 0; r < plans.size(); ++r) {
        if (plans[r].vertex.empty()) {
            chunks.push_back({r, -1});
        } else {
            for (int v0 = T.M; v0 >= 0; --v0) chunks.push_back({r, v0});
        }
    }

    BestState best = parallel_reduce(
        chunks.size(), jobs,
        [&](size_t ci) {
            const Chunk& ch = chunks[ci];
            const SlotPlan& plan = plans[ch.rep];
            NormEnumerator en(T, plan, gbest);
            en.idx[static_cast<size_t>(reps[ch.rep])] = T.M;
            if (ch.first_val < 0) {
                double num = T.norm_num_p(en.idx), den = T.norm_den_p(en.idx);
                ++en.local.evals;
                consider(en.local, num / den, en.idx);
            } else if (plan.vertex.size() == 1) {
                en.idx[static_cast<size_t>(plan.vertex[0])] = ch.first_val;
                double num = T.norm_num_p(en.idx), den = T.norm_den_p(en.idx);
                ++en.local.evals;
                consider(en.local, num / den, en.idx);
                atomic_max(gbest, en.local.ratio_p);
            } else {
                en.idx[static_cast<size_t>(plan.vertex[0])] = ch.first_val;
                en.run(1);
            }
            return std::move(en.local);
        },
        BestState{}, [](BestState acc, BestState&& c) {
            merge_state(acc, std::move(c));
            return acc;
        });

    SearchResult out = finalize_grid(T, best, Objective::norm_ratio, "grid step=" + fmt(step));
    return out;
}

namespace {

struct VariationEnumerator {
    const GridTables& T;
    const SlotPlan& plan;
    long long L;                    // lcm(1..n)
    std::vector<double> pow_diff;   // [k] = (k*step/L)^p
    std::vector<double> pow_step;   // [k] = (k*step)^p
    std::vector<int> idx;
    std::vector<long long> scaled;  // maximal values scaled to denominator L
    BestState local;

    VariationEnumerator(const GridTables& t, const SlotPlan& pl) : T(t), plan(pl) {
        L = 1;
        for (int d = 2; d <= T.n; ++d) L = std::lcm(L, static_cast<long long>(d));
        pow_diff.resize(static_cast<size_t>(L) * static_cast<size_t>(T.M) + 1);
        for (size_t k = 0; k < pow_diff.size(); ++k)
            pow_diff[k] = std::pow(static_cast<double>(k) * T.step / static_cast<double>(L), T.p);
        pow_step.resize(static_cast<size_t>(T.M) + 1);
        for (int k = 0; k <= T.M; ++k) pow_step[static_cast<size_t>(k)] = std::pow(k * T.step, T.p);
        idx.assign(static_cast<size_t>(T.n), 0);
        scaled.assign(static_cast<size_t>(T.n), 0);
    }

    void evaluate() {
        for (int v = 0; v < T.n; ++v) {
            int num = 0, den = 1;
            T.best_average(idx, v, num, den);
            scaled[static_cast<size_t>(v)] = static_cast<long long>(num) * (L / den);
        }
        double num_p = 0.0, den_p = 0.0;
        for (auto [u, v] : T.g->edges) {
            num_p += pow_diff[static_cast<size_t>(
                std::llabs(scaled[static_cast<size_t>(u)] - scaled[static_cast<size_t>(v)]))];
            den_p += pow_step[static_cast<size_t>(
                std::abs(idx[static_cast<size_t>(u)] - idx[static_cast<size_t>(v)]))];
        }
        ++local.evals;
        consider(local, num_p / den_p, idx);
    }

    void run(size_t depth) {
        if (depth == plan.vertex.size()) {
            evaluate();
            return;
        }
        int bound = plan.prev_in_run[depth] < 0
                        ? T.M
                        : idx[static_cast<size_t>(plan.vertex[static_cast<size_t>(plan.prev_in_run[depth])])];
        int v = plan.vertex[depth];
        for (int val = bound; val >= 0; --val) {
            idx[static_cast<size_t>(v)] = val;
            run(depth + 1);
        }
        idx[static_cast<size_t>(v)] = 0;
    }
};

}  // namespace

SearchResult grid_oracle_variation(const Graph& g, double p, double step, int jobs) {
    if (!(p > 0)) throw validation_error("grid_oracle_variation: p must be positive");
    if (g.n < 2) throw validation_error("grid_oracle_variation: need at least two vertices");
    GridTables T;
    T.init(g, p, step);

    std::vector<int> classes = interchange_classes(g);
    int nclasses = 1 + *std::max_element(classes.begin(), classes.end());
    std::vector<std::vector<int>> members(static_cast<size_t>(nclasses));
    for (int v = 0; v < g.n; ++v) members[static_cast<size_t>(classes[static_cast<size_t>(v)])].push_back(v);

    // pinned (one, zero) vertex pairs up to interchangeability
    std::vector<std::pair<int, int>> pins;
    for (int a = 0; a < nclasses; ++a)
        for (int b = 0; b < nclasses; ++b) {
            if (a == b) {
                if (members[static_cast<size_t>(a)].size() >= 2)
                    pins.emplace_back(members[static_cast<size_t>(a)][0], members[static_cast<size_t>(a)][1]);
            } else {
                pins.emplace_back(members[static_cast<size_t>(a)][0], members[static_cast<size_t>(b)][0]);
            }
        }

    std::vector<SlotPlan> plans;
    double total = 0.0;
    for (auto [one, zero] : pins) {
        plans.push_back(make_slots(g, classes, {one, zero}));
        total += plan_count(plans.back(), T.M);
    }
    if (total > kGridBudgetVariation)
        throw budget_error("grid_oracle_variation: " + fmt(total) +
                           " grid evaluations exceed the budget");

    BestState best = parallel_reduce(
        pins.size(), jobs,
        [&](size_t pi) {
            VariationEnumerator en(T, plans[pi]);
            en.idx[static_cast<size_t>(pins[pi].first)] = T.M;
            en.idx[static_cast<size_t>(pins[pi].second)] = 0;
            en.run(0);
            return std::move(en.local);
        },
        BestState{}, [](BestState acc, BestState&& c) {
            merge_state(acc, std::move(c));
            return acc;
        });

    return finalize_grid(T, best, Objective::variation_ratio, "grid step=" + fmt(step));
}

// ----- coordinate ascent ------------------------------------------------

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct AscentOutcome {
    double value = -1.0;
    VertexFunction argmax;
    std::uint64_t evals = 0;
};

template <class Obj, class Normalize>
AscentOutcome ascend_from(VertexFunction f, const SearchConfig& cfg, Obj&& obj,
                          Normalize&& normalize) {
    std::uint64_t evals = 0;
    auto safe_obj = [&](const VertexFunction& h) {
        ++evals;
        return obj(h);
    };
    f = normalize(f);
    double best = safe_obj(f);
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        double before = best;
        for (size_t i = 0; i < f.size(); ++i) {
            VertexFunction trial = f;
            auto line = [&](double t) {
                trial[i] = t;
                double mn = *std::min_element(trial.begin(), trial.end());
                double mx = *std::max_element(trial.begin(), trial.end());
                if (!(mx > 0) || !(mx > mn) ) {
                    // degenerate points are worth nothing to either objective
                    ++evals;
                    return -1.0;
                }
                return safe_obj(trial);
            };
            auto [t_best, f_best] = golden_max(line, 0.0, 1.0, cfg.tolerance, 32);
            if (f_best > best) {
                best = f_best;
                f[i] = t_best;
            }
        }
        f = normalize(f);
        best = safe_obj(f);
        if (best - before < cfg.tolerance) break;
    }
    return {best, f, evals};
}

template <class Obj, class Normalize>
SearchResult ascent_core(const Graph& g, double p, const SearchConfig& cfg, int jobs, Objective kind,
                         Obj&& obj, Normalize&& normalize) {
    cfg.validate();
    if (!(p > 0)) throw validation_error("ascent: p must be positive");

    // starts: deltas at every vertex, then seeded random points
    std::vector<VertexFunction> starts;
    for (int v = 0; v < g.n; ++v) {
        VertexFunction d(static_cast<size_t>(g.n), 0.0);
        d[static_cast<size_t>(v)] = 1.0;
        starts.push_back(std::move(d));
    }
    for (int r = 0; r < cfg.restarts; ++r) {
        std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(r) * 0x9e3779b97f4a7c15ULL);
        VertexFunction f(static_cast<size_t>(g.n));
        for (auto& x : f) x = uniform01(rng);
        double mn = *std::min_element(f.begin(), f.end());
        double mx = *std::max_element(f.begin(), f.end());
        if (!(mx > mn)) {
            f[0] = 0.0;
            f[f.size() - 1] = 1.0;
        }
        starts.push_back(std::move(f));
    }

    AscentOutcome best = parallel_reduce(
        starts.size(), jobs,
        [&](size_t si) { return ascend_from(starts[si], cfg, obj, normalize); }, AscentOutcome{},
        [](AscentOutcome acc, AscentOutcome&& c) {
            acc.evals += c.evals;
            if (c.value > acc.value ||
                (c.value == acc.value &&
                 std::lexicographical_compare(c.argmax.begin(), c.argmax.end(), acc.argmax.begin(),
                                              acc.argmax.end()))) {
                acc.value = c.value;
                acc.argmax = std::move(c.argmax);
            }
            return acc;
        });

    SearchResult out;
    out.best_value = best.value;
    out.argmax = best.argmax;
    out.objective = kind;
    out.p = p;
    out.evaluations = best.evals;
    out.structure_note = "ascent restarts=" + std::to_string(cfg.restarts) + "; " +
                         classify_structure(best.argmax);
    return out;
}

}  // namespace

SearchResult ascent_norm(const Graph& g, double p, const SearchConfig& cfg, int jobs) {
    return ascent_core(
        g, p, cfg, jobs, Objective::norm_ratio,
        [&](const VertexFunction& f) { return norm_ratio(g, f, p); },
        [](const VertexFunction& f) { return normalize_norm_candidate(f); });
}

SearchResult ascent_variation(const Graph& g, double p, const SearchConfig& cfg, int jobs) {
    return ascent_core(
        g, p, cfg, jobs, Objective::variation_ratio,
        [&](const VertexFunction& f) {
            double den = p_variation(g, f, p);
            if (!(den > 0)) return -1.0;
            return p_variation(g, graph_maximal(g, f).values, p) / den;
        },
        [](const VertexFunction& f) { return normalize_variation_candidate(f); });
}

// ----- structured families ----------------------------------------------

StarFormula star_norm_formula(int n, double p) {
    if (n < 3) throw validation_error("star_norm_formula: n must be >= 3");
    if (!(p > 0)) throw validation_error("star_norm_formula: p must be positive");
    auto phi = [&](double x) {
        return (1.0 + (n - 1) * std::pow((x + 1.0) / 2.0, p)) / (1.0 + (n - 1) * std::pow(x, p));
    };
    auto [x_star, value_p] = golden_max(phi, 0.0, 1.0 - 1e-12, 1e-12, 1000);
    StarFormula out;
    out.value = std::pow(value_p, 1.0 / p);
    out.x_star = x_star;
    out.heuristic = !(p > 1.0 && p <= 2.0);
    return out;
}

SearchResult star_norm_structured(int n, double p) {
    if (n < 3) throw validation_error("star_norm_structured: n must be >= 3");
    if (!(p >= 1.0)) throw validation_error("star_norm_structured: p must be >= 1");
    Graph g = build_named(Family::star, n);
    std::uint64_t evals = 0;

    auto make = [&](int s, double x, double y) {
        VertexFunction f(static_cast<size_t>(n), y);
        f[0] = 1.0;
        for (int i = 0; i < s; ++i) f[static_cast<size_t>(1 + i)] = x;
        return f;
    };
    auto obj = [&](int s, double x, double y) {
        ++evals;
        VertexFunction f = make(s, x, y);
        double den = p_norm(f, p);
        return p_norm(graph_maximal(g, f).values, p) / den;
    };

    double best = -1.0;
    int best_s = 0;
    double best_x = 0.0, best_y = 0.0;
    bool best_diag = false;

    for (int s = 0; s <= n - 1; ++s) {
        // start from the best 41x41 cell of the x<=y triangle
        double cb = -1.0, cx = 0.0, cy = 0.0;
        for (int iy = 0; iy <= 40; ++iy)
            for (int ix = 0; ix <= iy; ++ix) {
                double x = ix / 40.0, y = iy / 40.0;
                double v = obj(s, x, y);
                if (v > cb) {
                    cb = v;
                    cx = x;
                    cy = y;
                }
            }
        for (int round = 0; round < 60; ++round) {
            double prev = cb;
            auto fy = [&](double y) { return obj(s, std::min(cx, y), y); };
            auto [y1, vy] = golden_max(fy, 0.0, 1.0, 1e-13, 64);
            if (vy > cb) {
                cb = vy;
                cy = y1;
                cx = std::min(cx, y1);
            }
            auto fx = [&](double x) { return obj(s, x, cy); };
            auto [x1, vx] = golden_max(fx, 0.0, cy, 1e-13, 64);
            if (vx > cb) {
                cb = vx;
                cx = x1;
            }
            if (cb - prev < 1e-14) break;
        }
        // the single-leaf-value diagonal; preferred on ties
        auto fd = [&](double t) { return obj(s, t, t); };
        auto [td, vd] = golden_max(fd, 0.0, 1.0, 1e-13, 1000);
        if (vd >= cb - 1e-12) {
            cb = vd;
            cx = cy = td;
        }
        if (cb > best) {
            best = cb;
            best_s = s;
            best_x = cx;
            best_y = cy;
            best_diag = (cx == cy);
        }
    }

    SearchResult out;
    out.best_value = best;
    out.argmax = make(best_s, best_x, best_y);
    out.objective = Objective::norm_ratio;
    out.p = p;
    out.evaluations = evals;
    std::ostringstream note;
    note << "star-structured s=" << best_s << " x=" << fmt(best_x) << " y=" << fmt(best_y);
    if (best_diag) note << " (x=y)";
    out.structure_note = note.str();
    return out;
}

SearchResult complete_norm_structured(int n, double p) {
    if (n < 2) throw validation_error("complete_norm_structured: n must be >= 2");
    if (!(p >= 1.0 + 1e-9)) throw validation_error("complete_norm_structured: p must exceed 1");
    Graph g = build_named(Family::complete, n);
    std::uint64_t evals = 0;

    auto make = [&](int k, double x) {
        VertexFunction f(static_cast<size_t>(n), x);
        for (int i = 0; i < k; ++i) f[static_cast<size_t>(i)] = 1.0;
        return f;
    };

    double best = -1.0;
    int best_k = 1;
    double best_x = 0.0;
    for (int k = 1; k <= n - 1; ++k) {
        auto fx = [&](double x) {
            ++evals;
            VertexFunction f = make(k, x);
            return p_norm(graph_maximal(g, f).values, p) / p_norm(f, p);
        };
        auto [x1, v1] = golden_max(fx, 0.0, 1.0, 1e-13, 1000);
        if (v1 > best) {
            best = v1;
            best_k = k;
            best_x = x1;
        }
    }

    SearchResult out;
    out.best_value = best;
    out.argmax = make(best_k, best_x);
    out.objective = Objective::norm_ratio;
    out.p = p;
    out.evaluations = evals;
    out.structure_note =
        "complete-structured k=" + std::to_string(best_k) + " x=" + fmt(best_x) + "; two-valued";
    return out;
}

}  // namespace sharpmax
