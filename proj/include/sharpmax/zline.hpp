#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "sharpmax/search.hpp"

namespace sharpmax {

// Finitely supported real function on Z: a contiguous window of values with
// zero outside. Stored trimmed (first and last values nonzero).
struct LatticeFunction {
    long long offset = 0;
    std::vector<double> values;

    static LatticeFunction from(long long offset, std::vector<double> vals);

    bool is_zero() const { return values.empty(); }
    long long lo() const;  // first support point
    long long hi() const;  // last support point
    double at(long long n) const;
    double abs_mass() const;  // sum of |f|
};

LatticeFunction lattice_delta(long long pos = 0);
LatticeFunction lattice_indicator(long long lo, long long len);
LatticeFunction lattice_tent(long long k);  // n -> max(k - |n|, 0)

// Exact centered maximal function M f(n) = sup_r avg of |f| over
// [n-r, n+r]; radii beyond the far support endpoint only dilute.
std::vector<double> centered_maximal_z(const LatticeFunction& f, long long lo, long long hi);

// Exact uncentered maximal function over all windows [n-s, n+r].
std::vector<double> uncentered_maximal_z(const LatticeFunction& f, long long lo, long long hi);

struct TailBound {
    double value = 0.0;
    double error = 0.0;       // rigorous bound on |value - true|
    long long terms_used = 0;
};

// Partial sums of t_k = 2^p / ((2k+1)(2k+3))^p with two-sided
// integral-comparison bounds for the tail. Valid for p > 1/2.
class CpSeries {
  public:
    explicit CpSeries(double p);

    double p() const { return p_; }

    // rigorous bracket for sum_{k>=from} t_k with width <= 2*tol
    std::pair<double, double> sum_from(long long from, double tol);

    long long terms_used() const { return static_cast<long long>(prefix_.size()) - 1; }

  private:
    void extend(long long upto);
    std::pair<double, double> tail_bracket(long long k) const;

    double p_;
    long double acc_ = 0.0L;
    std::vector<double> prefix_;  // prefix_[i] = sum_{k<i} t_k
};

// C_p = (2 sum t_k)^{1/p} for p in (1/2, 1], with error <= tol.
TailBound cp_constant(double p, double tol);

// Var_p(M f) for finitely supported f: exact head where window optima are
// still changing, closed-form tails once the full-support window wins.
TailBound maximal_variation(const LatticeFunction& f, double p, double tol);
TailBound maximal_variation(const LatticeFunction& f, double p, double tol, CpSeries& series,
                            long long head_extension = 0);

// First lattice points beyond which the full-support window is optimal for
// M f on the left/right; derived from the finitely many crossover
// inequalities among partial-mass windows.
std::pair<long long, long long> full_window_range(const LatticeFunction& f);

// Var_p of f itself (finite sum, exact).
double variation_exact(const LatticeFunction& f, double p);

double lattice_p_norm(const LatticeFunction& f, double p);

// sup |f(n+1) - f(n)|.
double sup_abs_diff(const LatticeFunction& f);

struct BoundReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    double lhs_error = 0.0;
    double rhs_error = 0.0;
};

// Var_p(Mf) against C_p ||f||_p; raises an internal error if the bound is
// violated beyond the combined error.
BoundReport check_var_norm_bound(const LatticeFunction& f, double p, double tol);

// sup |(M~f)'| against (1/2) sup |f'|, both exact.
BoundReport check_lipschitz_half(const LatticeFunction& f);

// Centered analogue with constant 1.
BoundReport check_lipschitz_centered(const LatticeFunction& f);

struct ConjectureScanResult {
    double max_ratio = 0.0;
    LatticeFunction argmax;
    double conjectured_constant = 0.0;
    bool violation = false;
    std::uint64_t candidates = 0;
};

// Probes Var_p(Mf) <= (sum t_k)^{1/p} Var_p(f) on deltas, indicators,
// tents and seeded random functions. Reports the maximum observed ratio;
// never claims a proof.
ConjectureScanResult conjecture_scan(double p, const SearchConfig& sampler);

}  // namespace sharpmax
