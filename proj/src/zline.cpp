#include "sharpmax/zline.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sharpmax/errors.hpp"

namespace sharpmax {

LatticeFunction LatticeFunction::from(long long offset, std::vector<double> vals) {
    for (double v : vals)
        if (!std::isfinite(v)) throw validation_error("lattice function: non-finite value");
    size_t first = 0;
    while (first < vals.size() && vals[first] == 0.0) ++first;
    size_t last = vals.size();
    while (last > first && vals[last - 1] == 0.0) --last;
    LatticeFunction f;
    f.offset = offset + static_cast<long long>(first);
    f.values.assign(vals.begin() + static_cast<std::ptrdiff_t>(first),
                    vals.begin() + static_cast<std::ptrdiff_t>(last));
    return f;
}

long long LatticeFunction::lo() const {
    if (is_zero()) throw validation_error("lattice function: empty support");
    return offset;
}

long long LatticeFunction::hi() const {
    if (is_zero()) throw validation_error("lattice function: empty support");
    return offset + static_cast<long long>(values.size()) - 1;
}

double LatticeFunction::at(long long n) const {
    if (n < offset || n >= offset + static_cast<long long>(values.size())) return 0.0;
    return values[static_cast<size_t>(n - offset)];
}

double LatticeFunction::abs_mass() const {
    double s = 0.0;
    for (double v : values) s += std::fabs(v);
    return s;
}

LatticeFunction lattice_delta(long long pos) { return LatticeFunction::from(pos, {1.0}); }

LatticeFunction lattice_indicator(long long lo, long long len) {
    if (len < 1) throw validation_error("lattice_indicator: length must be positive");
    return LatticeFunction::from(lo, std::vector<double>(static_cast<size_t>(len), 1.0));
}

LatticeFunction lattice_tent(long long k) {
    if (k < 1) throw validation_error("lattice_tent: height must be positive");
    std::vector<double> v;
    for (long long n = -k + 1; n <= k - 1; ++n) v.push_back(static_cast<double>(k - std::llabs(n)));
    return LatticeFunction::from(-k + 1, std::move(v));
}

namespace {

// prefix sums of |f| over the support window
struct Mass {
    long long a = 0, b = 0;
    double total = 0.0;
    std::vector<double> prefix;  // prefix[i] = sum |f| over [a, a+i-1]

    explicit Mass(const LatticeFunction& f) {
        if (f.is_zero()) throw validation_error("empty support");
        a = f.lo();
        b = f.hi();
        prefix.assign(f.values.size() + 1, 0.0);
        for (size_t i = 0; i < f.values.size(); ++i)
            prefix[i + 1] = prefix[i] + std::fabs(f.values[i]);
        total = prefix.back();
    }

    // sum of |f| over [l, r]
    double window(long long l, long long r) const {
        l = std::max(l, a);
        r = std::min(r, b);
        if (l > r) return 0.0;
        return prefix[static_cast<size_t>(r - a + 1)] - prefix[static_cast<size_t>(l - a)];
    }

    // mass from c to the right end
    double from_right(long long c) const { return window(c, b); }
    // mass from the left end up to d
    double from_left(long long d) const { return window(a, d); }
};

}  // namespace

std::vector<double> centered_maximal_z(const LatticeFunction& f, long long lo, long long hi) {
    Mass m(f);
    if (lo > hi) throw validation_error("centered_maximal_z: empty window");
    std::vector<double> out;
    out.reserve(static_cast<size_t>(hi - lo + 1));
    for (long long n = lo; n <= hi; ++n) {
        long long rmax = std::max({n - m.a, m.b - n, 0LL});
        double best = 0.0;
        for (long long r = 0; r <= rmax; ++r) {
            double avg = m.window(n - r, n + r) / static_cast<double>(2 * r + 1);
            if (avg > best) best = avg;
        }
        out.push_back(best);
    }
    return out;
}

std::vector<double> uncentered_maximal_z(const LatticeFunction& f, long long lo, long long hi) {
    Mass m(f);
    if (lo > hi) throw validation_error("uncentered_maximal_z: empty window");
    std::vector<double> out;
    out.reserve(static_cast<size_t>(hi - lo + 1));
    for (long long n = lo; n <= hi; ++n) {
        long long smax = std::max(n - m.a, 0LL);
        long long rmax = std::max(m.b - n, 0LL);
        double best = 0.0;
        for (long long s = 0; s <= smax; ++s)
            for (long long r = 0; r <= rmax; ++r) {
                double avg = m.window(n - s, n + r) / static_cast<double>(r + s + 1);
                if (avg > best) best = avg;
            }
        out.push_back(best);
    }
    return out;
}

// ----- the sharp series -------------------------------------------------

CpSeries::CpSeries(double p) : p_(p) {
    if (!(p > 0.5))
        throw validation_error("series diverges: terms are of order k^(-2p) with p <= 1/2");
    prefix_.push_back(0.0);
}

void CpSeries::extend(long long upto) {
    long long k = terms_used();
    while (k < upto) {
        long double term = std::pow(2.0L, static_cast<long double>(p_)) /
                           std::pow(static_cast<long double>(2 * k + 1) * (2 * k + 3),
                                    static_cast<long double>(p_));
        acc_ += term;
        prefix_.push_back(static_cast<double>(acc_));
        ++k;
    }
}

std::pair<double, double> CpSeries::tail_bracket(long long k) const {
    // t_j is decreasing and convex; bound sum_{j>=k} t_j between
    // int_k (2x+3)^{-2p} and int_{k-1/2} (2x+1)^{-2p}, both closed forms.
    double c = std::pow(2.0, p_) / (2.0 * (2.0 * p_ - 1.0));
    double lo = c * std::pow(2.0 * static_cast<double>(k) + 3.0, 1.0 - 2.0 * p_);
    double hi = c * std::pow(2.0 * static_cast<double>(k), 1.0 - 2.0 * p_);
    return {lo, hi};
}

std::pair<double, double> CpSeries::sum_from(long long from, double tol) {
    if (from < 0) throw validation_error("sum_from: negative start");
    if (!(tol > 0)) throw validation_error("sum_from: tolerance must be positive");
    long long k = std::max(from + 64, static_cast<long long>(64));
    for (;;) {
        if (k > (1LL << 27))
            throw budget_error("series tolerance unreachable within the term budget (p too "
                               "close to 1/2 or tol too small)");
        extend(k);
        auto [lo, hi] = tail_bracket(k);
        if (hi - lo <= 2 * tol) {
            double head = prefix_[static_cast<size_t>(k)] - prefix_[static_cast<size_t>(from)];
            return {head + lo, head + hi};
        }
        k *= 2;
    }
}

TailBound cp_constant(double p, double tol) {
    if (!(p > 0.5))
        throw validation_error("cp_constant: series diverges for p <= 1/2");
    if (p > 1.0) throw validation_error("cp_constant: outside the theorem range p <= 1");
    if (!(tol > 0)) throw validation_error("cp_constant: tolerance must be positive");
    CpSeries series(p);
    double inner_tol = tol / 4.0;
    for (int rounds = 0; rounds < 60; ++rounds) {
        auto [lo, hi] = series.sum_from(0, inner_tol);
        double clo = std::pow(2.0 * lo, 1.0 / p);
        double chi = std::pow(2.0 * hi, 1.0 / p);
        double err = (chi - clo) / 2.0;
        if (err <= tol * 0.9) {
            TailBound out;
            out.value = 0.5 * (clo + chi);
            out.error = err;
            out.terms_used = series.terms_used();
            return out;
        }
        inner_tol /= 4.0;
    }
    throw internal_error("cp_constant failed to reach the requested tolerance");
}

// ----- variation of the maximal function --------------------------------

namespace {

// First n >= b at which the full-support window is optimal on the right:
// compare W(c)/(2(n-c)+1) against W(a)/(2(n-a)+1) for every cut c.
long long right_crossover(const Mass& m) {
    long long n_star = m.b;
    double wa = m.total;
    for (long long c = m.a + 1; c <= m.b; ++c) {
        double wc = m.from_right(c);
        if (!(wc < wa)) continue;  // trimmed support makes W strictly drop at a+1
        double eta = ((2.0 * static_cast<double>(m.a) - 1.0) * wc -
                      (2.0 * static_cast<double>(c) - 1.0) * wa) /
                     (2.0 * (wc - wa));
        long long need = static_cast<long long>(std::ceil(eta));
        n_star = std::max(n_star, need);
    }
    return n_star + 2;  // slack absorbs rounding in eta
}

LatticeFunction mirrored(const LatticeFunction& f) {
    std::vector<double> rev(f.values.rbegin(), f.values.rend());
    return LatticeFunction::from(-f.hi(), std::move(rev));
}

}  // namespace

std::pair<long long, long long> full_window_range(const LatticeFunction& f) {
    Mass m(f);
    long long nr = right_crossover(m);
    long long nl = -right_crossover(Mass(mirrored(f)));
    return {nl, nr};
}

TailBound maximal_variation(const LatticeFunction& f, double p, double tol, CpSeries& series,
                            long long head_extension) {
    if (f.is_zero()) throw validation_error("maximal_variation: empty support");
    if (!(p > 0.5))
        throw validation_error("maximal_variation: variation series diverges for p <= 1/2");
    if (series.p() != p) throw validation_error("maximal_variation: series built for different p");
    if (!(tol > 0)) throw validation_error("maximal_variation: tolerance must be positive");

    auto [nl, nr] = full_window_range(f);
    nl -= head_extension;
    nr += head_extension;
    Mass m(f);
    double fp = std::pow(m.total, p);

    // exact head: differences at n in [nl, nr-1]
    std::vector<double> head_vals = centered_maximal_z(f, nl, nr);
    long double head = 0.0L;
    for (size_t i = 0; i + 1 < head_vals.size(); ++i)
        head += std::pow(std::fabs(head_vals[i] - head_vals[i + 1]), static_cast<double>(p));

    // analytic tails: right differences at n >= nr are F * t_{n-a},
    // left differences at n <= nl-1 are F * t_{b-n-1}
    long long jr = nr - m.a;
    long long jl = m.b - nl;

    double series_tol = tol / (4.0 * std::max(fp, 1.0));
    for (int rounds = 0; rounds < 60; ++rounds) {
        auto [rlo, rhi] = series.sum_from(jr, series_tol);
        auto [llo, lhi] = series.sum_from(jl, series_tol);
        double total_lo = static_cast<double>(head) + fp * (rlo + llo);
        double total_hi = static_cast<double>(head) + fp * (rhi + lhi);
        double vlo = std::pow(total_lo, 1.0 / p);
        double vhi = std::pow(total_hi, 1.0 / p);
        double err = (vhi - vlo) / 2.0;
        if (err <= tol * 0.9) {
            TailBound out;
            out.value = 0.5 * (vlo + vhi);
            out.error = err;
            out.terms_used = static_cast<long long>(head_vals.size()) + series.terms_used();
            return out;
        }
        series_tol /= 4.0;
    }
    throw internal_error("maximal_variation failed to reach the requested tolerance");
}

TailBound maximal_variation(const LatticeFunction& f, double p, double tol) {
    CpSeries series(p);
    return maximal_variation(f, p, tol, series, 0);
}

double variation_exact(const LatticeFunction& f, double p) {
    if (!(p > 0)) throw validation_error("variation_exact: p must be positive");
    if (f.is_zero()) return 0.0;
    long double s = 0.0L;
    for (long long n = f.lo() - 1; n <= f.hi(); ++n)
        s += std::pow(std::fabs(f.at(n + 1) - f.at(n)), static_cast<double>(p));
    return static_cast<double>(std::pow(s, 1.0L / static_cast<long double>(p)));
}

double lattice_p_norm(const LatticeFunction& f, double p) {
    if (!(p > 0)) throw validation_error("lattice_p_norm: p must be positive");
    long double s = 0.0L;
    for (double v : f.values) s += std::pow(std::fabs(v), static_cast<double>(p));
    return static_cast<double>(std::pow(s, 1.0L / static_cast<long double>(p)));
}

double sup_abs_diff(const LatticeFunction& f) {
    if (f.is_zero()) return 0.0;
    double best = 0.0;
    for (long long n = f.lo() - 1; n <= f.hi(); ++n)
        best = std::max(best, std::fabs(f.at(n + 1) - f.at(n)));
    return best;
}

BoundReport check_var_norm_bound(const LatticeFunction& f, double p, double tol) {
    if (f.is_zero()) throw validation_error("check_var_norm_bound: zero function");
    TailBound lhs = maximal_variation(f, p, tol / 2);
    TailBound cp = cp_constant(p, tol / 2);
    double norm = lattice_p_norm(f, p);
    BoundReport rep;
    rep.lhs = lhs.value;
    rep.lhs_error = lhs.error;
    rep.rhs = cp.value * norm;
    rep.rhs_error = cp.error * norm;
    rep.ratio = rep.lhs / rep.rhs;
    if (rep.lhs > rep.rhs + rep.lhs_error + rep.rhs_error + 1e-12)
        throw internal_error("variation-norm bound violated beyond the error budget");
    return rep;
}

namespace {

// exact sup of |g(n+1)-g(n)| for g = (un)centered maximal of f, using that
// beyond the support g is monotone with an explicit hyperbolic envelope
template <class MaxFn, class EnvelopeFn>
double exact_sup_diff(const LatticeFunction& f, MaxFn&& maximal, EnvelopeFn&& envelope) {
    long long a = f.lo(), b = f.hi();
    long long len = b - a + 1;
    long long margin = len + 4;
    double cur = 0.0;
    for (int attempts = 0; attempts < 64; ++attempts) {
        long long lo = a - margin, hi = b + margin;
        std::vector<double> vals = maximal(f, lo, hi);
        cur = 0.0;
        for (size_t i = 0; i + 1 < vals.size(); ++i)
            cur = std::max(cur, std::fabs(vals[i] - vals[i + 1]));
        // outside [lo, hi] every difference is dominated by the envelope
        if (envelope(margin) <= cur) return cur;
        margin *= 2;
    }
    throw internal_error("exact_sup_diff: window did not stabilize");
}

}  // namespace

BoundReport check_lipschitz_half(const LatticeFunction& f) {
    if (f.is_zero()) throw validation_error("check_lipschitz_half: zero function");
    double mass = f.abs_mass();
    double lhs = exact_sup_diff(
        f, [](const LatticeFunction& g, long long lo, long long hi) { return uncentered_maximal_z(g, lo, hi); },
        [&](long long margin) { return mass / static_cast<double>(margin); });
    BoundReport rep;
    rep.lhs = lhs;
    rep.rhs = 0.5 * sup_abs_diff(f);
    rep.ratio = rep.lhs / rep.rhs;
    return rep;
}

BoundReport check_lipschitz_centered(const LatticeFunction& f) {
    if (f.is_zero()) throw validation_error("check_lipschitz_centered: zero function");
    double mass = f.abs_mass();
    double lhs = exact_sup_diff(
        f, [](const LatticeFunction& g, long long lo, long long hi) { return centered_maximal_z(g, lo, hi); },
        [&](long long margin) { return mass / static_cast<double>(2 * margin + 1); });
    BoundReport rep;
    rep.lhs = lhs;
    rep.rhs = sup_abs_diff(f);
    rep.ratio = rep.lhs / rep.rhs;
    return rep;
}

ConjectureScanResult conjecture_scan(double p, const SearchConfig& sampler) {
    if (!(p > 0.5) || p > 1.0)
        throw validation_error("conjecture_scan: p must lie in (1/2, 1]");
    sampler.validate();

    CpSeries series(p);
    auto [clo, chi] = series.sum_from(0, 1e-11);
    double constant = std::pow(0.5 * (clo + chi), 1.0 / p);

    std::vector<LatticeFunction> candidates;
    candidates.push_back(lattice_delta(0));
    for (long long len = 2; len <= 8; ++len) candidates.push_back(lattice_indicator(0, len));
    for (long long k = 2; k <= 10; ++k) candidates.push_back(lattice_tent(k));
    for (int r = 0; r < sampler.restarts; ++r) {
        std::mt19937_64 rng(sampler.seed + static_cast<std::uint64_t>(r) * 0x9e3779b97f4a7c15ULL);
        auto u01 = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
        long long len = 1 + static_cast<long long>(rng() % 12);
        long long off = static_cast<long long>(rng() % 21) - 10;
        std::vector<double> vals(static_cast<size_t>(len));
        for (auto& v : vals) v = u01();
        LatticeFunction f = LatticeFunction::from(off, std::move(vals));
        if (f.is_zero()) f = lattice_delta(off);
        candidates.push_back(std::move(f));
    }

    ConjectureScanResult out;
    out.conjectured_constant = constant;
    out.candidates = candidates.size();
    bool first = true;
    for (const auto& f : candidates) {
        double num = maximal_variation(f, p, 1e-10, series, 0).value;
        double den = variation_exact(f, p);
        double ratio = num / den;
        if (first || ratio > out.max_ratio) {
            out.max_ratio = ratio;
            out.argmax = f;
            first = false;
        }
    }
    out.violation = out.max_ratio > constant + 1e-8;
    return out;
}

}  // namespace sharpmax
