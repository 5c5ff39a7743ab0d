#pragma once
#include <cmath>
#include <utility>

namespace sharpmax {

// Coarse scan followed by golden-section refinement. The scan guards against
// multimodality before the unimodal bracketing step.
template <class F>
std::pair<double, double> golden_max(F&& f, double a, double b, double tol, int scan_points = 1000) {
    if (b < a) std::swap(a, b);
    if (scan_points < 2) scan_points = 2;
    double best_x = a, best_f = f(a);
    for (int i = 1; i <= scan_points; ++i) {
        double x = a + (b - a) * i / scan_points;
        double fx = f(x);
        if (fx > best_f) {
            best_f = fx;
            best_x = x;
        }
    }
    double h = (b - a) / scan_points;
    double lo = std::max(a, best_x - h);
    double hi = std::min(b, best_x + h);

    constexpr double inv_phi = 0.6180339887498948482;
    double c = hi - (hi - lo) * inv_phi;
    double d = lo + (hi - lo) * inv_phi;
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 400 && (hi - lo) > tol; ++it) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - (hi - lo) * inv_phi;
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + (hi - lo) * inv_phi;
            fd = f(d);
        }
    }
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm >= best_f) return {mid, fm};
    return {best_x, best_f};
}

}  // namespace sharpmax
