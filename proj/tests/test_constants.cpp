#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sharpmax/constants.hpp"
#include "sharpmax/errors.hpp"
#include "sharpmax/search.hpp"
#include "support/oracles.hpp"

using namespace sharpmax;

TEST_CASE("classical star bounds") {
    auto [lo, hi] = soria_tradacete_star_bounds(4, 1.0);
    CHECK(lo == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(hi == doctest::Approx(4.5).epsilon(1e-15));

    auto [lo2, hi2] = soria_tradacete_star_bounds(2, 1.0);
    CHECK(lo2 == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(hi2 == doctest::Approx(3.5).epsilon(1e-15));

    for (int n : {3, 6, 12}) CHECK(soria_tradacete_star_bounds(n, 200.0).first ==
                                   doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(soria_tradacete_star_bounds(1, 1.0), validation_error);
}

TEST_CASE("star bounds sandwich the grid oracle") {
    for (int n : {3, 4, 5}) {
        Graph s = build_named(Family::star, n);
        for (double p : {1.0, 1.5, 2.0}) {
            auto [lo, hi] = soria_tradacete_star_bounds(n, p);
            double grid_p = std::pow(grid_oracle_norm(s, p, 0.02, 2).best_value, p);
            CHECK(grid_p >= lo - 1e-10);
            CHECK(grid_p <= hi + 1e-10);
        }
    }
}

TEST_CASE("two-valued lower bound for the complete graph") {
    CHECK(kn_lower_bound(2, 1.0, 2.0, 1) == doctest::Approx(1.25).epsilon(1e-15));
    // alpha -> 1 collapses to 1
    CHECK(kn_lower_bound(5, 3.0, 1.0 + 1e-12, 2) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(kn_lower_bound(5, 7.0, 3.0, 5) == 1.0);
    CHECK_THROWS_AS(kn_lower_bound(5, 1.0, 0.9, 2), validation_error);
    CHECK_THROWS_AS(kn_lower_bound(5, 1.0, 2.0, 0), validation_error);
}

TEST_CASE("complete-graph limit against the cubic oracle") {
    // for n=3, k=1 the stationarity condition is 2a^3 - 3a^2 - 2 = 0
    double root = oracle::bisect_root([](double a) { return 2 * a * a * a - 3 * a * a - 2; }, 1.0, 3.0);
    KnLimit lim = kn_limit(3);
    CHECK(lim.k_star == 1);
    CHECK(std::fabs(lim.alpha_star - root) <= 1e-4);
    double expect = (root * root * root + 2 * root) / (root * root * root + 2);
    CHECK(lim.value == doctest::Approx(expect).epsilon(1e-9));
    CHECK(lim.value == doctest::Approx(1.20430).epsilon(1e-4));

    // k = 2 stays below the k = 1 branch for n = 3
    double k2 = 0.0;
    for (double a = 1.0001; a < 40; a *= 1.001)
        k2 = std::max(k2, (2 * std::pow(a, 1.5) + a) / (2 * std::pow(a, 1.5) + 1));
    CHECK(k2 == doctest::Approx(1.1773).epsilon(1e-3));
    CHECK(k2 < lim.value);

    KnLimit l4 = kn_limit(4);
    CHECK(l4.value >= (16.0 + 6.0) / (16.0 + 3.0) - 1e-12);  // alpha=2, k=1
    CHECK_THROWS_AS(kn_limit(2), validation_error);
}

TEST_CASE("finite-p complete-graph bound decreases to the limit") {
    for (int n : {3, 4, 6}) {
        KnLimit lim = kn_limit(n);
        double prev = 0.0;
        // the two-valued bound approaches the limit from above as p grows
        for (double p : {400.0, 200.0, 100.0, 50.0}) {
            double b = kn_lower_bound(n, p, lim.alpha_star, lim.k_star);
            CHECK(b >= lim.value - 1e-9);
            CHECK(b >= prev - 1e-12);  // decreasing in p = increasing along this list
            prev = b;
        }
        CHECK(kn_lower_bound(n, 400.0, lim.alpha_star, lim.k_star) ==
              doctest::Approx(lim.value).epsilon(1e-2));
    }
}

TEST_CASE("star lower bound") {
    CHECK(star_lower_bound(4, 1.0) == doctest::Approx(1.75).epsilon(1e-15));
    for (int n : {3, 4, 9, 16}) {
        double limit = (1 + std::sqrt(static_cast<double>(n))) / 2;
        double prev = 1e9;
        for (double p : {1.0, 2.0, 5.0, 20.0}) {
            double b = star_lower_bound(n, p);
            CHECK(b >= limit - 1e-12);
            CHECK(b <= prev + 1e-12);  // non-increasing in p
            prev = b;
        }
    }
    CHECK(star_lower_bound(9, 1e5) == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("one-parameter star sup") {
    // endpoint value is 1
    for (int n : {3, 9}) {
        double at1 = (1.0 + (n - 1) * std::pow(1.0, 2.0)) / (1.0 + (n - 1));
        CHECK(at1 == doctest::Approx(1.0));
    }

    StarNormStar s92 = star_norm_star(9, 200.0);
    double v200 = std::pow(s92.value, 200.0);
    CHECK(v200 >= 1.8);
    CHECK(v200 <= 2.05);

    // the y-family is the x-family under y = 1/x, so for p in (1,2] the sup
    // agrees with the closed-form star norm
    for (auto [n, p] : {std::pair{3, 2.0}, {5, 1.5}, {9, 2.0}}) {
        CHECK(star_norm_star(n, p).value ==
              doctest::Approx(star_norm_formula(n, p).value).epsilon(1e-9));
    }

    // below the grid oracle for the true norm
    for (int n : {3, 4}) {
        double grid = grid_oracle_norm(build_named(Family::star, n), 2.0, 0.01, 2).best_value;
        CHECK(star_norm_star(n, 2.0).value <= grid + 0.005);
    }

    // at p = 1 the sup is only attained in the limit y -> inf
    StarNormStar p1 = star_norm_star(3, 1.0);
    CHECK_FALSE(p1.attained);
    CHECK(p1.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("star limit") {
    StarLimit s25 = star_limit(25);
    CHECK(s25.value == 3.0);
    CHECK(s25.exact);

    StarLimit s26 = star_limit(26);
    CHECK(s26.value == doctest::Approx((1 + std::sqrt(26.0)) / 2).epsilon(1e-12));
    CHECK(s26.exact);

    StarLimit s9 = star_limit(9);
    CHECK(s9.value >= 2.0);
    CHECK_FALSE(s9.exact);
    CHECK_THROWS_AS(star_limit(2), validation_error);
}

TEST_CASE("sharp star 2-variation constant") {
    CHECK(star_var2_constant(3) == doctest::Approx(std::sqrt(5.0) / 3).epsilon(1e-15));
    CHECK(star_var2_constant(5) == doctest::Approx(std::sqrt(19.0) / 5).epsilon(1e-15));
    double prev = 0.0;
    for (int n = 3; n <= 100; ++n) {
        double c = star_var2_constant(n);
        CHECK(c > prev);
        CHECK(c < 1.0);
        prev = c;
    }
}

TEST_CASE("star 2-variation extremizer attains the constant") {
    VertexFunction f = star_var2_extremizer(3, 1.0, 0.5);
    CHECK(f == VertexFunction{1.0, 2.0, 0.5});
    Graph s3 = build_named(Family::star, 3);
    CHECK(variation_ratio(s3, f, 2.0) == doctest::Approx(std::sqrt(5.0) / 3).epsilon(1e-13));

    Graph s5 = build_named(Family::star, 5);
    VertexFunction f5 = star_var2_extremizer(5, 2.0, 1.0);
    CHECK(f5 == VertexFunction{2.0, 6.0, 1.0, 1.0, 1.0});
    CHECK(variation_ratio(s5, f5, 2.0) == doctest::Approx(std::sqrt(19.0) / 5).epsilon(1e-13));

    CHECK_THROWS_AS(star_var2_extremizer(4, 1.0, 1.0), validation_error);
    CHECK_THROWS_AS(star_var2_extremizer(4, 1.0, -0.5), validation_error);

    for (int n = 3; n <= 12; ++n) {
        Graph sn = build_named(Family::star, n);
        for (auto [x, c] : {std::pair{1.0, 0.5}, {2.0, 1.0}, {10.0, 0.1}}) {
            double r = variation_ratio(sn, star_var2_extremizer(n, x, c), 2.0);
            CHECK(r == doctest::Approx(star_var2_constant(n)).epsilon(1e-12));
        }
    }
}

TEST_CASE("complete-graph variation constant and delta ratios") {
    CHECK(kn_var_constant(5) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(kn_var_constant(2) == doctest::Approx(0.5).epsilon(1e-15));

    Graph k4 = build_named(Family::complete, 4);
    CHECK(delta_variation_ratio(k4, 1.0, 2) == doctest::Approx(0.75).epsilon(1e-15));

    Graph s4 = build_named(Family::star, 4);
    CHECK(delta_variation_ratio(s4, 1.0, 1) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(delta_variation_ratio(s4, 1.0, 0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(delta_variation_ratio(s4, 1.0, 9), validation_error);
}

TEST_CASE("delta floor for trees, cycles and hypercubes") {
    std::vector<Graph> graphs = {build_named(Family::star, 6), build_named(Family::path, 5),
                                 build_named(Family::cycle, 5), build_named(Family::cycle, 6),
                                 build_named(Family::hypercube, 2),
                                 build_named(Family::hypercube, 3)};
    for (const Graph& g : graphs) {
        for (double p : {0.5, 0.75, 1.0}) {
            double best = 0.0;
            for (int v = 0; v < g.n; ++v) best = std::max(best, delta_variation_ratio(g, p, v));
            CHECK(best >= 1.0 - 1.0 / g.n - 1e-12);
        }
    }
}

TEST_CASE("ascent respects the sharp star 2-variation bound") {
    SearchConfig cfg;
    for (int n : {3, 5, 8}) {
        Graph sn = build_named(Family::star, n);
        double c = star_var2_constant(n);
        double got = ascent_variation(sn, 2.0, cfg).best_value;
        CHECK(got <= c + 1e-7);
        CHECK(got >= c - 1e-4);
    }
}
