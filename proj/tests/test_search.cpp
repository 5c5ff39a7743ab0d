#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sharpmax/errors.hpp"
#include "sharpmax/search.hpp"
#include "support/oracles.hpp"

using namespace sharpmax;

TEST_CASE("normalizers") {
    CHECK(normalize_norm_candidate({2, 4, 1}) == VertexFunction{0.5, 1.0, 0.25});
    CHECK(normalize_norm_candidate({1, 1}) == VertexFunction{1.0, 1.0});
    CHECK(normalize_norm_candidate({0, 3}) == VertexFunction{0.0, 1.0});
    CHECK_THROWS_AS(normalize_norm_candidate({0, 0}), validation_error);

    CHECK(normalize_variation_candidate({1, 3, 2}) == VertexFunction{0.0, 1.0, 0.5});
    CHECK(normalize_variation_candidate({0, 1}) == VertexFunction{0.0, 1.0});
    CHECK_THROWS_AS(normalize_variation_candidate({5, 5}), validation_error);
}

TEST_CASE("objective invariances") {
    std::mt19937_64 rng(31337);
    Graph g = build_named(Family::star, 5);
    for (int t = 0; t < 25; ++t) {
        VertexFunction f = oracle::random_function(5, rng);
        f[1] += 0.2;  // keep it away from zero/constant
        for (double p : {1.0, 1.7, 2.0}) {
            double r = norm_ratio(g, f, p);
            VertexFunction cf(f.size());
            for (size_t i = 0; i < f.size(); ++i) cf[i] = 3.75 * f[i];
            CHECK(norm_ratio(g, cf, p) == doctest::Approx(r).epsilon(1e-12));
            CHECK(norm_ratio(g, normalize_norm_candidate(f), p) == doctest::Approx(r).epsilon(1e-12));

            double vr = variation_ratio(g, f, p);
            CHECK(variation_ratio(g, cf, p) == doctest::Approx(vr).epsilon(1e-12));
            double mn = *std::min_element(f.begin(), f.end());
            VertexFunction sf(f.size());
            for (size_t i = 0; i < f.size(); ++i) sf[i] = f[i] - 0.5 * mn;
            CHECK(variation_ratio(g, sf, p) == doctest::Approx(vr).epsilon(1e-12));
            CHECK(variation_ratio(g, normalize_variation_candidate(f), p) ==
                  doctest::Approx(vr).epsilon(1e-12));
        }
    }
}

TEST_CASE("interchange classes") {
    Graph s5 = build_named(Family::star, 5);
    auto cls = interchange_classes(s5);
    CHECK(cls == std::vector<int>{0, 1, 1, 1, 1});

    Graph k4 = build_named(Family::complete, 4);
    CHECK(interchange_classes(k4) == std::vector<int>{0, 0, 0, 0});

    Graph c4 = build_named(Family::cycle, 4);  // antipodal swaps only
    CHECK(interchange_classes(c4) == std::vector<int>{0, 1, 0, 1});

    Graph p4 = build_named(Family::path, 4);
    CHECK(interchange_classes(p4) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("grid oracle norm matches the plain reference enumeration") {
    for (auto [fam, size] : {std::pair{Family::star, 4}, {Family::complete, 3},
                             {Family::cycle, 4}, {Family::path, 4}}) {
        Graph g = build_named(fam, size);
        for (double p : {1.0, 2.0}) {
            SearchResult r = grid_oracle_norm(g, p, 0.25, 1);
            double expect = oracle::simple_grid_norm(g, p, 4);
            CHECK(r.best_value == doctest::Approx(expect).epsilon(1e-12));
            CHECK(norm_ratio(g, r.argmax, p) == doctest::Approx(r.best_value).epsilon(1e-10));
        }
    }
}

TEST_CASE("grid oracle variation matches the plain reference enumeration") {
    for (auto [fam, size] : {std::pair{Family::star, 4}, {Family::complete, 3},
                             {Family::cycle, 4}}) {
        Graph g = build_named(fam, size);
        for (double p : {1.0, 2.0}) {
            SearchResult r = grid_oracle_variation(g, p, 0.25, 1);
            double expect = oracle::simple_grid_variation(g, p, 4);
            CHECK(r.best_value == doctest::Approx(expect).epsilon(1e-12));
            CHECK(variation_ratio(g, r.argmax, p) == doctest::Approx(r.best_value).epsilon(1e-10));
        }
    }
}

TEST_CASE("grid oracle norm worked examples") {
    Graph k3 = build_named(Family::complete, 3);
    SearchResult r = grid_oracle_norm(k3, 1.0, 0.01, 2);
    CHECK(r.best_value >= 5.0 / 3 - 1e-12);  // the delta ratio 1 + 2/3

    Graph k2 = build_named(Family::complete, 2);
    SearchResult r2 = grid_oracle_norm(k2, 1.0, 0.5, 1);
    CHECK(r2.best_value == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(r2.argmax == VertexFunction{1.0, 0.0});
    CHECK(r2.evaluations == 3);

    Graph s3 = build_named(Family::star, 3);
    SearchResult r3 = grid_oracle_norm(s3, 2.0, 0.005, 2);
    StarFormula sf = star_norm_formula(3, 2.0);
    CHECK(std::fabs(r3.best_value - sf.value) <= 0.005);
}

TEST_CASE("grid oracle variation worked examples") {
    Graph k4 = build_named(Family::complete, 4);
    CHECK(grid_oracle_variation(k4, 1.0, 0.25, 1).best_value >= 0.75 - 1e-12);

    Graph s3 = build_named(Family::star, 3);
    double c = std::sqrt(5.0) / 3;
    CHECK(std::fabs(grid_oracle_variation(s3, 2.0, 0.01, 2).best_value - c) <= 0.01);

    Graph k2 = build_named(Family::complete, 2);
    CHECK(grid_oracle_variation(k2, 2.0, 0.5, 1).best_value == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("grid oracle guards") {
    Graph s3 = build_named(Family::star, 3);
    CHECK_THROWS_AS(grid_oracle_norm(s3, -1.0, 0.1, 1), validation_error);
    CHECK_THROWS_AS(grid_oracle_norm(s3, 2.0, 0.3, 1), validation_error);  // 0.3 does not divide 1
    Graph c7 = build_named(Family::cycle, 7);
    CHECK_THROWS_AS(grid_oracle_norm(c7, 2.0, 1e-4, 1), budget_error);
    CHECK_THROWS_AS(grid_oracle_variation(c7, 2.0, 0.001, 1), budget_error);
}

TEST_CASE("nested grids are monotone") {
    for (auto [fam, size] : {std::pair{Family::star, 4}, {Family::complete, 4}}) {
        Graph g = build_named(fam, size);
        for (double p : {1.5, 2.0}) {
            double coarse = grid_oracle_norm(g, p, 0.1, 2).best_value;
            double fine = grid_oracle_norm(g, p, 0.05, 2).best_value;
            CHECK(fine >= coarse - 1e-12);
            double vc = grid_oracle_variation(g, p, 0.1, 2).best_value;
            double vf = grid_oracle_variation(g, p, 0.05, 2).best_value;
            CHECK(vf >= vc - 1e-12);
        }
    }
}

TEST_CASE("oracle results are schedule independent") {
    Graph s5 = build_named(Family::star, 5);
    SearchResult a = grid_oracle_norm(s5, 2.0, 0.05, 1);
    SearchResult b = grid_oracle_norm(s5, 2.0, 0.05, 4);
    CHECK(a.best_value == b.best_value);
    CHECK(a.argmax == b.argmax);
    CHECK(a.evaluations == b.evaluations);

    SearchResult va = grid_oracle_variation(s5, 1.0, 0.1, 1);
    SearchResult vb = grid_oracle_variation(s5, 1.0, 0.1, 3);
    CHECK(va.best_value == vb.best_value);
    CHECK(va.argmax == vb.argmax);
}

TEST_CASE("ascent norm reaches known values") {
    SearchConfig cfg;
    Graph s3 = build_named(Family::star, 3);
    SearchResult r = ascent_norm(s3, 2.0, cfg);
    CHECK(r.best_value >= star_norm_formula(3, 2.0).value - 1e-6);
    CHECK(norm_ratio(s3, r.argmax, 2.0) == doctest::Approx(r.best_value).epsilon(1e-9));

    Graph k4 = build_named(Family::complete, 4);
    CHECK(ascent_norm(k4, 1.0, cfg).best_value >= 1.75 - 1e-9);
}

TEST_CASE("ascent determinism under a fixed seed") {
    SearchConfig cfg;
    cfg.restarts = 8;
    Graph g = oracle::random_connected_graph(5, 5150);
    SearchResult a = ascent_norm(g, 1.0, cfg, 2);
    SearchResult b = ascent_norm(g, 1.0, cfg, 1);
    CHECK(a.best_value == b.best_value);
    CHECK(a.argmax == b.argmax);
    CHECK(a.evaluations == b.evaluations);

    SearchResult va = ascent_variation(g, 2.0, cfg, 2);
    SearchResult vb = ascent_variation(g, 2.0, cfg, 1);
    CHECK(va.best_value == vb.best_value);
    CHECK(va.argmax == vb.argmax);
}

TEST_CASE("ascent variation reaches known values") {
    SearchConfig cfg;
    Graph s5 = build_named(Family::star, 5);
    double c5 = std::sqrt(19.0) / 5;
    SearchResult r = ascent_variation(s5, 2.0, cfg);
    CHECK(r.best_value >= c5 - 1e-6);
    CHECK(r.best_value <= c5 + 1e-7);

    Graph k3 = build_named(Family::complete, 3);
    SearchResult rk = ascent_variation(k3, 1.0, cfg);
    CHECK(rk.best_value == doctest::Approx(2.0 / 3).epsilon(1e-7));
}

TEST_CASE("ascent dominates the coarse grid oracle") {
    SearchConfig cfg;
    for (auto [fam, size] : {std::pair{Family::complete, 3}, {Family::complete, 4},
                             {Family::star, 4}, {Family::star, 6}, {Family::path, 5},
                             {Family::cycle, 6}}) {
        Graph g = build_named(fam, size);
        for (double p : {1.0, 2.0}) {
            CHECK(ascent_norm(g, p, cfg).best_value >=
                  grid_oracle_norm(g, p, 0.05, 2).best_value - 1e-9);
            CHECK(ascent_variation(g, p, cfg).best_value >=
                  grid_oracle_variation(g, p, 0.05, 2).best_value - 1e-9);
        }
    }
}

TEST_CASE("star norm formula against the critical-equation oracle") {
    // for n=3, p=2 the stationarity condition reduces to 2x^2 + 5x - 1 = 0
    double root = oracle::bisect_root([](double x) { return 2 * x * x + 5 * x - 1; }, 0.0, 1.0);
    CHECK(root == doctest::Approx((-5 + std::sqrt(33.0)) / 4).epsilon(1e-12));

    StarFormula sf = star_norm_formula(3, 2.0);
    CHECK(std::fabs(sf.x_star - root) <= 1e-6);
    CHECK(sf.value * sf.value == doctest::Approx(1.593070).epsilon(1e-5));
    CHECK(sf.value == doctest::Approx(1.262170).epsilon(1e-5));
    CHECK_FALSE(sf.heuristic);
    CHECK(star_norm_formula(3, 3.0).heuristic);
    CHECK(star_norm_formula(4, 1.0).heuristic);
    CHECK_THROWS_AS(star_norm_formula(2, 2.0), validation_error);
}

TEST_CASE("star formula vs fine grid oracle") {
    for (int n : {3, 4}) {
        for (double p : {1.5, 2.0}) {
            double grid = grid_oracle_norm(build_named(Family::star, n), p, 0.01, 2).best_value;
            double formula = star_norm_formula(n, p).value;
            CHECK(std::fabs(grid - formula) <= 0.01);
            CHECK(grid <= formula + 1e-10);  // grid max cannot exceed the sup
        }
    }
}

TEST_CASE("structured star search") {
    SearchResult r = star_norm_structured(3, 2.0);
    StarFormula sf = star_norm_formula(3, 2.0);
    CHECK(r.best_value == doctest::Approx(sf.value).epsilon(1e-9));
    // the theorem says one leaf value suffices: x == y at the maximum
    CHECK(r.argmax[1] == r.argmax[2]);
    CHECK(r.structure_note.find("x=y") != std::string::npos);

    CHECK(star_norm_structured(4, 1.0).best_value >= 2.5 - 1e-9);

    SearchResult r53 = star_norm_structured(5, 3.0);
    Graph s5 = build_named(Family::star, 5);
    double delta_ratio = 0.0;
    for (int v = 0; v < 5; ++v) {
        VertexFunction d(5, 0.0);
        d[v] = 1.0;
        delta_ratio = std::max(delta_ratio, norm_ratio(s5, d, 3.0));
    }
    CHECK(r53.best_value >= delta_ratio - 1e-9);
    CHECK(r53.best_value >= star_norm_formula(5, 3.0).value - 1e-9);
}

TEST_CASE("structured searches against fine grid oracles") {
    for (int n : {3, 4}) {
        for (double p : {1.5, 2.0, 3.0}) {
            double grid = grid_oracle_norm(build_named(Family::complete, n), p, 0.002, 2).best_value;
            double structured = complete_norm_structured(n, p).best_value;
            CHECK(std::fabs(grid - structured) <= 0.005);
            CHECK(grid <= structured + 1e-10);
        }
    }
}

TEST_CASE("structured complete search") {
    SearchResult r = complete_norm_structured(4, 2.0);
    CHECK(r.best_value >= std::sqrt(1.0 + 3.0 / 16) - 1e-12);
    CHECK_THROWS_AS(complete_norm_structured(4, 1.0), validation_error);
    CHECK_THROWS_AS(complete_norm_structured(1, 2.0), validation_error);

    // n=2: explicit 1-D family scan as the oracle
    double best = 0.0;
    for (int i = 0; i <= 100000; ++i) {
        double x = i / 100000.0;
        double mval = std::max(x, (1 + x) / 2);
        best = std::max(best, std::sqrt((1 + mval * mval) / (1 + x * x)));
    }
    CHECK(complete_norm_structured(2, 2.0).best_value == doctest::Approx(best).epsilon(1e-6));
}

TEST_CASE("search results never fall below the delta baseline") {
    SearchConfig cfg;
    cfg.restarts = 4;
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 6; ++t) {
        Graph g = oracle::random_connected_graph(5, rng());
        for (double p : {1.0, 2.0}) {
            double best_delta_norm = 0.0, best_delta_var = 0.0;
            for (int v = 0; v < g.n; ++v) {
                VertexFunction d(g.n, 0.0);
                d[v] = 1.0;
                best_delta_norm = std::max(best_delta_norm, norm_ratio(g, d, p));
                best_delta_var = std::max(best_delta_var, variation_ratio(g, d, p));
            }
            CHECK(ascent_norm(g, p, cfg).best_value >= best_delta_norm - 1e-12);
            CHECK(ascent_variation(g, p, cfg).best_value >= best_delta_var - 1e-12);
            CHECK(grid_oracle_norm(g, p, 0.25, 1).best_value >= best_delta_norm - 1e-12);
            CHECK(grid_oracle_variation(g, p, 0.25, 1).best_value >= best_delta_var - 1e-12);
        }
    }
}
