#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gdicke/landscape.hpp"

using namespace gdicke;

namespace {

const QuadratureSpec kQuad;

// Independent scalar solve of the closed-form Dicke-limit stationarity
// condition Omega_D'(x) = 0 on (0, lambda + 1], by bisection.
double dicke_maximizer_reference(const ModelParams& p) {
    double lo = 1e-9, hi = p.lambda + 1.0;
    if (dicke_limit_omega_prime(p, lo) <= 0.0) return 0.0;
    REQUIRE(dicke_limit_omega_prime(p, hi) < 0.0);
    for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
        const double mid = 0.5 * (lo + hi);
        (dicke_limit_omega_prime(p, mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("lambda = 0 gives a pure parabola: one maximum at the origin") {
    const ModelParams p{0.0, 1.0, 0.4, 50.0};
    const auto points = find_stationary_points(p, kQuad);
    REQUIRE(points.size() == 1);
    CHECK(points[0].x == 0.0);
    CHECK(points[0].kind == StationaryKind::maximum);

    const LandscapeProfile profile = classify_landscape(p, kQuad);
    CHECK(profile.maxima_count == 1);
    CHECK(profile.global_maximizer == 0.0);
    CHECK_FALSE(profile.superradiant);

    const auto [x_star, omega_star] = global_maximizer(p, kQuad);
    CHECK(x_star == 0.0);
    CHECK(omega_star == doctest::Approx(free_energy_integral(p, 0.0, kQuad)));
}

TEST_CASE("weak coupling stays normal") {
    const LandscapeProfile profile = classify_landscape({0.1, 1.0, 0.3, 100.0}, kQuad);
    CHECK(profile.maxima_count == 1);
    CHECK_FALSE(profile.superradiant);
}

TEST_CASE("J -> 0 maximizer matches the scalar Dicke solve") {
    const ModelParams p{1.3, 1.0, 1e-6, 100.0};
    const double reference = dicke_maximizer_reference(p);
    // analytic closed form at saturated tanh: (lambda/2) sqrt(1 - (eps/lambda^2)^2)
    const double closed_form = 0.5 * p.lambda * std::sqrt(1.0 - std::pow(1.0 / 1.69, 2));
    CHECK(reference == doctest::Approx(closed_form).epsilon(1e-6));

    const auto [x_star, omega_star] = global_maximizer(p, kQuad);
    CHECK(std::abs(x_star - reference) < 1e-3);
    CHECK(omega_star == doctest::Approx(omega(p, x_star, kQuad)));
}

TEST_CASE("three local maxima in the frustrated window") {
    // J = 0.5, epsilon = 0.8 sits in the three-maxima region at lambda = 1.3
    const LandscapeProfile profile = classify_landscape({1.3, 0.8, 0.5, 100.0}, kQuad);
    CHECK(profile.maxima_count == 3);
    CHECK(profile.superradiant);

    // half-line pattern: maximum at 0, then a minimum, then a maximum
    REQUIRE(profile.stationary_points.size() == 3);
    CHECK(profile.stationary_points[0].kind == StationaryKind::maximum);
    CHECK(profile.stationary_points[1].kind == StationaryKind::minimum);
    CHECK(profile.stationary_points[2].kind == StationaryKind::maximum);
}

TEST_CASE("regimes across the (J, epsilon) window at lambda = 1.3, beta = 100") {
    // Frozen classifications for the four corners of the studied window;
    // the multi-well / single-dominant structure flips between J = 0.50
    // and J = 0.56 and between epsilon = 0.8 and 1.2.
    struct Anchor {
        double j, epsilon;
        int maxima;
        bool superradiant;
    };
    for (const Anchor& a : {Anchor{0.50, 0.8, 3, true}, Anchor{0.50, 1.2, 2, true},
                            Anchor{0.56, 0.8, 3, false}, Anchor{0.56, 1.2, 2, true}}) {
        const LandscapeProfile profile =
            classify_landscape({1.3, a.epsilon, a.j, 100.0}, kQuad);
        CHECK_MESSAGE(profile.maxima_count == a.maxima, "J=", a.j, " epsilon=", a.epsilon);
        CHECK_MESSAGE(profile.superradiant == a.superradiant, "J=", a.j, " epsilon=", a.epsilon);
    }
}

TEST_CASE("maxima_count matches the half-line stationary pattern") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 12; ++i) {
        const ModelParams p{0.5 + u(rng), 0.2 + 1.8 * u(rng), 0.1 + 0.5 * u(rng),
                            u(rng) < 0.5 ? 10.0 : 100.0};
        const LandscapeProfile profile = classify_landscape(p, kQuad);
        int count = 0;
        for (const StationaryPoint& pt : profile.stationary_points) {
            const bool max_like = pt.kind == StationaryKind::maximum ||
                                  (pt.kind == StationaryKind::degenerate && pt.x == 0.0);
            if (max_like) count += pt.x > 0.0 ? 2 : 1;
        }
        CHECK(profile.maxima_count == count);
        CHECK((profile.maxima_count == 1 || profile.maxima_count == 2 ||
               profile.maxima_count == 3));
        CHECK(profile.superradiant == (profile.global_maximizer > 1e-6));
    }
}

TEST_CASE("every reported maximum dominates its neighbourhood") {
    for (const ModelParams& p :
         {ModelParams{1.3, 0.8, 0.5, 100.0}, ModelParams{1.3, 1.2, 0.56, 100.0},
          ModelParams{1.1, 0.6, 0.25, 10.0}}) {
        const LandscapeProfile profile = classify_landscape(p, kQuad);
        for (const StationaryPoint& pt : profile.stationary_points) {
            if (pt.kind != StationaryKind::maximum) continue;
            const double delta = 1e-4;
            CHECK(omega(p, pt.x + delta, kQuad) < pt.omega_value);
            if (pt.x - delta >= 0.0) CHECK(omega(p, pt.x - delta, kQuad) < pt.omega_value);
        }
    }
}

TEST_CASE("the global maximizer dominates a dense sample of the bracket") {
    const ModelParams p{1.3, 1.1, 0.56, 100.0};
    const auto [x_star, omega_star] = global_maximizer(p, kQuad);
    const double x_max = p.lambda + 1.0;
    for (int i = 0; i <= 1000; ++i) {
        const double x = x_max * i / 1000.0;
        CHECK(omega_star >= omega(p, x, kQuad) - 1e-9);
    }
}

TEST_CASE("doubling the scan grid does not change the classification") {
    SearchSpec dense;
    dense.grid_points = 800;
    for (const ModelParams& p :
         {ModelParams{1.3, 0.8, 0.5, 100.0}, ModelParams{1.3, 1.2, 0.56, 100.0},
          ModelParams{0.9, 1.7, 0.3, 1.0}}) {
        const LandscapeProfile coarse = classify_landscape(p, kQuad);
        const LandscapeProfile fine = classify_landscape(p, kQuad, dense);
        CHECK(coarse.maxima_count == fine.maxima_count);
        CHECK(coarse.global_maximizer == doctest::Approx(fine.global_maximizer).epsilon(1e-7));
    }
}

TEST_CASE("superradiance is monotone in lambda on a sampled ray (reported, not asserted)") {
    bool seen_superradiant = false;
    for (int i = 0; i <= 20; ++i) {
        const double lambda = 0.2 + i * (1.6 - 0.2) / 20.0;
        const LandscapeProfile profile = classify_landscape({lambda, 1.0, 0.3, 100.0}, kQuad);
        if (seen_superradiant)
            WARN_MESSAGE(profile.superradiant, "superradiance lost again at lambda=", lambda);
        seen_superradiant = seen_superradiant || profile.superradiant;
    }
    CHECK(seen_superradiant);
}

TEST_CASE("classification works on the exact J = 0 path") {
    const ModelParams p{1.3, 1.0, 0.0, 100.0};
    const LandscapeProfile profile = classify_landscape(p, kQuad);
    CHECK(profile.superradiant);
    const double reference = dicke_maximizer_reference(p);
    CHECK(std::abs(profile.global_maximizer - reference) < 1e-6);
}

TEST_CASE("SearchSpec validation") {
    SearchSpec bad;
    bad.grid_points = 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    SearchSpec neg;
    neg.sr_tol = 0.0;
    CHECK_THROWS_AS(neg.validate(), std::invalid_argument);
    CHECK_NOTHROW(SearchSpec{}.validate());
}
