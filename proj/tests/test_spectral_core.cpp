#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "qsearch/analysis.hpp"
#include "qsearch/angles.hpp"
#include "qsearch/errors.hpp"
#include "qsearch/models.hpp"
#include "qsearch/simulate.hpp"
#include "qsearch/spectral_model.hpp"
#include "support/random_models.hpp"

using namespace qsearch;

namespace {

SpectralModel two_level(double w0, double theta1, double phi) {
    SpectralModel m;
    m.phi = phi;
    m.levels.push_back({0.0, std::sqrt(w0), 0.0, 1, "s"});
    m.levels.push_back({theta1, std::sqrt(1.0 - w0), 0.0, 1, "rest"});
    return m;
}

// Symmetric three-level model with prescribed alpha and second moment.
SpectralModel symmetric_with_b2(double alpha, double b2, double phi) {
    double rest = 1.0 - alpha * alpha;
    double c = std::sqrt((b2 - 1.0) / rest);  // lambda2 = rest * c^2
    double theta = 2.0 * std::atan(1.0 / c);
    SpectralModel m;
    m.phi = phi;
    m.levels.push_back({0.0, alpha, 0.0, 1, "s"});
    m.levels.push_back({theta, std::sqrt(rest / 2.0), 0.0, 1, "+"});
    m.levels.push_back({-theta, std::sqrt(rest / 2.0), 0.0, 1, "-"});
    return validate(m);
}

} // namespace

TEST_CASE("validate accepts the basic reflection model") {
    SpectralModel m = two_level(0.01, -kPi, kPi);  // -pi wraps to +pi silently
    SpectralModel v = validate(m);
    CHECK(v.levels[1].theta == kPi);
    CHECK(v.warnings.empty());
}

TEST_CASE("validate rejects under-normalized weights") {
    SpectralModel m = two_level(0.01, kPi, kPi);
    m.levels[1].tau_mag = std::sqrt(0.89);  // sum 0.9
    CHECK_THROWS_AS(validate(m), NormalizationError);
}

TEST_CASE("validate renormalizes weights within the 1e-6 window") {
    SpectralModel m = two_level(0.01, kPi, kPi);
    m.levels[1].tau_mag = std::sqrt(0.99 + 1e-7);
    SpectralModel v = validate(m);
    double total = 0.0;
    for (const auto& lv : v.levels) total += lv.weight();
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(v.warnings.empty());
}

TEST_CASE("validate requires a zero-phase level") {
    SpectralModel m;
    m.phi = kPi;
    m.levels.push_back({kPi, 1.0, 0.0, 1, ""});
    CHECK_THROWS_AS(validate(m), EmptyKernelError);
}

TEST_CASE("validate rejects phi = 0 and wraps out-of-range angles") {
    SpectralModel m = two_level(0.25, kPi, 0.0);
    CHECK_THROWS_AS(validate(m), PhaseRangeError);

    SpectralModel w = two_level(0.25, 1.5, kPi);
    w.levels[1].theta = kPi + 0.5;  // outside [-pi, pi]
    SpectralModel v = validate(w);
    CHECK(v.levels[1].theta == doctest::Approx(-kPi + 0.5).epsilon(1e-15));
    CHECK_FALSE(v.warnings.empty());
}

TEST_CASE("merge_degenerate adds weights within an eigenspace") {
    SpectralModel m;
    m.phi = kPi;
    m.levels.push_back({0.0, std::sqrt(0.125), 0.0, 1, "a"});
    m.levels.push_back({0.0, std::sqrt(0.125), 0.0, 1, "b"});
    m.levels.push_back({kPi, std::sqrt(0.75), 0.0, 1, "c"});
    SpectralModel g = merge_degenerate(validate(m));
    REQUIRE(g.levels.size() == 2);
    CHECK(g.levels[0].theta == 0.0);
    CHECK(g.levels[0].tau_mag == 0.5);  // sqrt(0.25), exact for dyadic weights
    CHECK(g.levels[0].tau_phase == 0.0);
    CHECK(g.levels[0].multiplicity == 1);
}

TEST_CASE("merge_degenerate is the identity on distinct spectra") {
    SpectralModel m = validate(two_level(0.25, 1.0, kPi));
    SpectralModel g = merge_degenerate(m);
    REQUIRE(g.levels.size() == m.levels.size());
    for (std::size_t i = 0; i < g.levels.size(); ++i) {
        CHECK(g.levels[i].theta == m.levels[i].theta);
        CHECK(g.levels[i].tau_mag == m.levels[i].tau_mag);
    }
}

TEST_CASE("merge_degenerate keeps +-theta pairs apart and preserves moments") {
    SpectralModel m = akr_model(4);
    SpectralModel g = merge_degenerate(m);
    // (2,2) contributes two eigenvectors at theta = pi which do merge; every
    // +-theta pair stays distinct.
    CHECK(g.levels.size() == m.levels.size() - 1);

    Moments a = moments(m);
    Moments b = moments(g);
    CHECK(a.alpha == b.alpha);
    CHECK(a.theta_min == b.theta_min);
    CHECK(a.lambda1 == b.lambda1);
    CHECK(b.lambda2 == doctest::Approx(a.lambda2).epsilon(1e-14));
}

TEST_CASE("merge preserves moments on random degenerate spectra") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        // Build a model with duplicated thetas and random multiplicities.
        SpectralModel m;
        m.phi = kPi;
        std::vector<double> thetas = {0.0, 0.7, -1.3, 2.2};
        std::vector<double> w;
        double wsum = 0.0;
        std::vector<Level> lv;
        for (double th : thetas) {
            int copies = 1 + static_cast<int>(u(rng) * 3);
            for (int c = 0; c < copies; ++c) {
                Level l;
                l.theta = th;
                l.multiplicity = 1 + static_cast<int>(u(rng) * 2);
                l.tau_mag = 0.1 + u(rng);
                lv.push_back(l);
                wsum += l.weight();
            }
        }
        for (Level& l : lv) {
            l.tau_mag /= std::sqrt(wsum);
            m.levels.push_back(l);
        }
        m = validate(m);
        Moments a = moments(m);
        Moments b = moments(merge_degenerate(m));
        CHECK(b.alpha == doctest::Approx(a.alpha).epsilon(1e-15));
        CHECK(b.theta_min == a.theta_min);
        CHECK(b.lambda1 == doctest::Approx(a.lambda1).epsilon(1e-13));
        CHECK(b.lambda2 == doctest::Approx(a.lambda2).epsilon(1e-13));
    }
}

TEST_CASE("moments: reflection diffusion has vanishing moments") {
    // theta != 0 only at pi, where cot(theta/2) = 0 identically.
    SpectralModel m = validate(two_level(0.0625, kPi, kPi));
    Moments mo = moments(m);
    CHECK(mo.lambda1 == 0.0);
    CHECK(mo.lambda2 == 0.0);
    CHECK(mo.alpha == 0.25);
    CHECK(mo.theta_min == kPi);
}

TEST_CASE("moments: quarter-turn rotation diffusion") {
    // Direct evaluation of the moment sum: w = 0.99 at theta = -pi/2.
    SpectralModel m = validate(two_level(0.01, -kPi / 2.0, kPi));
    Moments mo = moments(m);
    CHECK(mo.lambda1 == doctest::Approx(-0.99).epsilon(1e-12));
    CHECK(mo.lambda2 == doctest::Approx(0.99).epsilon(1e-12));
}

TEST_CASE("moments raises GapError without a nonzero phase") {
    SpectralModel m;
    m.phi = kPi;
    m.levels.push_back({0.0, 1.0, 0.0, 1, "s"});
    CHECK_THROWS_AS(moments(validate(m)), GapError);
}

TEST_CASE("moment bounds hold on random spectra") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        SpectralModel m = testing::random_general_model(rng, 24, 0.05, 0.3);
        Moments mo = moments(m);
        double cap = 2.0 / mo.theta_min;
        CHECK(std::abs(mo.lambda1) <= cap * (1.0 + 1e-12));
        CHECK(mo.lambda2 <= cap * cap * (1.0 + 1e-12));
        // Cauchy-Schwarz against the residual weight.
        double bound = (1.0 - mo.alpha * mo.alpha) * mo.lambda2;
        CHECK(mo.lambda1 * mo.lambda1 <= bound * (1.0 + 1e-12) + 1e-15);
        double b2 = 1.0 + mo.lambda2;
        CHECK(b2 >= 1.0);
        CHECK(b2 <= 1.0 + 4.0 / (mo.theta_min * mo.theta_min) + 1e-9);
    }
}

TEST_CASE("coefficients: plug-in values") {
    Moments mo;
    mo.alpha = 0.1;
    mo.theta_min = 1.0;

    SUBCASE("reflection oracle, quiet spectrum") {
        Coefficients c = coefficients(mo, kPi);
        CHECK(c.a == 0.0);  // cot(pi/2) == 0 exactly
        CHECK(c.b == 1.0);
    }
    SUBCASE("quarter-turn oracle") {
        mo.lambda1 = -0.99;
        mo.lambda2 = 0.99;
        Coefficients c = coefficients(mo, kPi / 2.0);
        CHECK(c.a == doctest::Approx(0.01).epsilon(1e-10));
    }
    SUBCASE("broadening from the second moment") {
        mo.lambda2 = 3.0;
        Coefficients c = coefficients(mo, kPi);
        CHECK(c.b == 2.0);
    }
    SUBCASE("phi = 0 is singular") {
        CHECK_THROWS_AS(coefficients(mo, 0.0), PhaseRangeError);
    }
}

TEST_CASE("predict: detuning-free reflection cases") {
    SUBCASE("B = 1") {
        SpectralModel m = two_level(1.0 / 1024.0, kPi, kPi);  // alpha = 1/32
        Prediction p = predict(m);
        CHECK(p.eta == doctest::Approx(kPi / 4.0).epsilon(1e-12));
        CHECK(p.lambda_plus == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
        CHECK(p.lambda_minus == doctest::Approx(-1.0 / 16.0).epsilon(1e-12));
        CHECK(p.p_max == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(p.q_max == 25);  // floor(8 pi)
        CHECK(p.query_complexity == doctest::Approx(8.0 * kPi).epsilon(1e-12));
    }
    SUBCASE("B = 2") {
        SpectralModel m = symmetric_with_b2(0.01, 4.0, kPi);
        Prediction p = predict(m);
        CHECK(p.p_max == doctest::Approx(0.25).epsilon(1e-10));
        CHECK(p.q_max == 157);  // floor(50 pi)
        CHECK(p.query_complexity == doctest::Approx(50.0 * kPi / 0.25).epsilon(1e-10));
    }
}

TEST_CASE("predict: dominant-detuning cost matches the closed form") {
    // One-sided spectrum at theta = pi/2 gives A close to 1 with B^2 close
    // to 2; in the |A| >> 2 alpha B regime the cost approaches
    // pi |A| B^2 sin^2(phi/2) / (8 alpha^2).
    double alpha = 1e-3;
    SpectralModel m = two_level(alpha * alpha, kPi / 2.0, kPi);
    Prediction p = predict(m);
    double a = p.coeffs.a, b = p.coeffs.b;
    CHECK(std::abs(a) > 100.0 * 2.0 * alpha * b);
    double closed = kPi * std::abs(a) * b * b * 0.5 * (1.0 - std::cos(p.phi)) / (8.0 * alpha * alpha);
    CHECK(p.query_complexity == doctest::Approx(closed).epsilon(2e-2));
}

TEST_CASE("predict: root product and peak-iteration invariants") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        SpectralModel m = trial % 2 == 0
                              ? testing::random_symmetric_model(rng, 21, 2e-3, 0.4)
                              : testing::random_general_model(rng, 21, 5e-3, 0.4);
        Prediction p = predict(m);
        double prod = p.lambda_plus * p.lambda_minus;
        double expect = -4.0 * p.moments.alpha * p.moments.alpha / (p.coeffs.b * p.coeffs.b);
        CHECK(prod == doctest::Approx(expect).epsilon(1e-12));
        CHECK(p.lambda_plus > 0.0);
        CHECK(p.lambda_minus < 0.0);
        CHECK(p.q_max == static_cast<long>(std::floor(kPi / (p.lambda_plus - p.lambda_minus))));
        if (std::abs(p.coeffs.a) < 1e-14) {
            CHECK(p.eta == doctest::Approx(kPi / 4.0).epsilon(1e-12));
            double one = p.p_max * p.coeffs.b * p.coeffs.b *
                         std::pow(std::sin(0.5 * p.phi), 2);
            CHECK(one == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("predicted curve starts at sin^2(alpha) for the matched reflection") {
    SpectralModel m = grover_model(0.1, kPi, kPi);
    Trace tr = overlap_curve_predicted(m, 4);
    CHECK(tr.probs[0] == doctest::Approx(std::pow(std::sin(0.1), 2)).epsilon(1e-12));
}

TEST_CASE("predicted curve peaks at q_max") {
    SpectralModel m = grover_model(1e-4, kPi, kPi);
    Prediction p = predict(m);
    Trace tr = overlap_curve_predicted(m, p.q_max + 2);
    CHECK(std::abs(tr.probs[static_cast<std::size_t>(p.q_max)] - p.p_max) < 1e-6);
}

TEST_CASE("predicted curve reduces to sin^2(2 q' alpha / B) / B^2 when A = 0") {
    SpectralModel m = symmetric_with_b2(0.005, 2.5, kPi);
    Prediction p = predict(m);
    double b = p.coeffs.b;
    Trace tr = overlap_curve_predicted(m, 50);
    for (int q = 0; q <= 50; ++q) {
        double expect = std::pow(std::sin(2.0 * (q + 0.5) * 0.005 / b), 2) / (b * b);
        CHECK(tr.probs[q] == doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("time_reverse is an involution") {
    std::mt19937_64 rng(23);
    SpectralModel m = testing::random_general_model(rng, 12, 0.02, 0.3);
    SpectralModel back = time_reverse(time_reverse(m));
    REQUIRE(back.levels.size() == m.levels.size());
    CHECK(back.phi == m.phi);
    for (std::size_t i = 0; i < m.levels.size(); ++i) {
        CHECK(back.levels[i].theta == m.levels[i].theta);
        CHECK(back.levels[i].tau_mag == m.levels[i].tau_mag);
    }
    CHECK(back.meta == m.meta);
}

TEST_CASE("time_reverse fixes symmetric spectra up to relabeling") {
    std::mt19937_64 rng(29);
    SpectralModel m = testing::random_symmetric_model(rng, 15, 0.01, 0.5);
    SpectralModel r = time_reverse(m, kPi);  // -pi wraps back to pi
    auto key = [](const SpectralModel& mm) {
        std::vector<std::pair<double, double>> k;
        for (const auto& lv : mm.levels) k.emplace_back(lv.theta, lv.weight());
        std::sort(k.begin(), k.end());
        return k;
    };
    CHECK(key(r) == key(m));
}

TEST_CASE("time_reverse maps the two-phase rotation search onto itself") {
    // With matched phases the reversed model is the exact negation of the
    // forward one, so the success curves agree to roundoff.
    SpectralModel fwd = grover_model(0.05, kPi / 2.0, kPi / 2.0);
    SpectralModel rev = time_reverse(fwd, kPi / 2.0);
    Trace a = iterate(fwd, 40);
    Trace b = iterate(rev, 40);
    for (std::size_t q = 0; q < a.probs.size(); ++q)
        CHECK(a.probs[q] == doctest::Approx(b.probs[q]).epsilon(1e-13));

    // Near-matched phases: both directions sit in the trusted regime and
    // predict the same performance within the approximation slack.
    SpectralModel f2 = grover_model(0.003, kPi, kPi - 0.002);
    SpectralModel dt;  // spectrum of the target-side rotation, overlaps with |s>
    dt.phi = kPi - 0.002;
    dt.levels.push_back({0.0, 0.003, 0.0, 1, "t"});
    dt.levels.push_back({-kPi, std::sqrt(1.0 - 9e-6), 0.0, 1, ""});
    SpectralModel r2 = time_reverse(dt, kPi - 0.002);
    Prediction pf = predict(f2), pr = predict(r2);
    CHECK(pf.p_max == doctest::Approx(pr.p_max).epsilon(0.02));
    CHECK(std::abs(pf.q_max - pr.q_max) <= std::max(2.0, 0.02 * pf.q_max));
}
