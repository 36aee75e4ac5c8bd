#pragma once

// Seeded random spectral models shared by the unit and acceptance suites.

#include <cmath>
#include <random>
#include <vector>

#include "qsearch/angles.hpp"
#include "qsearch/spectral_model.hpp"

namespace qsearch::testing {

// Gapped spectrum with +-theta pairs of equal weight: the first moment
// vanishes exactly and the validity margin is controlled by alpha and the
// gap alone. phi = pi.
inline SpectralModel random_symmetric_model(std::mt19937_64& rng, int levels,
                                            double alpha, double theta_min) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int pairs = (levels - 1) / 2;

    std::vector<double> theta(pairs), w(pairs);
    double wsum = 0.0;
    for (int i = 0; i < pairs; ++i) {
        theta[i] = theta_min + (kPi - 1e-3 - theta_min) * u(rng);
        w[i] = 0.05 + u(rng);
        wsum += 2.0 * w[i];
    }
    double rest = 1.0 - alpha * alpha;

    SpectralModel m;
    m.phi = kPi;
    m.meta = "random symmetric";
    m.levels.push_back({0.0, alpha, 0.0, 1, "s"});
    for (int i = 0; i < pairs; ++i) {
        double tau = std::sqrt(w[i] / wsum * rest);
        m.levels.push_back({theta[i], tau, 0.0, 1, ""});
        m.levels.push_back({-theta[i], tau, 0.0, 1, ""});
    }
    return validate(m);
}

// Fully general spectrum: arbitrary gapped thetas, arbitrary weights and a
// random oracle phase. No control over the first moment.
inline SpectralModel random_general_model(std::mt19937_64& rng, int levels,
                                          double alpha, double theta_min) {
    std::uniform_real_distribution<double> u(0.0, 1.0);

    SpectralModel m;
    m.phi = wrap_angle(0.3 + 2.8 * u(rng)) * (u(rng) < 0.5 ? -1.0 : 1.0);
    m.meta = "random general";
    m.levels.push_back({0.0, alpha, 0.0, 1, "s"});

    int rest_levels = levels - 1;
    std::vector<double> w(rest_levels);
    double wsum = 0.0;
    for (int i = 0; i < rest_levels; ++i) {
        w[i] = 0.02 + u(rng);
        wsum += w[i];
    }
    double rest = 1.0 - alpha * alpha;
    for (int i = 0; i < rest_levels; ++i) {
        double sign = u(rng) < 0.5 ? -1.0 : 1.0;
        double th = sign * (theta_min + (kPi - theta_min) * u(rng));
        m.levels.push_back({wrap_angle(th), std::sqrt(w[i] / wsum * rest), 0.0, 1, ""});
    }
    return validate(m);
}

} // namespace qsearch::testing
