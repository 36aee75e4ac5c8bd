#pragma once

#include "qsearch/spectral_model.hpp"
#include "qsearch/trace.hpp"

namespace qsearch {

// Summary statistics of the spectrum seen from the target state.
//   alpha     = |<t|s>|, the root of the zero-phase weight
//   theta_min = smallest |theta| over nonzero-phase levels with weight > 0
//   lambda_p  = sum over those levels of weight * cot^p(theta/2)
struct Moments {
    double alpha = 0.0;
    double theta_min = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

// A = cot(phi/2) + lambda1 (detuning), B = sqrt(1 + lambda2) (broadening).
struct Coefficients {
    double a = 0.0;
    double b = 1.0;
};

// Closed-form performance prediction for the two smallest eigenphases
// lambda+- of S and the success-probability envelope they generate.
struct Prediction {
    double eta = 0.0;           // rotation angle, cot(2 eta) = A / (2 alpha B)
    double lambda_plus = 0.0;   // +(2 alpha / B) tan(eta)
    double lambda_minus = 0.0;  // -(2 alpha / B) cot(eta)
    double p_max = 0.0;         // sin^2(2 eta) / (B^2 sin^2(phi/2))
    long q_max = 0;             // floor(pi / (lambda+ - lambda-))
    double query_complexity = 0.0;  // (pi/4 alpha) B^3 sin^2(phi/2) / sin(2 eta)
    double validity_margin = 0.0;   // theta_min B^2 / (2 alpha B + 2|A|)
    bool margin_warning = false;    // margin < 10: outside the trusted regime

    Moments moments;
    Coefficients coeffs;
    double phi = 0.0;
};

// Moments of a validated model. Computed exactly from the level data, with
// no small-alpha truncation. GapError if every positive-weight level sits
// at theta == 0.
Moments moments(const SpectralModel& model);

// PhaseRangeError if phi == 0 (cot(phi/2) diverges and the oracle would be
// the identity).
Coefficients coefficients(const Moments& m, double phi);

Prediction predict(const SpectralModel& model);

// Predicted curve |<t|S^q|s>|^2 for q = 0..q_max using the two-eigenphase
// envelope with q' = q + 1/2.
Trace overlap_curve_predicted(const SpectralModel& model, long q_max);

// Maps the spectrum of D_t (levels holding overlaps <j|s>) to the
// equivalent forward model for T = I_s^varphi D_t: source and target states
// swap roles, phi -> -varphi and every theta -> -theta. Applying the map
// twice with the matching phase returns the original model.
SpectralModel time_reverse(const SpectralModel& model, double varphi);

// Convenience overload using model.phi as varphi, making the map an
// involution: time_reverse(time_reverse(m)) == m.
SpectralModel time_reverse(const SpectralModel& model);

} // namespace qsearch
