#pragma once

#include <utility>
#include <vector>

#include "qsearch/spectral_model.hpp"

namespace qsearch {

// Result of an ancilla-controlled transform of a spectral model.
struct ControlledResult {
    SpectralModel model;
    double zeta = 0.0;         // rotation angle (second transform only)
    double alpha_prime = 0.0;  // overlap of the transformed model
    double b_prime = 0.0;      // broadening of the transformed model
};

// Ancilla transform that kills the first moment: every level (theta, w)
// splits into (theta, w/2) and (-theta, w/2), the oracle phase becomes pi.
// Lambda_1' == 0 exactly (paired terms cancel bit-exactly); alpha, B and
// theta_min are unchanged.
ControlledResult algorithm1(const SpectralModel& model);

// Ancilla transform that shrinks the broadening: levels scale to
// (theta, w sin^2 zeta) and one aggregate level (pi, cos^2 zeta) absorbs
// the rest of the weight, so alpha'' = alpha sin(zeta) and
// (B'')^2 = cos^2 zeta + B^2 sin^2 zeta. Requires |Lambda_1| <= 1e-9 on
// input (apply algorithm1 first otherwise); MomentError if violated.
// zeta must lie in (0, pi/2].
ControlledResult algorithm2(const SpectralModel& model, double zeta);

// Scan of the closed-form cost  Q(zeta) = (pi/4 alpha)(1 + B^2 zeta^2)^{3/2}/zeta
// over a log-spaced grid on [1/(10B), min(pi/2, 10/B)].
struct ZetaScan {
    double zeta_star = 0.0;   // grid argmin
    double q_min = 0.0;       // cost at the argmin
    std::vector<std::pair<double, double>> curve;  // (zeta, Q)
    bool degenerate = false;  // B < 2: shrinking the broadening buys nothing
};

// The minimizer sits at 1/(sqrt(2) B) with Q_min = (3 sqrt(3)/2)(pi B/4 alpha);
// for non-degenerate inputs the scan asserts the grid argmin lands within
// 10% of that and the minimum within 5%. Requires |Lambda_1| <= 1e-9.
ZetaScan optimize_zeta(const SpectralModel& model);

} // namespace qsearch
