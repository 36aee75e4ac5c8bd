#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "qsearch/spectral_model.hpp"

namespace qsearch {

// Single-qubit-rotation diffusion parameters: gamma solves A(gamma) = 0 on
// (0, pi/(n+1)] so the detuning vanishes exactly for the solved model.
struct KatoParams {
    int n = 0;
    double phi = 0.0;
    double gamma = 0.0;
};

struct AkrParams {
    int side = 0;        // lattice side sqrt(N), >= 4
    long n_sites = 0;    // N = side^2

    explicit AkrParams(int side_) : side(side_), n_sites(static_cast<long>(side_) * side_) {}
};

// Two-phase rotation search: D_s = e^{-i phi_s} I_s^{phi_s}, oracle phase
// phi_t. Levels: (0, alpha^2) and (-phi_s, 1 - alpha^2).
SpectralModel grover_model(double alpha, double phi_t, double phi_s);

// Tensor-product diffusion over n qubits: n+1 levels at theta = wrap(-2 gamma h)
// with binomial weights C(n,h)/2^n, alpha = 2^{-n/2}. gamma is solved by
// bisection so that cot(phi/2) + Lambda_1(gamma) = 0; NoRootError if the
// admissible interval has no sign change (phi too close to +-pi).
// Requires 2 <= n <= 30 and 0 < |phi| < pi.
std::pair<SpectralModel, KatoParams> kato_model(int n, double phi);

// Flip-flop walk on the sqrt(N) x sqrt(N) torus, reduced to its invariant
// subspace: level (0, 1/N) plus pairs (+-theta_ab, 1/(2N)) for every
// (a,b) != (0,0), where 2 cos(theta_ab) = cos(2 pi a / side) + cos(2 pi b / side).
// phi = pi. The +-theta partners are emitted adjacently so their first
// moments cancel exactly.
SpectralModel akr_model(const AkrParams& params);
SpectralModel akr_model(int side);

// Shifts a known eigenphase theta_s to zero and builds the model whose
// time-reversed evolution steers a preparable state onto that eigenstate.
// weights must be normalized and exactly one shifted phase must vanish.
SpectralModel eigenfind_model(std::span<const double> thetas,
                              std::span<const double> weights,
                              double theta_s, double phi);

// Exact binomial C(n, k) for n <= 62.
std::uint64_t binomial(int n, int k);

} // namespace qsearch
