#pragma once

#include <complex>
#include <string>
#include <vector>

namespace qsearch {

// One eigenphase level of the diffusion operator D_s, together with the
// overlap of its eigenvector(s) with the target state. A multiplicity m > 1
// stands for m mutually orthogonal eigenvectors sharing the same eigenphase,
// each with the same |<l|t>|.
struct Level {
    double theta = 0.0;       // eigenphase in radians, (-pi, pi]
    double tau_mag = 0.0;     // |<l|t>| >= 0
    double tau_phase = 0.0;   // arg <l|t>
    int multiplicity = 1;
    std::string label;

    // Total |<.|t>|^2 weight carried by this level.
    double weight() const { return static_cast<double>(multiplicity) * tau_mag * tau_mag; }
    std::complex<double> tau() const { return std::polar(tau_mag, tau_phase); }
};

// Eigenspectrum description of the search operator S = D_s I_t^phi:
// the oracle phase phi and the (theta, <l|t>) levels of D_s.
//
// Invariants after validate():
//   - phi in (-pi, pi], phi != 0
//   - all theta in (-pi, pi]
//   - sum of level weights == 1 (within 1e-10)
//   - at least one theta == 0 level with positive weight (defines |s>)
struct SpectralModel {
    double phi = 0.0;
    std::vector<Level> levels;
    std::string meta;

    // Non-fatal notes produced by validate() (angle wrapping, weight
    // renormalization). Not part of the serialized schema.
    std::vector<std::string> warnings;
};

// Checks the invariants above and returns the (possibly canonicalized)
// model: angles outside (-pi, pi] are wrapped with a warning, and a weight
// sum within 1e-6 of one is renormalized. A sum further from one raises
// NormalizationError; a missing zero-phase level raises EmptyKernelError;
// bad angles or phi == 0 raise PhaseRangeError.
SpectralModel validate(SpectralModel model);

// Collapses levels with exactly equal theta into a single level of the
// summed weight (tau_mag = sqrt(sum), tau_phase = 0, multiplicity = 1).
// Within a degenerate eigenspace only the projection of |t> takes part in
// the dynamics, so this loses nothing. First-occurrence order is kept.
SpectralModel merge_degenerate(const SpectralModel& model);

// Distinct-theta weight view used by the moment and secular machinery:
// exact-equality grouping, first-occurrence order (which callers arrange
// so that +-theta partners sit next to each other and cancel exactly).
struct WeightedPhase {
    double theta;
    double weight;
};
std::vector<WeightedPhase> distinct_weights(const SpectralModel& model);

// Total weight at theta == 0 (alpha^2) without further validation.
double kernel_weight(const SpectralModel& model);

} // namespace qsearch
