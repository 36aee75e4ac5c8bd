#pragma once

#include <complex>
#include <vector>

#include "qsearch/spectral_model.hpp"
#include "qsearch/trace.hpp"

namespace qsearch {

// State vector in the D_s eigenbasis: coeffs[l] = <l|psi>. Unit norm.
struct LevelState {
    std::vector<std::complex<double>> coeffs;
    double norm2() const;
};

// Iterates S = D_s I_t^phi on |s> for q_max steps, recording
// P_t(q) = |<t|psi_q>|^2 before each step and after the final one
// (q_max + 1 entries). Cost is O(L) per step, independent of the ambient
// Hilbert-space dimension. Engine tag "iterated".
Trace iterate(const SpectralModel& model, long q_max);

// Time-reversed run: starts from |t> and iterates S^dagger, recording the
// fidelity |<s|psi_q>|^2. By unitarity this equals iterate()'s curve; it is
// the concrete procedure for steering a known state onto a target
// eigenstate. Engine tag "iterated".
Trace iterate_reversed(const SpectralModel& model, long q_max);

} // namespace qsearch
