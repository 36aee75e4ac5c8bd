#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qsearch/trace.hpp"

namespace qsearch {

// Row-major dense complex matrix. This module is the slow trusted oracle:
// it builds the actual unitaries and multiplies them out, no structure
// exploited beyond rank-one updates. Dimension is capped at 8192.
struct DenseUnitary {
    std::size_t dim = 0;
    std::vector<std::complex<double>> entries;

    DenseUnitary() = default;
    explicit DenseUnitary(std::size_t d)
        : dim(d), entries(d * d, std::complex<double>(0.0, 0.0)) {}

    std::complex<double>& at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }
    const std::complex<double>& at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
};

struct DenseState {
    std::vector<std::complex<double>> amplitudes;

    std::size_t dim() const { return amplitudes.size(); }
    double norm2() const;
};

inline constexpr std::size_t kDenseCap = 8192;

DenseState basis_state(std::size_t dim, std::size_t index);
DenseState uniform_state(std::size_t dim);

// max |(U^dagger U - 1)_{ij}|
double unitarity_residual(const DenseUnitary& u);

// I_psi^omega = 1 - (1 - e^{i omega}) |psi><psi| for a basis target...
DenseUnitary build_selective(std::size_t dim, std::size_t target_index, double omega);
// ...and for an arbitrary normalized state.
DenseUnitary build_selective_state(const DenseState& psi, double omega);

// e^{-i phi_s} I_s^{phi_s} with |s> the uniform state: the two-phase
// rotation diffusion operator with eigenphase 0 on |s> and -phi_s elsewhere.
DenseUnitary build_grover_diffusion(std::size_t dim, double phi_s);

// (H Z_gamma H)^{x n} with Z_gamma = diag(1, e^{-2 i gamma}) up to the global
// phase convention: eigenvectors H^{x n}|j>, eigenphases wrap(-2 gamma h(j)).
// SizeError for n > 12 (dense cap 4096).
DenseUnitary build_kato_dense(int n, double gamma);

enum class ControlledKind { alg1, alg2 };

// Controlled diffusion on the doubled space:
//   alg1: diag(U, U^dagger)          (ancilla-controlled U then U^dagger)
//   alg2: diag(U, -1)                (controlled U followed by Z on the ancilla)
DenseUnitary build_controlled_dense(const DenseUnitary& base, ControlledKind which,
                                    double zeta = 0.0);

// Matching states on the doubled space: the effective target is
// |+>|t> (alg1) or (sin zeta |0> + cos zeta |1>)|t> (alg2); the start state
// is |+>|s> (alg1) or |0>|s> (alg2).
DenseState lift_target(const DenseState& t, ControlledKind which, double zeta = 0.0);
DenseState lift_start(const DenseState& s, ControlledKind which);

// D * I_t^omega as a rank-one update of D, in O(dim^2).
DenseUnitary multiply_selective_right(const DenseUnitary& d, const DenseState& t,
                                      double omega);

// Iterates op on start, recording |<t_state|psi_q>|^2 (engine tag "dense").
Trace evolve_dense(const DenseUnitary& op, const DenseState& start,
                   const DenseState& t_state, long q_max);

} // namespace qsearch
