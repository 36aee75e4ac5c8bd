#pragma once

#include <complex>
#include <vector>

#include "qsearch/spectral_model.hpp"
#include "qsearch/trace.hpp"

namespace qsearch {

// One numerically exact eigenpair of S = D_s I_t^phi.
struct EigenPair {
    double lambda = 0.0;                      // exact eigenphase, radians
    std::complex<double> t_overlap{0.0, 0.0}; // <t|lambda_k>, real positive by convention
    std::complex<double> s_overlap{0.0, 0.0}; // <s|lambda_k>
};

// Full eigen-solution restricted to the subspace coupled to |t> and |s>.
// Zero-weight levels never couple; they keep their eigenphase and are
// reported aside, with whatever target weight they carry (zero) summed in
// silent_weight so the completeness checks read
//   sum |s_overlap|^2            == 1
//   sum |t_overlap|^2 + silent   == 1
struct ExactSpectrum {
    std::vector<EigenPair> pairs;
    std::vector<double> silent_phases;
    double silent_weight = 0.0;
};

// Roots of  sum_l w_l cot((lambda - theta_l)/2) = cot(phi/2)  by bisection.
// The left side decreases strictly from +inf to -inf on each open interval
// between circularly consecutive distinct positive-weight thetas, so each
// interval holds exactly one root; the wrap-around interval is solved on an
// unwrapped 2 pi window anchored at the largest pole. Each root is
// bracketed to width <= tol.
//
// The model is merged/validated internally. tol must lie in (0, 1e-6];
// passing something else raises ToleranceError. BracketError if an interval
// is too narrow to bracket at the pole offset.
ExactSpectrum solve_secular(const SpectralModel& model, double tol = 1e-12);

// Overlaps of the eigenvector at a solved root:
//   <l|lambda> = <t|lambda> <l|t> (1 - e^{i phi}) / (1 - e^{i(lambda - theta_l)})
// normalized via  csc^2(phi/2)/<t|lambda>^2 = sum_l w_l csc^2((lambda-theta_l)/2),
// with <t|lambda> chosen real positive. SingularityError if lambda sits
// within tol of a pole.
EigenPair reconstruct_overlaps(const SpectralModel& model, double lambda,
                               double tol = 1e-12);

// <t|S^q|s> = sum_k e^{i q lambda_k} t_k conj(s_k).
std::complex<double> exact_evolution(const ExactSpectrum& spectrum, long q);

// Probability trace from the exact eigen-expansion (engine tag "secular").
Trace secular_trace(const ExactSpectrum& spectrum, long q_max);

// Independent verification of an eigenpair: rebuild the eigenvector's level
// coordinates, apply S directly (rank-one oracle update followed by the
// eigenphase rotation) and return ||S v - e^{i lambda} v||_2.
double residual_check(const SpectralModel& model, const EigenPair& pair);

} // namespace qsearch
