#include "qsearch/simulate.hpp"

#include <cmath>
#include <complex>

#include "qsearch/angles.hpp"
#include "qsearch/errors.hpp"

namespace qsearch {

namespace {

using cplx = std::complex<double>;

struct Engine {
    double phi = 0.0;
    double alpha = 0.0;
    std::vector<double> theta;
    std::vector<double> tau;    // real after merging
    std::vector<cplx> rot;      // e^{i theta}

    explicit Engine(const SpectralModel& raw) {
        SpectralModel m = merge_degenerate(validate(raw));
        phi = m.phi;
        alpha = std::sqrt(kernel_weight(m));
        for (const Level& lv : m.levels) {
            theta.push_back(lv.theta);
            tau.push_back(lv.tau_mag);
            rot.push_back(std::polar(1.0, lv.theta));
        }
    }

    cplx target_amp(const std::vector<cplx>& c) const {
        cplx acc(0.0, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) acc += tau[i] * c[i];
        return acc;
    }
};

} // namespace

double LevelState::norm2() const {
    double acc = 0.0;
    for (const auto& z : coeffs) acc += std::norm(z);
    return acc;
}

Trace iterate(const SpectralModel& raw, long q_max) {
    Engine e(raw);
    const std::size_t L = e.tau.size();

    // |s> in level coordinates: tau_l / alpha on the kernel, zero elsewhere.
    std::vector<cplx> c(L, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < L; ++i)
        if (e.theta[i] == 0.0) c[i] = cplx(e.tau[i] / e.alpha, 0.0);

    const cplx f = 1.0 - std::polar(1.0, e.phi);

    Trace tr;
    tr.engine = "iterated";
    tr.probs.reserve(static_cast<std::size_t>(q_max) + 1);
    for (long q = 0;; ++q) {
        cplx ov = e.target_amp(c);
        tr.probs.push_back(std::norm(ov));
        if (q == q_max) break;
        for (std::size_t i = 0; i < L; ++i)
            c[i] = e.rot[i] * (c[i] - f * ov * e.tau[i]);
    }
    finalize_peaks(tr);
    return tr;
}

Trace iterate_reversed(const SpectralModel& raw, long q_max) {
    Engine e(raw);
    const std::size_t L = e.tau.size();

    // Start from |t>; record fidelity with |s> while applying S^dagger.
    std::vector<cplx> c(L);
    for (std::size_t i = 0; i < L; ++i) c[i] = cplx(e.tau[i], 0.0);

    std::vector<double> s_coord(L, 0.0);
    for (std::size_t i = 0; i < L; ++i)
        if (e.theta[i] == 0.0) s_coord[i] = e.tau[i] / e.alpha;

    const cplx f = 1.0 - std::polar(1.0, -e.phi);

    Trace tr;
    tr.engine = "iterated";
    tr.probs.reserve(static_cast<std::size_t>(q_max) + 1);
    for (long q = 0;; ++q) {
        cplx fid(0.0, 0.0);
        for (std::size_t i = 0; i < L; ++i) fid += s_coord[i] * c[i];
        tr.probs.push_back(std::norm(fid));
        if (q == q_max) break;
        // S^dagger = I_t^{-phi} D_s^dagger: rotate back first, then the oracle.
        for (std::size_t i = 0; i < L; ++i) c[i] = std::conj(e.rot[i]) * c[i];
        cplx ov = e.target_amp(c);
        for (std::size_t i = 0; i < L; ++i) c[i] -= f * ov * e.tau[i];
    }
    finalize_peaks(tr);
    return tr;
}

} // namespace qsearch
