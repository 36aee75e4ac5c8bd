#include "qsearch/models.hpp"

#include <cmath>
#include <string>

#include "qsearch/angles.hpp"
#include "qsearch/errors.hpp"

namespace qsearch {

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n || n > 62)
        throw SizeError("binomial out of supported range");
    if (k > n - k) k = n - k;
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i)
        c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return c;
}

SpectralModel grover_model(double alpha, double phi_t, double phi_s) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw NormalizationError("alpha must lie in (0, 1)");
    if (phi_t == 0.0 || phi_s == 0.0)
        throw PhaseRangeError("phases must be nonzero");

    SpectralModel m;
    m.phi = wrap_angle(phi_t);
    m.meta = "grover alpha=" + std::to_string(alpha);
    m.levels.push_back({0.0, alpha, 0.0, 1, "s"});
    m.levels.push_back({wrap_angle(-phi_s), std::sqrt(1.0 - alpha * alpha), 0.0, 1, "rest"});
    return validate(m);
}

namespace {

// Detuning of the tensor-product diffusion as a function of gamma:
// A(gamma) = cot(phi/2) - sum_{h>=1} C(n,h) 2^{-n} cot(gamma h).
double kato_detuning(int n, double phi, double gamma) {
    double acc = cot_half(phi);
    for (int h = 1; h <= n; ++h) {
        double w = static_cast<double>(binomial(n, h)) * std::ldexp(1.0, -n);
        acc -= w * std::cos(gamma * h) / std::sin(gamma * h);
    }
    return acc;
}

} // namespace

std::pair<SpectralModel, KatoParams> kato_model(int n, double phi) {
    if (n < 2 || n > 30)
        throw SizeError("n must lie in [2, 30]");
    if (!(std::abs(phi) > 0.0 && std::abs(phi) < kPi))
        throw PhaseRangeError("phi must satisfy 0 < |phi| < pi");

    // Solve A(gamma) = 0 on (0, pi/(n+1)]; the map gamma -> -gamma flips the
    // sign of A together with phi, so negative phi reuses the positive solve.
    const double aphi = std::abs(phi);
    double lo = 1e-9, hi = kPi / (n + 1);
    double flo = kato_detuning(n, aphi, lo);
    double fhi = kato_detuning(n, aphi, hi);
    if (!(flo < 0.0) || !(fhi > 0.0))
        throw NoRootError("detuning has no sign change on (0, pi/(n+1)]");
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (kato_detuning(n, aphi, mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double gamma = 0.5 * (lo + hi);
    if (phi < 0.0) gamma = -gamma;

    SpectralModel m;
    m.phi = phi;
    m.meta = "kato n=" + std::to_string(n);
    const double tau_mag = std::sqrt(std::ldexp(1.0, -n));  // 2^{-n/2}
    for (int h = 0; h <= n; ++h) {
        Level lv;
        lv.theta = h == 0 ? 0.0 : wrap_angle(-2.0 * gamma * h);
        lv.tau_mag = tau_mag;
        lv.multiplicity = static_cast<int>(binomial(n, h));
        lv.label = "h=" + std::to_string(h);
        m.levels.push_back(lv);
    }
    return {validate(m), KatoParams{n, phi, gamma}};
}

SpectralModel akr_model(const AkrParams& params) {
    const int side = params.side;
    if (side < 4)
        throw SizeError("side must be >= 4");

    const double n = static_cast<double>(params.n_sites);
    SpectralModel m;
    m.phi = kPi;
    m.meta = "akr2d side=" + std::to_string(side);
    m.levels.reserve(static_cast<std::size_t>(2 * params.n_sites - 1));
    m.levels.push_back({0.0, std::sqrt(1.0 / n), 0.0, 1, "s"});

    const double pair_tau = std::sqrt(1.0 / (2.0 * n));
    for (int a = 0; a < side; ++a) {
        for (int b = 0; b < side; ++b) {
            if (a == 0 && b == 0) continue;
            double c = 0.5 * (std::cos(2.0 * kPi * a / side) + std::cos(2.0 * kPi * b / side));
            double theta = std::acos(c);
            std::string tag = std::to_string(a) + "," + std::to_string(b);
            // +-theta partners adjacent: their first moments cancel exactly.
            m.levels.push_back({theta, pair_tau, 0.0, 1, "+" + tag});
            m.levels.push_back({theta == kPi ? kPi : -theta, pair_tau, 0.0, 1, "-" + tag});
        }
    }
    return validate(m);
}

SpectralModel akr_model(int side) { return akr_model(AkrParams(side)); }

SpectralModel eigenfind_model(std::span<const double> thetas,
                              std::span<const double> weights,
                              double theta_s, double phi) {
    if (thetas.size() != weights.size())
        throw DimensionError("thetas and weights differ in length");

    SpectralModel m;
    m.phi = phi;
    m.meta = "eigenfind theta_s=" + std::to_string(theta_s);
    bool kernel = false;
    for (std::size_t j = 0; j < thetas.size(); ++j) {
        double shifted = wrap_angle(thetas[j] - theta_s);
        if (std::abs(shifted) < 1e-12) {
            shifted = 0.0;
            kernel = true;
        }
        m.levels.push_back({shifted, std::sqrt(weights[j]), 0.0, 1, "j=" + std::to_string(j)});
    }
    if (!kernel)
        throw EmptyKernelError("no eigenphase shifts to zero under theta_s");
    return validate(m);
}

} // namespace qsearch
