#include "qsearch/controlled.hpp"

#include <cmath>

#include "qsearch/analysis.hpp"
#include "qsearch/angles.hpp"
#include "qsearch/errors.hpp"

namespace qsearch {

ControlledResult algorithm1(const SpectralModel& raw) {
    SpectralModel model = validate(raw);

    ControlledResult res;
    res.model.phi = kPi;
    res.model.meta = model.meta.empty() ? "alg1" : model.meta + " +alg1";
    res.model.levels.reserve(2 * model.levels.size());
    for (const Level& lv : model.levels) {
        Level up = lv, down = lv;
        up.tau_mag = lv.tau_mag / std::sqrt(2.0);
        down.tau_mag = up.tau_mag;
        down.theta = lv.theta == kPi ? kPi : (lv.theta == 0.0 ? 0.0 : -lv.theta);
        up.label = lv.label + "|0";
        down.label = lv.label + "|1";
        res.model.levels.push_back(up);
        res.model.levels.push_back(down);
    }
    res.model = validate(res.model);

    Moments m = moments(res.model);
    res.zeta = 0.0;
    res.alpha_prime = m.alpha;
    res.b_prime = std::sqrt(1.0 + m.lambda2);
    return res;
}

ControlledResult algorithm2(const SpectralModel& raw, double zeta) {
    SpectralModel model = validate(raw);
    if (!(zeta > 0.0 && zeta <= 0.5 * kPi))
        throw PhaseRangeError("zeta must lie in (0, pi/2]");

    Moments m_in = moments(model);
    if (std::abs(m_in.lambda1) > 1e-9)
        throw MomentError("algorithm2 requires lambda1 = 0; apply algorithm1 first");

    const double s = std::sin(zeta);

    ControlledResult res;
    res.model.phi = kPi;
    res.model.meta = model.meta.empty() ? "alg2" : model.meta + " +alg2";
    res.model.levels.reserve(model.levels.size() + 1);
    double scaled_total = 0.0;
    for (const Level& lv : model.levels) {
        Level nl = lv;
        nl.tau_mag = lv.tau_mag * s;
        res.model.levels.push_back(nl);
        scaled_total += nl.weight();
    }
    // The ancilla branch absorbs exactly the rest of the weight, keeping the
    // total at one in floating point.
    Level anc;
    anc.theta = kPi;
    anc.tau_mag = std::sqrt(std::max(0.0, 1.0 - scaled_total));
    anc.label = "ancilla";
    res.model.levels.push_back(anc);
    res.model = validate(res.model);

    Moments m_out = moments(res.model);
    res.zeta = zeta;
    res.alpha_prime = m_out.alpha;
    res.b_prime = std::sqrt(1.0 + m_out.lambda2);
    return res;
}

ZetaScan optimize_zeta(const SpectralModel& raw) {
    SpectralModel model = validate(raw);
    Moments m = moments(model);
    if (std::abs(m.lambda1) > 1e-9)
        throw MomentError("optimize_zeta requires lambda1 = 0; apply algorithm1 first");

    const double b = std::sqrt(1.0 + m.lambda2);
    const double alpha = m.alpha;
    const double zlo = 1.0 / (10.0 * b);
    const double zhi = std::min(0.5 * kPi, 10.0 / b);
    const int points = 200;

    ZetaScan scan;
    scan.degenerate = b < 2.0;
    scan.curve.reserve(points);
    double best = 0.0, best_q = 0.0;
    for (int i = 0; i < points; ++i) {
        double t = static_cast<double>(i) / (points - 1);
        double z = zlo * std::pow(zhi / zlo, t);
        double u = 1.0 + b * b * z * z;
        double q = (kPi / (4.0 * alpha)) * u * std::sqrt(u) / z;
        scan.curve.emplace_back(z, q);
        if (i == 0 || q < best_q) {
            best = z;
            best_q = q;
        }
    }
    scan.zeta_star = best;
    scan.q_min = best_q;

    if (!scan.degenerate) {
        const double z_ref = 1.0 / (std::sqrt(2.0) * b);
        const double q_ref = 1.5 * std::sqrt(3.0) * (kPi * b / (4.0 * alpha));
        if (std::abs(scan.zeta_star - z_ref) > 0.10 * z_ref)
            throw NoRootError("zeta grid minimum strayed from 1/(sqrt(2) B)");
        if (std::abs(scan.q_min - q_ref) > 0.05 * q_ref)
            throw NoRootError("zeta cost minimum strayed from (3 sqrt(3)/2)(pi B/4 alpha)");
    }
    return scan;
}

} // namespace qsearch
