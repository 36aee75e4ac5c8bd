#include "qsearch/analysis.hpp"

#include <cmath>

#include "qsearch/angles.hpp"
#include "qsearch/errors.hpp"

namespace qsearch {

Moments moments(const SpectralModel& model) {
    Moments m;
    m.alpha = std::sqrt(kernel_weight(model));

    bool gap_found = false;
    double tmin = kPi;
    double l1 = 0.0, l2 = 0.0;
    for (const WeightedPhase& wp : distinct_weights(model)) {
        if (wp.theta == 0.0 || wp.weight <= 0.0) continue;
        gap_found = true;
        tmin = std::min(tmin, std::abs(wp.theta));
        double c = cot_half(wp.theta);
        l1 += wp.weight * c;
        l2 += wp.weight * c * c;
    }
    if (!gap_found)
        throw GapError("no nonzero eigenphase with positive weight: theta_min undefined");

    m.theta_min = tmin;
    m.lambda1 = l1;
    m.lambda2 = l2;
    return m;
}

Coefficients coefficients(const Moments& m, double phi) {
    if (phi == 0.0)
        throw PhaseRangeError("phi = 0 makes cot(phi/2) singular");
    if (m.lambda2 < 0.0)
        throw MomentError("lambda2 must be non-negative");
    // Cauchy-Schwarz: lambda1^2 <= (1 - alpha^2) lambda2, up to roundoff.
    double bound = (1.0 - m.alpha * m.alpha) * m.lambda2;
    if (m.lambda1 * m.lambda1 > bound + 1e-9 * (1.0 + bound))
        throw MomentError("lambda1^2 exceeds (1 - alpha^2) lambda2");

    Coefficients c;
    c.a = cot_half(phi) + m.lambda1;
    c.b = std::sqrt(1.0 + m.lambda2);
    return c;
}

Prediction predict(const SpectralModel& raw) {
    SpectralModel model = validate(raw);
    Prediction p;
    p.phi = model.phi;
    p.moments = moments(model);
    p.coeffs = coefficients(p.moments, model.phi);

    const double alpha = p.moments.alpha;
    const double a = p.coeffs.a;
    const double b = p.coeffs.b;

    // cot(2 eta) = A / (2 alpha B) with 2 eta in (0, pi).
    double two_eta = std::atan2(1.0, a / (2.0 * alpha * b));
    p.eta = 0.5 * two_eta;
    double tan_eta = std::tan(p.eta);
    p.lambda_plus = (2.0 * alpha / b) * tan_eta;
    p.lambda_minus = -(2.0 * alpha / b) / tan_eta;

    double sin2eta = std::sin(two_eta);
    double sphi = std::sin(0.5 * model.phi);
    p.p_max = (sin2eta * sin2eta) / (b * b * sphi * sphi);
    p.q_max = static_cast<long>(std::floor(kPi / (p.lambda_plus - p.lambda_minus)));
    // Continuous iteration count in the ratio: the floor is a rounding detail
    // of the schedule, not of the expected cost.
    p.query_complexity = (kPi * b * sin2eta / (4.0 * alpha)) / p.p_max;
    p.validity_margin = p.moments.theta_min * b * b / (2.0 * alpha * b + 2.0 * std::abs(a));
    p.margin_warning = p.validity_margin < 10.0;
    return p;
}

Trace overlap_curve_predicted(const SpectralModel& raw, long q_max) {
    SpectralModel model = validate(raw);
    Prediction p = predict(model);

    const double b = p.coeffs.b;
    double sin2eta = std::sin(2.0 * p.eta);
    double envelope = sin2eta / (b * std::abs(std::sin(0.5 * model.phi)));
    double rate = 2.0 * p.moments.alpha / (b * sin2eta);

    Trace tr;
    tr.engine = "predicted";
    tr.probs.reserve(static_cast<std::size_t>(q_max) + 1);
    for (long q = 0; q <= q_max; ++q) {
        double amp = envelope * std::sin(rate * (static_cast<double>(q) + 0.5));
        tr.probs.push_back(amp * amp);
    }
    finalize_peaks(tr);
    return tr;
}

SpectralModel time_reverse(const SpectralModel& raw, double varphi) {
    SpectralModel model = validate(raw);
    model.phi = wrap_angle(-varphi);
    for (Level& lv : model.levels)
        lv.theta = lv.theta == kPi ? kPi : wrap_angle(-lv.theta);
    const std::string tag = " [time-reversed]";
    if (model.meta.size() >= tag.size() &&
        model.meta.compare(model.meta.size() - tag.size(), tag.size(), tag) == 0)
        model.meta.erase(model.meta.size() - tag.size());
    else
        model.meta += tag;
    return validate(model);
}

SpectralModel time_reverse(const SpectralModel& model) {
    return time_reverse(model, model.phi);
}

} // namespace qsearch
