#include "qsearch/spectral_model.hpp"

#include <cmath>
#include <sstream>
#include <unordered_map>

#include "qsearch/angles.hpp"
#include "qsearch/errors.hpp"

namespace qsearch {

namespace {

constexpr double kRenormWindow = 1e-6;
constexpr double kExactWindow = 1e-10;

std::string describe(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

SpectralModel validate(SpectralModel model) {
    if (!std::isfinite(model.phi))
        throw PhaseRangeError("phi is not finite");
    if (model.phi <= -kPi || model.phi > kPi) {
        double wrapped = wrap_angle(model.phi);
        model.warnings.push_back("phi " + describe(model.phi) + " wrapped to " + describe(wrapped));
        model.phi = wrapped;
    }
    if (model.phi == 0.0)
        throw PhaseRangeError("phi = 0: the oracle is the identity and cot(phi/2) diverges");
    if (model.levels.empty())
        throw EmptyKernelError("model has no levels");

    for (Level& lv : model.levels) {
        if (!std::isfinite(lv.theta) || !std::isfinite(lv.tau_mag) || !std::isfinite(lv.tau_phase))
            throw PhaseRangeError("level '" + lv.label + "' has a non-finite field");
        if (lv.tau_mag < 0.0)
            throw NormalizationError("level '" + lv.label + "' has negative tau_mag");
        if (lv.multiplicity < 1)
            throw NormalizationError("level '" + lv.label + "' has multiplicity < 1");
        if (lv.theta < -kPi || lv.theta > kPi) {
            double wrapped = wrap_angle(lv.theta);
            model.warnings.push_back("theta " + describe(lv.theta) + " wrapped to " + describe(wrapped));
            lv.theta = wrapped;
        } else if (lv.theta == -kPi) {
            lv.theta = kPi;  // canonical representative of the -1 eigenvalue
        } else if (lv.theta == 0.0) {
            lv.theta = 0.0;  // clears -0.0
        }
    }

    double total = 0.0;
    for (const Level& lv : model.levels) total += lv.weight();
    double dev = std::abs(total - 1.0);
    if (dev > kRenormWindow)
        throw NormalizationError("level weights sum to " + describe(total));
    if (dev > kExactWindow) {
        double scale = 1.0 / std::sqrt(total);
        for (Level& lv : model.levels) lv.tau_mag *= scale;
        model.warnings.push_back("weights renormalized by " + describe(scale));
    }

    if (kernel_weight(model) <= 0.0)
        throw EmptyKernelError("no theta = 0 level with positive weight");

    return model;
}

double kernel_weight(const SpectralModel& model) {
    double w = 0.0;
    for (const Level& lv : model.levels)
        if (lv.theta == 0.0) w += lv.weight();
    return w;
}

std::vector<WeightedPhase> distinct_weights(const SpectralModel& model) {
    std::vector<WeightedPhase> out;
    out.reserve(model.levels.size());
    std::unordered_map<double, std::size_t> index;
    for (const Level& lv : model.levels) {
        double theta = lv.theta == 0.0 ? 0.0 : lv.theta;
        auto [it, fresh] = index.try_emplace(theta, out.size());
        if (fresh)
            out.push_back({theta, lv.weight()});
        else
            out[it->second].weight += lv.weight();
    }
    return out;
}

SpectralModel merge_degenerate(const SpectralModel& model) {
    SpectralModel merged = model;
    merged.levels.clear();

    std::unordered_map<double, std::size_t> index;
    std::vector<int> group_size;
    for (const Level& lv : model.levels) {
        double theta = lv.theta == 0.0 ? 0.0 : lv.theta;
        auto [it, fresh] = index.try_emplace(theta, merged.levels.size());
        if (fresh) {
            Level g;
            g.theta = theta;
            g.tau_mag = lv.weight();  // accumulate weight here, sqrt at the end
            g.tau_phase = 0.0;
            g.multiplicity = 1;
            g.label = lv.label;
            merged.levels.push_back(g);
            group_size.push_back(1);
        } else {
            merged.levels[it->second].tau_mag += lv.weight();
            group_size[it->second] += 1;
        }
    }
    for (std::size_t k = 0; k < merged.levels.size(); ++k) {
        Level& g = merged.levels[k];
        g.tau_mag = std::sqrt(g.tau_mag);
        if (group_size[k] > 1) g.label += " (merged)";
    }
    return merged;
}

} // namespace qsearch
