#include "qsearch/secular.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "qsearch/angles.hpp"
#include "qsearch/errors.hpp"

namespace qsearch {

namespace {

using cplx = std::complex<double>;

struct CoupledView {
    double phi = 0.0;
    double alpha = 0.0;
    std::vector<double> theta;   // distinct, positive weight
    std::vector<double> weight;
    std::vector<double> silent_phases;
    double silent_weight = 0.0;
};

CoupledView coupled_view(const SpectralModel& raw) {
    SpectralModel m = merge_degenerate(validate(raw));
    CoupledView v;
    v.phi = m.phi;
    v.alpha = std::sqrt(kernel_weight(m));
    for (const Level& lv : m.levels) {
        double w = lv.weight();
        if (w > 0.0) {
            v.theta.push_back(lv.theta);
            v.weight.push_back(w);
        } else {
            v.silent_phases.push_back(lv.theta);
            v.silent_weight += w;
        }
    }
    return v;
}

// Left side of the root condition minus the right side. Strictly decreasing
// between consecutive poles: every term has derivative -w/2 csc^2 < 0.
double secular_f(const CoupledView& v, double lambda, double cphi) {
    double acc = 0.0;
    for (std::size_t i = 0; i < v.theta.size(); ++i) {
        double x = 0.5 * (lambda - v.theta[i]);
        acc += v.weight[i] * std::cos(x) / std::sin(x);
    }
    return acc - cphi;
}

// Overlap of the target with the eigenvector at lambda, via the exact
// normalization sum. Real positive by phase convention.
double target_overlap(const CoupledView& v, double lambda) {
    double acc = 0.0;
    for (std::size_t i = 0; i < v.theta.size(); ++i)
        acc += v.weight[i] * csc2_half(lambda - v.theta[i]);
    double s = std::sin(0.5 * v.phi);
    return 1.0 / std::sqrt(s * s * acc);
}

EigenPair make_pair(const CoupledView& v, double lambda) {
    EigenPair p;
    p.lambda = lambda;
    double t = target_overlap(v, lambda);
    p.t_overlap = cplx(t, 0.0);
    cplx ratio = (1.0 - std::polar(1.0, v.phi)) / (1.0 - std::polar(1.0, lambda));
    p.s_overlap = v.alpha * t * ratio;
    return p;
}

void check_poles(const CoupledView& v, double lambda, double tol) {
    for (double th : v.theta) {
        double d = std::abs(wrap_angle(lambda - th));
        if (d < tol)
            throw SingularityError("lambda within tol of eigenphase pole");
    }
}

} // namespace

ExactSpectrum solve_secular(const SpectralModel& model, double tol) {
    if (!(tol > 0.0) || tol > 1e-6)
        throw ToleranceError("tol must lie in (0, 1e-6]");

    CoupledView v = coupled_view(model);
    const std::size_t K = v.theta.size();

    // Sort poles; weights follow.
    std::vector<std::size_t> order(K);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return v.theta[a] < v.theta[b]; });
    std::vector<double> poles(K), ws(K);
    for (std::size_t i = 0; i < K; ++i) {
        poles[i] = v.theta[order[i]];
        ws[i] = v.weight[order[i]];
    }
    CoupledView sorted = v;
    sorted.theta = poles;
    sorted.weight = ws;

    const double cphi = cot_half(v.phi);
    const double off = std::max(1e-13, tol / 10.0);

    ExactSpectrum out;
    out.silent_phases = v.silent_phases;
    out.silent_weight = v.silent_weight;
    out.pairs.reserve(K);

    for (std::size_t i = 0; i < K; ++i) {
        double a = poles[i];
        double b = (i + 1 < K) ? poles[i + 1] : poles[0] + 2.0 * kPi;
        if (b - a <= 2.0 * off)
            throw BracketError("inter-pole interval too narrow to bracket");

        double lo = a + off, hi = b - off;
        double lambda;
        if (secular_f(sorted, lo, cphi) <= 0.0) {
            lambda = a + 0.5 * off;  // root hugging the lower pole
        } else if (secular_f(sorted, hi, cphi) >= 0.0) {
            lambda = b - 0.5 * off;  // root hugging the upper pole
        } else {
            for (int it = 0; it < 80 && hi - lo > tol; ++it) {
                double mid = 0.5 * (lo + hi);
                if (secular_f(sorted, mid, cphi) > 0.0)
                    lo = mid;
                else
                    hi = mid;
            }
            lambda = 0.5 * (lo + hi);
        }
        out.pairs.push_back(make_pair(sorted, wrap_angle(lambda)));
    }
    return out;
}

EigenPair reconstruct_overlaps(const SpectralModel& model, double lambda, double tol) {
    CoupledView v = coupled_view(model);
    check_poles(v, lambda, tol <= 0.0 ? 1e-12 : tol);
    return make_pair(v, lambda);
}

std::complex<double> exact_evolution(const ExactSpectrum& spectrum, long q) {
    cplx acc(0.0, 0.0);
    for (const EigenPair& p : spectrum.pairs)
        acc += std::polar(1.0, static_cast<double>(q) * p.lambda) * p.t_overlap * std::conj(p.s_overlap);
    return acc;
}

Trace secular_trace(const ExactSpectrum& spectrum, long q_max) {
    Trace tr;
    tr.engine = "secular";
    tr.probs.reserve(static_cast<std::size_t>(q_max) + 1);
    for (long q = 0; q <= q_max; ++q)
        tr.probs.push_back(std::norm(exact_evolution(spectrum, q)));
    finalize_peaks(tr);
    return tr;
}

double residual_check(const SpectralModel& model, const EigenPair& pair) {
    CoupledView v = coupled_view(model);
    check_poles(v, pair.lambda, 1e-13);

    const std::size_t K = v.theta.size();
    std::vector<cplx> c(K);
    cplx numer = 1.0 - std::polar(1.0, v.phi);
    for (std::size_t i = 0; i < K; ++i) {
        cplx denom = 1.0 - std::polar(1.0, pair.lambda - v.theta[i]);
        c[i] = pair.t_overlap * std::sqrt(v.weight[i]) * numer / denom;
    }

    // Apply S in level coordinates: rank-one oracle update, then rotation.
    cplx t_amp(0.0, 0.0);
    for (std::size_t i = 0; i < K; ++i)
        t_amp += std::sqrt(v.weight[i]) * c[i];
    cplx f = (1.0 - std::polar(1.0, v.phi)) * t_amp;

    double resid2 = 0.0;
    cplx rot = std::polar(1.0, pair.lambda);
    for (std::size_t i = 0; i < K; ++i) {
        cplx after = std::polar(1.0, v.theta[i]) * (c[i] - f * std::sqrt(v.weight[i]));
        resid2 += std::norm(after - rot * c[i]);
    }
    return std::sqrt(resid2);
}

} // namespace qsearch
