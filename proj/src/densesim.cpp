#include "qsearch/densesim.hpp"

#include <cmath>

#include "qsearch/angles.hpp"
#include "qsearch/errors.hpp"

namespace qsearch {

namespace {

using cplx = std::complex<double>;

void check_dim(std::size_t dim) {
    if (dim == 0 || dim > kDenseCap)
        throw SizeError("dense dimension outside (0, 8192]");
}

std::vector<cplx> apply(const DenseUnitary& u, const std::vector<cplx>& v) {
    std::vector<cplx> out(u.dim, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < u.dim; ++i) {
        cplx acc(0.0, 0.0);
        const cplx* row = &u.entries[i * u.dim];
        for (std::size_t j = 0; j < u.dim; ++j) acc += row[j] * v[j];
        out[i] = acc;
    }
    return out;
}

} // namespace

double DenseState::norm2() const {
    double acc = 0.0;
    for (const auto& z : amplitudes) acc += std::norm(z);
    return acc;
}

DenseState basis_state(std::size_t dim, std::size_t index) {
    check_dim(dim);
    if (index >= dim)
        throw IndexError("basis index out of range");
    DenseState s;
    s.amplitudes.assign(dim, cplx(0.0, 0.0));
    s.amplitudes[index] = cplx(1.0, 0.0);
    return s;
}

DenseState uniform_state(std::size_t dim) {
    check_dim(dim);
    DenseState s;
    s.amplitudes.assign(dim, cplx(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
    return s;
}

double unitarity_residual(const DenseUnitary& u) {
    double worst = 0.0;
    for (std::size_t i = 0; i < u.dim; ++i) {
        for (std::size_t j = 0; j < u.dim; ++j) {
            cplx acc(0.0, 0.0);
            for (std::size_t k = 0; k < u.dim; ++k)
                acc += std::conj(u.at(k, i)) * u.at(k, j);
            if (i == j) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

DenseUnitary build_selective(std::size_t dim, std::size_t target_index, double omega) {
    check_dim(dim);
    if (target_index >= dim)
        throw IndexError("target index out of range");
    DenseUnitary u(dim);
    for (std::size_t i = 0; i < dim; ++i) u.at(i, i) = 1.0;
    u.at(target_index, target_index) = std::polar(1.0, omega);
    return u;
}

DenseUnitary build_selective_state(const DenseState& psi, double omega) {
    check_dim(psi.dim());
    const std::size_t dim = psi.dim();
    DenseUnitary u(dim);
    cplx f = 1.0 - std::polar(1.0, omega);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j)
            u.at(i, j) = -f * psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
        u.at(i, i) += 1.0;
    }
    return u;
}

DenseUnitary build_grover_diffusion(std::size_t dim, double phi_s) {
    DenseUnitary u = build_selective_state(uniform_state(dim), phi_s);
    cplx g = std::polar(1.0, -phi_s);
    for (auto& e : u.entries) e *= g;
    return u;
}

DenseUnitary build_kato_dense(int n, double gamma) {
    if (n < 1 || n > 12)
        throw SizeError("dense tensor-product diffusion capped at n = 12");
    const std::size_t dim = std::size_t{1} << n;

    // Single-qubit block H diag(1, e^{-2 i gamma}) H = [[1+z, 1-z], [1-z, 1+z]]/2.
    cplx z = std::polar(1.0, -2.0 * gamma);
    cplx k[2][2] = {{0.5 * (1.0 + z), 0.5 * (1.0 - z)},
                    {0.5 * (1.0 - z), 0.5 * (1.0 + z)}};

    DenseUnitary u(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            cplx prod(1.0, 0.0);
            for (int b = 0; b < n; ++b)
                prod *= k[(i >> b) & 1u][(j >> b) & 1u];
            u.at(i, j) = prod;
        }
    }
    return u;
}

DenseUnitary build_controlled_dense(const DenseUnitary& base, ControlledKind which,
                                    double /*zeta*/) {
    const std::size_t dim = base.dim;
    if (dim == 0 || 2 * dim > kDenseCap)
        throw SizeError("controlled operator exceeds the dense cap");

    DenseUnitary u(2 * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            u.at(i, j) = base.at(i, j);
            if (which == ControlledKind::alg1)
                u.at(dim + i, dim + j) = std::conj(base.at(j, i));
        }
        if (which == ControlledKind::alg2)
            u.at(dim + i, dim + i) = -1.0;
    }
    return u;
}

DenseState lift_target(const DenseState& t, ControlledKind which, double zeta) {
    const std::size_t dim = t.dim();
    double c0, c1;
    if (which == ControlledKind::alg1) {
        c0 = c1 = 1.0 / std::sqrt(2.0);
    } else {
        c0 = std::sin(zeta);
        c1 = std::cos(zeta);
    }
    DenseState out;
    out.amplitudes.resize(2 * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        out.amplitudes[i] = c0 * t.amplitudes[i];
        out.amplitudes[dim + i] = c1 * t.amplitudes[i];
    }
    return out;
}

DenseState lift_start(const DenseState& s, ControlledKind which) {
    const std::size_t dim = s.dim();
    DenseState out;
    out.amplitudes.assign(2 * dim, cplx(0.0, 0.0));
    if (which == ControlledKind::alg1) {
        double r = 1.0 / std::sqrt(2.0);
        for (std::size_t i = 0; i < dim; ++i) {
            out.amplitudes[i] = r * s.amplitudes[i];
            out.amplitudes[dim + i] = r * s.amplitudes[i];
        }
    } else {
        for (std::size_t i = 0; i < dim; ++i)
            out.amplitudes[i] = s.amplitudes[i];
    }
    return out;
}

DenseUnitary multiply_selective_right(const DenseUnitary& d, const DenseState& t,
                                      double omega) {
    if (d.dim != t.dim())
        throw DimensionError("operator and state dimensions differ");
    // D I_t^omega = D - (1 - e^{i omega}) (D t) t^dagger
    std::vector<cplx> dt = apply(d, t.amplitudes);
    cplx f = 1.0 - std::polar(1.0, omega);
    DenseUnitary out = d;
    for (std::size_t i = 0; i < d.dim; ++i) {
        cplx fi = f * dt[i];
        for (std::size_t j = 0; j < d.dim; ++j)
            out.at(i, j) -= fi * std::conj(t.amplitudes[j]);
    }
    return out;
}

Trace evolve_dense(const DenseUnitary& op, const DenseState& start,
                   const DenseState& t_state, long q_max) {
    if (op.dim != start.dim() || op.dim != t_state.dim())
        throw DimensionError("operator and state dimensions differ");

    std::vector<cplx> psi = start.amplitudes;
    Trace tr;
    tr.engine = "dense";
    tr.probs.reserve(static_cast<std::size_t>(q_max) + 1);
    for (long q = 0;; ++q) {
        cplx ov(0.0, 0.0);
        for (std::size_t i = 0; i < op.dim; ++i)
            ov += std::conj(t_state.amplitudes[i]) * psi[i];
        tr.probs.push_back(std::norm(ov));
        if (q == q_max) break;
        psi = apply(op, psi);
    }
    finalize_peaks(tr);
    return tr;
}

} // namespace qsearch
