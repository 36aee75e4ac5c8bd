#include "qsearch/latticewalk.hpp"

#include <cmath>

#include "qsearch/errors.hpp"

namespace qsearch {

namespace {

using cplx = std::complex<double>;

// Grover coin at every site: v -> 2 <u_c|v> u_c - v, u_c uniform.
void coin_reflect_plane(WalkState& st, int anc) {
    const int side = st.side;
    for (int x = 0; x < side; ++x) {
        for (int y = 0; y < side; ++y) {
            cplx s = 0.5 * (st.at(anc, kRight, x, y) + st.at(anc, kLeft, x, y) +
                            st.at(anc, kUp, x, y) + st.at(anc, kDown, x, y));
            for (int c = 0; c < 4; ++c) st.at(anc, c, x, y) = s - st.at(anc, c, x, y);
        }
    }
}

// Flip-flop shift (self-inverse): amplitude moves one site along its coin
// direction and the direction swaps.
void shift_plane(WalkState& st, int anc, std::vector<cplx>& scratch) {
    const int side = st.side;
    scratch.assign(static_cast<std::size_t>(4) * side * side, cplx(0.0, 0.0));
    auto out = [&](int c, int x, int y) -> cplx& {
        return scratch[(static_cast<std::size_t>(c) * side + x) * side + y];
    };
    for (int x = 0; x < side; ++x) {
        int xp = x + 1 == side ? 0 : x + 1;
        int xm = x == 0 ? side - 1 : x - 1;
        for (int y = 0; y < side; ++y) {
            int yp = y + 1 == side ? 0 : y + 1;
            int ym = y == 0 ? side - 1 : y - 1;
            out(kLeft, xp, y) = st.at(anc, kRight, x, y);
            out(kRight, xm, y) = st.at(anc, kLeft, x, y);
            out(kDown, x, yp) = st.at(anc, kUp, x, y);
            out(kUp, x, ym) = st.at(anc, kDown, x, y);
        }
    }
    for (int c = 0; c < 4; ++c)
        for (int x = 0; x < side; ++x)
            for (int y = 0; y < side; ++y) st.at(anc, c, x, y) = out(c, x, y);
}

// Ancilla weights of the effective target state.
void ancilla_coeffs(const std::optional<ControlledWalk>& controlled, double& c0, double& c1) {
    if (!controlled) {
        c0 = 1.0;
        c1 = 0.0;
    } else if (controlled->kind == ControlledKind::alg1) {
        c0 = c1 = 1.0 / std::sqrt(2.0);
    } else {
        c0 = std::sin(controlled->zeta);
        c1 = std::cos(controlled->zeta);
    }
}

cplx target_overlap(const WalkState& st, int tx, int ty,
                    const std::optional<ControlledWalk>& controlled) {
    double c0, c1;
    ancilla_coeffs(controlled, c0, c1);
    cplx acc(0.0, 0.0);
    for (int c = 0; c < 4; ++c) acc += st.at(0, c, tx, ty);
    acc *= 0.5 * c0;
    if (st.has_ancilla) {
        cplx acc1(0.0, 0.0);
        for (int c = 0; c < 4; ++c) acc1 += st.at(1, c, tx, ty);
        acc += 0.5 * c1 * acc1;
    }
    return acc;
}

} // namespace

double WalkState::norm2() const {
    double acc = 0.0;
    for (const auto& z : amps) acc += std::norm(z);
    return acc;
}

WalkState initial_walk_state(int side, const std::optional<ControlledWalk>& controlled) {
    if (side < 2)
        throw SizeError("side must be >= 2");
    WalkState st;
    st.side = side;
    st.has_ancilla = controlled.has_value();
    const std::size_t plane = static_cast<std::size_t>(4) * side * side;
    st.amps.assign(st.has_ancilla ? 2 * plane : plane, cplx(0.0, 0.0));

    const double amp = 1.0 / (2.0 * side);  // 1 / (2 sqrt(N))
    if (!controlled) {
        for (std::size_t i = 0; i < plane; ++i) st.amps[i] = amp;
    } else if (controlled->kind == ControlledKind::alg1) {
        // |+> x uniform
        const double a = amp / std::sqrt(2.0);
        for (std::size_t i = 0; i < 2 * plane; ++i) st.amps[i] = a;
    } else {
        // |0> x uniform
        for (std::size_t i = 0; i < plane; ++i) st.amps[i] = amp;
    }
    return st;
}

void walk_step(WalkState& st, std::optional<std::pair<int, int>> target,
               const std::optional<ControlledWalk>& controlled) {
    if (st.has_ancilla != controlled.has_value())
        throw TargetError("state and controlled flag disagree about the ancilla");

    if (target) {
        auto [tx, ty] = *target;
        if (tx < 0 || tx >= st.side || ty < 0 || ty >= st.side)
            throw TargetError("target site outside the lattice");
        // Oracle: reflect the (ancilla x coin) vector at the target site
        // about the effective target direction.
        double c0, c1;
        ancilla_coeffs(controlled, c0, c1);
        cplx ov = target_overlap(st, tx, ty, controlled);
        for (int c = 0; c < 4; ++c) st.at(0, c, tx, ty) -= 2.0 * ov * (0.5 * c0);
        if (st.has_ancilla)
            for (int c = 0; c < 4; ++c) st.at(1, c, tx, ty) -= 2.0 * ov * (0.5 * c1);
    }

    static thread_local std::vector<cplx> scratch;
    coin_reflect_plane(st, 0);
    shift_plane(st, 0, scratch);

    if (st.has_ancilla) {
        if (controlled->kind == ControlledKind::alg1) {
            // Inverse walk on the ancilla-1 plane: the shift is self-inverse,
            // so the adjoint is shift first, coin after.
            shift_plane(st, 1, scratch);
            coin_reflect_plane(st, 1);
        } else {
            const std::size_t plane = static_cast<std::size_t>(4) * st.side * st.side;
            for (std::size_t i = plane; i < 2 * plane; ++i) st.amps[i] = -st.amps[i];
        }
    }
}

Trace run_walk(int side, std::pair<int, int> target, long q_max,
               const std::optional<ControlledWalk>& controlled) {
    if (side < 4)
        throw SizeError("side must be >= 4");
    auto [tx, ty] = target;
    if (tx < 0 || tx >= side || ty < 0 || ty >= side)
        throw TargetError("target site outside the lattice");

    WalkState st = initial_walk_state(side, controlled);
    Trace tr;
    tr.engine = "lattice";
    tr.probs.reserve(static_cast<std::size_t>(q_max) + 1);
    tr.site_probs.reserve(static_cast<std::size_t>(q_max) + 1);
    for (long q = 0;; ++q) {
        tr.probs.push_back(std::norm(target_overlap(st, tx, ty, controlled)));
        double site = 0.0;
        for (int anc = 0; anc < (st.has_ancilla ? 2 : 1); ++anc)
            for (int c = 0; c < 4; ++c) site += std::norm(st.at(anc, c, tx, ty));
        tr.site_probs.push_back(site);
        if (q == q_max) break;
        walk_step(st, target, controlled);
    }
    finalize_peaks(tr);
    return tr;
}

} // namespace qsearch
