#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "qsearch/densesim.hpp"  // ControlledKind
#include "qsearch/trace.hpp"

namespace qsearch {

// Coin directions of the flip-flop walk.
enum Coin : int { kRight = 0, kLeft = 1, kUp = 2, kDown = 3 };

struct ControlledWalk {
    ControlledKind kind = ControlledKind::alg2;
    double zeta = 0.0;  // ancilla rotation for alg2; ignored for alg1
};

// Amplitude field over (ancilla x coin x site) on the side x side torus.
// Without an ancilla the leading index is fixed to 0.
struct WalkState {
    int side = 0;
    bool has_ancilla = false;
    std::vector<std::complex<double>> amps;  // [anc][coin][x][y], row-major

    std::complex<double>& at(int anc, int coin, int x, int y) {
        return amps[((static_cast<std::size_t>(anc) * 4 + coin) * side + x) * side + y];
    }
    const std::complex<double>& at(int anc, int coin, int x, int y) const {
        return amps[((static_cast<std::size_t>(anc) * 4 + coin) * side + x) * side + y];
    }
    double norm2() const;
};

// Uniform start state: |u_c>|F0>|F0> (amplitude 1/(2 sqrt(N)) everywhere),
// tensored with |+> (alg1) or |0> (alg2) when controlled.
WalkState initial_walk_state(int side, const std::optional<ControlledWalk>& controlled = {});

// One application of L_{s'} I_{t'} (oracle first):
//   1. at the target site, reflect the coin vector about its uniform
//      component (sign flip of the |u_c> part);
//   2. at every site, reflect the coin vector about uniform (Grover coin);
//   3. flip-flop shift with direction swap, wrapping at the torus edges:
//      (right, x, y) -> (left, x+1, y), (left, x, y) -> (right, x-1, y),
//      (up, x, y) -> (down, y+1), (down, x, y) -> (up, y-1).
// Passing no target skips step 1 (free walk). With `controlled` set, the
// oracle reflects about the ancilla-extended target and the walk acts per
// plane: alg1 runs the forward walk on ancilla 0 and the inverse walk on
// ancilla 1; alg2 runs the walk on ancilla 0 and multiplies ancilla 1 by -1.
// TargetError if the target lies outside the lattice.
void walk_step(WalkState& state, std::optional<std::pair<int, int>> target,
               const std::optional<ControlledWalk>& controlled = {});

// Full run from the uniform start. probs holds |<t'|psi_q>|^2 (overlap with
// the uniform-coin target state); site_probs the plain target-site
// probability, which is never smaller. Engine tag "lattice".
Trace run_walk(int side, std::pair<int, int> target, long q_max,
               const std::optional<ControlledWalk>& controlled = {});

} // namespace qsearch
