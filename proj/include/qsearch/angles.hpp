#pragma once

#include <cmath>

namespace qsearch {

inline constexpr double kPi = 3.14159265358979323846;

// Wrap an angle into (-pi, pi]. -pi maps to +pi; -0.0 is canonicalized to
// +0.0 so that exact-equality grouping of eigenphases treats them as one.
inline double wrap_angle(double x) {
    double y = std::fmod(x, 2.0 * kPi);
    if (y <= -kPi) y += 2.0 * kPi;
    if (y > kPi) y -= 2.0 * kPi;
    if (y == 0.0) return 0.0;
    return y;
}

// cot(theta/2) for theta in (-pi, pi], theta != 0.
//
// Computed on |theta| with the sign applied afterwards, so that
// cot_half(-t) == -cot_half(t) holds bit-exactly; symmetric +-theta pairs
// with equal weights then cancel to exactly zero in moment sums.
// theta == +-pi returns exactly 0 (eigenvalue -1).
inline double cot_half(double theta) {
    double a = std::abs(theta);
    if (a == kPi) return 0.0;
    double c = std::cos(0.5 * a) / std::sin(0.5 * a);
    return theta < 0.0 ? -c : c;
}

// csc^2(x/2), used by the eigenvector normalization sums.
inline double csc2_half(double x) {
    double s = std::sin(0.5 * x);
    return 1.0 / (s * s);
}

} // namespace qsearch
