#pragma once

#include <cmath>
#include <complex>

namespace geomphase {

// cos(pi*u) and sin(pi*u) with exact values at integer and half-integer u.
// Plain std::cos(M_PI) misses -1 by ~1.2e-16 through sin; paths built on
// these helpers satisfy endpoint relations like H(0) == -H(1) bitwise when
// the span covers an exact half turn.
inline double cospi(double u) {
    double r = std::fmod(u, 2.0);
    if (r < 0.0) r += 2.0;
    if (r == 0.0) return 1.0;
    if (r == 0.5 || r == 1.5) return 0.0;
    if (r == 1.0) return -1.0;
    return std::cos(M_PI * r);
}

inline double sinpi(double u) {
    double r = std::fmod(u, 2.0);
    if (r < 0.0) r += 2.0;
    if (r == 0.0 || r == 1.0) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == 1.5) return -1.0;
    return std::sin(M_PI * r);
}

// Phi(z) = z/|z|, the unit-modulus phase factor of a nonzero complex number.
inline std::complex<double> unit_phase(std::complex<double> z) {
    return z / std::abs(z);
}

}  // namespace geomphase
