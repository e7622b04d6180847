#pragma once

#include <cstdint>

#include "geomphase/pathspace.hpp"

namespace geomphase {

// Spin-1/2 in a field rotating through theta_f in the xz plane:
//   H(t) = (1/2) (cos(theta_f t) Z + sin(theta_f t) X).
// The starting eigenbasis is psi_1 = (0,1), psi_2 = (1,0).
// theta_f must lie in (0, 4*pi].
ParameterPath spin_half(double theta_f);

// Linear pencil of two real symmetric matrices swept through an arc:
//   H(t) = radius (cos(theta(t)) Hx + sin(theta(t)) Hy),
// theta linear from theta_a to theta_b. The spectrum is validated to be
// nondegenerate on a dense sample of the span (DegenerateOnPath otherwise).
// Spans are stored internally in units of pi, so half-turn endpoints satisfy
// H(0) == -H(1) bitwise.
ParameterPath conical(const Matrix& hx, const Matrix& hy, double theta_a, double theta_b,
                      double radius = 1.0);

// Built-in three-level family: Hx = diag(-1, 0, 1), Hy tridiagonal with unit
// off-diagonals (eigenvalues -sqrt2, 0, sqrt2 at theta = pi/2).
ParameterPath conical3(double theta_a, double theta_b, double radius = 1.0);

// Closed loop of real symmetric matrices with trigonometric entries,
//   H(t) = A0 + sum_m cos(2 pi m t) Am + sin(2 pi m t) Bm,
// coefficients i.i.d. uniform [-1,1] symmetrized, drawn from mt19937_64 with
// the given seed (bits mapped to doubles as (x >> 11) * 2^-53, so the path is
// reproducible across implementations). H(0) == H(1) bitwise.
ParameterPath random_symmetric(int n, std::uint64_t seed, int harmonics);

// Two-level linear crossing with constant coupling delta > 0:
//   H(t) = [[t - 1/2, delta], [delta, 1/2 - t]].
// For delta << 1/2 the endpoint overlap matrix approximates the swap.
ParameterPath avoided_crossing(double delta);

// H(t) = H0 for all t.
ParameterPath constant_path(const Matrix& h0);

}  // namespace geomphase
