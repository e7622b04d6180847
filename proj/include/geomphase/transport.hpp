#pragma once

#include <optional>
#include <span>
#include <vector>

#include "geomphase/pathspace.hpp"
#include "geomphase/phase_factor.hpp"
#include "geomphase/spectral.hpp"

namespace geomphase {

struct TransportSettings {
    long initial_steps = 256;
    long max_steps = 1L << 20;
    double target_tol = 1e-8;  // max entrywise |U_fine - U_coarse|
    double gap_tol = 1e-10;
    double lost_track_tol = 0.1;

    bool operator==(const TransportSettings&) const = default;
};

// Overlap matrix of the parallel-evolved eigenframe:
//   U(j,k) = <psi_j(0) | psi_k_transported(1)>.
// U is unitary and det U = 1 up to discretization error.
struct TransportResult {
    Matrix U;
    long steps_used = 0;
    double min_gap_along_path = 0.0;
    double convergence_estimate = 0.0;  // +inf when the coarse companion lost track
    EigenFrame initial_frame;
    EigenFrame final_frame;

    int dim() const { return static_cast<int>(U.rows()); }
};

// Raised when adaptive refinement exhausts max_steps; carries the finest
// result so callers can still inspect it.
struct NoConvergence : Error {
    NoConvergence(TransportResult finest, double target)
        : Error("transport did not reach target_tol " + std::to_string(target) +
                " within max_steps; finest estimate " +
                std::to_string(finest.convergence_estimate)),
          result(std::move(finest)) {}
    TransportResult result;
};

// Discrete parallel transport on the uniform grid t_i = i/steps. The frame at
// t=0 is eigen_sorted(H(0)), optionally re-gauged by initial_phases (state k
// multiplied by exp(i*phase[k]), realizing an arbitrary fixed starting gauge).
// At each step the energy-ordered eigenframe is re-phased so every step
// overlap <psi_k(t_i)|psi_k(t_{i+1})> is real positive.
// Throws DegenerateSpectrum (with the offending t) and LostTrack.
TransportResult parallel_transport(const ParameterPath& path, long steps,
                                   const TransportSettings& settings = {},
                                   const std::optional<RealVector>& initial_phases = {});

// Doubles the step count from initial_steps until the fine/coarse estimate
// drops to target_tol. A LostTrack at some resolution is treated as an
// under-resolution signal and refined away; DegenerateSpectrum propagates.
// Throws NoConvergence when max_steps is insufficient.
TransportResult transport_adaptive(const ParameterPath& path,
                                   const TransportSettings& settings = {},
                                   const std::optional<RealVector>& initial_phases = {});

// Transported frames at every grid point t_i = i/steps (steps+1 entries);
// trace[i] column k is psi_k transported to t_i. For loop cross-checks.
std::vector<Matrix> transport_trace(const ParameterPath& path, long steps,
                                    const TransportSettings& settings = {},
                                    const std::optional<RealVector>& initial_phases = {});

// Discrete geometric phase of an open chain of unit vectors:
// Phi(prod_i <v_i|v_{i+1}>). Append the first state to close a loop.
// Throws OrthogonalLink when a consecutive overlap falls below undef_tol.
PhaseFactor pancharatnam_product(std::span<const Vector> states, double undef_tol = 1e-8);

}  // namespace geomphase
