#include "geomphase/transport.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

namespace geomphase {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// One march along the grid. Keeps only the current frame; optionally records
// every frame into *trace. Returns the final transported frame.
struct MarchOutcome {
    Matrix initial_vectors;
    Matrix final_vectors;
    RealVector initial_eigenvalues;
    double min_gap = kInf;
    bool regauged = false;
};

MarchOutcome march(const ParameterPath& path, long steps, const TransportSettings& settings,
                   const std::optional<RealVector>& initial_phases,
                   std::vector<Matrix>* trace = nullptr) {
    if (steps < 1) throw InvalidParameter("parallel_transport: steps must be >= 1");
    if (settings.gap_tol <= 0 || settings.target_tol <= 0)
        throw InvalidParameter("transport settings: tolerances must be > 0");

    SpectralSettings spectral{1e-12, settings.gap_tol};

    MarchOutcome out;
    EigenFrame start;
    try {
        start = eigen_sorted(path.evaluate(0.0), spectral);
    } catch (const DegenerateSpectrum& e) {
        throw DegenerateSpectrum(e.gap, e.gap_tol, 0.0);
    }
    const int n = start.dim();

    if (initial_phases) {
        if (initial_phases->size() != n)
            throw InvalidParameter("initial_phases size does not match dimension");
        for (int k = 0; k < n; ++k)
            start.vectors.col(k) *= std::complex<double>(std::cos((*initial_phases)(k)),
                                                         std::sin((*initial_phases)(k)));
        out.regauged = true;
    }

    out.initial_vectors = start.vectors;
    out.initial_eigenvalues = start.eigenvalues;
    out.min_gap = min_gap(start);

    Matrix current = start.vectors;
    if (trace) {
        trace->clear();
        trace->reserve(static_cast<std::size_t>(steps) + 1);
        trace->push_back(current);
    }

    Eigen::SelfAdjointEigenSolver<Matrix> solver;
    for (long i = 1; i <= steps; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(steps);
        const Matrix H = path.evaluate(t);
        if (H.rows() != n)
            throw InvalidParameter("path dimension changed to " + std::to_string(H.rows()) +
                                   " at t = " + std::to_string(t));
        check_hermitian(H, spectral.hermiticity_tol);
        solver.compute(H);
        if (solver.info() != Eigen::Success)
            throw Error("eigensolver failed at t = " + std::to_string(t));

        const RealVector& evals = solver.eigenvalues();
        for (int k = 0; k + 1 < n; ++k) {
            const double gap = evals(k + 1) - evals(k);
            if (gap < settings.gap_tol) throw DegenerateSpectrum(gap, settings.gap_tol, t);
            out.min_gap = std::min(out.min_gap, gap);
        }

        Matrix next = solver.eigenvectors();
        for (int k = 0; k < n; ++k) {
            const std::complex<double> overlap = current.col(k).dot(next.col(k));
            const double m = std::abs(overlap);
            if (m < settings.lost_track_tol) throw LostTrack(t, k + 1, m);
            next.col(k) *= std::conj(overlap) / m;
        }
        current = std::move(next);
        if (trace) trace->push_back(current);
    }

    out.final_vectors = std::move(current);
    return out;
}

double max_entry_diff(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

TransportResult assemble(const ParameterPath& path, const TransportSettings& settings,
                         const MarchOutcome& fine, long steps, double estimate) {
    TransportResult result;
    result.U = fine.initial_vectors.adjoint() * fine.final_vectors;
    result.steps_used = steps;
    result.min_gap_along_path = fine.min_gap;
    result.convergence_estimate = estimate;
    result.initial_frame.eigenvalues = fine.initial_eigenvalues;
    result.initial_frame.vectors = fine.initial_vectors;
    result.initial_frame.gauge_tag = kGaugeTag;
    if (fine.regauged) result.initial_frame.gauge_tag += "+initial-phases";
    result.final_frame = eigen_sorted(path.evaluate(1.0), {1e-12, settings.gap_tol});
    return result;
}

}  // namespace

TransportResult parallel_transport(const ParameterPath& path, long steps,
                                   const TransportSettings& settings,
                                   const std::optional<RealVector>& initial_phases) {
    const MarchOutcome fine = march(path, steps, settings, initial_phases);

    double estimate = kInf;
    const long coarse_steps = std::max(1L, steps / 2);
    try {
        const MarchOutcome coarse = march(path, coarse_steps, settings, initial_phases);
        estimate = max_entry_diff(fine.initial_vectors.adjoint() * fine.final_vectors,
                                  coarse.initial_vectors.adjoint() * coarse.final_vectors);
    } catch (const LostTrack&) {
        // Companion under-resolved; leave the estimate at +inf.
    }
    return assemble(path, settings, fine, steps, estimate);
}

TransportResult transport_adaptive(const ParameterPath& path, const TransportSettings& settings,
                                   const std::optional<RealVector>& initial_phases) {
    if (settings.initial_steps < 1 || settings.max_steps < settings.initial_steps)
        throw InvalidParameter("transport settings: need 1 <= initial_steps <= max_steps");

    std::optional<MarchOutcome> coarse;
    std::optional<LostTrack> last_lost_track;
    try {
        coarse = march(path, std::max(1L, settings.initial_steps / 2), settings, initial_phases);
    } catch (const LostTrack& e) {
        last_lost_track = e;
    }

    long steps = settings.initial_steps;
    std::optional<TransportResult> finest;
    while (true) {
        std::optional<MarchOutcome> fine;
        try {
            fine = march(path, steps, settings, initial_phases);
        } catch (const LostTrack& e) {
            // Refine: the grid skipped structure (e.g. a sharp avoided crossing).
            last_lost_track = e;
        }
        if (fine) {
            double estimate = kInf;
            if (coarse)
                estimate =
                    max_entry_diff(fine->initial_vectors.adjoint() * fine->final_vectors,
                                   coarse->initial_vectors.adjoint() * coarse->final_vectors);
            finest = assemble(path, settings, *fine, steps, estimate);
            if (estimate <= settings.target_tol) return *finest;
            coarse = std::move(fine);
        }
        if (steps >= settings.max_steps) break;
        steps = std::min(settings.max_steps, steps * 2);
    }

    if (!finest) throw *last_lost_track;  // every resolution lost track
    throw NoConvergence(*finest, settings.target_tol);
}

std::vector<Matrix> transport_trace(const ParameterPath& path, long steps,
                                    const TransportSettings& settings,
                                    const std::optional<RealVector>& initial_phases) {
    std::vector<Matrix> trace;
    march(path, steps, settings, initial_phases, &trace);
    return trace;
}

PhaseFactor pancharatnam_product(std::span<const Vector> states, double undef_tol) {
    if (states.size() < 2)
        throw InvalidParameter("pancharatnam_product: need at least two states");
    std::complex<double> product{1.0, 0.0};
    for (std::size_t i = 0; i + 1 < states.size(); ++i) {
        const std::complex<double> overlap = states[i].dot(states[i + 1]);
        if (std::abs(overlap) < undef_tol)
            throw OrthogonalLink(static_cast<int>(i), std::abs(overlap));
        product *= overlap;
    }
    return PhaseFactor::defined(unit_phase(product));
}

}  // namespace geomphase
