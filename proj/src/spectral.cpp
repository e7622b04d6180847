#include "geomphase/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <limits>

namespace geomphase {

void check_hermitian(const Matrix& H, double tol) {
    if (H.rows() != H.cols() || H.rows() < 1)
        throw InvalidParameter("operator must be a square matrix of dimension >= 1");
    const double scale = H.cwiseAbs().maxCoeff();
    const double deviation = (H - H.adjoint()).cwiseAbs().maxCoeff();
    if (deviation > tol * scale) throw NonHermitianInput(deviation, tol * scale);
}

void gauge_fix_columns(Matrix& vectors) {
    const Eigen::Index n = vectors.rows();
    for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
        // Anchor component: largest magnitude, lowest index on (near-)ties.
        Eigen::Index anchor = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double m = std::abs(vectors(i, j));
            if (m > best * (1.0 + 1e-12)) {
                best = m;
                anchor = i;
            }
        }
        const std::complex<double> c = vectors(anchor, j);
        if (c.imag() == 0.0 && c.real() >= 0.0) continue;
        vectors.col(j) *= std::conj(c) / std::abs(c);
        vectors(anchor, j) = std::abs(c);  // pin the anchor exactly real
    }
}

EigenFrame eigen_sorted(const Matrix& H, const SpectralSettings& settings) {
    check_hermitian(H, settings.hermiticity_tol);

    Eigen::SelfAdjointEigenSolver<Matrix> solver(H);
    if (solver.info() != Eigen::Success) throw Error("eigensolver failed to converge");

    EigenFrame frame;
    frame.eigenvalues = solver.eigenvalues();
    frame.vectors = solver.eigenvectors();
    frame.gauge_tag = kGaugeTag;

    if (frame.dim() > 1) {
        const double gap = min_gap(frame);
        if (gap < settings.gap_tol) throw DegenerateSpectrum(gap, settings.gap_tol);
    }
    gauge_fix_columns(frame.vectors);
    return frame;
}

double min_gap(const EigenFrame& frame) {
    if (frame.dim() <= 1) return std::numeric_limits<double>::infinity();
    double gap = std::numeric_limits<double>::infinity();
    for (int j = 0; j + 1 < frame.dim(); ++j)
        gap = std::min(gap, frame.eigenvalues(j + 1) - frame.eigenvalues(j));
    return gap;
}

}  // namespace geomphase
