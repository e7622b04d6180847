#pragma once

#include <Eigen/Dense>
#include <string>

#include "geomphase/errors.hpp"

namespace geomphase {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Gauge convention identifier: in each eigenvector the component of largest
// magnitude (lowest index on ties) is made real and nonnegative.
inline constexpr const char* kGaugeTag = "largest-component-real-positive";

struct SpectralSettings {
    double hermiticity_tol = 1e-12;  // relative to the max entry magnitude
    double gap_tol = 1e-10;
};

// Energy-ordered, gauge-fixed eigenpairs at one parameter point.
struct EigenFrame {
    RealVector eigenvalues;  // ascending
    Matrix vectors;          // orthonormal columns, vectors.col(j) <-> eigenvalues(j)
    std::string gauge_tag;

    int dim() const { return static_cast<int>(eigenvalues.size()); }
};

// Throws NonHermitianInput when max |H - H^dag| exceeds tol * max |H_jk|.
void check_hermitian(const Matrix& H, double tol = 1e-12);

// Applies the gauge convention in place to each column.
// Idempotent: already-fixed columns are untouched bitwise.
void gauge_fix_columns(Matrix& vectors);

// Hermitian eigendecomposition, ascending eigenvalues, deterministic gauge.
// Throws NonHermitianInput or DegenerateSpectrum (min adjacent gap < gap_tol).
EigenFrame eigen_sorted(const Matrix& H, const SpectralSettings& settings = {});

// Smallest adjacent eigenvalue spacing; +infinity for dim = 1.
double min_gap(const EigenFrame& frame);

}  // namespace geomphase
