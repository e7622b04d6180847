#pragma once

#include <complex>
#include <random>

#include "geomphase/spectral.hpp"

// Shared test fixtures: random matrices and small closed-form oracles.
namespace testutil {

using geomphase::Matrix;
using geomphase::RealVector;
using geomphase::Vector;

inline Matrix random_hermitian(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix a(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a(r, c) = std::complex<double>(gauss(rng), gauss(rng));
    return 0.5 * (a + a.adjoint());
}

// Haar-distributed unitary: QR of a complex Gaussian matrix with the R
// diagonal phases divided out.
inline Matrix random_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix a(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a(r, c) = std::complex<double>(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<Matrix> qr(a);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < n; ++c) {
        const std::complex<double> d = r(c, c);
        q.col(c) *= d / std::abs(d);
    }
    return q;
}

// Random unitary with every entry bounded away from zero, so all sigmas are
// defined.
inline Matrix random_unitary_no_small_entries(int n, std::mt19937_64& rng,
                                              double min_entry = 1e-3) {
    while (true) {
        Matrix u = random_unitary(n, rng);
        if (u.cwiseAbs().minCoeff() >= min_entry) return u;
    }
}

// Closed-form eigenpairs of a 2x2 Hermitian matrix [[a, b],[conj(b), d]],
// ascending eigenvalues, columns un-gauged.
struct TwoLevel {
    double lower, upper;
    Vector lower_vec, upper_vec;
};

inline TwoLevel diagonalize_2x2(std::complex<double> a, std::complex<double> b,
                                std::complex<double> d) {
    TwoLevel out;
    const double tr = a.real() + d.real();
    const double det = a.real() * d.real() - std::norm(b);
    const double disc = std::sqrt(tr * tr / 4.0 - det);
    out.lower = tr / 2.0 - disc;
    out.upper = tr / 2.0 + disc;

    out.lower_vec = Vector(2);
    out.upper_vec = Vector(2);
    if (std::abs(b) == 0.0) {
        const bool a_lower = a.real() <= d.real();
        out.lower_vec << (a_lower ? 1.0 : 0.0), (a_lower ? 0.0 : 1.0);
        out.upper_vec << (a_lower ? 0.0 : 1.0), (a_lower ? 1.0 : 0.0);
    } else {
        out.lower_vec << b, std::complex<double>(out.lower) - a;
        out.upper_vec << b, std::complex<double>(out.upper) - a;
        out.lower_vec.normalize();
        out.upper_vec.normalize();
    }
    return out;
}

}  // namespace testutil
