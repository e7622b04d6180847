#include "geomphase/models.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <memory>
#include <random>

#include "geomphase/numeric.hpp"

namespace geomphase {

namespace {

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

void require_real_symmetric(const Matrix& m, const char* label) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw InvalidParameter(std::string(label) + " must be square");
    if (m.imag().cwiseAbs().maxCoeff() != 0.0)
        throw InvalidParameter(std::string(label) + " must be real");
    if ((m - m.transpose()).cwiseAbs().maxCoeff() != 0.0)
        throw InvalidParameter(std::string(label) + " must be symmetric");
}

// Uniform double in [-1, 1] from the top 53 bits of the generator output.
double symmetric_uniform(std::mt19937_64& rng) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
}

}  // namespace

ParameterPath spin_half(double theta_f) {
    if (!(theta_f > 0.0) || theta_f > 4.0 * M_PI)
        throw InvalidParameter("spin_half: theta_f must lie in (0, 4*pi]");

    ParameterPath path;
    path.dim = 2;
    path.descriptor = {{"name", "spin_half"}, {"theta_f", theta_f}};
    const Matrix z = pauli_z(), x = pauli_x();
    path.evaluate = [theta_f, z, x](double t) -> Matrix {
        const double theta = theta_f * t;
        return 0.5 * (std::cos(theta) * z + std::sin(theta) * x);
    };
    return path;
}

ParameterPath conical(const Matrix& hx, const Matrix& hy, double theta_a, double theta_b,
                      double radius) {
    require_real_symmetric(hx, "conical: hx");
    require_real_symmetric(hy, "conical: hy");
    if (hx.rows() != hy.rows()) throw InvalidParameter("conical: hx and hy sizes differ");
    if (!(radius > 0.0)) throw InvalidParameter("conical: radius must be > 0");
    if (theta_b == theta_a) throw InvalidParameter("conical: span must not be empty");

    // Units of pi: exact values at half turns make H(0) == -H(1) for (0, pi).
    const double ua = theta_a / M_PI;
    const double ub = theta_b / M_PI;
    const int n = static_cast<int>(hx.rows());

    auto hx_ptr = std::make_shared<Matrix>(hx);
    auto hy_ptr = std::make_shared<Matrix>(hy);
    auto at = [hx_ptr, hy_ptr, ua, ub, radius](double t) -> Matrix {
        const double u = ua + (ub - ua) * t;
        return radius * (cospi(u) * (*hx_ptr) + sinpi(u) * (*hy_ptr));
    };

    // Nondegeneracy sweep before handing the family out.
    constexpr int kProbe = 512;
    Eigen::SelfAdjointEigenSolver<Matrix> solver;
    for (int i = 0; i <= kProbe; ++i) {
        const double t = static_cast<double>(i) / kProbe;
        solver.compute(at(t), Eigen::EigenvaluesOnly);
        const RealVector& ev = solver.eigenvalues();
        for (int k = 0; k + 1 < n; ++k)
            if (ev(k + 1) - ev(k) < 1e-10)
                throw DegenerateOnPath(theta_a + (theta_b - theta_a) * t, ev(k + 1) - ev(k));
    }

    ParameterPath path;
    path.dim = n;
    path.evaluate = at;
    path.descriptor = {{"name", "conical"},
                       {"span", {theta_a, theta_b}},
                       {"radius", radius},
                       {"hx", nlohmann::json::array()},
                       {"hy", nlohmann::json::array()}};
    for (int r = 0; r < n; ++r) {
        nlohmann::json rx = nlohmann::json::array(), ry = nlohmann::json::array();
        for (int c = 0; c < n; ++c) {
            rx.push_back(hx(r, c).real());
            ry.push_back(hy(r, c).real());
        }
        path.descriptor["hx"].push_back(rx);
        path.descriptor["hy"].push_back(ry);
    }
    return path;
}

ParameterPath conical3(double theta_a, double theta_b, double radius) {
    Matrix hx = Matrix::Zero(3, 3), hy = Matrix::Zero(3, 3);
    hx(0, 0) = -1.0;
    hx(2, 2) = 1.0;
    hy(0, 1) = hy(1, 0) = hy(1, 2) = hy(2, 1) = 1.0;
    ParameterPath path = conical(hx, hy, theta_a, theta_b, radius);
    path.descriptor = {{"name", "conical3"},
                       {"span", {theta_a, theta_b}},
                       {"radius", radius}};
    return path;
}

ParameterPath random_symmetric(int n, std::uint64_t seed, int harmonics) {
    if (n < 2) throw InvalidParameter("random_symmetric: n must be >= 2");
    if (harmonics < 1) throw InvalidParameter("random_symmetric: harmonics must be >= 1");

    std::mt19937_64 rng(seed);
    auto draw_symmetric = [&rng, n]() {
        Matrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m(r, c) = symmetric_uniform(rng);
        return Matrix(0.5 * (m + m.transpose()));
    };

    auto a0 = std::make_shared<Matrix>(draw_symmetric());
    auto cos_terms = std::make_shared<std::vector<Matrix>>();
    auto sin_terms = std::make_shared<std::vector<Matrix>>();
    for (int m = 0; m < harmonics; ++m) {
        cos_terms->push_back(draw_symmetric());
        sin_terms->push_back(draw_symmetric());
    }

    ParameterPath path;
    path.dim = n;
    path.descriptor = {{"name", "random_symmetric"},
                       {"n", n},
                       {"seed", seed},
                       {"harmonics", harmonics}};
    path.evaluate = [a0, cos_terms, sin_terms](double t) -> Matrix {
        Matrix h = *a0;
        for (std::size_t m = 0; m < cos_terms->size(); ++m) {
            const double u = 2.0 * static_cast<double>(m + 1) * t;  // angle / pi
            h += cospi(u) * (*cos_terms)[m] + sinpi(u) * (*sin_terms)[m];
        }
        return h;
    };
    return path;
}

ParameterPath avoided_crossing(double delta) {
    if (!(delta > 0.0)) throw InvalidParameter("avoided_crossing: delta must be > 0");
    ParameterPath path;
    path.dim = 2;
    path.descriptor = {{"name", "avoided_crossing"}, {"delta", delta}};
    path.evaluate = [delta](double t) -> Matrix {
        Matrix h(2, 2);
        h << t - 0.5, delta, delta, 0.5 - t;
        return h;
    };
    return path;
}

ParameterPath constant_path(const Matrix& h0) {
    check_hermitian(h0);
    auto h = std::make_shared<Matrix>(h0);
    ParameterPath path;
    path.dim = static_cast<int>(h0.rows());
    nlohmann::json matrix = nlohmann::json::array();
    for (Eigen::Index r = 0; r < h0.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < h0.cols(); ++c)
            row.push_back({{"re", h0(r, c).real()}, {"im", h0(r, c).imag()}});
        matrix.push_back(row);
    }
    path.descriptor = {{"name", "constant"}, {"matrix", matrix}};
    path.evaluate = [h](double) { return *h; };
    return path;
}

}  // namespace geomphase
