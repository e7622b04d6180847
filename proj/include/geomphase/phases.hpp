#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "geomphase/phase_factor.hpp"
#include "geomphase/transport.hpp"

namespace geomphase {

// State indexes in the phase algebra are 1-based, matching the usual
// subscript notation (sigma_12, gamma_123, ...).

// Cyclic index sequence in canonical form: distinct indexes, rotated so the
// smallest comes first. Rotations of the same cycle compare equal.
struct IndexCycle {
    std::vector<int> indexes;

    // Canonicalizes the rotation; rejects repeats and nonpositive indexes.
    static IndexCycle of(std::vector<int> raw);
    int length() const { return static_cast<int>(indexes.size()); }
    bool operator==(const IndexCycle&) const = default;
};

inline constexpr double kDefaultUndefTol = 1e-8;

// sigma_jk = Phi(U_jk), Undefined when |U_jk| < undef_tol.
PhaseFactor sigma(const Matrix& U, int j, int k, double undef_tol = kDefaultUndefTol);
PhaseFactor sigma(const TransportResult& result, int j, int k,
                  double undef_tol = kDefaultUndefTol);

// gamma_j = sigma_jj, the diagonal (Pancharatnam-Berry) phase factor.
PhaseFactor gamma_diag(const Matrix& U, int j, double undef_tol = kDefaultUndefTol);
PhaseFactor gamma_diag(const TransportResult& result, int j,
                       double undef_tol = kDefaultUndefTol);

// gamma_{j1...jl} = sigma_{j1 j2} sigma_{j2 j3} ... sigma_{jl j1}.
// Throws UndefinedConstituent listing every link with |U| < undef_tol.
PhaseFactor gamma_cycle(const Matrix& U, const IndexCycle& cycle,
                        double undef_tol = kDefaultUndefTol);
PhaseFactor gamma_cycle(const TransportResult& result, const IndexCycle& cycle,
                        double undef_tol = kDefaultUndefTol);

// Splits an index sequence with repeats into repeat-free canonical cycles
// whose gamma product equals the gamma of the raw sequence.
std::vector<IndexCycle> decompose_indexes(const std::vector<int>& raw, int n);

// The n^2 - n + 1 functionally independent phase factors: n diagonal gamma_j,
// n(n-1)/2 quadratic gamma_{jk} (j<k), (n-1)(n-2)/2 cubic gamma_{1jk} (1<j<k).
struct IndependentSet {
    int n = 0;
    std::vector<PhaseFactor> diagonal;   // gamma_j, j = 1..n
    std::vector<PhaseFactor> quadratic;  // (1,2), (1,3), ..., (n-1,n)
    std::vector<PhaseFactor> cubic;      // (1,2,3), (1,2,4), ..., (1,n-1,n)

    std::size_t count() const { return diagonal.size() + quadratic.size() + cubic.size(); }
    const PhaseFactor& quad(int j, int k) const;      // j < k
    const PhaseFactor& cube(int j, int k) const;      // 1 < j < k
};

IndependentSet independent_set(const Matrix& U, double undef_tol = kDefaultUndefTol);
IndependentSet independent_set(const TransportResult& result,
                               double undef_tol = kDefaultUndefTol);

// A member of the independent set with a +-1 exponent, for symbolic products.
struct PhaseMember {
    enum class Kind { Diagonal, Quadratic, Cubic };
    Kind kind;
    std::array<int, 3> idx;  // unused trailing slots are 0

    bool operator==(const PhaseMember&) const = default;
};

struct SignedMember {
    PhaseMember member;
    int exponent;  // +1 or -1 (conjugate)

    bool operator==(const SignedMember&) const = default;
};

// Rewrites gamma_cycle as a formal product of independent-set members, using
// the chain-splitting and triangle-reversal identities of the algebra.
// Evaluating the product numerically reproduces gamma_cycle exactly.
std::vector<SignedMember> reduce_to_independent(const IndexCycle& cycle, int n);

// Numeric value of a symbolic product against a concrete independent set.
// Throws UndefinedConstituent when a referenced member is Undefined.
std::complex<double> evaluate_product(const std::vector<SignedMember>& product,
                                      const IndependentSet& set);

std::string member_name(const PhaseMember& m);

// Residual record for one instance of an exact identity.
struct IdentityCheck {
    std::string identity;      // "chain_split", "triangle_reversal", "anchor_exchange"
    std::vector<int> indexes;  // the tuple the instance was evaluated on
    double residual;
};

struct IdentityReport {
    double tol = 0.0;
    double max_residual = 0.0;
    bool pass = false;
    std::vector<IdentityCheck> checks;
};

// Evaluates every instance of the three exact identities up to dimension n.
// Requires all sigmas defined (UndefinedConstituent otherwise).
IdentityReport verify_identities(const Matrix& U, double tol,
                                 double undef_tol = kDefaultUndefTol);
IdentityReport verify_identities(const TransportResult& result, double tol,
                                 double undef_tol = kDefaultUndefTol);

// Rank of the Jacobian of the independent-set phase angles with respect to
// the n^2 phase angles of a random fully-defined sigma matrix, maximized over
// `samples` random draws. Expected n^2 - n + 1.
int independence_rank(int n, int samples, std::uint64_t seed = 1);

}  // namespace geomphase
