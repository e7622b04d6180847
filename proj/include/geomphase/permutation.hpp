#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geomphase/phases.hpp"

namespace geomphase {

// A permutation of 1..n. images[j-1] is where state j lands: when the
// endpoint eigenbases match up to a permutation, row j of U is dominated by
// column P_j.
struct Permutation {
    int n = 0;
    std::vector<int> images;  // 1-based

    static Permutation from_images(std::vector<int> images);
    static Permutation identity(int n);

    // Disjoint cycles, each rotated smallest-first, ordered by smallest element.
    std::vector<std::vector<int>> cycles() const;
    int cycle_count() const { return static_cast<int>(cycles().size()); }
    int sign() const;  // (-1)^(n - c)

    bool operator==(const Permutation&) const = default;
};

// One well-defined gamma per cycle plus the determinant condition
// prod_i gamma_{cycle_i} = (-1)^P and the real-Hamiltonian case count 2^(c-1).
struct PermutationClassification {
    Permutation permutation;
    std::vector<IndexCycle> well_defined;
    int condition_sign = +1;   // the (-1)^P right-hand side
    long real_case_count = 0;  // 2^(c-1)

    std::string condition_text() const;  // e.g. "g(1,2)*g(3) = -1"
};

// Row-dominance analysis of an overlap matrix. margins[j-1] is
// |U_{j,P_j}| / (n * max_{k != P_j} |U_{jk}|); `detected` is present iff the
// per-row maxima form a bijection and every margin exceeds dominance_factor.
struct DominanceReport {
    std::optional<Permutation> detected;
    std::vector<double> margins;
};

DominanceReport detect_permutation(const Matrix& U, double dominance_factor = 10.0);
DominanceReport detect_permutation(const TransportResult& result,
                                   double dominance_factor = 10.0);

PermutationClassification classify(const Permutation& p);

// All n! classifications in canonical order: grouped by cycle type (partition
// sorted decreasing, types ordered lexicographically), within a type by the
// cycle sequences. Throws DimensionTooLarge for n > 8.
std::vector<PermutationClassification> table_for_n(int n);

// One row per cycle type with its multiplicity. The class containing the
// order-reversing permutation is represented by it and starred; other classes
// use the permutation with consecutively numbered cycles.
struct TableGroup {
    PermutationClassification representative;
    long multiplicity = 0;
    bool starred = false;
};

std::vector<TableGroup> grouped_table(int n);

// Brute-force count of the distinct well-defined gamma tuples over all sigma
// assignments in {+-1}^n satisfying the determinant condition. Equals
// 2^(c-1); kept as an independent check of that closed form.
long count_real_cases_oracle(const Permutation& p);

// The order-reversing permutation j -> n+1-j induced by H(s1) = -H(s2).
Permutation symmetry_permutation(int n);

// Plain-text table; lists every permutation for n <= 3 or when expand is set,
// grouped rows otherwise.
std::string render_table_text(int n, bool expand = false);

}  // namespace geomphase
