#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "geomphase/permutation.hpp"

using namespace geomphase;

namespace {

// One expected table row: images, well-defined cycles (as sets of cycles),
// condition sign, real-case count.
struct GoldenRow {
    std::vector<int> images;
    std::vector<std::vector<int>> cycles;
    int sign;
    long cases;
};

// Frozen reference classification for n = 1..3 (full) in table order.
const std::vector<GoldenRow> kGoldenN1 = {{{1}, {{1}}, +1, 1}};

const std::vector<GoldenRow> kGoldenN2 = {
    {{1, 2}, {{1}, {2}}, +1, 2},
    {{2, 1}, {{1, 2}}, -1, 1},
};

const std::vector<GoldenRow> kGoldenN3 = {
    {{1, 2, 3}, {{1}, {2}, {3}}, +1, 4},
    {{2, 1, 3}, {{1, 2}, {3}}, -1, 2},
    {{3, 2, 1}, {{1, 3}, {2}}, -1, 2},
    {{1, 3, 2}, {{2, 3}, {1}}, -1, 2},
    {{2, 3, 1}, {{1, 2, 3}}, +1, 1},
    {{3, 1, 2}, {{1, 3, 2}}, +1, 1},
};

std::multiset<std::vector<int>> cycle_set(const std::vector<IndexCycle>& cycles) {
    std::multiset<std::vector<int>> out;
    for (const auto& c : cycles) out.insert(c.indexes);
    return out;
}

std::multiset<std::vector<int>> cycle_set(const std::vector<std::vector<int>>& cycles) {
    return {cycles.begin(), cycles.end()};
}

void check_rows(const std::vector<PermutationClassification>& rows,
                const std::vector<GoldenRow>& golden) {
    REQUIRE(rows.size() == golden.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].permutation.images == golden[i].images);
        CHECK(cycle_set(rows[i].well_defined) == cycle_set(golden[i].cycles));
        CHECK(rows[i].condition_sign == golden[i].sign);
        CHECK(rows[i].real_case_count == golden[i].cases);
    }
}

}  // namespace

TEST_CASE("permutation construction and invariants") {
    const auto p = Permutation::from_images({2, 3, 1, 4});
    CHECK(p.cycle_count() == 2);
    CHECK(p.sign() == +1);  // (-1)^(4-2)
    CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), InvalidParameter);
    CHECK_THROWS_AS(Permutation::from_images({0, 1}), IndexOutOfRange);
}

TEST_CASE("sign equals (-1)^(n-c) over all permutations up to n = 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& row : table_for_n(n)) {
            const auto& p = row.permutation;
            // independent parity oracle: count inversions
            int inversions = 0;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (p.images[a] > p.images[b]) ++inversions;
            CHECK(p.sign() == (inversions % 2 == 0 ? +1 : -1));
            CHECK(p.sign() == ((n - p.cycle_count()) % 2 == 0 ? +1 : -1));
        }
    }
}

TEST_CASE("detection on an exact swap matrix") {
    Matrix u(2, 2);
    u << 0.0, 1.0, -1.0, 0.0;
    const auto report = detect_permutation(u);
    REQUIRE(report.detected.has_value());
    CHECK(report.detected->images == std::vector<int>{2, 1});
    CHECK(std::isinf(report.margins[0]));
    CHECK(std::isinf(report.margins[1]));
}

TEST_CASE("detection on the identity matrix") {
    const auto report = detect_permutation(Matrix::Identity(3, 3));
    REQUIRE(report.detected.has_value());
    CHECK(*report.detected == Permutation::identity(3));
}

TEST_CASE("no detection without dominance") {
    Matrix u(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    u << s, s, -s, s;
    const auto report = detect_permutation(u);
    CHECK_FALSE(report.detected.has_value());
    CHECK(report.margins[0] == doctest::Approx(0.5));
}

TEST_CASE("no detection when row maxima collide") {
    Matrix u(2, 2);
    u << 0.9, 0.1, 0.95, 0.05;  // both rows dominated by column 1
    const auto report = detect_permutation(u, 1.5);
    CHECK_FALSE(report.detected.has_value());
}

TEST_CASE("margins are always reported") {
    Matrix u(2, 2);
    u << 0.8, 0.6, -0.6, 0.8;
    const auto report = detect_permutation(u);
    CHECK_FALSE(report.detected.has_value());
    REQUIRE(report.margins.size() == 2);
    CHECK(report.margins[0] == doctest::Approx(0.8 / (2.0 * 0.6)));
}

TEST_CASE("classification of a transposition with a fixed point") {
    const auto cls = classify(Permutation::from_images({2, 1, 3}));
    CHECK(cycle_set(cls.well_defined) ==
          cycle_set(std::vector<std::vector<int>>{{1, 2}, {3}}));
    CHECK(cls.condition_sign == -1);
    CHECK(cls.real_case_count == 2);
    CHECK(cls.condition_text() == "g(1,2)*g(3) = -1");
}

TEST_CASE("classification of a 3-cycle") {
    const auto cls = classify(Permutation::from_images({2, 3, 1}));
    CHECK(cycle_set(cls.well_defined) == cycle_set(std::vector<std::vector<int>>{{1, 2, 3}}));
    CHECK(cls.condition_sign == +1);
    CHECK(cls.real_case_count == 1);
}

TEST_CASE("classification of the order reversal at n = 4 uses literal cycles") {
    const auto cls = classify(Permutation::from_images({4, 3, 2, 1}));
    CHECK(cycle_set(cls.well_defined) ==
          cycle_set(std::vector<std::vector<int>>{{1, 4}, {2, 3}}));
    CHECK(cls.condition_sign == +1);
    CHECK(cls.real_case_count == 2);
}

TEST_CASE("full tables reproduce the frozen reference rows for n = 1..3") {
    check_rows(table_for_n(1), kGoldenN1);
    check_rows(table_for_n(2), kGoldenN2);
    check_rows(table_for_n(3), kGoldenN3);
}

TEST_CASE("grouped table at n = 4 matches the reference compression") {
    const auto groups = grouped_table(4);
    REQUIRE(groups.size() == 5);

    CHECK(groups[0].representative.permutation == Permutation::identity(4));
    CHECK(groups[0].multiplicity == 1);
    CHECK(groups[0].representative.real_case_count == 8);

    CHECK(groups[1].representative.permutation.images == std::vector<int>{2, 1, 3, 4});
    CHECK(groups[1].multiplicity == 6);  // representative + 5 similar
    CHECK(groups[1].representative.real_case_count == 4);

    CHECK(groups[2].representative.permutation.images == std::vector<int>{4, 3, 2, 1});
    CHECK(groups[2].starred);
    CHECK(groups[2].multiplicity == 3);  // representative + 2 similar
    CHECK(groups[2].representative.real_case_count == 2);
    CHECK(cycle_set(groups[2].representative.well_defined) ==
          cycle_set(std::vector<std::vector<int>>{{1, 4}, {2, 3}}));
    CHECK(groups[2].representative.condition_sign == +1);

    // a 3-cycle is even and a 4-cycle is odd: signs follow (-1)^(n-c)
    CHECK(groups[3].representative.permutation.images == std::vector<int>{2, 3, 1, 4});
    CHECK(groups[3].multiplicity == 8);  // representative + 7 similar
    CHECK(groups[3].representative.real_case_count == 2);
    CHECK(groups[3].representative.condition_sign == +1);

    CHECK(groups[4].representative.permutation.images == std::vector<int>{2, 3, 4, 1});
    CHECK(groups[4].multiplicity == 6);  // representative + 5 similar
    CHECK(groups[4].representative.real_case_count == 1);
    CHECK(groups[4].representative.condition_sign == -1);
}

TEST_CASE("real-case counts: reference examples") {
    CHECK(count_real_cases_oracle(Permutation::from_images({2, 1})) == 1);
    CHECK(count_real_cases_oracle(Permutation::identity(3)) == 4);
    CHECK(count_real_cases_oracle(Permutation::from_images({2, 1, 4, 3})) == 2);
}

TEST_CASE("real-case count equals 2^(c-1) for every permutation up to n = 6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& row : table_for_n(n)) {
            const long expected = 1L << (row.permutation.cycle_count() - 1);
            CHECK(count_real_cases_oracle(row.permutation) == expected);
            CHECK(row.real_case_count == expected);
        }
}

TEST_CASE("symmetry permutation reverses the order") {
    CHECK(symmetry_permutation(2).images == std::vector<int>{2, 1});
    CHECK(symmetry_permutation(3).images == std::vector<int>{3, 2, 1});
    CHECK(symmetry_permutation(4).images == std::vector<int>{4, 3, 2, 1});
}

TEST_CASE("symmetry permutation classifications are the starred rows") {
    // n=2: gamma_12 = -1; n=3: gamma_13 gamma_2 = -1; n=4: gamma_14 gamma_23 = 1
    const auto c2 = classify(symmetry_permutation(2));
    CHECK(cycle_set(c2.well_defined) == cycle_set(std::vector<std::vector<int>>{{1, 2}}));
    CHECK(c2.condition_sign == -1);
    CHECK(c2.real_case_count == 1);

    const auto c3 = classify(symmetry_permutation(3));
    CHECK(cycle_set(c3.well_defined) ==
          cycle_set(std::vector<std::vector<int>>{{1, 3}, {2}}));
    CHECK(c3.condition_sign == -1);
    CHECK(c3.real_case_count == 2);

    const auto c4 = classify(symmetry_permutation(4));
    CHECK(cycle_set(c4.well_defined) ==
          cycle_set(std::vector<std::vector<int>>{{1, 4}, {2, 3}}));
    CHECK(c4.condition_sign == +1);
    CHECK(c4.real_case_count == 2);

    // even n: n/2 2-cycles; odd n: (n-1)/2 2-cycles + one fixed point
    for (int n = 2; n <= 7; ++n) {
        const auto cycles = symmetry_permutation(n).cycles();
        int twos = 0, ones = 0;
        for (const auto& c : cycles) (c.size() == 2 ? twos : ones)++;
        CHECK(twos == n / 2);
        CHECK(ones == n % 2);
    }
}

TEST_CASE("dimension cap for full enumeration") {
    CHECK_THROWS_AS(table_for_n(9), DimensionTooLarge);
    CHECK_THROWS_AS(table_for_n(0), InvalidParameter);
}

TEST_CASE("text rendering lists all rows for small n and compresses n = 4") {
    const std::string t3 = render_table_text(3);
    CHECK(t3.find("3 2 1 *") != std::string::npos);
    CHECK(t3.find("g(1,3) g(2)") != std::string::npos);

    const std::string t4 = render_table_text(4);
    CHECK(t4.find("[5 similar]") != std::string::npos);
    CHECK(t4.find("4 3 2 1 *") != std::string::npos);
    CHECK(t4.find("g(1,4) g(2,3)") != std::string::npos);

    const std::string t4full = render_table_text(4, true);
    CHECK(t4full.find("similar") == std::string::npos);
}
