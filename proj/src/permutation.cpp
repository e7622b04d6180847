#include "geomphase/permutation.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace geomphase {

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    if (n < 1) throw InvalidParameter("Permutation: empty image list");
    std::vector<bool> hit(n + 1, false);
    for (int v : images) {
        if (v < 1 || v > n) throw IndexOutOfRange(v, n);
        if (hit[v]) throw InvalidParameter("Permutation: images are not a bijection");
        hit[v] = true;
    }
    return Permutation{n, std::move(images)};
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    return Permutation{n, std::move(images)};
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(n + 1, false);
    for (int start = 1; start <= n; ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        int v = start;
        while (!seen[v]) {
            seen[v] = true;
            cycle.push_back(v);
            v = images[v - 1];
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

int Permutation::sign() const {
    return ((n - cycle_count()) % 2 == 0) ? +1 : -1;
}

std::string PermutationClassification::condition_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < well_defined.size(); ++i) {
        if (i) os << "*";
        os << "g(";
        for (std::size_t j = 0; j < well_defined[i].indexes.size(); ++j) {
            if (j) os << ",";
            os << well_defined[i].indexes[j];
        }
        os << ")";
    }
    os << " = " << (condition_sign > 0 ? "1" : "-1");
    return os.str();
}

DominanceReport detect_permutation(const Matrix& U, double dominance_factor) {
    if (!(dominance_factor > 1.0))
        throw InvalidParameter("detect_permutation: dominance_factor must be > 1");
    const int n = static_cast<int>(U.rows());

    DominanceReport report;
    report.margins.resize(n);
    std::vector<int> candidate(n);
    bool dominated = true;
    for (int j = 0; j < n; ++j) {
        int best = 0;
        double best_mag = -1.0, second = 0.0;
        for (int k = 0; k < n; ++k) {
            const double m = std::abs(U(j, k));
            if (m > best_mag) {
                second = best_mag < 0.0 ? 0.0 : std::max(second, best_mag);
                best_mag = m;
                best = k;
            } else {
                second = std::max(second, m);
            }
        }
        candidate[j] = best + 1;
        report.margins[j] = second == 0.0 ? std::numeric_limits<double>::infinity()
                                          : best_mag / (n * second);
        if (!(report.margins[j] > dominance_factor)) dominated = false;
    }

    std::vector<int> sorted = candidate;
    std::sort(sorted.begin(), sorted.end());
    const bool bijection = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (dominated && bijection) report.detected = Permutation::from_images(candidate);
    return report;
}

DominanceReport detect_permutation(const TransportResult& result, double dominance_factor) {
    return detect_permutation(result.U, dominance_factor);
}

PermutationClassification classify(const Permutation& p) {
    PermutationClassification out;
    out.permutation = p;
    const auto cycles = p.cycles();
    for (const auto& cycle : cycles) out.well_defined.push_back(IndexCycle::of(cycle));
    out.condition_sign = p.sign();
    out.real_case_count = 1L << (cycles.size() - 1);
    return out;
}

namespace {

constexpr int kTableCap = 8;

// Cycle type as the multiset of lengths sorted decreasing; type order is the
// lexicographic order of these partitions ((1,1,1) < (2,1) < (3), ...).
std::vector<int> cycle_type(const Permutation& p) {
    std::vector<int> lengths;
    for (const auto& c : p.cycles()) lengths.push_back(static_cast<int>(c.size()));
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths;
}

// Within a type, order rows by their cycle sequences (longest cycles first,
// each smallest-first, ties by elements); reproduces the conventional listing
// (12), (13), (23), then (123), (132), ...
std::vector<std::vector<int>> cycle_sort_key(const Permutation& p) {
    auto cycles = p.cycles();
    std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return cycles;
}

}  // namespace

std::vector<PermutationClassification> table_for_n(int n) {
    if (n < 1) throw InvalidParameter("table_for_n: n must be >= 1");
    if (n > kTableCap) throw DimensionTooLarge(n, kTableCap);

    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> perms;
    do {
        perms.push_back(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));

    std::stable_sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) {
        const auto ta = cycle_type(a), tb = cycle_type(b);
        if (ta != tb) return ta < tb;
        return cycle_sort_key(a) < cycle_sort_key(b);
    });

    std::vector<PermutationClassification> out;
    out.reserve(perms.size());
    for (const auto& p : perms) out.push_back(classify(p));
    return out;
}

std::vector<TableGroup> grouped_table(int n) {
    const auto rows = table_for_n(n);
    const Permutation reversal = symmetry_permutation(n);

    std::vector<TableGroup> groups;
    std::map<std::vector<int>, std::size_t> by_type;
    for (const auto& row : rows) {
        const auto type = cycle_type(row.permutation);
        auto it = by_type.find(type);
        if (it == by_type.end()) {
            by_type.emplace(type, groups.size());
            groups.push_back(TableGroup{row, 1, false});
        } else {
            ++groups[it->second].multiplicity;
        }
    }
    for (auto& g : groups) {
        if (n > 1 && cycle_type(g.representative.permutation) == cycle_type(reversal)) {
            g.representative = classify(reversal);
            g.starred = true;
        }
    }
    return groups;
}

long count_real_cases_oracle(const Permutation& p) {
    const int n = p.n;
    if (n > 20) throw DimensionTooLarge(n, 20);
    const auto cycles = p.cycles();
    const int target = p.sign();

    std::set<std::vector<int>> tuples;
    for (long mask = 0; mask < (1L << n); ++mask) {
        // sigma_{j,P_j} = +-1 chosen by bit j-1
        int det = 1;
        for (int j = 0; j < n; ++j) det *= (mask >> j) & 1 ? -1 : 1;
        if (det != target) continue;

        std::vector<int> tuple;
        tuple.reserve(cycles.size());
        for (const auto& cycle : cycles) {
            int gamma = 1;
            for (int j : cycle) gamma *= (mask >> (j - 1)) & 1 ? -1 : 1;
            tuple.push_back(gamma);
        }
        tuples.insert(std::move(tuple));
    }
    return static_cast<long>(tuples.size());
}

Permutation symmetry_permutation(int n) {
    if (n < 1) throw InvalidParameter("symmetry_permutation: n must be >= 1");
    std::vector<int> images(n);
    for (int j = 1; j <= n; ++j) images[j - 1] = n + 1 - j;
    return Permutation::from_images(std::move(images));
}

namespace {

std::string images_text(const Permutation& p) {
    std::string s;
    for (int j = 0; j < p.n; ++j) {
        if (j) s += " ";
        s += std::to_string(p.images[j]);
    }
    return s;
}

std::string factors_text(const PermutationClassification& row) {
    std::string s;
    for (std::size_t i = 0; i < row.well_defined.size(); ++i) {
        if (i) s += " ";
        s += "g(";
        for (std::size_t j = 0; j < row.well_defined[i].indexes.size(); ++j) {
            if (j) s += ",";
            s += std::to_string(row.well_defined[i].indexes[j]);
        }
        s += ")";
    }
    return s;
}

void render_row(std::ostringstream& os, const std::string& perm, const std::string& factors,
                const std::string& condition, const std::string& cases) {
    os << "  " << perm;
    os << std::string(perm.size() < 14 ? 14 - perm.size() : 1, ' ');
    os << factors;
    os << std::string(factors.size() < 26 ? 26 - factors.size() : 1, ' ');
    os << condition;
    os << std::string(condition.size() < 30 ? 30 - condition.size() : 1, ' ');
    os << cases << "\n";
}

}  // namespace

std::string render_table_text(int n, bool expand) {
    std::ostringstream os;
    os << "n = " << n << "  (well-defined phase factors per endpoint permutation;"
       << " * marks the H(s1) = -H(s2) permutation)\n";
    render_row(os, "P", "phase factors", "condition |U| = 1", "real cases");

    const Permutation reversal = symmetry_permutation(n);
    if (n <= 3 || expand) {
        for (const auto& row : table_for_n(n)) {
            std::string perm = images_text(row.permutation);
            if (row.permutation == reversal && n > 1) perm += " *";
            render_row(os, perm, factors_text(row), row.condition_text(),
                       std::to_string(row.real_case_count));
        }
    } else {
        for (const auto& group : grouped_table(n)) {
            std::string perm = images_text(group.representative.permutation);
            if (group.starred) perm += " *";
            std::string cases = std::to_string(group.representative.real_case_count);
            if (group.multiplicity > 1)
                cases += "   [" + std::to_string(group.multiplicity - 1) + " similar]";
            render_row(os, perm, factors_text(group.representative),
                       group.representative.condition_text(), cases);
        }
    }
    return os.str();
}

}  // namespace geomphase
