#include "geomphase/phases.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>

namespace geomphase {

namespace {

void check_index(int j, int n) {
    if (j < 1 || j > n) throw IndexOutOfRange(j, n);
}

int quad_offset(int j, int k, int n) {
    // (1,2),(1,3),...,(1,n),(2,3),... -> flat offset
    return (j - 1) * n - j * (j - 1) / 2 + (k - j - 1);
}

int cube_offset(int j, int k, int n) {
    // (1,2,3),(1,2,4),...,(1,2,n),(1,3,4),... -> flat offset, first index 1
    return (j - 2) * (n - 1) - (j - 1) * (j - 2) / 2 + (k - j - 1);
}

}  // namespace

IndexCycle IndexCycle::of(std::vector<int> raw) {
    if (raw.empty()) throw InvalidParameter("IndexCycle: empty index sequence");
    for (int j : raw)
        if (j < 1) throw IndexOutOfRange(j, 0x7fffffff);
    std::vector<int> sorted = raw;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidParameter("IndexCycle: repeated index (use decompose_indexes first)");
    const auto smallest = std::min_element(raw.begin(), raw.end());
    std::rotate(raw.begin(), smallest, raw.end());
    return IndexCycle{std::move(raw)};
}

PhaseFactor sigma(const Matrix& U, int j, int k, double undef_tol) {
    const int n = static_cast<int>(U.rows());
    check_index(j, n);
    check_index(k, n);
    return PhaseFactor::of(U(j - 1, k - 1), undef_tol);
}

PhaseFactor sigma(const TransportResult& result, int j, int k, double undef_tol) {
    return sigma(result.U, j, k, undef_tol);
}

PhaseFactor gamma_diag(const Matrix& U, int j, double undef_tol) {
    return sigma(U, j, j, undef_tol);
}

PhaseFactor gamma_diag(const TransportResult& result, int j, double undef_tol) {
    return sigma(result.U, j, j, undef_tol);
}

PhaseFactor gamma_cycle(const Matrix& U, const IndexCycle& cycle, double undef_tol) {
    const int n = static_cast<int>(U.rows());
    const int l = cycle.length();
    std::vector<std::pair<int, int>> missing;
    std::complex<double> product{1.0, 0.0};
    for (int i = 0; i < l; ++i) {
        const int j = cycle.indexes[i];
        const int k = cycle.indexes[(i + 1) % l];
        check_index(j, n);
        check_index(k, n);
        const PhaseFactor s = sigma(U, j, k, undef_tol);
        if (!s.is_defined()) {
            missing.emplace_back(j, k);
            continue;
        }
        product *= s.value();
    }
    if (!missing.empty()) throw UndefinedConstituent(std::move(missing));
    return PhaseFactor::defined(unit_phase(product));
}

PhaseFactor gamma_cycle(const TransportResult& result, const IndexCycle& cycle,
                        double undef_tol) {
    return gamma_cycle(result.U, cycle, undef_tol);
}

std::vector<IndexCycle> decompose_indexes(const std::vector<int>& raw, int n) {
    if (raw.empty()) throw InvalidParameter("decompose_indexes: empty index sequence");
    for (int j : raw) check_index(j, n);

    // Walk the cyclic sequence keeping a stack of distinct vertices; a repeat
    // closes the sub-cycle opened at its earlier occurrence.
    std::vector<IndexCycle> cycles;
    std::vector<int> stack;
    for (int v : raw) {
        const auto seen = std::find(stack.begin(), stack.end(), v);
        if (seen == stack.end()) {
            stack.push_back(v);
            continue;
        }
        cycles.push_back(IndexCycle::of(std::vector<int>(seen, stack.end())));
        stack.erase(seen + 1, stack.end());
    }
    cycles.push_back(IndexCycle::of(std::move(stack)));
    return cycles;
}

const PhaseFactor& IndependentSet::quad(int j, int k) const {
    if (!(1 <= j && j < k && k <= n)) throw IndexOutOfRange(j < 1 ? j : k, n);
    return quadratic[quad_offset(j, k, n)];
}

const PhaseFactor& IndependentSet::cube(int j, int k) const {
    if (!(1 < j && j < k && k <= n)) throw IndexOutOfRange(j <= 1 ? j : k, n);
    return cubic[cube_offset(j, k, n)];
}

IndependentSet independent_set(const Matrix& U, double undef_tol) {
    const int n = static_cast<int>(U.rows());
    IndependentSet set;
    set.n = n;
    std::vector<std::pair<int, int>> missing;

    auto collect = [&](const IndexCycle& cycle) -> PhaseFactor {
        try {
            return gamma_cycle(U, cycle, undef_tol);
        } catch (const UndefinedConstituent& e) {
            missing.insert(missing.end(), e.links.begin(), e.links.end());
            return PhaseFactor::undefined(0.0);
        }
    };

    for (int j = 1; j <= n; ++j) set.diagonal.push_back(collect(IndexCycle::of({j})));
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            set.quadratic.push_back(collect(IndexCycle::of({j, k})));
    for (int j = 2; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            set.cubic.push_back(collect(IndexCycle::of({1, j, k})));

    if (!missing.empty()) {
        std::sort(missing.begin(), missing.end());
        missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
        throw UndefinedConstituent(std::move(missing));
    }
    return set;
}

IndependentSet independent_set(const TransportResult& result, double undef_tol) {
    return independent_set(result.U, undef_tol);
}

namespace {

SignedMember diag_member(int j) {
    return {PhaseMember{PhaseMember::Kind::Diagonal, {j, 0, 0}}, +1};
}

SignedMember quad_member(int j, int k, int exponent) {
    return {PhaseMember{PhaseMember::Kind::Quadratic, {j, k, 0}}, exponent};
}

SignedMember cube_member(int j, int k, int exponent) {
    return {PhaseMember{PhaseMember::Kind::Cubic, {1, j, k}}, exponent};
}

// gamma_{1pq} for arbitrary order of p, q: canonical for p < q, otherwise
// rewritten through the triangle-reversal identity
//   gamma_{1qp} = gamma_{1q} gamma_{1p} gamma_{qp} (gamma_{1pq})^*.
void append_cubic_leg(std::vector<SignedMember>& out, int p, int q) {
    if (p < q) {
        out.push_back(cube_member(p, q, +1));
    } else {
        out.push_back(quad_member(1, q, +1));
        out.push_back(quad_member(1, p, +1));
        out.push_back(quad_member(q, p, +1));
        out.push_back(cube_member(q, p, -1));
    }
}

}  // namespace

std::vector<SignedMember> reduce_to_independent(const IndexCycle& cycle, int n) {
    for (int j : cycle.indexes) check_index(j, n);
    const int l = cycle.length();
    std::vector<SignedMember> out;

    if (l == 1) {
        out.push_back(diag_member(cycle.indexes[0]));
        return out;
    }
    if (l == 2) {
        out.push_back(quad_member(cycle.indexes[0], cycle.indexes[1], +1));
        return out;
    }

    if (cycle.indexes[0] == 1) {
        // gamma_{1 a1 ... am} = prod_i gamma_{1 ai a(i+1)} * prod interior (gamma_{1 ai})^*
        const std::vector<int>& a = cycle.indexes;
        const int m = l - 1;
        for (int i = 1; i + 1 <= m; ++i) append_cubic_leg(out, a[i], a[i + 1]);
        for (int i = 2; i + 1 <= m; ++i) out.push_back(quad_member(1, a[i], -1));
        return out;
    }

    // Cycle avoiding index 1: anchor every leg through 1,
    // gamma_cycle = prod_i gamma_{1 ji j(i+1)} * prod_i (gamma_{1 ji})^*.
    for (int i = 0; i < l; ++i) {
        append_cubic_leg(out, cycle.indexes[i], cycle.indexes[(i + 1) % l]);
        out.push_back(quad_member(1, cycle.indexes[i], -1));
    }
    return out;
}

std::complex<double> evaluate_product(const std::vector<SignedMember>& product,
                                      const IndependentSet& set) {
    std::complex<double> value{1.0, 0.0};
    for (const SignedMember& sm : product) {
        const PhaseFactor* pf = nullptr;
        switch (sm.member.kind) {
            case PhaseMember::Kind::Diagonal:
                check_index(sm.member.idx[0], set.n);
                pf = &set.diagonal[sm.member.idx[0] - 1];
                break;
            case PhaseMember::Kind::Quadratic:
                pf = &set.quad(sm.member.idx[0], sm.member.idx[1]);
                break;
            case PhaseMember::Kind::Cubic:
                pf = &set.cube(sm.member.idx[1], sm.member.idx[2]);
                break;
        }
        if (!pf->is_defined())
            throw UndefinedConstituent({{sm.member.idx[0], sm.member.idx[1]}});
        value *= (sm.exponent > 0) ? pf->value() : std::conj(pf->value());
    }
    return value;
}

std::string member_name(const PhaseMember& m) {
    switch (m.kind) {
        case PhaseMember::Kind::Diagonal:
            return "g(" + std::to_string(m.idx[0]) + ")";
        case PhaseMember::Kind::Quadratic:
            return "g(" + std::to_string(m.idx[0]) + "," + std::to_string(m.idx[1]) + ")";
        case PhaseMember::Kind::Cubic:
            return "g(1," + std::to_string(m.idx[1]) + "," + std::to_string(m.idx[2]) + ")";
    }
    return {};
}

namespace {

// gamma of an explicit (repeat-free) sequence, assuming all sigmas defined.
std::complex<double> gamma_of(const Matrix& U, const std::vector<int>& seq, double undef_tol) {
    return gamma_cycle(U, IndexCycle::of(seq), undef_tol).value();
}

// Enumerates ordered tuples of `len` distinct indexes from 1..n.
void for_each_tuple(int n, int len, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> tuple(len);
    std::vector<bool> used(n + 1, false);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == len) {
            fn(tuple);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            tuple[pos] = v;
            rec(pos + 1);
            used[v] = false;
        }
    };
    rec(0);
}

}  // namespace

IdentityReport verify_identities(const Matrix& U, double tol, double undef_tol) {
    const int n = static_cast<int>(U.rows());
    IdentityReport report;
    report.tol = tol;

    auto record = [&](std::string identity, std::vector<int> indexes, double residual) {
        report.max_residual = std::max(report.max_residual, residual);
        report.checks.push_back({std::move(identity), std::move(indexes), residual});
    };

    // Triangle reversal: gamma_{jkm} gamma_{jmk} = gamma_{jk} gamma_{km} gamma_{jm}.
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            for (int m = k + 1; m <= n; ++m) {
                const auto lhs = gamma_of(U, {j, k, m}, undef_tol) *
                                 gamma_of(U, {j, m, k}, undef_tol);
                const auto rhs = gamma_of(U, {j, k}, undef_tol) *
                                 gamma_of(U, {k, m}, undef_tol) *
                                 gamma_of(U, {j, m}, undef_tol);
                record("triangle_reversal", {j, k, m}, std::abs(lhs - rhs));
            }

    // Anchor exchange:
    // gamma_{ijm} (gamma_{mj})^* gamma_{jkm} = gamma_{ijk} (gamma_{ki})^* gamma_{ikm}.
    for_each_tuple(n, 4, [&](const std::vector<int>& t) {
        const int i = t[0], j = t[1], k = t[2], m = t[3];
        const auto lhs = gamma_of(U, {i, j, m}, undef_tol) *
                         std::conj(gamma_of(U, {m, j}, undef_tol)) *
                         gamma_of(U, {j, k, m}, undef_tol);
        const auto rhs = gamma_of(U, {i, j, k}, undef_tol) *
                         std::conj(gamma_of(U, {k, i}, undef_tol)) *
                         gamma_of(U, {i, k, m}, undef_tol);
        record("anchor_exchange", t, std::abs(lhs - rhs));
    });

    // Chain splitting (l >= 4):
    // gamma_{i {j} k {m}} = gamma_{i {j} k} gamma_{k {m} i} (gamma_{ik})^*.
    for (int l = 4; l <= n; ++l) {
        for_each_tuple(n, l, [&](const std::vector<int>& t) {
            for (int split = 2; split <= l - 2; ++split) {
                const int i = t[0], k = t[split];
                std::vector<int> left(t.begin(), t.begin() + split + 1);  // i {j} k
                std::vector<int> right(t.begin() + split, t.end());       // k {m}
                right.push_back(i);                                       // ... i
                const auto lhs = gamma_of(U, t, undef_tol);
                const auto rhs = gamma_of(U, left, undef_tol) *
                                 gamma_of(U, right, undef_tol) *
                                 std::conj(gamma_of(U, {i, k}, undef_tol));
                std::vector<int> tag = t;
                tag.push_back(split);
                record("chain_split", tag, std::abs(lhs - rhs));
            }
        });
    }

    report.pass = report.max_residual <= tol;
    return report;
}

IdentityReport verify_identities(const TransportResult& result, double tol, double undef_tol) {
    return verify_identities(result.U, tol, undef_tol);
}

int independence_rank(int n, int samples, std::uint64_t seed) {
    if (n < 1) throw InvalidParameter("independence_rank: n must be >= 1");
    if (samples < 1) throw InvalidParameter("independence_rank: samples must be >= 1");

    const int members = n * n - n + 1;
    const int variables = n * n;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);

    auto build_matrix = [n](const Eigen::VectorXd& phases) {
        Matrix U(n, n);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const double a = phases(j * n + k);
                U(j, k) = std::complex<double>(std::cos(a), std::sin(a));
            }
        return U;
    };

    auto member_values = [&](const Eigen::VectorXd& phases) {
        const IndependentSet set = independent_set(build_matrix(phases), 1e-14);
        std::vector<std::complex<double>> vals;
        vals.reserve(set.count());
        for (const auto& p : set.diagonal) vals.push_back(p.value());
        for (const auto& p : set.quadratic) vals.push_back(p.value());
        for (const auto& p : set.cubic) vals.push_back(p.value());
        return vals;
    };

    int best_rank = 0;
    const double h = 1e-6;
    for (int s = 0; s < samples; ++s) {
        Eigen::VectorXd phases(variables);
        for (int v = 0; v < variables; ++v) phases(v) = angle(rng);

        Eigen::MatrixXd jacobian(members, variables);
        for (int v = 0; v < variables; ++v) {
            Eigen::VectorXd up = phases, down = phases;
            up(v) += h;
            down(v) -= h;
            const auto plus = member_values(up);
            const auto minus = member_values(down);
            for (int r = 0; r < members; ++r)
                jacobian(r, v) = std::arg(plus[r] * std::conj(minus[r])) / (2.0 * h);
        }

        Eigen::JacobiSVD<Eigen::MatrixXd> svd(jacobian);
        const auto& sv = svd.singularValues();
        int rank = 0;
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            if (sv(i) > 1e-6 * sv(0)) ++rank;
        best_rank = std::max(best_rank, rank);
    }
    return best_rank;
}

}  // namespace geomphase
