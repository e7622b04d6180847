#include "geomphase/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace geomphase {

using nlohmann::json;

json complex_json(std::complex<double> z) {
    return {{"re", z.real()}, {"im", z.imag()}};
}

namespace {

// JSON has no infinity literal; non-finite diagnostics serialize as "inf".
json finite_or_inf(double v) {
    if (std::isfinite(v)) return v;
    return v > 0 ? "inf" : "-inf";
}

double as_double(const json& v) {
    if (v.is_string())
        return v.get<std::string>() == "inf" ? std::numeric_limits<double>::infinity()
                                             : -std::numeric_limits<double>::infinity();
    return v.get<double>();
}

}  // namespace

json phase_json(const PhaseFactor& p) {
    if (!p.is_defined()) return {{"undefined", true}, {"magnitude", p.magnitude()}};
    json out = {{"re", p.value().real()}, {"im", p.value().imag()}, {"angle", p.angle()}};
    if (std::abs(p.value() - 1.0) <= kSignThreshold)
        out["sign"] = "+1";
    else if (std::abs(p.value() + 1.0) <= kSignThreshold)
        out["sign"] = "-1";
    return out;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

json diagnostics_json(const TransportResult& result) {
    return {{"steps_used", result.steps_used},
            {"min_gap_along_path", finite_or_inf(result.min_gap_along_path)},
            {"convergence_estimate", finite_or_inf(result.convergence_estimate)},
            {"dim", result.dim()}};
}

json sigmas_json(const Matrix& U, double undef_tol) {
    const int n = static_cast<int>(U.rows());
    json rows = json::array();
    for (int j = 1; j <= n; ++j) {
        json row = json::array();
        for (int k = 1; k <= n; ++k) row.push_back(phase_json(sigma(U, j, k, undef_tol)));
        rows.push_back(row);
    }
    return rows;
}

namespace {

// Canonical repeat-free cycles of length l: smallest element first, every
// arrangement of the rest.
void for_each_cycle(int n, const std::function<void(const IndexCycle&)>& fn) {
    std::vector<int> members;
    std::function<void(int, int)> choose = [&](int next, int want) {
        if (want == 0) {
            std::vector<int> rest(members.begin() + 1, members.end());
            std::sort(rest.begin(), rest.end());
            do {
                std::vector<int> cycle = {members.front()};
                cycle.insert(cycle.end(), rest.begin(), rest.end());
                fn(IndexCycle::of(cycle));
            } while (std::next_permutation(rest.begin(), rest.end()));
            return;
        }
        for (int v = next; v <= n - want + 1; ++v) {
            members.push_back(v);
            choose(v + 1, want - 1);
            members.pop_back();
        }
    };
    for (int l = 1; l <= n; ++l) choose(1, l);
}

json cycle_json(const IndexCycle& cycle) {
    return json(cycle.indexes);
}

json gamma_entry(const Matrix& U, const IndexCycle& cycle, double undef_tol) {
    json entry = {{"cycle", cycle_json(cycle)}};
    try {
        entry["value"] = phase_json(gamma_cycle(U, cycle, undef_tol));
    } catch (const UndefinedConstituent& e) {
        entry["undefined"] = true;
        json links = json::array();
        for (const auto& [j, k] : e.links) links.push_back({j, k});
        entry["undefined_links"] = links;
    }
    return entry;
}

}  // namespace

json gammas_json(const Matrix& U, double undef_tol) {
    json out = json::array();
    for_each_cycle(static_cast<int>(U.rows()),
                   [&](const IndexCycle& c) { out.push_back(gamma_entry(U, c, undef_tol)); });
    return out;
}

json independent_set_json(const Matrix& U, double undef_tol) {
    const int n = static_cast<int>(U.rows());
    json diagonal = json::array(), quadratic = json::array(), cubic = json::array();
    for (int j = 1; j <= n; ++j)
        diagonal.push_back(gamma_entry(U, IndexCycle::of({j}), undef_tol));
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            quadratic.push_back(gamma_entry(U, IndexCycle::of({j, k}), undef_tol));
    for (int j = 2; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            cubic.push_back(gamma_entry(U, IndexCycle::of({1, j, k}), undef_tol));
    return {{"n", n},
            {"count", n * n - n + 1},
            {"diagonal", diagonal},
            {"quadratic", quadratic},
            {"cubic", cubic}};
}

json classification_json(const Matrix& U, double dominance_factor, double undef_tol) {
    const DominanceReport report = detect_permutation(U, dominance_factor);
    json margins = json::array();
    for (double m : report.margins) margins.push_back(finite_or_inf(m));
    json out = {{"dominance_factor", dominance_factor}, {"margins", margins}};
    if (!report.detected) {
        out["detected"] = nullptr;
        return out;
    }

    const PermutationClassification cls = classify(*report.detected);
    out["detected"] = cls.permutation.images;
    json cycles = json::array();
    for (const auto& c : cls.well_defined) cycles.push_back(cycle_json(c));
    out["classification"] = {{"cycles", cycles},
                             {"condition", cls.condition_text()},
                             {"sign", cls.condition_sign},
                             {"real_case_count", cls.real_case_count}};

    // Determinant rule: the product of per-cycle gammas over the dominant
    // sigmas must equal (-1)^P.
    std::complex<double> product{1.0, 0.0};
    bool all_defined = true;
    for (const auto& c : cls.well_defined) {
        try {
            product *= gamma_cycle(U, c, undef_tol).value();
        } catch (const UndefinedConstituent&) {
            all_defined = false;
        }
    }
    if (all_defined) {
        const double expected = cls.condition_sign;
        out["determinant_check"] = {{"product", complex_json(product)},
                                    {"expected", expected},
                                    {"deviation", std::abs(product - expected)}};
    }
    return out;
}

json identities_json(const Matrix& U, double undef_tol) {
    constexpr double kIdentityTol = 1e-12;
    json out;
    try {
        const IdentityReport report = verify_identities(U, kIdentityTol, undef_tol);
        double worst_triangle = 0.0, worst_anchor = 0.0, worst_chain = 0.0;
        for (const auto& check : report.checks) {
            if (check.identity == "triangle_reversal")
                worst_triangle = std::max(worst_triangle, check.residual);
            else if (check.identity == "anchor_exchange")
                worst_anchor = std::max(worst_anchor, check.residual);
            else
                worst_chain = std::max(worst_chain, check.residual);
        }
        out = {{"tol", report.tol},
               {"max_residual", report.max_residual},
               {"pass", report.pass},
               {"checks", report.checks.size()},
               {"max_by_identity",
                {{"triangle_reversal", worst_triangle},
                 {"anchor_exchange", worst_anchor},
                 {"chain_split", worst_chain}}}};
    } catch (const UndefinedConstituent& e) {
        json links = json::array();
        for (const auto& [j, k] : e.links) links.push_back({j, k});
        out = {{"error", "undefined constituents"}, {"undefined_links", links}};
    }
    return out;
}

json table_json(int n) {
    json groups = json::array();
    for (const auto& g : grouped_table(n)) {
        json cycles = json::array();
        for (const auto& c : g.representative.well_defined) cycles.push_back(cycle_json(c));
        groups.push_back({{"permutation", g.representative.permutation.images},
                          {"cycles", cycles},
                          {"condition", g.representative.condition_text()},
                          {"sign", g.representative.condition_sign},
                          {"real_case_count", g.representative.real_case_count},
                          {"multiplicity", g.multiplicity},
                          {"starred", g.starred}});
    }
    json out = {{"n", n}, {"groups", groups},
                {"note", "cycle labels are literal index cycles of the permutation"}};
    if (n <= 6) {
        json rows = json::array();
        for (const auto& row : table_for_n(n)) {
            json cycles = json::array();
            for (const auto& c : row.well_defined) cycles.push_back(cycle_json(c));
            rows.push_back({{"permutation", row.permutation.images},
                            {"cycles", cycles},
                            {"condition", row.condition_text()},
                            {"sign", row.condition_sign},
                            {"real_case_count", row.real_case_count}});
        }
        out["rows"] = rows;
    }
    return out;
}

namespace {

std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

std::string fmt_complex(const json& z) {
    const double re = z["re"].get<double>(), im = z["im"].get<double>();
    std::ostringstream os;
    os << std::showpos << std::fixed << std::setprecision(9) << re << im << "i";
    return os.str();
}

std::string fmt_phase(const json& p) {
    if (p.contains("undefined") && p["undefined"].get<bool>())
        return "undefined (|U| = " + fmt_double(p["magnitude"].get<double>()) + ")";
    std::string s = fmt_complex(p);
    s += "  angle " + fmt_double(p["angle"].get<double>());
    if (p.contains("sign")) s += "  [" + p["sign"].get<std::string>() + "]";
    return s;
}

std::string fmt_cycle(const json& cycle) {
    std::string s = "g(";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(cycle[i].get<int>());
    }
    return s + ")";
}

void render_gamma_list(std::ostringstream& os, const json& list) {
    for (const auto& entry : list) {
        os << "  " << fmt_cycle(entry["cycle"]) << " = ";
        if (entry.contains("undefined_links")) {
            os << "undefined via sigma";
            for (const auto& link : entry["undefined_links"])
                os << " (" << link[0].get<int>() << "," << link[1].get<int>() << ")";
            os << "\n";
        } else {
            os << fmt_phase(entry["value"]) << "\n";
        }
    }
}

}  // namespace

std::string render_text(const json& doc) {
    std::ostringstream os;

    if (doc.contains("error")) {
        const auto& e = doc["error"];
        os << "ERROR [" << e.value("kind", "unknown") << "]: " << e.value("message", "")
           << "\n";
    }

    if (doc.contains("config"))
        os << "config: " << doc["config"].dump() << "\n";

    if (doc.contains("diagnostics")) {
        const auto& d = doc["diagnostics"];
        os << "diagnostics: steps_used = " << d["steps_used"].get<long>()
           << ", min_gap = " << fmt_double(as_double(d["min_gap_along_path"]))
           << ", convergence_estimate = "
           << fmt_double(as_double(d["convergence_estimate"])) << "\n";
    }

    if (doc.contains("U")) {
        os << "U (rows: initial states j, columns: transported states k):\n";
        for (const auto& row : doc["U"]) {
            os << " ";
            for (const auto& z : row) os << "  " << fmt_complex(z);
            os << "\n";
        }
    }

    if (doc.contains("sigmas")) {
        os << "sigma matrix (phase of U_jk):\n";
        int j = 1;
        for (const auto& row : doc["sigmas"]) {
            int k = 1;
            for (const auto& p : row) {
                os << "  sigma(" << j << "," << k << ") = " << fmt_phase(p) << "\n";
                ++k;
            }
            ++j;
        }
    }

    if (doc.contains("gammas")) {
        os << "gamma factors (all repeat-free cycles):\n";
        render_gamma_list(os, doc["gammas"]);
    }

    if (doc.contains("independent_set")) {
        const auto& set = doc["independent_set"];
        os << "independent set (" << set["count"].get<int>() << " members at n = "
           << set["n"].get<int>() << "):\n";
        render_gamma_list(os, set["diagonal"]);
        render_gamma_list(os, set["quadratic"]);
        render_gamma_list(os, set["cubic"]);
    }

    if (doc.contains("classification")) {
        const auto& c = doc["classification"];
        os << "endpoint permutation: ";
        if (c["detected"].is_null()) {
            os << "not detected (no dominant bijection at factor "
               << fmt_double(c["dominance_factor"].get<double>()) << ")\n";
        } else {
            os << "P =";
            for (const auto& v : c["detected"]) os << " " << v.get<int>();
            os << "\n";
            const auto& cls = c["classification"];
            os << "  well-defined:";
            for (const auto& cycle : cls["cycles"]) os << " " << fmt_cycle(cycle);
            os << "\n  condition: " << cls["condition"].get<std::string>()
               << "   real cases: " << cls["real_case_count"].get<long>() << "\n";
            if (c.contains("determinant_check")) {
                const auto& det = c["determinant_check"];
                os << "  determinant check: product = " << fmt_complex(det["product"])
                   << ", expected " << fmt_double(det["expected"].get<double>())
                   << ", deviation " << fmt_double(det["deviation"].get<double>()) << "\n";
            }
        }
        os << "  margins:";
        for (const auto& m : c["margins"]) os << " " << fmt_double(as_double(m));
        os << "\n";
    }

    if (doc.contains("identities")) {
        const auto& ident = doc["identities"];
        if (ident.contains("error")) {
            os << "identities: unavailable (undefined constituents)\n";
        } else {
            os << "identities: " << ident["checks"].get<std::size_t>()
               << " checks, max residual " << fmt_double(ident["max_residual"].get<double>())
               << (ident["pass"].get<bool>() ? " (pass at " : " (FAIL at ")
               << fmt_double(ident["tol"].get<double>()) << ")\n";
        }
    }

    if (doc.contains("table_text")) os << doc["table_text"].get<std::string>();

    os << "conventions: angles in radians; indexes 1-based; sign shown when within "
       << fmt_double(kSignThreshold) << " of +-1\n";
    return os.str();
}

}  // namespace geomphase
