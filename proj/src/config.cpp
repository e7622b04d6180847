#include "geomphase/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "geomphase/models.hpp"

namespace geomphase {

namespace {

using nlohmann::json;

double number_at(const json& doc, const std::string& field, double fallback,
                 bool required = false) {
    if (!doc.contains(field)) {
        if (required) throw ConfigError(field, "missing required value");
        return fallback;
    }
    if (!doc[field].is_number()) throw ConfigError(field, "expected a number");
    return doc[field].get<double>();
}

std::complex<double> complex_entry(const json& cell, const std::string& field) {
    if (cell.is_number()) return {cell.get<double>(), 0.0};
    if (cell.is_object() && cell.contains("re"))
        return {cell["re"].get<double>(), cell.value("im", 0.0)};
    throw ConfigError(field, "matrix entries must be numbers or {re, im} objects");
}

Matrix matrix_at(const json& doc, const std::string& field) {
    if (!doc.contains(field) || !doc[field].is_array() || doc[field].empty())
        throw ConfigError(field, "expected a nonempty array of rows");
    const auto& rows = doc[field];
    const auto n = rows.size();
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n)
            throw ConfigError(field, "rows must all have length " + std::to_string(n));
        for (std::size_t c = 0; c < n; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                complex_entry(rows[r][c], field);
    }
    return m;
}

std::pair<double, double> span_at(const json& doc, double def_a, double def_b) {
    if (!doc.contains("span")) return {def_a, def_b};
    const auto& span = doc["span"];
    if (!span.is_array() || span.size() != 2)
        throw ConfigError("model.span", "expected [theta_a, theta_b]");
    return {span[0].get<double>(), span[1].get<double>()};
}

}  // namespace

ParameterPath build_model(const nlohmann::json& descriptor) {
    if (!descriptor.is_object() || !descriptor.contains("name"))
        throw ConfigError("model.name", "missing model name");
    const std::string name = descriptor["name"].get<std::string>();
    try {
        if (name == "spin_half")
            return spin_half(number_at(descriptor, "theta_f", 0.0, true));
        if (name == "conical") {
            const auto [a, b] = span_at(descriptor, 0.0, M_PI);
            return conical(matrix_at(descriptor, "hx"), matrix_at(descriptor, "hy"), a, b,
                           number_at(descriptor, "radius", 1.0));
        }
        if (name == "conical3") {
            const auto [a, b] = span_at(descriptor, 0.0, M_PI);
            return conical3(a, b, number_at(descriptor, "radius", 1.0));
        }
        if (name == "random_symmetric")
            return random_symmetric(
                static_cast<int>(number_at(descriptor, "n", 0.0, true)),
                descriptor.contains("seed") ? descriptor["seed"].get<std::uint64_t>()
                                            : throw ConfigError("model.seed", "missing seed"),
                static_cast<int>(number_at(descriptor, "harmonics", 1.0)));
        if (name == "avoided_crossing")
            return avoided_crossing(number_at(descriptor, "delta", 0.0, true));
        if (name == "constant") return constant_path(matrix_at(descriptor, "matrix"));
    } catch (const InvalidParameter& e) {
        throw ConfigError("model", e.what());
    }
    throw ConfigError("model.name", "unknown model '" + name + "'");
}

RunConfig parse_config(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ConfigError("", "config must be a JSON object");
    RunConfig config;

    if (!doc.contains("model")) throw ConfigError("model", "missing model descriptor");
    config.model = doc["model"];
    build_model(config.model);  // validate eagerly

    if (doc.contains("transport")) {
        const auto& t = doc["transport"];
        config.transport.initial_steps =
            static_cast<long>(number_at(t, "initial_steps", 256.0));
        config.transport.max_steps = static_cast<long>(number_at(t, "max_steps", 1048576.0));
        config.transport.target_tol = number_at(t, "target_tol", 1e-8);
        config.transport.gap_tol = number_at(t, "gap_tol", 1e-10);
        if (config.transport.initial_steps < 1 ||
            config.transport.max_steps < config.transport.initial_steps)
            throw ConfigError("transport", "need 1 <= initial_steps <= max_steps");
        if (config.transport.target_tol <= 0 || config.transport.gap_tol <= 0)
            throw ConfigError("transport", "tolerances must be positive");
    }

    if (doc.contains("outputs")) {
        if (!doc["outputs"].is_array() || doc["outputs"].empty())
            throw ConfigError("outputs", "expected a nonempty array");
        for (const auto& section : doc["outputs"]) {
            const std::string s = section.get<std::string>();
            if (std::find(kOutputSections.begin(), kOutputSections.end(), s) ==
                kOutputSections.end())
                throw ConfigError("outputs", "unknown section '" + s + "'");
            if (std::find(config.outputs.begin(), config.outputs.end(), s) ==
                config.outputs.end())
                config.outputs.push_back(s);
        }
    }

    if (doc.contains("tolerances")) {
        const auto& t = doc["tolerances"];
        config.undef_tol = number_at(t, "undef_tol", 1e-8);
        config.dominance_factor = number_at(t, "dominance_factor", 10.0);
        if (config.undef_tol <= 0) throw ConfigError("tolerances.undef_tol", "must be positive");
        if (config.dominance_factor <= 1)
            throw ConfigError("tolerances.dominance_factor", "must be > 1");
    }

    if (doc.contains("format")) {
        config.format = doc["format"].get<std::string>();
        if (config.format != "text" && config.format != "structured")
            throw ConfigError("format", "expected 'text' or 'structured'");
    }
    return config;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", "cannot open config file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("JSON parse error: ") + e.what());
    }
    return parse_config(doc);
}

nlohmann::json config_to_json(const RunConfig& config) {
    nlohmann::json doc = {
        {"model", config.model},
        {"transport",
         {{"initial_steps", config.transport.initial_steps},
          {"max_steps", config.transport.max_steps},
          {"target_tol", config.transport.target_tol},
          {"gap_tol", config.transport.gap_tol}}},
        {"tolerances",
         {{"undef_tol", config.undef_tol}, {"dominance_factor", config.dominance_factor}}},
        {"format", config.format}};
    if (!config.outputs.empty()) doc["outputs"] = config.outputs;
    return doc;
}

}  // namespace geomphase
