#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "geomphase/pathspace.hpp"
#include "geomphase/transport.hpp"

namespace geomphase {

inline const std::vector<std::string> kOutputSections = {
    "U", "sigmas", "gammas", "independent_set", "classification", "identities"};

struct RunConfig {
    nlohmann::json model;  // model descriptor, see build_model
    TransportSettings transport;
    std::vector<std::string> outputs;
    double undef_tol = 1e-8;
    double dominance_factor = 10.0;
    std::string format = "text";  // or "structured"

    bool operator==(const RunConfig&) const = default;
};

// Parses and validates a config document; throws ConfigError with the
// offending field path.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

// Full round-trippable form (defaults filled in).
nlohmann::json config_to_json(const RunConfig& config);

// Instantiates the model named by a descriptor:
//   spin_half        {theta_f}
//   conical          {hx, hy, span: [a,b], radius}
//   conical3         {span: [a,b], radius}
//   random_symmetric {n, seed, harmonics}
//   avoided_crossing {delta}
//   constant         {matrix}
// Matrices are arrays of rows; entries are numbers or {re, im} pairs.
ParameterPath build_model(const nlohmann::json& descriptor);

}  // namespace geomphase
