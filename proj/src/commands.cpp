#include "geomphase/commands.hpp"

#include <algorithm>
#include <cmath>

namespace geomphase {

namespace {

using nlohmann::json;

// Surfaced as exit code 4: a converged transport whose result breaks the
// unitarity or orientation invariants indicates a defect, not bad input.
struct InternalInvariantViolation : Error {
    using Error::Error;
};

void check_result_invariants(const TransportResult& result) {
    const int n = result.dim();
    const double unitarity =
        (result.U.adjoint() * result.U - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (unitarity > 1e-9)
        throw InternalInvariantViolation("transport result lost unitarity: " +
                                         std::to_string(unitarity));
    if (result.convergence_estimate <= 1e-8) {
        const double det_dev = std::abs(result.U.determinant() - 1.0);
        if (det_dev > 1e-8)
            throw InternalInvariantViolation("transport result lost orientation: |det U - 1| = " +
                                             std::to_string(det_dev));
    }
}

json error_record(const std::string& kind, const std::string& message) {
    return {{"kind", kind}, {"message", message}};
}

std::vector<std::string> effective_outputs(const RunConfig& config,
                                           std::vector<std::string> defaults,
                                           const std::string& required) {
    std::vector<std::string> outputs =
        config.outputs.empty() ? std::move(defaults) : config.outputs;
    if (!required.empty() &&
        std::find(outputs.begin(), outputs.end(), required) == outputs.end())
        outputs.push_back(required);
    return outputs;
}

CommandOutcome run_with_outputs(const RunConfig& config, std::vector<std::string> defaults,
                                const std::string& required) {
    CommandOutcome outcome;
    RunConfig effective = config;
    effective.outputs = effective_outputs(config, std::move(defaults), required);
    outcome.doc["config"] = config_to_json(effective);

    try {
        const ParameterPath path = build_model(effective.model);
        const TransportResult result = transport_adaptive(path, effective.transport);
        check_result_invariants(result);

        outcome.doc["diagnostics"] = diagnostics_json(result);
        for (const std::string& section : effective.outputs) {
            if (section == "U")
                outcome.doc["U"] = matrix_json(result.U);
            else if (section == "sigmas")
                outcome.doc["sigmas"] = sigmas_json(result.U, effective.undef_tol);
            else if (section == "gammas")
                outcome.doc["gammas"] = gammas_json(result.U, effective.undef_tol);
            else if (section == "independent_set")
                outcome.doc["independent_set"] =
                    independent_set_json(result.U, effective.undef_tol);
            else if (section == "classification")
                outcome.doc["classification"] = classification_json(
                    result.U, effective.dominance_factor, effective.undef_tol);
            else if (section == "identities")
                outcome.doc["identities"] = identities_json(result.U, effective.undef_tol);
        }
    } catch (const NoConvergence& e) {
        outcome.doc["error"] = error_record("no_convergence", e.what());
        outcome.doc["diagnostics"] = diagnostics_json(e.result);
        outcome.exit_code = kExitComputational;
    } catch (const DegenerateSpectrum& e) {
        outcome.doc["error"] = error_record("degenerate_spectrum", e.what());
        outcome.exit_code = kExitComputational;
    } catch (const DegenerateOnPath& e) {
        outcome.doc["error"] = error_record("degenerate_on_path", e.what());
        outcome.exit_code = kExitComputational;
    } catch (const LostTrack& e) {
        outcome.doc["error"] = error_record("lost_track", e.what());
        outcome.exit_code = kExitComputational;
    } catch (const UndefinedConstituent& e) {
        outcome.doc["error"] = error_record("undefined_constituent", e.what());
        outcome.exit_code = kExitComputational;
    } catch (const InternalInvariantViolation& e) {
        outcome.doc["error"] = error_record("internal_invariant", e.what());
        outcome.exit_code = kExitInternal;
    }
    return outcome;
}

}  // namespace

CommandOutcome cmd_transport(const RunConfig& config) {
    return run_with_outputs(config, {"U"}, "");
}

CommandOutcome cmd_phases(const RunConfig& config) {
    return run_with_outputs(config, {"U", "sigmas", "gammas", "independent_set"}, "gammas");
}

CommandOutcome cmd_classify(const RunConfig& config) {
    return run_with_outputs(config, {"U", "classification"}, "classification");
}

CommandOutcome cmd_identities(const RunConfig& config) {
    return run_with_outputs(config, {"U", "identities"}, "identities");
}

CommandOutcome cmd_table(int n, bool expand) {
    CommandOutcome outcome;
    try {
        outcome.doc["table"] = table_json(n);
        outcome.doc["table_text"] = render_table_text(n, expand);
    } catch (const DimensionTooLarge& e) {
        outcome.doc["error"] = error_record("dimension_too_large", e.what());
        outcome.exit_code = kExitConfig;
    } catch (const InvalidParameter& e) {
        outcome.doc["error"] = error_record("invalid_parameter", e.what());
        outcome.exit_code = kExitConfig;
    }
    return outcome;
}

RunConfig demo_config(const std::string& name) {
    json doc;
    if (name == "spin") {
        doc = {{"model", {{"name", "spin_half"}, {"theta_f", M_PI}}},
               {"outputs", {"U", "sigmas", "gammas", "classification"}}};
    } else if (name == "conical") {
        doc = {{"model", {{"name", "conical3"}, {"span", {0.0, M_PI}}}},
               {"outputs", {"U", "gammas", "classification"}}};
    } else if (name == "crossing") {
        doc = {{"model", {{"name", "avoided_crossing"}, {"delta", 1e-4}}},
               {"outputs", {"U", "classification"}}};
    } else {
        throw ConfigError("demo", "unknown demo '" + name + "' (spin|conical|crossing)");
    }
    return parse_config(doc);
}

CommandOutcome cmd_demo(const std::string& name, const std::string& format) {
    RunConfig config = demo_config(name);
    config.format = format;
    if (name == "classify" || name == "crossing" || name == "conical")
        return cmd_classify(config);
    return cmd_phases(config);
}

}  // namespace geomphase
