#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "geomphase/commands.hpp"

namespace {

using geomphase::CommandOutcome;
using geomphase::RunConfig;

struct CommonOptions {
    std::string config_path;
    std::optional<long> steps;
    std::optional<double> tol;
    std::optional<double> undef_tol;
    std::optional<double> dominance;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> format;
    std::string output_path;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool config_required) {
    auto* config = cmd->add_option("--config", opts.config_path, "config file (JSON)");
    if (config_required) config->required();
    cmd->add_option("--steps", opts.steps, "override transport.initial_steps");
    cmd->add_option("--tol", opts.tol, "override transport.target_tol");
    cmd->add_option("--undef-tol", opts.undef_tol, "override tolerances.undef_tol");
    cmd->add_option("--dominance", opts.dominance, "override tolerances.dominance_factor");
    cmd->add_option("--seed", opts.seed, "override model.seed");
    cmd->add_option("--format", opts.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--output", opts.output_path, "write the report here (default stdout)");
}

RunConfig load_with_overrides(const CommonOptions& opts) {
    RunConfig config = geomphase::load_config(opts.config_path);
    if (opts.steps) config.transport.initial_steps = *opts.steps;
    if (opts.tol) config.transport.target_tol = *opts.tol;
    if (opts.undef_tol) config.undef_tol = *opts.undef_tol;
    if (opts.dominance) config.dominance_factor = *opts.dominance;
    if (opts.seed) {
        if (!config.model.contains("seed"))
            throw geomphase::ConfigError("model.seed", "model takes no seed");
        config.model["seed"] = *opts.seed;
    }
    if (opts.format) config.format = *opts.format;
    return config;
}

int emit(const CommandOutcome& outcome, const std::string& format,
         const std::string& output_path) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!output_path.empty()) {
        file.open(output_path);
        if (!file) {
            std::cerr << "cannot open output file '" << output_path << "'\n";
            return geomphase::kExitConfig;
        }
        out = &file;
    }
    if (format == "structured")
        *out << outcome.doc.dump(2) << "\n";
    else
        *out << geomphase::render_text(outcome.doc);
    return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"off-diagonal geometric phase factors of parallel-transported eigenframes"};
    app.require_subcommand(1);

    CommonOptions transport_opts, phases_opts, classify_opts, identities_opts;
    auto* transport = app.add_subcommand("transport", "overlap matrix U with diagnostics");
    add_common(transport, transport_opts, true);
    auto* phases = app.add_subcommand("phases", "sigma/gamma factors and the independent set");
    add_common(phases, phases_opts, true);
    auto* classify = app.add_subcommand("classify", "endpoint permutation classification");
    add_common(classify, classify_opts, true);
    auto* identities = app.add_subcommand("identities", "exact-identity residuals");
    add_common(identities, identities_opts, true);

    int table_n = 3;
    bool table_expand = false;
    std::string table_format = "text", table_output;
    auto* table = app.add_subcommand("table", "well-defined factors per permutation");
    table->add_option("n", table_n, "dimension")->required();
    table->add_flag("--expand", table_expand, "list all n! permutations");
    table->add_option("--format", table_format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    table->add_option("--output", table_output, "write the report here");

    std::string demo_name, demo_format = "text", demo_output;
    auto* demo = app.add_subcommand("demo", "canned example runs");
    demo->add_option("name", demo_name, "spin | conical | crossing")->required();
    demo->add_option("--format", demo_format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    demo->add_option("--output", demo_output, "write the report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*table) return emit(geomphase::cmd_table(table_n, table_expand), table_format,
                                table_output);
        if (*demo)
            return emit(geomphase::cmd_demo(demo_name, demo_format), demo_format, demo_output);

        const CommonOptions& opts = *transport   ? transport_opts
                                    : *phases    ? phases_opts
                                    : *classify  ? classify_opts
                                                 : identities_opts;
        const RunConfig config = load_with_overrides(opts);
        CommandOutcome outcome;
        if (*transport)
            outcome = geomphase::cmd_transport(config);
        else if (*phases)
            outcome = geomphase::cmd_phases(config);
        else if (*classify)
            outcome = geomphase::cmd_classify(config);
        else
            outcome = geomphase::cmd_identities(config);
        return emit(outcome, config.format, opts.output_path);
    } catch (const geomphase::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return geomphase::kExitConfig;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return geomphase::kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return geomphase::kExitInternal;
    }
}
