#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "geomphase/commands.hpp"
#include "geomphase/models.hpp"

using namespace geomphase;
using nlohmann::json;

namespace {

json spin_config(double theta) {
    return {{"model", {{"name", "spin_half"}, {"theta_f", theta}}},
            {"outputs", {"U", "sigmas", "gammas"}},
            {"format", "structured"}};
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(GEOMPHASE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("config round-trips through serialization") {
    json doc = spin_config(1.5);
    doc["transport"] = {{"initial_steps", 128},
                        {"max_steps", 4096},
                        {"target_tol", 1e-7},
                        {"gap_tol", 1e-9}};
    doc["tolerances"] = {{"undef_tol", 1e-6}, {"dominance_factor", 20.0}};
    const RunConfig config = parse_config(doc);
    const RunConfig again = parse_config(config_to_json(config));
    CHECK(config == again);
    CHECK(config.transport.initial_steps == 128);
    CHECK(config.undef_tol == 1e-6);
    CHECK(config.dominance_factor == 20.0);
}

TEST_CASE("config validation points at the offending field") {
    CHECK_THROWS_AS(parse_config(json::array()), ConfigError);
    CHECK_THROWS_AS(parse_config(json{{"outputs", {"U"}}}), ConfigError);

    json bad = spin_config(1.0);
    bad["outputs"] = json::array();
    CHECK_THROWS_AS(parse_config(bad), ConfigError);

    bad = spin_config(1.0);
    bad["outputs"] = {"U", "nonsense"};
    try {
        parse_config(bad);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.field == "outputs");
    }

    bad = spin_config(1.0);
    bad["format"] = "yaml";
    CHECK_THROWS_AS(parse_config(bad), ConfigError);

    bad = spin_config(1.0);
    bad["tolerances"] = {{"undef_tol", -1.0}};
    CHECK_THROWS_AS(parse_config(bad), ConfigError);

    bad = spin_config(1.0);
    bad["model"] = {{"name", "spin_half"}};  // theta_f missing
    CHECK_THROWS_AS(parse_config(bad), ConfigError);
}

TEST_CASE("every model descriptor builds") {
    CHECK(build_model({{"name", "spin_half"}, {"theta_f", 1.0}}).dim == 2);
    CHECK(build_model({{"name", "conical3"}}).dim == 3);
    CHECK(build_model({{"name", "random_symmetric"}, {"n", 4}, {"seed", 9}}).dim == 4);
    CHECK(build_model({{"name", "avoided_crossing"}, {"delta", 0.1}}).dim == 2);
    CHECK(build_model({{"name", "constant"}, {"matrix", {{1.0, 0.0}, {0.0, 2.0}}}}).dim == 2);

    const json pencil = {{"name", "conical"},
                         {"hx", {{1.0, 0.0}, {0.0, -1.0}}},
                         {"hy", {{0.0, 1.0}, {1.0, 0.0}}},
                         {"span", {0.0, M_PI}}};
    CHECK(build_model(pencil).dim == 2);

    CHECK_THROWS_AS(build_model({{"name", "unknown"}}), ConfigError);
    CHECK_THROWS_AS(build_model({{"name", "constant"}, {"matrix", {{1.0, 0.0}}}}),
                    ConfigError);
}

TEST_CASE("complex matrix entries parse as {re, im} pairs") {
    const json desc = {{"name", "constant"},
                       {"matrix",
                        {{0.0, {{"re", 0.0}, {"im", -1.0}}},
                         {{{"re", 0.0}, {"im", 1.0}}, 0.0}}}};
    const auto path = build_model(desc);
    const Matrix h = path.evaluate(0.0);
    CHECK(h(0, 1) == std::complex<double>(0.0, -1.0));
    CHECK(h(1, 0) == std::complex<double>(0.0, 1.0));
}

TEST_CASE("transport on a constant model returns the identity at initial steps") {
    json doc = {{"model", {{"name", "constant"}, {"matrix", {{1.0, 0.2}, {0.2, -1.0}}}}}};
    const auto outcome = cmd_transport(parse_config(doc));
    CHECK(outcome.exit_code == kExitOk);
    CHECK(outcome.doc["diagnostics"]["steps_used"] == 256);
    const auto& u = outcome.doc["U"];
    CHECK(u[0][0]["re"].get<double>() == doctest::Approx(1.0));
    CHECK(u[0][1]["re"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("demo spin reports gamma_12 = -1") {
    const auto outcome = cmd_demo("spin", "structured");
    CHECK(outcome.exit_code == kExitOk);
    bool found = false;
    for (const auto& entry : outcome.doc["gammas"]) {
        if (entry["cycle"] == json{1, 2}) {
            found = true;
            CHECK(entry["value"]["sign"] == "-1");
        }
    }
    CHECK(found);
    CHECK(outcome.doc["classification"]["detected"] == json{2, 1});
}

TEST_CASE("demo conical classifies the starred half-loop row") {
    const auto outcome = cmd_demo("conical", "structured");
    CHECK(outcome.exit_code == kExitOk);
    CHECK(outcome.doc["classification"]["detected"] == json{3, 2, 1});
    CHECK(outcome.doc["classification"]["classification"]["condition"] ==
          "g(1,3)*g(2) = -1");
    CHECK(outcome.doc["classification"]["determinant_check"]["deviation"].get<double>() <
          1e-6);
}

TEST_CASE("table command carries both renderings and the expected counts") {
    const auto outcome = cmd_table(3, false);
    CHECK(outcome.exit_code == kExitOk);
    const auto& rows = outcome.doc["table"]["rows"];
    REQUIRE(rows.size() == 6);
    const std::vector<long> counts = {4, 2, 2, 2, 1, 1};
    for (int i = 0; i < 6; ++i)
        CHECK(rows[i]["real_case_count"].get<long>() == counts[i]);
    CHECK(outcome.doc["table_text"].get<std::string>().find("3 2 1 *") != std::string::npos);
}

TEST_CASE("structured reports contain each requested section exactly once") {
    json doc = spin_config(M_PI / 2.0);
    doc["outputs"] = {"U", "sigmas", "gammas", "independent_set", "classification",
                      "identities"};
    const auto outcome = cmd_phases(parse_config(doc));
    CHECK(outcome.exit_code == kExitOk);
    for (const std::string section :
         {"U", "sigmas", "gammas", "independent_set", "classification", "identities"})
        CHECK(outcome.doc.contains(section));
    CHECK(outcome.doc.contains("config"));
    CHECK(outcome.doc.contains("diagnostics"));
    CHECK(outcome.doc["config"]["outputs"].size() == 6);
}

TEST_CASE("model descriptors round-trip through build_model") {
    const std::vector<json> descriptors = {
        {{"name", "spin_half"}, {"theta_f", 2.2}},
        {{"name", "conical3"}, {"span", {0.0, M_PI}}, {"radius", 1.5}},
        {{"name", "random_symmetric"}, {"n", 3}, {"seed", 11}, {"harmonics", 2}},
        {{"name", "avoided_crossing"}, {"delta", 0.02}},
    };
    for (const auto& desc : descriptors) {
        const auto path = build_model(desc);
        const auto again = build_model(path.descriptor);
        for (double t : {0.0, 0.4, 1.0})
            CHECK((path.evaluate(t) - again.evaluate(t)).cwiseAbs().maxCoeff() == 0.0);
    }

    // constant paths embed their matrix in the descriptor
    Matrix h(2, 2);
    h << 1.0, std::complex<double>(0.0, 0.5), std::complex<double>(0.0, -0.5), -1.0;
    const auto constant = constant_path(h);
    const auto again = build_model(constant.descriptor);
    CHECK((again.evaluate(0.3) - h).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("identities command summarizes residuals for a generic transport") {
    // a partial sweep keeps every overlap well away from zero
    json doc = {{"model", {{"name", "conical3"}, {"span", {0.0, M_PI / 3.0}}}},
                {"outputs", {"U", "identities"}}};
    const auto outcome = cmd_identities(parse_config(doc));
    CHECK(outcome.exit_code == kExitOk);
    REQUIRE(outcome.doc.contains("identities"));
    const auto& ident = outcome.doc["identities"];
    REQUIRE(ident.contains("pass"));
    CHECK(ident["pass"] == true);
    CHECK(ident["max_residual"].get<double>() <= 1e-12);
    CHECK(ident["checks"].get<int>() > 0);
}

TEST_CASE("identities command reports the missing links on permutation-like runs") {
    json doc = {{"model", {{"name", "random_symmetric"}, {"n", 3}, {"seed", 5}}},
                {"outputs", {"identities"}}};
    const auto outcome = cmd_identities(parse_config(doc));
    CHECK(outcome.exit_code == kExitOk);
    const auto& ident = outcome.doc["identities"];
    REQUIRE(ident.contains("error"));
    CHECK(!ident["undefined_links"].empty());
}

TEST_CASE("exhausting max_steps yields a no_convergence record with diagnostics") {
    json doc = {{"model", {{"name", "avoided_crossing"}, {"delta", 1e-4}}},
                {"transport", {{"initial_steps", 63}, {"max_steps", 126}}}};
    const auto outcome = cmd_transport(parse_config(doc));
    CHECK(outcome.exit_code == kExitComputational);
    CHECK(outcome.doc["error"]["kind"] == "no_convergence");
    REQUIRE(outcome.doc.contains("diagnostics"));
    CHECK(outcome.doc["diagnostics"]["steps_used"] == 126);
    CHECK(outcome.doc["diagnostics"]["convergence_estimate"] == "inf");
}

TEST_CASE("exit status is zero exactly when no error section is present") {
    const auto good = cmd_demo("crossing", "structured");
    CHECK(good.exit_code == 0);
    CHECK_FALSE(good.doc.contains("error"));

    json doc = {{"model", {{"name", "constant"}, {"matrix", {{1.0, 0.0}, {0.0, 1.0}}}}}};
    const auto bad = cmd_transport(parse_config(doc));
    CHECK(bad.exit_code != 0);
    CHECK(bad.doc.contains("error"));
}

TEST_CASE("computational failures produce an error record and exit 3") {
    // a constant degenerate matrix cannot be transported
    json doc = {{"model", {{"name", "constant"}, {"matrix", {{1.0, 0.0}, {0.0, 1.0}}}}}};
    const auto outcome = cmd_transport(parse_config(doc));
    CHECK(outcome.exit_code == kExitComputational);
    CHECK(outcome.doc["error"]["kind"] == "degenerate_spectrum");
    CHECK_FALSE(outcome.doc.contains("U"));
}

TEST_CASE("undefined gammas render with magnitudes, never as numbers") {
    const auto outcome = cmd_demo("spin", "structured");
    for (const auto& entry : outcome.doc["gammas"]) {
        if (entry["cycle"].size() == 1) {
            CHECK(entry.contains("undefined_links"));
            CHECK_FALSE(entry.contains("value"));
        }
    }
    // sigma(1,1) of the half-turn matrix carries its vanishing magnitude
    const auto& s11 = outcome.doc["sigmas"][0][0];
    CHECK(s11["undefined"] == true);
    CHECK(s11["magnitude"].get<double>() < 1e-8);
}

TEST_CASE("binary exit codes match the interface contract") {
    CHECK(run_cli("table 3") == 0);
    CHECK(run_cli("demo spin") == 0);
    CHECK(run_cli("transport --config /nonexistent.json") == 2);
    CHECK(run_cli("table 9") == 2);
    CHECK(run_cli("demo nonsense") == 2);

    // degenerate constant model -> computational error, exit 3
    const char* path = "/tmp/geomphase_test_degenerate.json";
    {
        std::ofstream out(path);
        out << R"({"model":{"name":"constant","matrix":[[1.0,0.0],[0.0,1.0]]}})";
    }
    CHECK(run_cli(std::string("transport --config ") + path) == 3);

    // malformed JSON -> config error
    {
        std::ofstream out(path);
        out << "{not json";
    }
    CHECK(run_cli(std::string("transport --config ") + path) == 2);
    std::remove(path);
}

TEST_CASE("binary writes the report to --output") {
    const char* cfg = "/tmp/geomphase_test_cfg.json";
    const char* out_path = "/tmp/geomphase_test_report.json";
    {
        std::ofstream out(cfg);
        out << R"({"model":{"name":"spin_half","theta_f":3.141592653589793},)"
            << R"("format":"structured"})";
    }
    CHECK(run_cli(std::string("phases --config ") + cfg + " --output " + out_path) == 0);
    std::ifstream in(out_path);
    REQUIRE(in.good());
    json doc;
    in >> doc;
    CHECK(doc.contains("U"));
    CHECK(doc.contains("gammas"));
    std::remove(cfg);
    std::remove(out_path);
}

TEST_CASE("CLI overrides reach the effective config") {
    const char* cfg = "/tmp/geomphase_test_cfg2.json";
    const char* out_path = "/tmp/geomphase_test_report2.json";
    {
        std::ofstream out(cfg);
        out << R"({"model":{"name":"random_symmetric","n":3,"seed":1,"harmonics":2},)"
            << R"("format":"structured"})";
    }
    CHECK(run_cli(std::string("transport --config ") + cfg + " --seed 42 --steps 128 " +
                  "--output " + out_path) == 0);
    std::ifstream in(out_path);
    json doc;
    in >> doc;
    CHECK(doc["config"]["model"]["seed"] == 42);
    CHECK(doc["config"]["transport"]["initial_steps"] == 128);
    std::remove(cfg);
    std::remove(out_path);
}
