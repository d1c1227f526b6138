#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ilab/config.hpp"
#include "ilab/experiments.hpp"
#include "ilab/report.hpp"

namespace {

// exit codes: 0 thresholds met, 2 threshold failure, 3 certification failure,
// 4 config error
constexpr int kExitPass = 0;
constexpr int kExitThreshold = 2;
constexpr int kExitCertification = 3;
constexpr int kExitConfig = 4;

int run(const std::string& experiment, const std::string& config_path,
        const std::vector<std::string>& overrides, const std::string& out_path,
        const std::string& format, const std::string& seed) {
    ilab::ExperimentConfig cfg;
    try {
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) throw ilab::ConfigError("cannot open config file '" + config_path + "'");
            std::stringstream ss;
            ss << f.rdbuf();
            cfg = ilab::parse_config_text(ss.str());
        }
        cfg.experiment = experiment;
        for (const auto& ov : overrides) ilab::apply_override(cfg, ov);
        if (!seed.empty()) cfg.kv["seed"] = seed;
        if (format != "json" && format != "csv")
            throw ilab::ConfigError("field 'format': expected json or csv");

        ilab::Report rep = ilab::run_experiment(cfg);

        std::string body =
            format == "json" ? rep.to_json().dump(2) + "\n" : rep.to_csv();
        if (out_path.empty()) {
            std::cout << body;
        } else {
            ilab::write_atomic(out_path, body);
        }
        for (const auto& c : rep.checks)
            std::cerr << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.value
                      << " " << c.cmp << " " << c.threshold << ")\n";
        if (!rep.certified) {
            std::cerr << "FAILED-CERTIFICATION: " << rep.failure << "\n";
            return kExitCertification;
        }
        return rep.pass ? kExitPass : kExitThreshold;
    } catch (const ilab::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ilab: interpolation-scale experiments with reproducible reports"};
    app.require_subcommand(0, 1);

    auto* list_cmd = app.add_subcommand("list", "list registered experiments");

    std::string experiment, config_path, out_path, format = "json", seed;
    std::vector<std::string> overrides;
    auto* run_cmd = app.add_subcommand("run", "run one experiment");
    run_cmd->add_option("experiment", experiment, "registered experiment name")->required();
    run_cmd->add_option("--config", config_path, "key = value config file");
    run_cmd->add_option("--set", overrides, "override key=value (repeatable)");
    run_cmd->add_option("--out", out_path, "report output path (atomic write)");
    run_cmd->add_option("--format", format, "json or csv");
    run_cmd->add_option("--seed", seed, "random seed");

    // `ilab <experiment> ...` without the explicit `run` verb
    app.allow_extras();
    CLI11_PARSE(app, argc, argv);

    if (list_cmd->parsed()) {
        for (const auto& info : ilab::list_experiments())
            std::cout << info.name << " - " << info.summary << "\n";
        return kExitPass;
    }
    if (run_cmd->parsed()) return run(experiment, config_path, overrides, out_path, format, seed);

    auto extras = app.remaining();
    if (extras.empty()) {
        std::cout << app.help();
        return kExitPass;
    }
    // first extra is the experiment name; reparse the rest through `run`
    std::vector<std::string> args(extras.begin() + 1, extras.end());
    std::vector<char*> argv2;
    std::string prog = "ilab", verb = "run";
    argv2.push_back(prog.data());
    argv2.push_back(verb.data());
    std::string name = extras.front();
    argv2.push_back(name.data());
    for (auto& a : args) argv2.push_back(a.data());
    CLI::App app2{"ilab"};
    auto* run2 = app2.add_subcommand("run");
    std::string exp2, cfg2, out2, fmt2 = "json", seed2;
    std::vector<std::string> ov2;
    run2->add_option("experiment", exp2)->required();
    run2->add_option("--config", cfg2);
    run2->add_option("--set", ov2);
    run2->add_option("--out", out2);
    run2->add_option("--format", fmt2);
    run2->add_option("--seed", seed2);
    try {
        app2.parse(int(argv2.size()), argv2.data());
    } catch (const CLI::ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    return run(exp2, cfg2, ov2, out2, fmt2, seed2);
}
