// cqed - run, list and validate emission scenarios.
//
// Exit codes: 0 success, 1 config error, 2 compute error, 3 oracle-check failure.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cqed/errors.hpp"
#include "cqed/parallel.hpp"
#include "cqed/presets.hpp"
#include "cqed/scenario.hpp"

namespace {

std::string columns_help() {
    std::string s = "CSV columns by scenario kind (a series column named after the varied\n"
                    "parameter comes first when the scenario has a series):\n";
    for (auto k : cqed::all_scenario_kinds()) {
        s += "  ";
        s += cqed::scenario_kind_name(k);
        s += ":";
        for (const auto& [col, doc] : cqed::kind_columns(k)) s += " " + col;
        s += "\n";
    }
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spontaneous emission of coupled qubits and cavities"};
    app.footer(columns_help());
    app.require_subcommand(1);

    std::string target, out_dir;
    bool oracle_check = false;
    double rel_tol = 0.0;
    int threads = 0;
    auto* run = app.add_subcommand("run", "compute a preset or a config file and write CSV");
    run->add_option("scenario", target, "preset name or config path")->required();
    run->add_option("--out", out_dir, "output directory");
    run->add_flag("--oracle-check", oracle_check, "compare against the discretized-bath oracle");
    run->add_option("--rel-tol", rel_tol, "quadrature relative tolerance")->check(CLI::PositiveNumber);
    run->add_option("--threads", threads, "worker threads (default: CQED_THREADS, then all cores)")
        ->check(CLI::PositiveNumber);

    auto* list = app.add_subcommand("list", "print the preset catalog");

    std::string config_path;
    auto* validate = app.add_subcommand("validate", "check a config file without running it");
    validate->add_option("config", config_path, "config path or preset name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*list) {
            for (const auto& p : cqed::preset_catalog())
                std::printf("%-10s %-8s %s\n", p.name.c_str(), p.runtime_class.c_str(), p.figure.c_str());
            return 0;
        }
        if (*validate) {
            const auto cfg = cqed::load_scenario(config_path);
            std::printf("ok: %s (%s)\n", cfg.scenario.c_str(), cqed::scenario_kind_name(cfg.kind));
            return 0;
        }
        auto cfg = cqed::load_scenario(target);
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (oracle_check) cfg.oracle_check = true;
        if (rel_tol > 0.0) cfg.rel_tol = rel_tol;
        if (threads <= 0) threads = cqed::threads_from_env();
        cqed::set_threads(threads);
        cqed::validate_config(cfg);

        const auto rep = cqed::run_scenario(cfg);
        for (const auto& f : rep.files) std::printf("wrote %s\n", f.c_str());
        if (rep.oracle_ran) {
            for (const auto& c : rep.checks)
                std::printf("%s %-24s %-12s sup %.3e\n", c.passed ? "PASS" : "FAIL", c.label.c_str(),
                            c.quantity.c_str(), c.sup_deviation);
            if (!rep.oracle_passed) return 3;
        }
        return 0;
    } catch (const cqed::ConfigInvalid& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "compute error: " << e.what() << "\n";
        return 2;
    }
}
