// scenario.hpp - declarative experiment descriptions and the runner behind the CLI.
//
// A config is a JSON document. "scenario" names a preset or is "custom"; every
// other key overrides the preset default. Unknown keys are rejected.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cqed/model.hpp"
#include "cqed/oracle.hpp"
#include "cqed/spectra.hpp"

namespace cqed {

enum class ScenarioKind {
    single_trace,       // qubit 1 excited, qubit 2 ground
    gap_map,            // steady P_SE - P_em2 over (gamma2, g12)
    double_trace,       // both qubits excited: P_total
    contributions,      // P_total and its three parts
    dominance_map,      // steady two-photon channels over (gamma2, g12)
    two_photon_trace,   // two-photon channels in time
    jcm_trace,          // qubit in a cavity holding one photon
    tcm_trace,          // two qubits in a cavity, one excitation
    decay_route_map,    // steady TCM channels over (kappa = gamma2, g2)
    exchange_spectrum,  // steady qubit-2 spectrum
    raman_spectrum,     // pulse-driven Raman spectrum
};

const char* scenario_kind_name(ScenarioKind k);
ScenarioKind parse_scenario_kind(const std::string& s);
std::vector<ScenarioKind> all_scenario_kinds();

// Output columns of a kind with one-line descriptions. A series column named after
// the varied parameter is prepended when the config has a series.
std::vector<std::pair<std::string, std::string>> kind_columns(ScenarioKind k);

struct Axis {
    double min{0.0};
    double max{0.0};
    std::size_t points{0};
    bool log{false};

    std::vector<double> values() const;
    bool operator==(const Axis&) const = default;
};

struct Series {
    std::string parameter;        // a SystemParams field name; empty for a single run
    std::vector<double> values;

    bool operator==(const Series&) const = default;
};

struct ScenarioConfig {
    std::string scenario;                      // preset name or "custom"
    ScenarioKind kind{ScenarioKind::single_trace};
    std::string focus;                         // highlighted column of a map panel
    SystemParams params;
    Series series;
    Axis time{0.0, 10.0, 201, false};
    Axis scan_x;                               // gamma2 (gap, dominance) or kappa (decay route)
    Axis scan_y;                               // g12 (gap, dominance) or g2 (decay route)
    Axis detuning{0.0, 0.0, 0, false};         // spectra; 0 points selects the default grid
    PulseSpec pulse;
    double rel_tol{1e-6};
    OracleConfig oracle;
    bool oracle_check{false};
    double oracle_tolerance{1e-3};
    std::string out_dir{"."};
    std::string stem;                          // output file stem; empty uses the scenario name

    bool operator==(const ScenarioConfig&) const = default;
};

// Reference to a SystemParams field by name. Throws ConfigInvalid for unknown names.
double& param_field(SystemParams& p, const std::string& name);
std::vector<std::string> param_names();

std::string config_to_text(const ScenarioConfig& cfg);

// Parses and validates. origin is used in error messages.
ScenarioConfig config_from_text(const std::string& text, const std::string& origin = "config");

// A preset name, or a path to a config file.
ScenarioConfig load_scenario(const std::string& name_or_path);

// Throws ConfigInvalid when the config is inconsistent.
void validate_config(const ScenarioConfig& cfg);

struct OracleCheck {
    std::string label;            // series value or map cell
    std::string quantity;
    double sup_deviation{};
    bool passed{};
};

struct RunReport {
    std::vector<std::string> files;
    bool oracle_ran{false};
    bool oracle_passed{true};
    std::vector<OracleCheck> checks;
};

// Computes the scenario and writes its CSV (and, with oracle_check, the deviation
// report). Throws ConfigInvalid or ComputeFailed.
RunReport run_scenario(const ScenarioConfig& cfg);

} // namespace cqed
