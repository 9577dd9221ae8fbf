#include "cqed/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cqed/csv.hpp"
#include "cqed/errors.hpp"
#include "cqed/jaynes_cummings.hpp"
#include "cqed/parallel.hpp"
#include "cqed/presets.hpp"
#include "cqed/tavis_cummings.hpp"
#include "cqed/two_qubit_double.hpp"
#include "cqed/two_qubit_single.hpp"

#ifndef CQED_VERSION
#define CQED_VERSION "dev"
#endif

namespace cqed {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

const std::array<std::pair<ScenarioKind, const char*>, 11> kKinds{{
    {ScenarioKind::single_trace, "single_trace"},
    {ScenarioKind::gap_map, "gap_map"},
    {ScenarioKind::double_trace, "double_trace"},
    {ScenarioKind::contributions, "contributions"},
    {ScenarioKind::dominance_map, "dominance_map"},
    {ScenarioKind::two_photon_trace, "two_photon_trace"},
    {ScenarioKind::jcm_trace, "jcm_trace"},
    {ScenarioKind::tcm_trace, "tcm_trace"},
    {ScenarioKind::decay_route_map, "decay_route_map"},
    {ScenarioKind::exchange_spectrum, "exchange_spectrum"},
    {ScenarioKind::raman_spectrum, "raman_spectrum"},
}};

bool is_trace(ScenarioKind k) {
    switch (k) {
    case ScenarioKind::single_trace:
    case ScenarioKind::double_trace:
    case ScenarioKind::contributions:
    case ScenarioKind::two_photon_trace:
    case ScenarioKind::jcm_trace:
    case ScenarioKind::tcm_trace: return true;
    default: return false;
    }
}

bool is_map(ScenarioKind k) {
    return k == ScenarioKind::gap_map || k == ScenarioKind::dominance_map || k == ScenarioKind::decay_route_map;
}

bool is_spectrum(ScenarioKind k) {
    return k == ScenarioKind::exchange_spectrum || k == ScenarioKind::raman_spectrum;
}

} // namespace

const char* scenario_kind_name(ScenarioKind k) {
    for (const auto& [kind, name] : kKinds)
        if (kind == k) return name;
    return "?";
}

ScenarioKind parse_scenario_kind(const std::string& s) {
    for (const auto& [kind, name] : kKinds)
        if (s == name) return kind;
    throw ConfigInvalid("/kind: unknown scenario kind '" + s + "'");
}

std::vector<ScenarioKind> all_scenario_kinds() {
    std::vector<ScenarioKind> v;
    for (const auto& kv : kKinds) v.push_back(kv.first);
    return v;
}

std::vector<std::pair<std::string, std::string>> kind_columns(ScenarioKind k) {
    switch (k) {
    case ScenarioKind::single_trace:
        return {{"t", "time"},
                {"p_surv", "qubit 1 still excited"},
                {"p_exchg", "excitation held by qubit 2"},
                {"p_se", "photon emitted through qubit 1"},
                {"p_em2", "photon emitted through qubit 2"},
                {"free_space", "exp(-gamma1 t)"}};
    case ScenarioKind::gap_map:
        return {{"g12", "dipole coupling"},
                {"gamma2", "qubit 2 decay rate"},
                {"p_se", "steady emission through qubit 1"},
                {"p_em2", "steady emission through qubit 2"},
                {"gap", "p_se - p_em2"},
                {"optimal_gamma2", "gamma2 maximizing p_em2 at this g12"}};
    case ScenarioKind::double_trace:
        return {{"t", "time"}, {"p_total", "qubit 1 still excited"}, {"free_space", "exp(-gamma1 t)"}};
    case ScenarioKind::contributions:
        return {{"t", "time"},
                {"p_total", "qubit 1 still excited"},
                {"p_surv_ee", "both qubits still excited"},
                {"p_em2", "qubit 2 emitted, qubit 1 excited"},
                {"p_emx1", "qubit 1 emitted and was re-excited by exchange"},
                {"free_space", "exp(-gamma1 t)"}};
    case ScenarioKind::dominance_map:
        return {{"g12", "dipole coupling"},
                {"gamma2", "qubit 2 decay rate"},
                {"p_em11", "both photons through qubit 1"},
                {"p_em22", "both photons through qubit 2"},
                {"p_total12", "one photon through each qubit"},
                {"dominant", "largest of em11, em22, total12"}};
    case ScenarioKind::two_photon_trace:
        return {{"t", "time"},
                {"p_em11", "both photons through qubit 1"},
                {"p_em22", "both photons through qubit 2"},
                {"p_em12", "qubit 1 photon first, then qubit 2"},
                {"p_em21", "qubit 2 photon first, then qubit 1"},
                {"p_total12", "p_em12 + p_em21"},
                {"p_surv_ee", "both qubits still excited"}};
    case ScenarioKind::jcm_trace:
        return {{"t", "time"},
                {"p_surv", "qubit still excited, any cavity or photon content"},
                {"norm", "total probability of the discretized evolution"},
                {"free_space", "exp(-gamma1 t)"}};
    case ScenarioKind::tcm_trace:
        return {{"t", "time"},
                {"p_surv", "qubit 1 still excited"},
                {"p_qubit2", "excitation held by qubit 2"},
                {"p_cavity", "excitation held by the cavity"},
                {"free_space", "exp(-gamma1 t)"}};
    case ScenarioKind::decay_route_map:
        return {{"g2", "qubit 2 - cavity coupling"},
                {"kappa", "cavity decay rate, equal to gamma2"},
                {"p_em1", "steady emission through qubit 1"},
                {"p_emx2", "steady emission through qubit 2"},
                {"p_emr", "steady emission through the cavity"}};
    case ScenarioKind::exchange_spectrum:
        return {{"delta2", "omega2 - omega02"}, {"s_se", "area-normalized exchange-emission spectrum"}};
    case ScenarioKind::raman_spectrum:
        return {{"delta2", "omega2 - omega02"},
                {"s_raman", "pulse density times the exchange-emission spectrum, normalized"},
                {"s_raman_closed", "closed pole form of the same spectrum, normalized"},
                {"gaussian", "input pulse density, normalized"},
                {"atomic", "exchange-emission spectrum, normalized"}};
    }
    return {};
}

std::vector<double> Axis::values() const {
    if (points == 0) return {};
    if (points == 1) return {min};
    return log ? logspace(min, max, points) : linspace(min, max, points);
}

std::vector<std::string> param_names() {
    return {"omega01", "omega02", "omega_c", "g1", "g2", "g12", "gamma1", "gamma2", "kappa"};
}

double& param_field(SystemParams& p, const std::string& name) {
    if (name == "omega01") return p.omega01;
    if (name == "omega02") return p.omega02;
    if (name == "omega_c") return p.omega_c;
    if (name == "g1") return p.g1;
    if (name == "g2") return p.g2;
    if (name == "g12") return p.g12;
    if (name == "gamma1") return p.gamma1;
    if (name == "gamma2") return p.gamma2;
    if (name == "kappa") return p.kappa;
    throw ConfigInvalid("unknown parameter '" + name + "'");
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

ojson axis_json(const Axis& a) {
    return ojson{{"min", a.min}, {"max", a.max}, {"points", a.points}, {"log", a.log}};
}

ojson to_ojson(const ScenarioConfig& c) {
    ojson params;
    SystemParams p = c.params;
    for (const auto& n : param_names()) params[n] = param_field(p, n);
    ojson j;
    j["scenario"] = c.scenario;
    j["kind"] = scenario_kind_name(c.kind);
    j["focus"] = c.focus;
    j["params"] = params;
    j["series"] = ojson{{"parameter", c.series.parameter}, {"values", c.series.values}};
    j["time"] = axis_json(c.time);
    j["scan_x"] = axis_json(c.scan_x);
    j["scan_y"] = axis_json(c.scan_y);
    j["detuning"] = axis_json(c.detuning);
    j["pulse"] = ojson{{"excitation_detuning", c.pulse.excitation_detuning},
                       {"duration", c.pulse.duration},
                       {"arrival_time", c.pulse.arrival_time}};
    j["rel_tol"] = c.rel_tol;
    j["oracle"] = ojson{{"spacing", c.oracle.spacing},
                        {"window_scale", c.oracle.window_scale},
                        {"window_half_width", c.oracle.window_half_width},
                        {"taper_end", c.oracle.taper_end},
                        {"tolerance", c.oracle.tolerance},
                        {"convergence_doubling", c.oracle.convergence_doubling},
                        {"target_tolerance", c.oracle.target_tolerance}};
    j["oracle_check"] = c.oracle_check;
    j["oracle_tolerance"] = c.oracle_tolerance;
    j["out_dir"] = c.out_dir;
    j["stem"] = c.stem;
    return j;
}

void only_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw ConfigInvalid(path + ": expected an object");
    for (const auto& [k, v] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || k == a;
        if (!ok) throw ConfigInvalid(path + "/" + k + ": unknown key");
    }
}

double num(const json& j, const std::string& path) {
    if (!j.is_number()) throw ConfigInvalid(path + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ConfigInvalid(path + ": must be finite");
    return v;
}

bool boolean(const json& j, const std::string& path) {
    if (!j.is_boolean()) throw ConfigInvalid(path + ": expected true or false");
    return j.get<bool>();
}

std::string text(const json& j, const std::string& path) {
    if (!j.is_string()) throw ConfigInvalid(path + ": expected a string");
    return j.get<std::string>();
}

std::size_t count(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ConfigInvalid(path + ": expected a non-negative integer");
    return j.get<std::size_t>();
}

void read_axis(const json& j, const std::string& path, Axis& a) {
    only_keys(j, path, {"min", "max", "points", "log"});
    if (j.contains("min")) a.min = num(j["min"], path + "/min");
    if (j.contains("max")) a.max = num(j["max"], path + "/max");
    if (j.contains("points")) a.points = count(j["points"], path + "/points");
    if (j.contains("log")) a.log = boolean(j["log"], path + "/log");
}

} // namespace

std::string config_to_text(const ScenarioConfig& cfg) { return to_ojson(cfg).dump(2) + "\n"; }

ScenarioConfig config_from_text(const std::string& body, const std::string& origin) {
    json j;
    if (body.find_first_not_of(" \t\r\n") == std::string::npos) {
        j = json::object();
    } else {
        try {
            j = json::parse(body);
        } catch (const json::parse_error& e) {
            throw ConfigInvalid(origin + ": not valid JSON (" + e.what() + ")");
        }
    }
    if (!j.is_object()) throw ConfigInvalid(origin + ": top level must be an object");
    only_keys(j, "", {"scenario", "kind", "focus", "params", "series", "time", "scan_x", "scan_y", "detuning",
                      "pulse", "rel_tol", "oracle", "oracle_check", "oracle_tolerance", "out_dir", "stem"});
    if (!j.contains("scenario")) throw ConfigInvalid(origin + ": missing required field 'scenario'");
    const auto name = text(j["scenario"], "/scenario");

    ScenarioConfig c;
    if (name == "custom") {
        if (!j.contains("kind")) throw ConfigInvalid(origin + ": custom scenario needs the field 'kind'");
        c.scenario = name;
    } else {
        c = preset_config(name);
    }
    if (j.contains("kind")) c.kind = parse_scenario_kind(text(j["kind"], "/kind"));
    if (j.contains("focus")) c.focus = text(j["focus"], "/focus");
    if (j.contains("params")) {
        const auto& jp = j["params"];
        if (!jp.is_object()) throw ConfigInvalid("/params: expected an object");
        for (const auto& [k, v] : jp.items()) {
            double* slot = nullptr;
            try {
                slot = &param_field(c.params, k);
            } catch (const ConfigInvalid&) {
                throw ConfigInvalid("/params/" + k + ": unknown key");
            }
            *slot = num(v, "/params/" + k);
        }
    }
    if (j.contains("series")) {
        const auto& js = j["series"];
        only_keys(js, "/series", {"parameter", "values"});
        if (js.contains("parameter")) c.series.parameter = text(js["parameter"], "/series/parameter");
        if (js.contains("values")) {
            if (!js["values"].is_array()) throw ConfigInvalid("/series/values: expected an array");
            c.series.values.clear();
            for (std::size_t k = 0; k < js["values"].size(); ++k)
                c.series.values.push_back(num(js["values"][k], "/series/values/" + std::to_string(k)));
        }
    }
    if (j.contains("time")) read_axis(j["time"], "/time", c.time);
    if (j.contains("scan_x")) read_axis(j["scan_x"], "/scan_x", c.scan_x);
    if (j.contains("scan_y")) read_axis(j["scan_y"], "/scan_y", c.scan_y);
    if (j.contains("detuning")) read_axis(j["detuning"], "/detuning", c.detuning);
    if (j.contains("pulse")) {
        const auto& jp = j["pulse"];
        only_keys(jp, "/pulse", {"excitation_detuning", "duration", "arrival_time"});
        if (jp.contains("excitation_detuning"))
            c.pulse.excitation_detuning = num(jp["excitation_detuning"], "/pulse/excitation_detuning");
        if (jp.contains("duration")) c.pulse.duration = num(jp["duration"], "/pulse/duration");
        if (jp.contains("arrival_time")) c.pulse.arrival_time = num(jp["arrival_time"], "/pulse/arrival_time");
    }
    if (j.contains("rel_tol")) c.rel_tol = num(j["rel_tol"], "/rel_tol");
    if (j.contains("oracle")) {
        const auto& jo = j["oracle"];
        only_keys(jo, "/oracle", {"spacing", "window_scale", "window_half_width", "taper_end", "tolerance",
                                  "convergence_doubling", "target_tolerance"});
        auto& o = c.oracle;
        if (jo.contains("spacing")) o.spacing = num(jo["spacing"], "/oracle/spacing");
        if (jo.contains("window_scale")) o.window_scale = num(jo["window_scale"], "/oracle/window_scale");
        if (jo.contains("window_half_width"))
            o.window_half_width = num(jo["window_half_width"], "/oracle/window_half_width");
        if (jo.contains("taper_end")) o.taper_end = num(jo["taper_end"], "/oracle/taper_end");
        if (jo.contains("tolerance")) o.tolerance = num(jo["tolerance"], "/oracle/tolerance");
        if (jo.contains("convergence_doubling"))
            o.convergence_doubling = boolean(jo["convergence_doubling"], "/oracle/convergence_doubling");
        if (jo.contains("target_tolerance"))
            o.target_tolerance = num(jo["target_tolerance"], "/oracle/target_tolerance");
    }
    if (j.contains("oracle_check")) c.oracle_check = boolean(j["oracle_check"], "/oracle_check");
    if (j.contains("oracle_tolerance")) c.oracle_tolerance = num(j["oracle_tolerance"], "/oracle_tolerance");
    if (j.contains("out_dir")) c.out_dir = text(j["out_dir"], "/out_dir");
    if (j.contains("stem")) c.stem = text(j["stem"], "/stem");
    validate_config(c);
    return c;
}

ScenarioConfig load_scenario(const std::string& name_or_path) {
    if (is_preset(name_or_path)) return preset_config(name_or_path);
    std::ifstream f(name_or_path, std::ios::binary);
    if (!f) throw ConfigInvalid(name_or_path + ": neither a preset name nor a readable config file");
    std::ostringstream ss;
    ss << f.rdbuf();
    return config_from_text(ss.str(), name_or_path);
}

namespace {

void check_axis(const Axis& a, const std::string& path, bool needed) {
    if (!needed) return;
    if (a.points == 0) throw ConfigInvalid(path + "/points: must be positive");
    if (a.points > 1 && !(a.max > a.min)) throw ConfigInvalid(path + ": max must exceed min");
    if (a.log && !(a.min > 0.0)) throw ConfigInvalid(path + ": a log axis needs min > 0");
}

} // namespace

void validate_config(const ScenarioConfig& c) {
    if (c.scenario.empty()) throw ConfigInvalid("/scenario: must not be empty");
    if (!c.series.parameter.empty()) {
        SystemParams p;
        try {
            (void)param_field(p, c.series.parameter);
        } catch (const ConfigInvalid&) {
            throw ConfigInvalid("/series/parameter: unknown parameter '" + c.series.parameter + "'");
        }
        if (c.series.values.empty()) throw ConfigInvalid("/series/values: must not be empty");
    } else if (!c.series.values.empty()) {
        throw ConfigInvalid("/series/parameter: values given without a parameter");
    }
    if (is_map(c.kind) && !c.series.parameter.empty())
        throw ConfigInvalid("/series: map scenarios scan their own axes");
    if (is_trace(c.kind)) {
        check_axis(c.time, "/time", true);
        if (c.time.min != 0.0) throw ConfigInvalid("/time/min: traces start at t = 0");
        if (c.time.log) throw ConfigInvalid("/time/log: time grids are linear");
    }
    if (is_map(c.kind)) {
        check_axis(c.scan_x, "/scan_x", true);
        check_axis(c.scan_y, "/scan_y", true);
        if (c.scan_x.min < 0.0 || c.scan_y.min < 0.0) throw ConfigInvalid("/scan: axes must be non-negative");
    }
    if (is_spectrum(c.kind) && c.detuning.points > 0) check_axis(c.detuning, "/detuning", true);
    if (c.kind == ScenarioKind::raman_spectrum && !(c.pulse.duration > 0.0))
        throw ConfigInvalid("/pulse/duration: must be positive");
    if (!(c.rel_tol > 0.0 && c.rel_tol <= 0.1)) throw ConfigInvalid("/rel_tol: must lie in (0, 0.1]");
    if (!(c.oracle_tolerance > 0.0)) throw ConfigInvalid("/oracle_tolerance: must be positive");
    if (!(c.oracle.spacing > 0.0)) throw ConfigInvalid("/oracle/spacing: must be positive");
    if (!(c.oracle.window_scale > 0.0)) throw ConfigInvalid("/oracle/window_scale: must be positive");
    if (c.oracle.window_half_width < 0.0) throw ConfigInvalid("/oracle/window_half_width: must be >= 0");
    if (!(c.oracle.taper_end >= 1.0)) throw ConfigInvalid("/oracle/taper_end: must be >= 1");
    if (!(c.oracle.tolerance > 0.0)) throw ConfigInvalid("/oracle/tolerance: must be positive");
    const auto bad_stem = [](const std::string& s) { return s.find('/') != std::string::npos; };
    if (!c.stem.empty() && bad_stem(c.stem)) throw ConfigInvalid("/stem: must be a plain file stem");
    if (!c.focus.empty()) {
        bool found = false;
        for (const auto& [col, doc] : kind_columns(c.kind)) found = found || col == c.focus;
        if (!found) throw ConfigInvalid("/focus: '" + c.focus + "' is not a column of " + scenario_kind_name(c.kind));
    }
    const auto check_params = [](const SystemParams& p, const std::string& where) {
        try {
            validate_params(p);
        } catch (const Error& e) {
            throw ConfigInvalid(where + ": " + e.what());
        }
    };
    check_params(c.params, "/params");
    if (!c.series.parameter.empty())
        for (double v : c.series.values) {
            SystemParams p = c.params;
            param_field(p, c.series.parameter) = v;
            check_params(p, "/series/values");
        }
}

// ---------------------------------------------------------------------------
// Runner

namespace {

struct Run {
    std::string label;   // "g12=0.5", or empty for a single run
    double value{};
    SystemParams p;
};

std::vector<Run> runs(const ScenarioConfig& c) {
    if (c.series.parameter.empty()) return {{"", 0.0, c.params}};
    std::vector<Run> v;
    for (double x : c.series.values) {
        Run r{c.series.parameter + "=" + format_double(x), x, c.params};
        param_field(r.p, c.series.parameter) = x;
        v.push_back(r);
    }
    return v;
}

std::string axis_text(const Axis& a) {
    return format_double(a.min) + ".." + format_double(a.max) + " x" + std::to_string(a.points) +
           (a.log ? " log" : "");
}

CsvTable header(const ScenarioConfig& c) {
    CsvTable t;
    t.add_meta("tool", std::string("cqed ") + CQED_VERSION);
    t.add_meta("scenario", c.scenario);
    for (const auto& info : preset_catalog())
        if (info.name == c.scenario) t.add_meta("figure", info.figure);
    t.add_meta("kind", scenario_kind_name(c.kind));
    if (!c.focus.empty()) t.add_meta("focus", c.focus);
    SystemParams p = c.params;
    for (const auto& n : param_names()) t.add_meta("param." + n, format_double(param_field(p, n)));
    if (!c.series.parameter.empty()) {
        std::string v;
        for (double x : c.series.values) v += (v.empty() ? "" : ";") + format_double(x);
        t.add_meta("series", c.series.parameter + "=" + v);
    }
    if (is_trace(c.kind)) t.add_meta("time", axis_text(c.time));
    if (is_map(c.kind)) {
        t.add_meta("scan_x", axis_text(c.scan_x));
        t.add_meta("scan_y", axis_text(c.scan_y));
    }
    if (is_spectrum(c.kind)) t.add_meta("detuning", c.detuning.points ? axis_text(c.detuning) : "default");
    if (c.kind == ScenarioKind::raman_spectrum) {
        t.add_meta("pulse.excitation_detuning", format_double(c.pulse.excitation_detuning));
        t.add_meta("pulse.duration", format_double(c.pulse.duration));
        t.add_meta("pulse.arrival_time", format_double(c.pulse.arrival_time));
    }
    t.add_meta("rel_tol", format_double(c.rel_tol));
    ScenarioConfig resolved = c;
    resolved.out_dir.clear();
    t.add_meta("config", to_ojson(resolved).dump());
    if (!c.series.parameter.empty()) {
        t.columns.push_back(c.series.parameter);
        t.add_meta("column." + c.series.parameter, "series parameter");
    }
    for (const auto& [col, doc] : kind_columns(c.kind)) {
        t.columns.push_back(col);
        t.add_meta("column." + col, doc);
    }
    return t;
}

std::vector<Cell> row(const Run& r, const ScenarioConfig& c, std::initializer_list<Cell> rest) {
    std::vector<Cell> v;
    if (!c.series.parameter.empty()) v.emplace_back(r.value);
    v.insert(v.end(), rest);
    return v;
}

struct Checker {
    const ScenarioConfig& cfg;
    RunReport& rep;

    void compare(const std::string& label, const std::string& quantity, const std::vector<double>& closed,
                 const std::vector<double>& oracle) {
        double d = 0.0;
        for (std::size_t i = 0; i < closed.size(); ++i) d = std::max(d, std::abs(closed[i] - oracle[i]));
        const bool ok = d <= cfg.oracle_tolerance;
        rep.checks.push_back({label, quantity, d, ok});
        rep.oracle_passed = rep.oracle_passed && ok;
    }

    // Single-excitation two-qubit traces.
    void single(const std::string& label, const SystemParams& p, const std::vector<double>& times,
                const QuadOptions& q) {
        const auto r = oracle_evolve(build_network(NetworkKind::two_qubit_1ex), p, cfg.oracle, times);
        std::vector<double> a(times.size()), b(a), s(a), e(a);
        parallel_for(times.size(), [&](std::size_t i) {
            a[i] = p_surv(p, times[i]);
            b[i] = p_exchg(p, times[i]);
            s[i] = p_se_total(p, times[i], q);
            e[i] = p_em2_total(p, times[i], q);
        });
        compare(label, "p_surv", a, r.population.at("e1g2"));
        compare(label, "p_exchg", b, r.population.at("g1e2"));
        compare(label, "p_se", s, r.population.at("g1g2+b1"));
        compare(label, "p_em2", e, r.population.at("g1g2+b2"));
    }

    void doubled(const std::string& label, const SystemParams& p, const std::vector<double>& times,
                 const QuadOptions& q, bool two_photon) {
        const auto r = oracle_evolve(build_network(NetworkKind::two_qubit_2ex), p, cfg.oracle, times);
        std::vector<double> s(times.size()), e(s), x(s);
        parallel_for(times.size(), [&](std::size_t i) {
            s[i] = p_surv_ee(p, times[i]);
            e[i] = p_em2_total_ee(p, times[i], q);
            x[i] = p_emx1_total_ee(p, times[i], q);
        });
        compare(label, "p_surv_ee", s, r.population.at("e1e2"));
        compare(label, "p_em2", e, r.population.at("e1g2+b2"));
        compare(label, "p_emx1", x, r.population.at("e1g2+b1"));
        if (!two_photon) return;
        const auto tp = two_photon_trace(p, times, q);
        compare(label, "p_em11", tp.p_em11, r.population.at("g1g2+b1+b1"));
        compare(label, "p_em22", tp.p_em22, r.population.at("g1g2+b2+b2"));
        compare(label, "p_em12", tp.p_em12, r.population.at("g1g2+b1+b2"));
        compare(label, "p_em21", tp.p_em21, r.population.at("g1g2+b2+b1"));
    }

    void tcm(const std::string& label, const SystemParams& p, const std::vector<double>& times,
             const QuadOptions& q) {
        const auto r = oracle_evolve(build_network(NetworkKind::tcm_1ex), p, cfg.oracle, times);
        const auto tp = tcm_poles(p);
        std::vector<double> a(times.size()), b(a), c(a), e1(a), e2(a), er(a);
        parallel_for(times.size(), [&](std::size_t i) {
            const double t = times[i];
            a[i] = p_surv_tcm(tp, t);
            b[i] = p_qubit2_tcm(tp, p, t);
            c[i] = p_cavity_tcm(tp, p, t);
            e1[i] = tcm_channel_total(tp, p, TcmChannel::em1, t, q);
            e2[i] = tcm_channel_total(tp, p, TcmChannel::emx2, t, q);
            er[i] = tcm_channel_total(tp, p, TcmChannel::emr, t, q);
        });
        compare(label, "p_surv", a, r.population.at("e1g2,0"));
        compare(label, "p_qubit2", b, r.population.at("g1e2,0"));
        compare(label, "p_cavity", c, r.population.at("g1g2,1"));
        compare(label, "p_em1", e1, r.population.at("g1g2,0+b1"));
        compare(label, "p_emx2", e2, r.population.at("g1g2,0+b2"));
        compare(label, "p_emr", er, r.population.at("g1g2,0+b3"));
    }
};

double mid(const Axis& a) {
    const auto v = a.values();
    return v[v.size() / 2];
}

std::string output_stem(const ScenarioConfig& c) { return c.stem.empty() ? c.scenario : c.stem; }

void write_report(const ScenarioConfig& c, const RunReport& rep, const std::string& path) {
    ojson j;
    j["tool"] = std::string("cqed ") + CQED_VERSION;
    j["scenario"] = c.scenario;
    j["tolerance"] = c.oracle_tolerance;
    j["passed"] = rep.oracle_passed;
    ojson checks = ojson::array();
    for (const auto& ch : rep.checks)
        checks.push_back(
            ojson{{"label", ch.label}, {"quantity", ch.quantity}, {"sup_deviation", ch.sup_deviation}, {"passed", ch.passed}});
    j["checks"] = checks;
    write_file(path, j.dump(2) + "\n");
}

void compute(const ScenarioConfig& c, CsvTable& t, RunReport& rep) {
    const QuadOptions q{c.rel_tol, 40'000'000};
    Checker chk{c, rep};
    const auto times = c.time.values();
    const auto check_grid = uniform_grid(10.0, 101);

    switch (c.kind) {
    case ScenarioKind::single_trace:
        for (const auto& r : runs(c)) {
            std::vector<std::array<double, 4>> v(times.size());
            parallel_for(times.size(), [&](std::size_t i) {
                const double x = times[i];
                v[i] = {p_surv(r.p, x), p_exchg(r.p, x), p_se_total(r.p, x, q), p_em2_total(r.p, x, q)};
            });
            for (std::size_t i = 0; i < times.size(); ++i)
                t.add_row(row(r, c, {times[i], v[i][0], v[i][1], v[i][2], v[i][3], std::exp(-r.p.gamma1 * times[i])}));
            if (c.oracle_check) chk.single(r.label, r.p, times, q);
        }
        break;

    case ScenarioKind::double_trace:
    case ScenarioKind::contributions:
        for (const auto& r : runs(c)) {
            std::vector<std::array<double, 3>> v(times.size());
            parallel_for(times.size(), [&](std::size_t i) {
                const double x = times[i];
                v[i] = {p_surv_ee(r.p, x), p_em2_total_ee(r.p, x, q), p_emx1_total_ee(r.p, x, q)};
            });
            for (std::size_t i = 0; i < times.size(); ++i) {
                const double total = v[i][0] + v[i][1] + v[i][2];
                const double fs = std::exp(-r.p.gamma1 * times[i]);
                if (c.kind == ScenarioKind::double_trace)
                    t.add_row(row(r, c, {times[i], total, fs}));
                else
                    t.add_row(row(r, c, {times[i], total, v[i][0], v[i][1], v[i][2], fs}));
            }
            if (c.oracle_check) chk.doubled(r.label, r.p, times, q, false);
        }
        break;

    case ScenarioKind::two_photon_trace:
        for (const auto& r : runs(c)) {
            const auto tp = two_photon_trace(r.p, times, q);
            for (std::size_t i = 0; i < times.size(); ++i)
                t.add_row(row(r, c, {times[i], tp.p_em11[i], tp.p_em22[i], tp.p_em12[i], tp.p_em21[i],
                                     tp.p_total12[i], p_surv_ee(r.p, times[i])}));
            if (c.oracle_check) chk.doubled(r.label, r.p, times, q, true);
        }
        break;

    case ScenarioKind::jcm_trace:
        for (const auto& r : runs(c)) {
            const JcmParams jp{r.p.g1, r.p.kappa, r.p.gamma1, r.p.omega_c - r.p.omega01};
            OracleConfig oc = c.oracle;
            oc.convergence_doubling = false;
            const auto res = evolve_jcm_two_excitation(jp, times, oc);
            for (std::size_t i = 0; i < times.size(); ++i)
                t.add_row(row(r, c, {times[i], res.survival.values[i], res.norm.values[i],
                                     std::exp(-r.p.gamma1 * times[i])}));
            if (c.oracle_check) {
                // No closed form: compare against a run on a doubled bath window.
                OracleConfig wide = oc;
                if (wide.window_half_width > 0.0) wide.window_half_width *= 2.0;
                wide.window_scale *= 2.0;
                const auto ref = evolve_jcm_two_excitation(jp, times, wide);
                chk.compare(r.label, "p_surv (doubled window)", res.survival.values, ref.survival.values);
            }
        }
        break;

    case ScenarioKind::tcm_trace:
        for (const auto& r : runs(c)) {
            const auto tp = tcm_poles(r.p);
            for (double x : times)
                t.add_row(row(r, c, {x, p_surv_tcm(tp, x), p_qubit2_tcm(tp, r.p, x), p_cavity_tcm(tp, r.p, x),
                                     std::exp(-r.p.gamma1 * x)}));
            if (c.oracle_check) chk.tcm(r.label, r.p, times, q);
        }
        break;

    case ScenarioKind::gap_map: {
        const auto m = gap_map(c.params, c.scan_x.values(), c.scan_y.values(), q);
        for (std::size_t i = 0; i < m.g12_grid.size(); ++i)
            for (std::size_t j = 0; j < m.gamma2_grid.size(); ++j)
                t.add_row({m.g12_grid[i], m.gamma2_grid[j], m.p_se[i][j], m.p_em2[i][j], m.gap[i][j],
                           m.optimal_gamma2[i]});
        if (c.oracle_check) {
            SystemParams p = c.params;
            p.gamma2 = mid(c.scan_x);
            p.g12 = mid(c.scan_y);
            chk.single("g12=" + format_double(p.g12) + " gamma2=" + format_double(p.gamma2), p, check_grid, q);
        }
        break;
    }

    case ScenarioKind::dominance_map: {
        const auto m = dominance_map(c.params, c.scan_x.values(), c.scan_y.values(), q);
        for (std::size_t i = 0; i < m.g12_grid.size(); ++i)
            for (std::size_t j = 0; j < m.gamma2_grid.size(); ++j) {
                const auto& cell = m.cells[i][j];
                t.add_row({m.g12_grid[i], m.gamma2_grid[j], cell.p_em11, cell.p_em22, cell.p_total12, cell.dominant});
            }
        if (c.oracle_check) {
            SystemParams p = c.params;
            p.gamma2 = mid(c.scan_x);
            p.g12 = mid(c.scan_y);
            chk.doubled("g12=" + format_double(p.g12) + " gamma2=" + format_double(p.gamma2), p, check_grid, q,
                        true);
        }
        break;
    }

    case ScenarioKind::decay_route_map: {
        const auto m = decay_route_map(c.params, c.scan_x.values(), c.scan_y.values(), q);
        for (std::size_t i = 0; i < m.g2_grid.size(); ++i)
            for (std::size_t j = 0; j < m.kappa_grid.size(); ++j)
                t.add_row({m.g2_grid[i], m.kappa_grid[j], m.p_em1[i][j], m.p_emx2[i][j], m.p_emr[i][j]});
        if (c.oracle_check) {
            SystemParams p = c.params;
            p.kappa = p.gamma2 = mid(c.scan_x);
            p.g2 = mid(c.scan_y);
            chk.tcm("g2=" + format_double(p.g2) + " kappa=" + format_double(p.kappa), p, check_grid, q);
        }
        break;
    }

    case ScenarioKind::exchange_spectrum:
    case ScenarioKind::raman_spectrum:
        for (const auto& r : runs(c)) {
            const auto grid = c.detuning.points ? c.detuning.values() : default_spectrum_grid(r.p);
            const auto atomic = exchange_emission_spectrum(r.p, grid);
            SpectrumTrace shown = atomic;
            if (c.kind == ScenarioKind::exchange_spectrum) {
                for (std::size_t i = 0; i < grid.size(); ++i) t.add_row(row(r, c, {grid[i], atomic.values[i]}));
            } else {
                const auto ram = raman_spectrum(r.p, c.pulse, grid);
                const auto closed = raman_spectrum_closed(r.p, c.pulse, grid);
                const auto gauss = input_pulse_spectrum(c.pulse, grid);
                for (std::size_t i = 0; i < grid.size(); ++i)
                    t.add_row(row(r, c, {grid[i], ram.values[i], closed.values[i], gauss.values[i], atomic.values[i]}));
                shown = ram;
            }
            std::string peaks;
            try {
                for (const auto& pk : peak_report(shown))
                    peaks += (peaks.empty() ? "" : ";") + format_double(pk.location) + "/" + format_double(pk.fwhm);
            } catch (const GridTooCoarse&) {
                peaks = "unresolved on this grid";
            }
            t.add_meta(r.label.empty() ? "peaks" : "peaks[" + r.label + "]", peaks.empty() ? "none" : peaks);
            if (c.oracle_check) chk.tcm(r.label, r.p, check_grid, q);
        }
        break;
    }
}

} // namespace

RunReport run_scenario(const ScenarioConfig& cfg) {
    validate_config(cfg);
    RunReport rep;
    rep.oracle_ran = cfg.oracle_check;
    CsvTable t = header(cfg);
    try {
        compute(cfg, t, rep);
    } catch (const ConfigInvalid&) {
        throw;
    } catch (const std::exception& e) {
        throw ComputeFailed(std::string(scenario_kind_name(cfg.kind)) + ": " + e.what());
    }
    if (cfg.oracle_check)
        t.add_meta("oracle_check", rep.oracle_passed ? "passed" : "failed");
    try {
        std::filesystem::create_directories(cfg.out_dir.empty() ? "." : cfg.out_dir);
        const auto base = (std::filesystem::path(cfg.out_dir.empty() ? "." : cfg.out_dir) / output_stem(cfg)).string();
        write_file(base + ".csv", t.str());
        rep.files.push_back(base + ".csv");
        if (cfg.oracle_check) {
            write_report(cfg, rep, base + "_oracle.json");
            rep.files.push_back(base + "_oracle.json");
        }
    } catch (const std::exception& e) {
        throw ComputeFailed(std::string("output: ") + e.what());
    }
    return rep;
}

} // namespace cqed
