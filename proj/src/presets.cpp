#include "cqed/presets.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "cqed/errors.hpp"

namespace cqed {

namespace {

struct Entry {
    PresetInfo info;
    std::function<ScenarioConfig()> make;
};

ScenarioConfig base(const std::string& name, ScenarioKind kind) {
    ScenarioConfig c;
    c.scenario = name;
    c.kind = kind;
    return c;
}

ScenarioConfig single(const std::string& name, double gamma2, double g12, Series s) {
    auto c = base(name, ScenarioKind::single_trace);
    c.params.gamma2 = gamma2;
    c.params.g12 = g12;
    c.series = std::move(s);
    return c;
}

ScenarioConfig doubled(const std::string& name, ScenarioKind kind, double g12, double gamma2, Series s) {
    auto c = base(name, kind);
    c.params.g12 = g12;
    c.params.gamma2 = gamma2;
    c.series = std::move(s);
    return c;
}

ScenarioConfig jcm(const std::string& name, double g) {
    auto c = base(name, ScenarioKind::jcm_trace);
    c.params.g1 = g;
    c.series = {"kappa", {0.2, 1.0, 5.0}};
    return c;
}

ScenarioConfig tcm(const std::string& name, double g1, double g2, double g12, double kappa, double gamma2, Series s) {
    auto c = base(name, ScenarioKind::tcm_trace);
    c.params.g1 = g1;
    c.params.g2 = g2;
    c.params.g12 = g12;
    c.params.kappa = kappa;
    c.params.gamma2 = gamma2;
    c.series = std::move(s);
    return c;
}

ScenarioConfig gap(const std::string& name) {
    auto c = base(name, ScenarioKind::gap_map);
    c.scan_x = {0.1, 10.0, 100, false};
    c.scan_y = {0.1, 10.0, 100, false};
    return c;
}

ScenarioConfig dominance(const std::string& name, const std::string& focus) {
    auto c = base(name, ScenarioKind::dominance_map);
    c.focus = focus;
    c.scan_x = {0.1, 20.0, 41, false};
    c.scan_y = {0.1, 15.0, 41, false};
    c.rel_tol = 1e-4;
    return c;
}

ScenarioConfig two_photon(const std::string& name, double g12, double gamma2) {
    auto c = base(name, ScenarioKind::two_photon_trace);
    c.params.g12 = g12;
    c.params.gamma2 = gamma2;
    c.time = {0.0, 10.0, 41, false};
    c.rel_tol = 1e-4;
    return c;
}

ScenarioConfig route(const std::string& name, double g, const std::string& focus) {
    auto c = base(name, ScenarioKind::decay_route_map);
    c.focus = focus;
    c.params.g1 = g;
    c.params.g12 = g;
    c.scan_x = {0.1, 20.0, 61, true};
    c.scan_y = {0.0, 15.0, 61, false};
    return c;
}

// Cavity detuning 2, kappa 0.01, resonant qubits.
ScenarioConfig spectrum(const std::string& name, double gamma2, double g1, double g12, Series s) {
    auto c = base(name, ScenarioKind::exchange_spectrum);
    c.params.omega_c = 2.0;
    c.params.kappa = 0.01;
    c.params.g1 = g1;
    c.params.g12 = g12;
    c.params.gamma2 = gamma2;
    c.series = std::move(s);
    return c;
}

ScenarioConfig raman(const std::string& name, double d1) {
    auto c = spectrum(name, 1.0, 1.0, 5.0, {});
    c.kind = ScenarioKind::raman_spectrum;
    c.pulse.excitation_detuning = d1;
    c.pulse.duration = 2.0 * std::sqrt(3.0);
    return c;
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e = {
        {{"fig2a", "P_surv, qubit 2 in ground state, gamma2 = 10 (bad atom)", "seconds"},
         [] { return single("fig2a", 10.0, 0.0, {"g12", {0.5, 5.0, 15.0}}); }},
        {{"fig2b", "P_surv, qubit 2 in ground state, gamma2 = 0.5 (good atom)", "seconds"},
         [] { return single("fig2b", 0.5, 0.0, {"g12", {1.0, 5.0}}); }},
        {{"fig2c", "P_total, both qubits excited, g12 = 0.5 (weak coupling)", "seconds"},
         [] { return doubled("fig2c", ScenarioKind::double_trace, 0.5, 0.0, {"gamma2", {0.2, 1.0, 4.0}}); }},
        {{"fig2d", "P_total, both qubits excited, g12 = 5 (strong coupling)", "seconds"},
         [] { return doubled("fig2d", ScenarioKind::double_trace, 5.0, 0.0, {"gamma2", {0.2, 1.0, 4.0}}); }},
        {{"fig2e", "two-excitation JCM, g = 1 (weak coupling)", "minute"}, [] { return jcm("fig2e", 1.0); }},
        {{"fig2f", "two-excitation JCM, g = 2 (strong coupling)", "minute"}, [] { return jcm("fig2f", 2.0); }},
        {{"fig2g", "TCM, g1 = 1, g2 = 5, kappa = gamma2 = 1", "seconds"},
         [] { return tcm("fig2g", 1.0, 5.0, 0.0, 1.0, 1.0, {"g12", {0.2, 1.0, 5.0}}); }},
        {{"fig2h", "TCM, g1 = g2 = g12 = 1, kappa = 0", "seconds"},
         [] { return tcm("fig2h", 1.0, 1.0, 1.0, 0.0, 0.0, {"gamma2", {0.5, 2.0, 5.0}}); }},
        {{"fig3a", "steady gap P_SE - P_em2 over (gamma2, g12) with the optimal gamma2", "seconds"},
         [] { return gap("fig3a"); }},
        {{"fig3b", "P_SE and P_em2 in time, g12 = 0.5, gamma2 = 3", "seconds"},
         [] { return single("fig3b", 3.0, 0.5, {}); }},
        {{"fig3c", "P_SE and P_em2 in time, g12 = 5, gamma2 = 3", "seconds"},
         [] { return single("fig3c", 3.0, 5.0, {}); }},
        {{"contrib_a", "contributions to P_total, g12 = 0.5, gamma2 = 0.2", "seconds"},
         [] { return doubled("contrib_a", ScenarioKind::contributions, 0.5, 0.2, {}); }},
        {{"contrib_b", "contributions to P_total, g12 = 5, gamma2 = 0.2", "seconds"},
         [] { return doubled("contrib_b", ScenarioKind::contributions, 5.0, 0.2, {}); }},
        {{"contrib_c", "contributions to P_total, g12 = 0.5, gamma2 = 4", "seconds"},
         [] { return doubled("contrib_c", ScenarioKind::contributions, 0.5, 4.0, {}); }},
        {{"contrib_d", "contributions to P_total, g12 = 5, gamma2 = 4", "seconds"},
         [] { return doubled("contrib_d", ScenarioKind::contributions, 5.0, 4.0, {}); }},
        {{"fig6a", "steady P_em11 over (gamma2, g12)", "seconds"}, [] { return dominance("fig6a", "p_em11"); }},
        {{"fig6b", "steady P_em22 over (gamma2, g12)", "seconds"}, [] { return dominance("fig6b", "p_em22"); }},
        {{"fig6c", "steady P_total12 over (gamma2, g12)", "seconds"},
         [] { return dominance("fig6c", "p_total12"); }},
        {{"fig6d", "two-photon channels in time, g12 = 6, gamma2 = 0.1", "seconds"},
         [] { return two_photon("fig6d", 6.0, 0.1); }},
        {{"fig6e", "two-photon channels in time, g12 = 8, gamma2 = 15", "seconds"},
         [] { return two_photon("fig6e", 8.0, 15.0); }},
        {{"fig6f", "two-photon channels in time, g12 = 1, gamma2 = 10", "seconds"},
         [] { return two_photon("fig6f", 1.0, 10.0); }},
        {{"fig7a", "TCM P_surv against g2, g1 = g12 = 5, kappa = gamma2 = 1", "seconds"},
         [] { return tcm("fig7a", 5.0, 0.0, 5.0, 1.0, 1.0, {"g2", {0.0, 5.0, 15.0}}); }},
        {{"fig7b", "TCM P_surv against g2, g1 = 5, g12 = 2, kappa = gamma2 = 1", "seconds"},
         [] { return tcm("fig7b", 5.0, 0.0, 2.0, 1.0, 1.0, {"g2", {0.0, 5.0, 15.0}}); }},
        {{"fig8a", "steady P_em1 over (kappa = gamma2, g2), g1 = g12 = 1", "seconds"},
         [] { return route("fig8a", 1.0, "p_em1"); }},
        {{"fig8b", "steady P_emx2 = P_emr over (kappa = gamma2, g2), g1 = g12 = 1", "seconds"},
         [] { return route("fig8b", 1.0, "p_emx2"); }},
        {{"fig8c", "steady P_em1 over (kappa = gamma2, g2), g1 = g12 = 3", "seconds"},
         [] { return route("fig8c", 3.0, "p_em1"); }},
        {{"fig9a", "exchange-emission spectrum against g12, gamma2 = 1", "seconds"},
         [] { return spectrum("fig9a", 1.0, 1.0, 0.0, {"g12", {1.0, 3.0, 5.0}}); }},
        {{"fig9b", "exchange-emission spectrum against g1, gamma2 = 1", "seconds"},
         [] { return spectrum("fig9b", 1.0, 0.0, 1.0, {"g1", {1.0, 3.0, 5.0}}); }},
        {{"fig9c", "exchange-emission spectrum against g12, gamma2 = 4", "seconds"},
         [] { return spectrum("fig9c", 4.0, 1.0, 0.0, {"g12", {1.0, 3.0, 5.0}}); }},
        {{"fig9d", "exchange-emission spectrum against g1, gamma2 = 4", "seconds"},
         [] { return spectrum("fig9d", 4.0, 0.0, 1.0, {"g1", {1.0, 3.0, 5.0}}); }},
        {{"fig10a", "Raman spectrum with its Gaussian and atomic components, pulse detuning 2", "seconds"},
         [] { return raman("fig10a", 2.0); }},
        {{"fig10b", "Raman spectrum with its Gaussian and atomic components, pulse detuning 4", "seconds"},
         [] { return raman("fig10b", 4.0); }},
    };
    return e;
}

} // namespace

const std::vector<PresetInfo>& preset_catalog() {
    static const std::vector<PresetInfo> cat = [] {
        std::vector<PresetInfo> v;
        for (const auto& e : entries()) v.push_back(e.info);
        return v;
    }();
    return cat;
}

bool is_preset(const std::string& name) {
    for (const auto& e : entries())
        if (e.info.name == name) return true;
    return false;
}

ScenarioConfig preset_config(const std::string& name) {
    for (const auto& e : entries())
        if (e.info.name == name) return e.make();
    throw ConfigInvalid("/scenario: unknown preset '" + name + "'");
}

} // namespace cqed
