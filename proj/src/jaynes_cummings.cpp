#include "cqed/jaynes_cummings.hpp"

#include "cqed/errors.hpp"

namespace cqed {

SystemParams JcmParams::system() const {
    SystemParams p;
    p.omega01 = 0.0;
    p.omega_c = detuning;
    p.g1 = g;
    p.gamma1 = gamma1;
    p.kappa = kappa;
    return p;
}

SystemParams map_single_excitation_jcm(double g, double kappa, double gamma1, double detuning) {
    if (kappa < 0.0) throw NegativeRate("kappa must be non-negative");
    SystemParams p;
    p.omega01 = 0.0;
    p.omega02 = detuning;
    p.g12 = g;
    p.gamma1 = gamma1;
    p.gamma2 = kappa;
    validate_params(p);
    return p;
}

JcmTwoExcitation evolve_jcm_two_excitation(const JcmParams& jp, const std::vector<double>& times,
                                          const OracleConfig& cfg) {
    const auto p = jp.system();
    const auto net = build_network(NetworkKind::jcm_2ex);
    JcmTwoExcitation out;
    out.raw = oracle_evolve(net, p, cfg, times);
    std::vector<std::string> excited;
    for (const auto& nd : net.nodes)
        if (nd.q1 == 1) excited.push_back(nd.label);
    out.survival = out.raw.trace("survival", excited, p);
    out.norm = {times, out.raw.norm, "norm", p};
    return out;
}

} // namespace cqed
