#include "cqed/model.hpp"

#include <cmath>

#include "cqed/errors.hpp"

namespace cqed {

EmissionDetunings make_detunings(const SystemParams& p, double w1, double w1p,
                                 double w2, double w2p, double wr) {
    const double ref = p.omega01 + p.omega02;
    EmissionDetunings d;
    d.delta1 = w1 - ref;
    d.delta1_prime = w1p - ref;
    d.delta2 = w2 - ref;
    d.delta2_prime = w2p - ref;
    d.delta_r = wr - ref;
    d.t_sum = w1 + w2 - ref;
    return d;
}

DerivedParams validate_params(const SystemParams& p) {
    const double v[] = {p.omega01, p.omega02, p.omega_c, p.g1, p.g2, p.g12,
                        p.gamma1, p.gamma2, p.kappa};
    for (double x : v)
        if (!std::isfinite(x)) throw NonFiniteParameter("non-finite system parameter");
    if (!(p.gamma1 > 0.0)) throw NonPositiveUnitRate("gamma1 must be > 0 (it is the unit rate)");
    if (p.gamma2 < 0.0) throw NegativeRate("gamma2 must be >= 0");
    if (p.kappa < 0.0) throw NegativeRate("kappa must be >= 0");

    DerivedParams d;
    d.omega0 = 0.5 * (p.omega01 + p.omega02);
    d.gamma_mean = 0.5 * (p.gamma1 + p.gamma2);
    d.detuning_12 = p.omega01 - p.omega02;
    d.detuning_21 = p.omega02 - p.omega01;
    d.delta_gamma = p.gamma1 - p.gamma2;
    d.delta_c = p.omega_c - p.omega01;
    return d;
}

DressedPair ordered_pair(cplx a, cplx b, PairVariant v) {
    bool swap = false;
    if (a.real() < b.real()) swap = true;
    else if (a.real() == b.real() && a.imag() < b.imag()) swap = true;
    if (swap) std::swap(a, b);
    return {a, b, v};
}

DressedPair dressed_pair_single(const SystemParams& p) {
    const cplx i(0.0, 1.0);
    const cplx mean = -(i * p.gamma1 / 2.0 + i * p.gamma2 / 2.0 + p.omega01 + p.omega02);
    const cplx d = i * p.gamma1 / 2.0 - i * p.gamma2 / 2.0 + p.omega02 - p.omega01;
    const cplx root = std::sqrt(d * d + 4.0 * p.g12 * p.g12);
    return ordered_pair(0.5 * (mean + root), 0.5 * (mean - root), PairVariant::single_excitation);
}

DressedPair dressed_pair_double(const SystemParams& p, Channel, double emission_frequency) {
    // Both channels share one formula; only the photon frequency differs.
    const cplx i(0.0, 1.0);
    const double omega0 = 0.5 * (p.omega01 + p.omega02);
    const double gamma = 0.5 * (p.gamma1 + p.gamma2);
    const cplx d = (p.omega01 - p.omega02) - i * (p.gamma1 - p.gamma2) / 2.0;
    const cplx root = std::sqrt(4.0 * p.g12 * p.g12 + d * d);
    const cplx c = emission_frequency - omega0 - i * gamma / 2.0;
    return ordered_pair(c + 0.5 * root, c - 0.5 * root, PairVariant::double_excitation);
}

// ---------------------------------------------------------------------------

const char* bath_name(Bath b) {
    switch (b) {
    case Bath::qubit1: return "b1";
    case Bath::qubit2: return "b2";
    case Bath::cavity: return "b3";
    }
    return "?";
}

const char* edge_kind_name(EdgeKind k) {
    switch (k) {
    case EdgeKind::coupling_g1: return "g1";
    case EdgeKind::coupling_g2: return "g2";
    case EdgeKind::coupling_g12: return "g12";
    case EdgeKind::decay_gamma1: return "gamma1";
    case EdgeKind::decay_gamma2: return "gamma2";
    case EdgeKind::decay_kappa: return "kappa";
    }
    return "?";
}

bool is_decay(EdgeKind k) {
    return k == EdgeKind::decay_gamma1 || k == EdgeKind::decay_gamma2 || k == EdgeKind::decay_kappa;
}

const char* network_name(NetworkKind kind) {
    switch (kind) {
    case NetworkKind::two_qubit_1ex: return "two_qubit_1ex";
    case NetworkKind::two_qubit_2ex: return "two_qubit_2ex";
    case NetworkKind::jcm_2ex: return "jcm_2ex";
    case NetworkKind::tcm_1ex: return "tcm_1ex";
    }
    return "?";
}

int StateNetwork::excitations(std::size_t node) const {
    const auto& s = nodes.at(node);
    return s.q1 + s.q2 + s.n + static_cast<int>(s.photons.size());
}

std::size_t StateNetwork::find(const std::string& label) const {
    for (std::size_t k = 0; k < nodes.size(); ++k)
        if (nodes[k].label == label) return k;
    throw Error("no network node labelled " + label);
}

namespace {

std::string make_label(int q1, int q2, int n, const std::vector<Bath>& ph, bool with_cavity) {
    std::string s = std::string(q1 ? "e1" : "g1") + (q2 ? "e2" : "g2");
    if (with_cavity) s += "," + std::to_string(n);
    for (Bath b : ph) s += std::string("+") + bath_name(b);
    return s;
}

struct Builder {
    StateNetwork net;
    bool cavity{false};

    std::size_t node(int q1, int q2, int n, std::vector<Bath> ph) {
        const auto label = make_label(q1, q2, n, ph, cavity);
        for (std::size_t k = 0; k < net.nodes.size(); ++k)
            if (net.nodes[k].label == label) return k;
        NetworkNode nd{label, q1, q2, n, std::move(ph), false};
        nd.terminal = (q1 == 0 && q2 == 0 && n == 0);
        net.nodes.push_back(std::move(nd));
        return net.nodes.size() - 1;
    }
    void edge(std::size_t a, std::size_t b, EdgeKind k, double m = 1.0) {
        net.edges.push_back({a, b, k, m});
    }
};

std::vector<Bath> plus(std::vector<Bath> v, Bath b) {
    v.push_back(b);
    return v;
}

} // namespace

StateNetwork build_network(NetworkKind kind) {
    Builder b;
    b.net.kind = kind;
    switch (kind) {
    case NetworkKind::two_qubit_1ex: {
        const auto eg = b.node(1, 0, 0, {});
        const auto ge = b.node(0, 1, 0, {});
        const auto p1 = b.node(0, 0, 0, {Bath::qubit1});
        const auto p2 = b.node(0, 0, 0, {Bath::qubit2});
        b.edge(eg, ge, EdgeKind::coupling_g12);
        b.edge(eg, p1, EdgeKind::decay_gamma1);
        b.edge(ge, p2, EdgeKind::decay_gamma2);
        b.net.initial = eg;
        break;
    }
    case NetworkKind::two_qubit_2ex: {
        const auto ee = b.node(1, 1, 0, {});
        for (Bath first : {Bath::qubit1, Bath::qubit2}) {
            const std::vector<Bath> ph{first};
            const auto eg = b.node(1, 0, 0, ph);
            const auto ge = b.node(0, 1, 0, ph);
            if (first == Bath::qubit1) b.edge(ee, ge, EdgeKind::decay_gamma1);
            else b.edge(ee, eg, EdgeKind::decay_gamma2);
            b.edge(eg, ge, EdgeKind::coupling_g12);
            b.edge(eg, b.node(0, 0, 0, plus(ph, Bath::qubit1)), EdgeKind::decay_gamma1);
            b.edge(ge, b.node(0, 0, 0, plus(ph, Bath::qubit2)), EdgeKind::decay_gamma2);
        }
        b.net.initial = ee;
        break;
    }
    case NetworkKind::jcm_2ex: {
        b.cavity = true;
        const auto e1 = b.node(1, 0, 1, {});
        const auto g2 = b.node(0, 0, 2, {});
        b.edge(e1, g2, EdgeKind::coupling_g1, std::sqrt(2.0));
        for (Bath first : {Bath::qubit1, Bath::cavity}) {
            const std::vector<Bath> ph{first};
            const auto e0 = b.node(1, 0, 0, ph);
            const auto g1 = b.node(0, 0, 1, ph);
            if (first == Bath::qubit1) {
                b.edge(e1, g1, EdgeKind::decay_gamma1);
            } else {
                b.edge(e1, e0, EdgeKind::decay_kappa);
                b.edge(g2, g1, EdgeKind::decay_kappa, std::sqrt(2.0));
            }
            b.edge(e0, g1, EdgeKind::coupling_g1);
            b.edge(e0, b.node(0, 0, 0, plus(ph, Bath::qubit1)), EdgeKind::decay_gamma1);
            b.edge(g1, b.node(0, 0, 0, plus(ph, Bath::cavity)), EdgeKind::decay_kappa);
        }
        b.net.initial = e1;
        break;
    }
    case NetworkKind::tcm_1ex: {
        b.cavity = true;
        const auto a = b.node(1, 0, 0, {});
        const auto q = b.node(0, 1, 0, {});
        const auto c = b.node(0, 0, 1, {});
        b.edge(a, q, EdgeKind::coupling_g12);
        b.edge(a, c, EdgeKind::coupling_g1);
        b.edge(q, c, EdgeKind::coupling_g2);
        b.edge(a, b.node(0, 0, 0, {Bath::qubit1}), EdgeKind::decay_gamma1);
        b.edge(q, b.node(0, 0, 0, {Bath::qubit2}), EdgeKind::decay_gamma2);
        b.edge(c, b.node(0, 0, 0, {Bath::cavity}), EdgeKind::decay_kappa);
        b.net.initial = a;
        break;
    }
    }
    return std::move(b.net);
}

} // namespace cqed
