#include "cqed/tavis_cummings.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cqed/errors.hpp"
#include "cqed/parallel.hpp"

namespace cqed {

namespace {

constexpr double kInvTwoPi = 0.5 / std::numbers::pi;
const cplx I(0.0, 1.0);

} // namespace

TcmPoles tcm_poles(const SystemParams& p) {
    TcmPoles tp;
    tp.m_a = -p.omega02 - I * p.gamma1 / 2.0;
    tp.m_b = -p.omega01 - I * p.gamma2 / 2.0;
    tp.m_c = p.omega_c - p.omega01 - p.omega02 - I * p.kappa / 2.0;
    tp.d2 = -tp.m_c;
    tp.d_r = -tp.m_b;

    // Pair of the qubit-2 / cavity block, as printed with its frame offsets.
    const cplx mean = p.omega_c - 2.0 * p.omega01 - p.omega02 - I * p.gamma2 / 2.0 - I * p.kappa / 2.0;
    const cplx diff = I * p.gamma2 / 2.0 - I * p.kappa / 2.0 + p.omega_c - p.omega02;
    const cplx root = std::sqrt(4.0 * p.g2 * p.g2 + diff * diff);
    tp.pair = ordered_pair(0.5 * (mean + root), 0.5 * (mean - root), PairVariant::tcm_pair);

    // det(z - M) = (z - mA)(z - w+)(z - w-) - g12^2 (z - mC) - g1^2 (z - mB) - 2 g1 g2 g12
    const cplx s = tp.pair.omega_plus + tp.pair.omega_minus;
    const cplx pr = tp.pair.omega_plus * tp.pair.omega_minus;
    const double g1s = p.g1 * p.g1, g12s = p.g12 * p.g12;
    tp.cubic[3] = 1.0;
    tp.cubic[2] = -(s + tp.m_a);
    tp.cubic[1] = pr + tp.m_a * s - g12s - g1s;
    tp.cubic[0] = -tp.m_a * pr + g12s * tp.m_c + g1s * tp.m_b - 2.0 * p.g1 * p.g2 * p.g12;
    tp.roots = solve_cubic(tp.cubic[3], tp.cubic[2], tp.cubic[1], tp.cubic[0]);
    return tp;
}

cplx tcm_characteristic(const TcmPoles& tp, const SystemParams& p, cplx z) {
    return (z - tp.m_a) * (z - tp.pair.omega_plus) * (z - tp.pair.omega_minus) - p.g12 * p.g12 * (z - tp.m_c) -
           p.g1 * p.g1 * (z - tp.m_b) - 2.0 * p.g1 * p.g2 * p.g12;
}

double p_surv_tcm(const TcmPoles& tp, double t) {
    const auto r = tp.poles();
    const std::array<cplx, 3> q{tp.pair.omega_plus * tp.pair.omega_minus,
                                -(tp.pair.omega_plus + tp.pair.omega_minus), 1.0};
    return std::norm(exp_divided_difference(r, q, t));
}

double p_qubit2_tcm(const TcmPoles& tp, const SystemParams& p, double t) {
    const std::array<cplx, 2> q{p.g12 * tp.d2 + p.g1 * p.g2, p.g12};
    return std::norm(exp_divided_difference(tp.poles(), q, t));
}

double p_cavity_tcm(const TcmPoles& tp, const SystemParams& p, double t) {
    const std::array<cplx, 2> q{p.g1 * tp.d_r + p.g2 * p.g12, p.g1};
    return std::norm(exp_divided_difference(tp.poles(), q, t));
}

double p_surv_tcm(const SystemParams& p, double t) { return p_surv_tcm(tcm_poles(p), t); }

const char* tcm_channel_name(TcmChannel c) {
    switch (c) {
    case TcmChannel::em1: return "em1";
    case TcmChannel::emx2: return "emx2";
    case TcmChannel::emr: return "emr";
    }
    return "?";
}

double tcm_resolved(const TcmPoles& tp, const SystemParams& p, TcmChannel c, double t, double omega) {
    if (t == 0.0) return 0.0;
    const double delta = omega - p.omega01 - p.omega02;
    std::array<cplx, 3> q{};
    double rate = 0.0;
    std::size_t nq = 0;
    switch (c) {
    case TcmChannel::em1:
        q = {tp.pair.omega_plus * tp.pair.omega_minus, -(tp.pair.omega_plus + tp.pair.omega_minus), 1.0};
        nq = 3;
        rate = p.gamma1;
        break;
    case TcmChannel::emx2:
        q = {p.g12 * tp.d2 + p.g1 * p.g2, p.g12, 0.0};
        nq = 2;
        rate = p.gamma2;
        break;
    case TcmChannel::emr:
        q = {p.g1 * tp.d_r + p.g2 * p.g12, p.g1, 0.0};
        nq = 2;
        rate = p.kappa;
        break;
    }
    if (rate == 0.0) return 0.0;
    const std::span<const cplx> qs(q.data(), nq);
    const auto r = tp.poles();
    if (std::isinf(t)) {
        const cplx den = (delta - r[0]) * (delta - r[1]) * (delta - r[2]);
        return rate * kInvTwoPi * std::norm(poly_eval(qs, delta) / den);
    }
    const std::array<cplx, 4> nodes{delta, r[0], r[1], r[2]};
    return rate * kInvTwoPi * std::norm(exp_divided_difference(nodes, qs, t));
}

double p_em1_resolved(const SystemParams& p, double t, double omega1) {
    return tcm_resolved(tcm_poles(p), p, TcmChannel::em1, t, omega1);
}

double p_emx2_resolved(const SystemParams& p, double t, double omega2) {
    return tcm_resolved(tcm_poles(p), p, TcmChannel::emx2, t, omega2);
}

double p_emr_resolved(const SystemParams& p, double t, double omega_r) {
    return tcm_resolved(tcm_poles(p), p, TcmChannel::emr, t, omega_r);
}

double tcm_channel_total(const TcmPoles& tp, const SystemParams& p, TcmChannel c, double t, const QuadOptions& q) {
    if (t == 0.0) return 0.0;
    const auto r = tp.poles();
    QuadratureSpec spec;
    spec.center = (r[0].real() + r[1].real() + r[2].real()) / 3.0;
    spec.max_time = t;
    spec.rel_tol = q.rel_tol;
    spec.node_budget = q.node_budget;
    spec.features = {r[0], r[1], r[2]};
    const double ref = p.omega01 + p.omega02;
    return integrate_frequency([&](double delta) { return tcm_resolved(tp, p, c, t, delta + ref); }, spec);
}

double tcm_channel_total(const SystemParams& p, TcmChannel c, double t, const QuadOptions& q) {
    return tcm_channel_total(tcm_poles(p), p, c, t, q);
}

double steady_time_tcm(const TcmPoles& tp) {
    double rate = kSteady;
    for (const auto& z : tp.poles())
        if (-2.0 * z.imag() > 1e-12) rate = std::min(rate, -2.0 * z.imag());
    return std::isfinite(rate) ? 40.0 / rate : kSteady;
}

TcmSteady steady_tcm(const SystemParams& p, const QuadOptions& q) {
    const auto tp = tcm_poles(p);
    TcmSteady s;
    const double tinf = steady_time_tcm(tp);
    // A dark qubit-2/cavity mode is undamped but unpopulated; the summed system
    // population tells the two cases apart.
    s.residual = std::isfinite(tinf) ? p_surv_tcm(tp, tinf) + p_qubit2_tcm(tp, p, tinf) + p_cavity_tcm(tp, p, tinf)
                                     : 1.0;
    if (!(s.residual < 1e-6)) throw NonConvergent("TCM steady state not reached");
    s.p_em1 = tcm_channel_total(tp, p, TcmChannel::em1, kSteady, q);
    s.p_emx2 = tcm_channel_total(tp, p, TcmChannel::emx2, kSteady, q);
    s.p_emr = tcm_channel_total(tp, p, TcmChannel::emr, kSteady, q);
    return s;
}

DecayRouteMap decay_route_map(const SystemParams& base, const std::vector<double>& kappa_grid,
                              const std::vector<double>& g2_grid, const QuadOptions& q) {
    DecayRouteMap m;
    m.kappa_grid = kappa_grid;
    m.g2_grid = g2_grid;
    const std::size_t ng = g2_grid.size(), nk = kappa_grid.size();
    m.p_em1.assign(ng, std::vector<double>(nk));
    m.p_emx2 = m.p_em1;
    m.p_emr = m.p_em1;
    parallel_for(ng * nk, [&](std::size_t k) {
        const std::size_t i = k / nk, j = k % nk;
        SystemParams p = base;
        p.g2 = g2_grid[i];
        p.kappa = kappa_grid[j];
        p.gamma2 = kappa_grid[j];
        const auto s = steady_tcm(p, q);
        m.p_em1[i][j] = s.p_em1;
        m.p_emx2[i][j] = s.p_emx2;
        m.p_emr[i][j] = s.p_emr;
    });
    return m;
}

} // namespace cqed
