#include "cqed/two_qubit_single.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "cqed/errors.hpp"
#include "cqed/numerics.hpp"
#include "cqed/parallel.hpp"

namespace cqed {

namespace {

constexpr double kInvTwoPi = 0.5 / std::numbers::pi;
const cplx I(0.0, 1.0);

// Diagonal entry of |g1 e2> in the effective matrix.
cplx m22(const SystemParams& p) { return -p.omega01 - I * p.gamma2 / 2.0; }

} // namespace

double p_se_resolved(const SystemParams& p, double t, double omega1) {
    if (t == 0.0) return 0.0;
    const auto d = dressed_pair_single(p);
    const double delta = omega1 - p.omega01 - p.omega02;
    const std::array<cplx, 2> q{-m22(p), 1.0};
    if (std::isinf(t)) {
        const cplx a = poly_eval(q, delta) / ((delta - d.omega_plus) * (delta - d.omega_minus));
        return p.gamma1 * kInvTwoPi * std::norm(a);
    }
    const std::array<cplx, 3> nodes{delta, d.omega_plus, d.omega_minus};
    return p.gamma1 * kInvTwoPi * std::norm(exp_divided_difference(nodes, q, t));
}

double p_em2_resolved(const SystemParams& p, double t, double omega_r) {
    if (t == 0.0 || p.g12 == 0.0) return 0.0;
    const auto d = dressed_pair_single(p);
    const double delta = omega_r - p.omega01 - p.omega02;
    const double pre = p.g12 * p.g12 * p.gamma2 * kInvTwoPi;
    if (std::isinf(t)) return pre / std::norm((delta - d.omega_plus) * (delta - d.omega_minus));
    const std::array<cplx, 3> nodes{delta, d.omega_plus, d.omega_minus};
    const std::array<cplx, 1> q{1.0};
    return pre * std::norm(exp_divided_difference(nodes, q, t));
}

double p_surv(const SystemParams& p, double t) {
    const auto d = dressed_pair_single(p);
    const std::array<cplx, 2> nodes{d.omega_plus, d.omega_minus};
    const std::array<cplx, 2> q{-m22(p), 1.0};
    return std::norm(exp_divided_difference(nodes, q, t));
}

double p_exchg(const SystemParams& p, double t) {
    const auto d = dressed_pair_single(p);
    const std::array<cplx, 2> nodes{d.omega_plus, d.omega_minus};
    const std::array<cplx, 1> q{1.0};
    return p.g12 * p.g12 * std::norm(exp_divided_difference(nodes, q, t));
}

QuadratureSpec single_spec(const SystemParams& p, double t, const QuadOptions& q) {
    const auto d = dressed_pair_single(p);
    QuadratureSpec s;
    s.center = 0.5 * (d.omega_plus.real() + d.omega_minus.real());
    s.max_time = t;
    s.rel_tol = q.rel_tol;
    s.node_budget = q.node_budget;
    s.features = {d.omega_plus, d.omega_minus};
    return s;
}

double p_se_total(const SystemParams& p, double t, const QuadOptions& q) {
    if (t == 0.0) return 0.0;
    const double ref = p.omega01 + p.omega02;
    return integrate_frequency([&](double delta) { return p_se_resolved(p, t, delta + ref); },
                               single_spec(p, t, q));
}

double p_em2_total(const SystemParams& p, double t, const QuadOptions& q) {
    if (t == 0.0 || p.g12 == 0.0) return 0.0;
    const double ref = p.omega01 + p.omega02;
    return integrate_frequency([&](double delta) { return p_em2_resolved(p, t, delta + ref); },
                               single_spec(p, t, q));
}

double steady_time(const SystemParams& p) {
    // Undamped poles are skipped; the population check in steady_single catches
    // the ones that carry weight.
    const auto d = dressed_pair_single(p);
    double rate = kSteady;
    for (cplx z : {d.omega_plus, d.omega_minus})
        if (-2.0 * z.imag() > 1e-12) rate = std::min(rate, -2.0 * z.imag());
    return std::isfinite(rate) ? 40.0 / rate : kSteady;
}

SteadyState steady_single(const SystemParams& p, const QuadOptions& q) {
    SteadyState s;
    const double tinf = steady_time(p);
    s.residual = std::isfinite(tinf) ? p_surv(p, tinf) + p_exchg(p, tinf) : 1.0;
    if (!(s.residual < 1e-6))
        throw NonConvergent("steady state not reached: residual system population " + std::to_string(s.residual));
    s.p_se = p_se_total(p, kSteady, q);
    s.p_em2 = p_em2_total(p, kSteady, q);
    return s;
}

GapMap gap_map(const SystemParams& base, const std::vector<double>& gamma2_grid,
               const std::vector<double>& g12_grid, const QuadOptions& q) {
    GapMap m;
    m.gamma2_grid = gamma2_grid;
    m.g12_grid = g12_grid;
    const std::size_t ng = g12_grid.size(), nr = gamma2_grid.size();
    m.gap.assign(ng, std::vector<double>(nr));
    m.p_se = m.gap;
    m.p_em2 = m.gap;
    parallel_for(ng * nr, [&](std::size_t k) {
        const std::size_t i = k / nr, j = k % nr;
        SystemParams p = base;
        p.g12 = g12_grid[i];
        p.gamma2 = gamma2_grid[j];
        const auto s = steady_single(p, q);
        m.p_se[i][j] = s.p_se;
        m.p_em2[i][j] = s.p_em2;
        m.gap[i][j] = s.p_se - s.p_em2;
    });
    for (std::size_t i = 0; i < ng; ++i) {
        const auto it = std::max_element(m.p_em2[i].begin(), m.p_em2[i].end());
        m.optimal_gamma2.push_back(gamma2_grid[static_cast<std::size_t>(it - m.p_em2[i].begin())]);
    }
    return m;
}

} // namespace cqed
