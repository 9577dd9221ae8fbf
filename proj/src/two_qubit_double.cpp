#include "cqed/two_qubit_double.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "cqed/errors.hpp"
#include "cqed/numerics.hpp"
#include "cqed/parallel.hpp"

#include <boost/math/quadrature/gauss.hpp>

namespace cqed {

namespace {

constexpr double kInvTwoPi = 0.5 / std::numbers::pi;
const cplx I(0.0, 1.0);

// mu_pm(omega) = omega + lambda_pm.
struct Sector {
    cplx lp, lm;
    double gamma;   // (gamma1 + gamma2) / 2
};

Sector sector(const SystemParams& p) {
    const auto d = dressed_pair_double(p, Channel::qubit1, 0.0);
    return {d.omega_plus, d.omega_minus, 0.5 * (p.gamma1 + p.gamma2)};
}

QuadratureSpec one_photon_spec(const SystemParams& p, double t, const QuadOptions& q) {
    const auto s = sector(p);
    QuadratureSpec spec;
    spec.center = 0.5 * (p.omega01 + p.omega02);
    spec.max_time = t;
    spec.rel_tol = q.rel_tol;
    spec.node_budget = q.node_budget;
    spec.features = {-s.lp - I * s.gamma, -s.lm - I * s.gamma};
    return spec;
}

} // namespace

double p_surv_ee(const SystemParams& p, double t) { return std::exp(-(p.gamma1 + p.gamma2) * t); }

double p_em2_resolved_ee(const SystemParams& p, double t, double omega2) {
    if (t == 0.0 || std::isinf(t)) return 0.0;
    const auto s = sector(p);
    const cplx k = omega2 - p.omega01 - I * p.gamma2 / 2.0;
    const std::array<cplx, 3> nodes{omega2 + s.lp, omega2 + s.lm, -I * s.gamma};
    const std::array<cplx, 2> q{-k, 1.0};
    return p.gamma2 * kInvTwoPi * std::norm(exp_divided_difference(nodes, q, t));
}

double p_emx1_resolved_ee(const SystemParams& p, double t, double omega1) {
    if (t == 0.0 || std::isinf(t) || p.g12 == 0.0) return 0.0;
    const auto s = sector(p);
    const std::array<cplx, 3> nodes{omega1 + s.lp, omega1 + s.lm, -I * s.gamma};
    const std::array<cplx, 1> q{1.0};
    return p.g12 * p.g12 * p.gamma1 * kInvTwoPi * std::norm(exp_divided_difference(nodes, q, t));
}

double p_em2_total_ee(const SystemParams& p, double t, const QuadOptions& q) {
    if (t == 0.0 || std::isinf(t) || p.gamma2 == 0.0) return 0.0;
    return integrate_frequency([&](double w) { return p_em2_resolved_ee(p, t, w); }, one_photon_spec(p, t, q));
}

double p_emx1_total_ee(const SystemParams& p, double t, const QuadOptions& q) {
    if (t == 0.0 || std::isinf(t) || p.g12 == 0.0) return 0.0;
    return integrate_frequency([&](double w) { return p_emx1_resolved_ee(p, t, w); }, one_photon_spec(p, t, q));
}

double p_total_qubit1(const SystemParams& p, double t, const QuadOptions& q) {
    return p_surv_ee(p, t) + p_em2_total_ee(p, t, q) + p_emx1_total_ee(p, t, q);
}

const char* two_photon_name(TwoPhoton c) {
    switch (c) {
    case TwoPhoton::em11: return "em11";
    case TwoPhoton::em22: return "em22";
    case TwoPhoton::em12: return "em12";
    case TwoPhoton::em21: return "em21";
    }
    return "?";
}

cplx same_qubit_kernel(const SystemParams& p, double t, double first, double t_sum) {
    const auto s = sector(p);
    const cplx mp = first + s.lp, mm = first + s.lm;
    if (std::isinf(t)) return 1.0 / ((t_sum - mp) * (t_sum - mm) * (t_sum + I * s.gamma));
    const std::array<cplx, 4> nodes{t_sum, mp, mm, -I * s.gamma};
    const std::array<cplx, 1> q{1.0};
    return exp_divided_difference(nodes, q, t);
}

namespace {

// Cross-qubit kernel f[mu+, mu-, -i Gamma, T] with f = (x - k) e^{-ixt}.
cplx cross_kernel(const Sector& s, double t, double first, double t_sum, cplx k) {
    const cplx mp = first + s.lp, mm = first + s.lm;
    if (std::isinf(t)) return (t_sum - k) / ((t_sum - mp) * (t_sum - mm) * (t_sum + I * s.gamma));
    const std::array<cplx, 4> nodes{mp, mm, -I * s.gamma, t_sum};
    const std::array<cplx, 2> q{-k, 1.0};
    return exp_divided_difference(nodes, q, t);
}

} // namespace

double steady_separable(const SystemParams& p, TwoPhoton c, const QuadOptions& q, double* error) {
    // With v = T - first the steady kernels factor into a v part and
    // 1/(T + i Gamma); the T integral of the latter is pi / Gamma.
    const auto s = sector(p);
    QuadratureSpec spec;
    spec.center = 0.5 * (s.lp.real() + s.lm.real());
    spec.max_time = kSteady;
    spec.rel_tol = q.rel_tol;
    spec.node_budget = q.node_budget;
    spec.features = {s.lp, s.lm};
    double pre = 0.0;
    cplx shift = 0.0;   // numerator v + shift for the cross channels
    bool cross = false;
    switch (c) {
    case TwoPhoton::em11: pre = std::pow(p.g12 * p.gamma1 * kInvTwoPi, 2); break;
    case TwoPhoton::em22: pre = std::pow(p.g12 * p.gamma2 * kInvTwoPi, 2); break;
    case TwoPhoton::em12:
        pre = p.gamma1 * p.gamma2 * kInvTwoPi * kInvTwoPi;
        shift = p.omega02 + I * p.gamma1 / 2.0;
        cross = true;
        break;
    case TwoPhoton::em21:
        pre = p.gamma1 * p.gamma2 * kInvTwoPi * kInvTwoPi;
        shift = p.omega01 + I * p.gamma2 / 2.0;
        cross = true;
        break;
    }
    const auto r = integrate_frequency_ex(
        [&](double v) {
            const cplx den = (v - s.lp) * (v - s.lm);
            return std::norm((cross ? v + shift : cplx(1.0)) / den);
        },
        spec);
    const double tpart = std::numbers::pi / s.gamma;
    if (error) *error = pre * tpart * r.error;
    return pre * tpart * r.value;
}

double two_photon_density(const SystemParams& p, TwoPhoton c, double t, double first, double second) {
    if (t == 0.0) return 0.0;
    const double T = first + second - p.omega01 - p.omega02;
    switch (c) {
    case TwoPhoton::em11: {
        const double pre = p.g12 * p.gamma1 * kInvTwoPi;
        return pre * pre * std::norm(same_qubit_kernel(p, t, first, T));
    }
    case TwoPhoton::em22: {
        const double pre = p.g12 * p.gamma2 * kInvTwoPi;
        return pre * pre * std::norm(same_qubit_kernel(p, t, first, T));
    }
    case TwoPhoton::em12: {
        const cplx k = first - p.omega02 - I * p.gamma1 / 2.0;
        return p.gamma1 * p.gamma2 * kInvTwoPi * kInvTwoPi * std::norm(cross_kernel(sector(p), t, first, T, k));
    }
    case TwoPhoton::em21: {
        const cplx k = first - p.omega01 - I * p.gamma2 / 2.0;
        return p.gamma1 * p.gamma2 * kInvTwoPi * kInvTwoPi * std::norm(cross_kernel(sector(p), t, first, T, k));
    }
    }
    return 0.0;
}

namespace {

// One-photon-sector node feeding each ordered two-photon channel, and the rate of
// the second emission. A flat continuum makes the second emission memoryless, so
// the channel probability is rate * int_0^t (node population) ds.
double feeder_rate(const SystemParams& p, TwoPhoton c) {
    return (c == TwoPhoton::em11 || c == TwoPhoton::em21) ? p.gamma1 : p.gamma2;
}

double feeder_density(const SystemParams& p, const Sector& s, TwoPhoton c, double t, double w) {
    const std::array<cplx, 3> nodes{w + s.lp, w + s.lm, -I * s.gamma};
    switch (c) {
    case TwoPhoton::em11:   // |e1 g2> + b1
    case TwoPhoton::em22: { // |g1 e2> + b2
        const double rate = c == TwoPhoton::em11 ? p.gamma1 : p.gamma2;
        const std::array<cplx, 1> q{1.0};
        return p.g12 * p.g12 * rate * kInvTwoPi * std::norm(exp_divided_difference(nodes, q, t));
    }
    case TwoPhoton::em12: { // |g1 e2> + b1
        const cplx k = w - p.omega02 - I * p.gamma1 / 2.0;
        const std::array<cplx, 2> q{-k, 1.0};
        return p.gamma1 * kInvTwoPi * std::norm(exp_divided_difference(nodes, q, t));
    }
    case TwoPhoton::em21: { // |e1 g2> + b2
        const cplx k = w - p.omega01 - I * p.gamma2 / 2.0;
        const std::array<cplx, 2> q{-k, 1.0};
        return p.gamma2 * kInvTwoPi * std::norm(exp_divided_difference(nodes, q, t));
    }
    }
    return 0.0;
}

double feeder_population(const SystemParams& p, TwoPhoton c, double t, const QuadOptions& q) {
    if (t == 0.0) return 0.0;
    const auto s = sector(p);
    return integrate_frequency([&](double w) { return feeder_density(p, s, c, t, w); }, one_photon_spec(p, t, q));
}

using TimeGL = boost::math::quadrature::gauss<double, 10>;

struct TimeNode {
    double s, w;
    std::size_t slot;
};

// Gauss nodes for int_0^{t_i} on panels no wider than h_max; each node is tagged
// with the first grid time whose cumulative integral it feeds.
std::vector<TimeNode> time_nodes(const std::vector<double>& times, double h_max) {
    std::vector<TimeNode> out;
    const auto& x = TimeGL::abscissa();
    const auto& wt = TimeGL::weights();
    double prev = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double span = times[i] - prev;
        if (span <= 0.0) continue;
        const auto n = static_cast<std::size_t>(std::ceil(span / h_max));
        const double h = span / static_cast<double>(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double c = prev + h * (static_cast<double>(k) + 0.5);
            for (std::size_t j = 0; j < x.size(); ++j) {
                out.push_back({c + 0.5 * h * x[j], 0.5 * h * wt[j], i});
                out.push_back({c - 0.5 * h * x[j], 0.5 * h * wt[j], i});
            }
        }
        prev = times[i];
    }
    return out;
}

double time_panel(const SystemParams& p) {
    const auto s = sector(p);
    const double w = std::max({1.0, std::abs(s.lp - s.lm), p.gamma1 + p.gamma2, std::abs(p.omega01 - p.omega02)});
    return 3.0 / w;
}

void check_times(const std::vector<double>& times) {
    for (double t : times)
        if (!(t >= 0.0) || std::isinf(t)) throw Error("two-photon trace needs finite non-negative times");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (times[i] < times[i - 1]) throw Error("two-photon time grid must not decrease");
}

} // namespace

std::vector<double> two_photon_channel_trace(const SystemParams& p, TwoPhoton c, const std::vector<double>& times,
                                             const QuadOptions& q) {
    check_times(times);
    const auto nodes = time_nodes(times, time_panel(p));
    std::vector<double> f(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t k) { f[k] = feeder_population(p, c, nodes[k].s, q); });
    std::vector<double> out(times.size(), 0.0);
    for (std::size_t k = 0; k < nodes.size(); ++k) out[nodes[k].slot] += nodes[k].w * f[k];
    const double rate = feeder_rate(p, c);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = rate * out[i] + (i ? out[i - 1] : 0.0);
    return out;
}

TwoPhotonTrace two_photon_trace(const SystemParams& p, const std::vector<double>& times, const QuadOptions& q) {
    check_times(times);
    const auto nodes = time_nodes(times, time_panel(p));
    // em22 shares the em11 feeder up to the factor gamma2 / gamma1.
    std::vector<std::array<double, 3>> f(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t k) {
        const double s = nodes[k].s;
        f[k] = {p.g12 == 0.0 ? 0.0 : feeder_population(p, TwoPhoton::em11, s, q) / p.gamma1,
                feeder_population(p, TwoPhoton::em12, s, q), feeder_population(p, TwoPhoton::em21, s, q)};
    });
    TwoPhotonTrace tr;
    tr.time_grid = times;
    tr.params = p;
    std::vector<std::array<double, 3>> acc(times.size(), {0.0, 0.0, 0.0});
    for (std::size_t k = 0; k < nodes.size(); ++k)
        for (int j = 0; j < 3; ++j) acc[nodes[k].slot][j] += nodes[k].w * f[k][j];
    std::array<double, 3> run{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < times.size(); ++i) {
        for (int j = 0; j < 3; ++j) run[j] += acc[i][j];
        tr.p_em11.push_back(p.gamma1 * p.gamma1 * run[0]);
        tr.p_em22.push_back(p.gamma2 * p.gamma2 * run[0]);
        tr.p_em12.push_back(p.gamma2 * run[1]);
        tr.p_em21.push_back(p.gamma1 * run[2]);
        tr.p_total12.push_back(tr.p_em12.back() + tr.p_em21.back());
    }
    return tr;
}

double p_two_photon_channel(const SystemParams& p, TwoPhoton c, double t, const QuadOptions& q, double* error) {
    if (error) *error = 0.0;
    if (t == 0.0) return 0.0;
    if ((c == TwoPhoton::em11 || c == TwoPhoton::em22) && p.g12 == 0.0) return 0.0;
    if (c == TwoPhoton::em22 && p.gamma2 == 0.0) return 0.0;
    if ((c == TwoPhoton::em12 || c == TwoPhoton::em21) && p.gamma2 == 0.0) return 0.0;

    const auto s = sector(p);
    const double ref = p.omega01 + p.omega02;
    const double w0 = 0.5 * ref;
    if (std::isinf(t) && !q.force_2d) return steady_separable(p, c, q, error);
    if (std::isfinite(t) && !q.force_2d) return two_photon_channel_trace(p, c, {t}, q)[0];

    // Outer variable: T. Inner variable: absolute frequency u of the first photon.
    QuadratureSpec outer;
    outer.center = 0.0;
    outer.max_time = t;
    outer.rel_tol = q.rel_tol;
    outer.node_budget = q.node_budget;
    const double split = std::abs((s.lp - s.lm).real());
    const double half = std::max(0.5 * s.gamma, 0.5);
    outer.features = {-I * s.gamma, cplx(split, -half), cplx(-split, -half), cplx(0.5 * split, -half),
                      cplx(-0.5 * split, -half)};

    auto inner = [&](double T) {
        QuadratureSpec in;
        in.center = w0 + 0.5 * T;
        in.max_time = t;
        in.rel_tol = 0.1 * q.rel_tol;
        in.node_budget = q.node_budget;
        in.features = {T - s.lp, T - s.lm};
        if (std::isfinite(t)) {
            in.features.push_back(-s.lp - I * s.gamma);
            in.features.push_back(-s.lm - I * s.gamma);
        }
        return in;
    };
    const Integrand2D f = [&](double T, double u) { return two_photon_density(p, c, t, u, T + ref - u); };
    const auto r = integrate_frequency_2d_ex(f, outer, inner);
    if (error) *error = r.error;
    return r.value;
}

double steady_time_double(const SystemParams& p) {
    const auto s = sector(p);
    const double rate = std::min({p.gamma1 + p.gamma2, -2.0 * s.lp.imag(), -2.0 * s.lm.imag()});
    return rate > 0.0 ? 40.0 / rate : kSteady;
}

TwoPhotonChannelResult p_two_photon(const SystemParams& p, double t, const QuadOptions& q) {
    TwoPhotonChannelResult r;
    r.params = p;
    r.t = t;
    if (std::isinf(t)) {
        // One-photon sector population left at t_inf bounds the truncation.
        const double tinf = steady_time_double(p);
        if (!std::isfinite(tinf) || p_surv_ee(p, tinf) + std::exp(-40.0) >= 1e-6)
            throw NonConvergent("double-excitation steady state not reached");
    }
    double e[4];
    r.p_em11 = p_two_photon_channel(p, TwoPhoton::em11, t, q, &e[0]);
    r.p_em22 = p_two_photon_channel(p, TwoPhoton::em22, t, q, &e[1]);
    r.p_em12 = p_two_photon_channel(p, TwoPhoton::em12, t, q, &e[2]);
    r.p_em21 = p_two_photon_channel(p, TwoPhoton::em21, t, q, &e[3]);
    r.error = e[0] + e[1] + e[2] + e[3];
    r.p_total12 = r.p_em12 + r.p_em21;
    r.dominant = "em11";
    double best = r.p_em11;
    if (r.p_em22 > best) {
        best = r.p_em22;
        r.dominant = "em22";
    }
    if (r.p_total12 > best) r.dominant = "total12";
    return r;
}

DominanceMap dominance_map(const SystemParams& base, const std::vector<double>& gamma2_grid,
                           const std::vector<double>& g12_grid, const QuadOptions& q) {
    DominanceMap m;
    m.gamma2_grid = gamma2_grid;
    m.g12_grid = g12_grid;
    const std::size_t ng = g12_grid.size(), nr = gamma2_grid.size();
    m.cells.assign(ng, std::vector<TwoPhotonChannelResult>(nr));
    parallel_for(ng * nr, [&](std::size_t k) {
        const std::size_t i = k / nr, j = k % nr;
        SystemParams p = base;
        p.g12 = g12_grid[i];
        p.gamma2 = gamma2_grid[j];
        m.cells[i][j] = p_two_photon(p, kSteady, q);
    });
    return m;
}

} // namespace cqed
