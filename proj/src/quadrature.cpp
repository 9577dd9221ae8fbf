#include "cqed/quadrature.hpp"

#include <algorithm>
#include <array>
#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>

#include "cqed/errors.hpp"
#include "cqed/parallel.hpp"

namespace cqed {

namespace {

using GL = boost::math::quadrature::gauss<double, 16>;
constexpr std::size_t kNodesPerPanel = 16;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double panel_value(const Integrand1D& f, const Panel& p) {
    const auto& x = GL::abscissa();
    const auto& w = GL::weights();
    const double h = 0.5 * (p.b - p.a);
    const double m = 0.5 * (p.a + p.b);
    double s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) s += w[k] * (f(m - h * x[k]) + f(m + h * x[k]));
    return s * h;
}

double feature_floor(const QuadratureSpec& spec) {
    return std::isfinite(spec.max_time) && spec.max_time > 0.0 ? 1.0 / spec.max_time : 1e-6;
}

// Integral beyond the window edge at center + sign * W.
double tail(const Integrand1D& f, const QuadratureSpec& spec, double W, double sign) {
    const double c = spec.center;
    if (std::isfinite(spec.max_time)) {
        // Far out f x^2 ~ A + C/x + D/x^2 + B1 cos(k x) + B2 sin(k x) in the offset x from the
        // center. Fit it on four one-period clusters spread over [W/2, W], then
        // integrate the model from W outward.
        const double k = spec.max_time;
        const double period = kTwoPi / k;
        constexpr int per = 16;
        Eigen::Matrix<double, 4 * per, 5> m;
        Eigen::Matrix<double, 4 * per, 1> y;
        int row = 0;
        for (double end : {0.5 * W + period, (2.0 / 3.0) * W, (5.0 / 6.0) * W, W}) {
            for (int j = 0; j < per; ++j, ++row) {
                const double d = end - period * (j + 0.5) / per;
                const double x = c + sign * d;
                m.row(row) << 1.0, 1.0 / d, 1.0 / (d * d), std::cos(k * x), std::sin(k * x);
                y(row) = f(x) * d * d;
            }
        }
        const Eigen::Matrix<double, 5, 1> b = m.colPivHouseholderQr().solve(y);
        // int_W^inf e^{i s k d} / d^2 dd, asymptotic in 1 / (k W).
        const cplx ik(0.0, sign * k);
        const cplx series = 1.0 / (W * W) + 2.0 / (ik * W * W * W) + 6.0 / (ik * ik * W * W * W * W);
        const cplx osc = -std::exp(ik * W) / ik * series;
        // B1 cos(k x) + B2 sin(k x) = Re[(B1 - i B2) e^{i k c} e^{i s k d}]
        const cplx amp = cplx(b(3), -b(4)) * std::exp(cplx(0.0, k * c));
        return b(0) / W + b(1) / (2.0 * W * W) + b(2) / (3.0 * W * W * W) + (amp * osc).real();
    }
    // Non-oscillatory: substitute x = c + sign / s on (0, 1/W].
    const Integrand1D g = [&](double s) {
        const double x = 1.0 / s;
        return f(c + sign * x) * x * x;
    };
    std::vector<Panel> panels{{0.0, 0.5 / W}, {0.5 / W, 1.0 / W}};
    return panel_sum(g, panels, Reduction::serial);
}

} // namespace

double auto_half_width(const QuadratureSpec& spec) {
    if (spec.half_width > 0.0) return spec.half_width;
    double W = 50.0;
    for (const auto& p : spec.features)
        W = std::max(W, std::abs(p.real() - spec.center) + 50.0 * std::max(std::abs(p.imag()), 1.0));
    if (std::isfinite(spec.max_time) && spec.max_time > 0.0) W = std::max(W, 8.0 * kTwoPi / spec.max_time);
    return W;
}

std::vector<Panel> make_panels(const QuadratureSpec& spec, double W, int level) {
    const double scale = std::ldexp(1.0, -level);
    const double floor = feature_floor(spec);
    const double h_osc = std::isfinite(spec.max_time) && spec.max_time > 0.0 ? kTwoPi / spec.max_time
                                                                             : std::numeric_limits<double>::infinity();
    const double lo = spec.center - W;
    const double hi = spec.center + W;
    std::vector<Panel> panels;
    double x = lo;
    while (x < hi) {
        double s = W / 4.0;
        s = std::min(s, h_osc);
        for (const auto& p : spec.features) {
            const double w = std::max(std::abs(p.imag()), floor);
            const double d = std::abs(x - p.real());
            s = std::min(s, 0.5 * std::max(d, w));
        }
        s *= scale;
        double next = x + s;
        if (next > hi || hi - next < 1e-3 * s) next = hi;
        panels.push_back({x, next});
        x = next;
    }
    return panels;
}

double panel_sum(const Integrand1D& f, const std::vector<Panel>& panels, Reduction mode) {
    auto term = [&](std::size_t i) { return panel_value(f, panels[i]); };
    return mode == Reduction::parallel ? blocked_sum(panels.size(), term) : serial_sum(panels.size(), term);
}

double window_integral(const Integrand1D& f, const QuadratureSpec& spec, double W, int level, Reduction mode,
                       std::size_t* nodes) {
    const auto panels = make_panels(spec, W, level);
    if (nodes) *nodes += panels.size() * kNodesPerPanel + 2 * 64;
    return panel_sum(f, panels, mode) + tail(f, spec, W, 1.0) + tail(f, spec, W, -1.0);
}

QuadResult integrate_frequency_ex(const Integrand1D& f, const QuadratureSpec& spec, Reduction mode) {
    if (spec.max_time == 0.0) return {0.0, 0.0, 0, 0, 0.0};
    double W = auto_half_width(spec);
    int level = 0;
    std::size_t nodes = 0;
    for (;;) {
        const double a = window_integral(f, spec, W, level, mode, &nodes);
        const double bh = window_integral(f, spec, W, level + 1, mode, &nodes);
        const double bw = window_integral(f, spec, 2.0 * W, level, mode, &nodes);
        const double eh = std::abs(bh - a);
        const double ew = std::abs(bw - a);
        const double best = bh + (bw - a);
        const double tol = std::max(spec.rel_tol * std::abs(best), spec.abs_tol);
        if (eh + ew <= tol) return {best, eh + ew, nodes, level + 1, W};
        if (nodes > spec.node_budget)
            throw NonConvergent("frequency quadrature did not converge within the node budget");
        if (eh > 0.5 * tol) ++level;
        if (ew > 0.5 * tol) W *= 2.0;
    }
}

double integrate_frequency(const Integrand1D& f, const QuadratureSpec& spec) {
    return integrate_frequency_ex(f, spec).value;
}

QuadResult integrate_frequency_2d_ex(const Integrand2D& f, const QuadratureSpec& outer,
                                     const std::function<QuadratureSpec(double)>& inner) {
    if (outer.max_time == 0.0) return {0.0, 0.0, 0, 0, 0.0};
    // Calibrate the inner window and level on a few outer probe points.
    const double Wo = auto_half_width(outer);
    int level = 0;
    double Wi = 0.0;
    double inner_err = 0.0;
    std::size_t nodes = 0;
    for (double frac : {0.0, -0.05, 0.05, 0.2}) {
        const double x = outer.center + frac * Wo;
        const auto spec = inner(x);
        const auto r = integrate_frequency_ex([&](double y) { return f(x, y); }, spec, Reduction::serial);
        level = std::max(level, r.level);
        Wi = std::max(Wi, r.half_width);
        inner_err = std::max(inner_err, r.error);
        nodes += r.nodes;
    }
    const Integrand1D g = [&](double x) {
        const auto spec = inner(x);
        return window_integral([&](double y) { return f(x, y); }, spec, Wi, level, Reduction::serial);
    };
    auto r = integrate_frequency_ex(g, outer, Reduction::parallel);
    r.error += inner_err;
    r.nodes += nodes;
    return r;
}

double integrate_frequency_2d(const Integrand2D& f, const QuadratureSpec& outer, const QuadratureSpec& inner) {
    return integrate_frequency_2d_ex(f, outer, [&](double) { return inner; }).value;
}

} // namespace cqed
