#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cqed/quadrature.hpp"

using namespace cqed;

namespace {
const cplx I(0.0, 1.0);
}

TEST_CASE("unit Lorentzian") {
    for (double g : {0.01, 1.0, 30.0}) {
        QuadratureSpec s;
        s.center = 0.7;
        s.features = {cplx(0.7, -g / 2.0)};
        const double v = integrate_frequency(
            [&](double x) { return g / (2.0 * std::numbers::pi) / ((x - 0.7) * (x - 0.7) + g * g / 4.0); }, s);
        CHECK(std::abs(v - 1.0) < 1e-6);
    }
}

TEST_CASE("finite-time density obeys Parseval") {
    // int |(e^{-ixt} - e^{-izt}) / (x - z)|^2 dx = 2 pi (1 - e^{-2at}) / (2a), z = -ia.
    const double a = 0.4;
    const cplx z(0.0, -a);
    for (double t : {0.5, 4.0, 20.0}) {
        QuadratureSpec s;
        s.max_time = t;
        s.features = {z};
        const double v = integrate_frequency(
            [&](double x) { return std::norm((std::exp(-I * x * t) - std::exp(-I * z * t)) / (x - z)); }, s);
        const double expect = 2.0 * std::numbers::pi * (1.0 - std::exp(-2.0 * a * t)) / (2.0 * a);
        CHECK(std::abs(v - expect) < 1e-5 * expect);
    }
}

TEST_CASE("serial and parallel panel sums agree") {
    QuadratureSpec s;
    s.features = {cplx(1.0, -0.5), cplx(-2.0, -0.05)};
    const auto panels = make_panels(s, auto_half_width(s), 2);
    const Integrand1D f = [](double x) { return 1.0 / ((x - 1.0) * (x - 1.0) + 0.25) + std::cos(x) / (1.0 + x * x); };
    const double a = panel_sum(f, panels, Reduction::serial);
    const double b = panel_sum(f, panels, Reduction::parallel);
    CHECK(std::abs(a - b) < 1e-13 * std::abs(a));
    const auto r1 = integrate_frequency_ex(f, s, Reduction::serial);
    const auto r2 = integrate_frequency_ex(f, s, Reduction::parallel);
    CHECK(std::abs(r1.value - r2.value) < 1e-12 * std::abs(r1.value));
}

TEST_CASE("nested Lorentzians") {
    QuadratureSpec outer, inner;
    outer.features = {cplx(0.0, -0.5)};
    inner.features = {cplx(1.0, -0.1)};
    const double v = integrate_frequency_2d(
        [](double x, double y) {
            const double lx = 0.5 / std::numbers::pi / (x * x + 0.25);
            const double ly = 0.1 / std::numbers::pi / ((y - 1.0) * (y - 1.0) + 0.01);
            return lx * ly;
        },
        outer, inner);
    CHECK(std::abs(v - 1.0) < 1e-5);
}
