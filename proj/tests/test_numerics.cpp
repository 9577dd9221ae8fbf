#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "cqed/errors.hpp"
#include "cqed/numerics.hpp"

using namespace cqed;

namespace {

const cplx I(0.0, 1.0);

// f[z_0..z_n] of q(x) e^{-ixt} by the trapezoid rule on a circle around the nodes.
cplx contour_dd(const std::vector<cplx>& z, const std::vector<cplx>& q, double t) {
    cplx c = 0.0;
    double r = 0.0;
    for (auto x : z) c += x / static_cast<double>(z.size());
    for (auto x : z) r = std::max(r, std::abs(x - c));
    r = r + 1.0;
    const int n = 4096;
    cplx sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const cplx u = std::exp(I * (2.0 * std::numbers::pi * k / n));
        const cplx x = c + r * u;
        cplx den = 1.0;
        for (auto zj : z) den *= x - zj;
        cplx qx = 0.0;
        for (std::size_t m = q.size(); m-- > 0;) qx = qx * x + q[m];
        sum += qx * std::exp(-I * x * t) / den * (r * u);
    }
    return sum / static_cast<double>(n);
}

} // namespace

TEST_CASE("cubic roots recover the roots they were built from") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int k = 0; k < 200; ++k) {
        const cplx a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng));
        const cplx lead(1.0 + 0.1 * u(rng), 0.2);
        const auto r = solve_cubic(lead, -lead * (a + b + c), lead * (a * b + b * c + a * c), -lead * a * b * c);
        CHECK(r.residual < 1e-10 * std::max(1.0, std::abs(lead * a * b * c)));
        for (auto z : {a, b, c}) {
            double best = 1e300;
            for (auto x : r.roots()) best = std::min(best, std::abs(x - z));
            CHECK(best < 1e-7);
        }
    }
    CHECK_THROWS_AS(solve_cubic(0.0, 1.0, 1.0, 1.0), DegenerateLeadingCoefficient);
}

TEST_CASE("triple root") {
    const auto r = solve_cubic(1.0, -3.0, 3.0, -1.0);
    for (auto x : r.roots()) CHECK(std::abs(x - 1.0) < 1e-4);
    CHECK(r.residual < 1e-10);
}

TEST_CASE("divided differences agree with a contour integral") {
    const std::vector<cplx> z{cplx(0.5, -0.3), cplx(-1.0, -1.2), cplx(2.0, -0.1)};
    const std::vector<cplx> q{cplx(0.3, 0.1), 1.0};
    for (double t : {0.0, 0.7, 3.0}) {
        const auto a = exp_divided_difference(z, q, t);
        const auto b = contour_dd(z, q, t);
        CHECK(std::abs(a - b) < 1e-10);
    }
    const std::vector<cplx> two{cplx(0.2, -0.5), cplx(-0.4, -0.1)};
    const std::vector<cplx> one{1.0};
    const double t = 1.3;
    const cplx expect = (std::exp(-I * two[0] * t) - std::exp(-I * two[1] * t)) / (two[0] - two[1]);
    CHECK(std::abs(exp_divided_difference(two, one, t) - expect) < 1e-14);
}

TEST_CASE("confluent limit is continuous across the guard") {
    const std::vector<cplx> q{0.5, 1.0};
    const double t = 2.0;
    const cplx base(0.3, -0.6);
    const std::vector<cplx> exact{base, base, cplx(-1.0, -0.2)};
    const auto at = exp_divided_difference_confluent(exact, q, t);
    for (double eps : {1e-3, 1e-5, 2 * kDegenerateTol, 0.5 * kDegenerateTol, 1e-12}) {
        const std::vector<cplx> z{base, base + eps, cplx(-1.0, -0.2)};
        CHECK(std::abs(exp_divided_difference(z, q, t) - at) < 1e-6 + 10.0 * eps);
    }
    // Straddling the threshold changes the value by far less than 1e-6.
    const std::vector<cplx> lo{base, base + 0.99 * kDegenerateTol, cplx(-1.0, -0.2)};
    const std::vector<cplx> hi{base, base + 1.01 * kDegenerateTol, cplx(-1.0, -0.2)};
    CHECK(std::abs(exp_divided_difference(lo, q, t) - exp_divided_difference(hi, q, t)) < 1e-6);
    // Derivative form: f[z, z] = d/dz (e^{-izt}).
    const std::vector<cplx> dbl{base, base};
    const std::vector<cplx> unit{1.0};
    CHECK(std::abs(exp_divided_difference(dbl, unit, t) - (-I * t) * std::exp(-I * base * t)) < 1e-12);
}

TEST_CASE("degenerate pole guard") {
    CHECK(degenerate_pole_guard({cplx(1.0, 0.0), cplx(1.0, 1e-10), PairVariant::single_excitation}) ==
          PoleStatus::merged);
    CHECK(degenerate_pole_guard({cplx(1.0, 0.0), cplx(0.0, 0.0), PairVariant::single_excitation}) ==
          PoleStatus::distinct);
    CHECK(min_node_gap(std::vector<cplx>{0.0, 3.0, cplx(0.0, 0.5)}) == doctest::Approx(0.5));
}
