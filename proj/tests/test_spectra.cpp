#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cqed/errors.hpp"
#include "cqed/spectra.hpp"
#include "cqed/traces.hpp"

using namespace cqed;

namespace {

SystemParams fig9a(double g12) {
    SystemParams p;
    p.omega_c = 2.0;
    p.kappa = 0.01;
    p.g1 = 1.0;
    p.g12 = g12;
    p.gamma2 = 1.0;
    return p;
}

double fwhm_on_grid(const std::vector<double>& x, const std::vector<double>& y) {
    const auto top = std::max_element(y.begin(), y.end());
    const double half = *top / 2.0;
    std::size_t i = static_cast<std::size_t>(top - y.begin()), l = i, r = i;
    while (l > 0 && y[l] > half) --l;
    while (r + 1 < y.size() && y[r] > half) ++r;
    const double xl = x[l] + (half - y[l]) * (x[l + 1] - x[l]) / (y[l + 1] - y[l]);
    const double xr = x[r - 1] + (half - y[r - 1]) * (x[r] - x[r - 1]) / (y[r] - y[r - 1]);
    return xr - xl;
}

} // namespace

TEST_CASE("spectra carry unit area") {
    const auto p = fig9a(1.0);
    const auto grid = default_spectrum_grid(p);
    const auto s = exchange_emission_spectrum(p, grid);
    CHECK(trapezoid(s.grid, s.values) == doctest::Approx(1.0).epsilon(1e-12));
    PulseSpec ps;
    ps.excitation_detuning = 2.0;
    ps.duration = 2.0 * std::sqrt(3.0);
    const auto in = input_pulse_spectrum(ps, grid);
    CHECK(trapezoid(in.grid, in.values) == doctest::Approx(1.0).epsilon(1e-6));
    const auto top = std::max_element(in.values.begin(), in.values.end()) - in.values.begin();
    CHECK(std::abs(in.grid[static_cast<std::size_t>(top)] - 2.0) < 0.01);
}

TEST_CASE("closed Raman form equals the product") {
    auto p = fig9a(5.0);
    PulseSpec ps;
    ps.excitation_detuning = 2.0;
    ps.duration = 2.0 * std::sqrt(3.0);
    const auto grid = default_spectrum_grid(p);
    const auto a = raman_spectrum(p, ps, grid);
    const auto b = raman_spectrum_closed(p, ps, grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        worst = std::max(worst, std::abs(a.values[i] - b.values[i]) / std::max(a.values[i], 1e-300));
    CHECK(worst < 1e-9);
    // The explicit product before normalization.
    for (std::size_t i = 0; i < grid.size(); i += 97) {
        const double prod = pulse_density(ps, grid[i] - 2.0) * emx2_density(p, grid[i]);
        CHECK(a.values[i] * a.normalization == doctest::Approx(prod).epsilon(1e-12));
    }
}

TEST_CASE("arrival time drops out") {
    const auto p = fig9a(5.0);
    PulseSpec ps;
    ps.excitation_detuning = 4.0;
    ps.duration = 2.0 * std::sqrt(3.0);
    const auto grid = default_spectrum_grid(p);
    const auto a = raman_spectrum(p, ps, grid);
    ps.arrival_time = 37.5;
    const auto b = raman_spectrum(p, ps, grid);
    CHECK(a.values == b.values);
}

TEST_CASE("exchange spectrum peaks") {
    const auto p1 = fig9a(1.0);
    CHECK(peak_report(exchange_emission_spectrum(p1, default_spectrum_grid(p1))).size() == 3);

    const auto p5 = fig9a(5.0);
    const auto peaks = peak_report(exchange_emission_spectrum(p5, default_spectrum_grid(p5)));
    bool lo = false, hi = false, cav = false;
    for (const auto& pk : peaks) {
        if (std::abs(pk.location + 5.0) < 0.5) lo = true;
        if (std::abs(pk.location - 5.0) < 0.5) hi = true;
        if (std::abs(pk.location - 2.0) < 0.1) {
            cav = true;
            CHECK(pk.fwhm < 10.0 * p5.kappa);
            CHECK(pk.asymmetry > 0.2);
        }
    }
    CHECK(lo);
    CHECK(hi);
    CHECK(cav);

    // A fast qubit 2 loses its own peak.
    auto p4 = p1;
    p4.gamma2 = 4.0;
    CHECK(peak_report(exchange_emission_spectrum(p4, default_spectrum_grid(p4))).size() < 3);
}

TEST_CASE("far-detuned Raman follows the Gaussian-Lorentzian product") {
    auto p = fig9a(5.0);
    PulseSpec ps;
    ps.excitation_detuning = 4.0;
    ps.duration = 2.0 * std::sqrt(3.0);
    const auto grid = linspace(-10.0, 10.0, 20001);
    const auto s = raman_spectrum(p, ps, grid);
    // |psi|^2 = exp(-2 x^2 / dw^2) with dw = 1, times the upper dressed qubit line
    // at +g12 with half width (gamma1 + gamma2) / 4.
    const double sigma = 0.5;
    std::vector<double> ref(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        const double h = 0.5;
        ref[i] = std::exp(-(x - 4.0) * (x - 4.0) / (2.0 * sigma * sigma)) / ((x - 5.0) * (x - 5.0) + h * h);
    }
    const double w = fwhm_on_grid(grid, s.values), w_ref = fwhm_on_grid(grid, ref);
    CHECK(std::abs(w - w_ref) < 0.5 * w_ref);
    const auto top = std::max_element(s.values.begin(), s.values.end()) - s.values.begin();
    CHECK(std::abs(grid[static_cast<std::size_t>(top)] - 4.0) < 1.0);
}

TEST_CASE("peak report errors and edge cases") {
    SpectrumTrace s;
    s.grid = linspace(-1.0, 1.0, 21);
    s.values.assign(21, 1.0);
    CHECK(peak_report(s).empty());
    for (std::size_t i = 0; i < 21; ++i) s.values[i] = 1.0 / (s.grid[i] * s.grid[i] + 1e-4);
    CHECK_THROWS_AS(peak_report(s), GridTooCoarse);

    s.grid = linspace(-5.0, 5.0, 4001);
    s.values.resize(s.grid.size());
    for (std::size_t i = 0; i < s.grid.size(); ++i) s.values[i] = 1.0 / (s.grid[i] * s.grid[i] + 0.25);
    const auto pk = peak_report(s);
    REQUIRE(pk.size() == 1);
    CHECK(pk[0].asymmetry < 0.05);
    // Width at half prominence above the edge value.
    const double level = 0.5 * (4.0 + 1.0 / 25.25);
    CHECK(pk[0].fwhm == doctest::Approx(2.0 * std::sqrt(1.0 / level - 0.25)).epsilon(1e-4));

    PulseSpec bad;
    bad.duration = 0.0;
    CHECK_THROWS_AS(input_pulse_spectrum(bad, s.grid), ConfigInvalid);
}
