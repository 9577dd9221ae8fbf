#include "cqed/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cqed/errors.hpp"
#include "cqed/parallel.hpp"
#include "cqed/tavis_cummings.hpp"
#include "cqed/traces.hpp"

namespace cqed {

namespace {

const cplx I(0.0, 1.0);

void normalize(SpectrumTrace& s) {
    s.normalization = trapezoid(s.grid, s.values);
    if (s.normalization > 0.0)
        for (double& v : s.values) v /= s.normalization;
}

} // namespace

const char* spectrum_kind_name(SpectrumKind k) {
    switch (k) {
    case SpectrumKind::exchange_emission: return "exchange_emission";
    case SpectrumKind::raman: return "raman";
    case SpectrumKind::input_pulse: return "input_pulse";
    }
    return "?";
}

double PulseSpec::linewidth() const { return 2.0 * std::sqrt(3.0) / duration; }

double pulse_density(const PulseSpec& ps, double x) {
    const double dw = ps.linewidth();
    // The arrival phase multiplies psi and cancels in the modulus.
    return std::sqrt(2.0 / (std::numbers::pi * dw * dw)) * std::exp(-2.0 * x * x / (dw * dw));
}

std::vector<double> default_spectrum_grid(const SystemParams& p) {
    auto grid = linspace(-10.0, 10.0, 4001);
    if (p.kappa < 0.1) {
        const double dc = p.omega_c - p.omega01;
        const double lo = std::max(-10.0, dc - 10.0 * p.kappa), hi = std::min(10.0, dc + 10.0 * p.kappa);
        if (hi > lo) {
            const double h = 20.0 / 4000.0 / 20.0;
            const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / h)) + 1;
            const auto fine = linspace(lo, hi, n);
            grid.insert(grid.end(), fine.begin(), fine.end());
            std::sort(grid.begin(), grid.end());
            grid.erase(std::unique(grid.begin(), grid.end(),
                                   [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                       grid.end());
        }
    }
    return grid;
}

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) s += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
    return s;
}

double emx2_density(const SystemParams& p, double d2) {
    return tcm_resolved(tcm_poles(p), p, TcmChannel::emx2, kSteady, d2 + p.omega02);
}

SpectrumTrace exchange_emission_spectrum(const SystemParams& p, const std::vector<double>& grid) {
    SpectrumTrace s;
    s.kind = SpectrumKind::exchange_emission;
    s.params = p;
    s.grid = grid;
    s.values.resize(grid.size());
    const auto tp = tcm_poles(p);
    parallel_for(grid.size(), [&](std::size_t i) {
        s.values[i] = tcm_resolved(tp, p, TcmChannel::emx2, kSteady, grid[i] + p.omega02);
    });
    normalize(s);
    return s;
}

SpectrumTrace input_pulse_spectrum(const PulseSpec& ps, const std::vector<double>& grid) {
    if (!(ps.duration > 0.0)) throw ConfigInvalid("pulse duration must be positive");
    SpectrumTrace s;
    s.kind = SpectrumKind::input_pulse;
    s.grid = grid;
    s.values.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) s.values[i] = pulse_density(ps, grid[i] - ps.excitation_detuning);
    normalize(s);
    return s;
}

SpectrumTrace raman_spectrum(const SystemParams& p, const PulseSpec& ps, const std::vector<double>& grid) {
    if (!(ps.duration > 0.0)) throw ConfigInvalid("pulse duration must be positive");
    SpectrumTrace s;
    s.kind = SpectrumKind::raman;
    s.params = p;
    s.grid = grid;
    s.values.resize(grid.size());
    const auto tp = tcm_poles(p);
    parallel_for(grid.size(), [&](std::size_t i) {
        const double em = tcm_resolved(tp, p, TcmChannel::emx2, kSteady, grid[i] + p.omega02);
        s.values[i] = pulse_density(ps, grid[i] - ps.excitation_detuning) * em;
    });
    normalize(s);
    return s;
}

SpectrumTrace raman_spectrum_closed(const SystemParams& p, const PulseSpec& ps, const std::vector<double>& grid) {
    if (!(ps.duration > 0.0)) throw ConfigInvalid("pulse duration must be positive");
    SpectrumTrace s;
    s.kind = SpectrumKind::raman;
    s.params = p;
    s.grid = grid;
    s.values.resize(grid.size());
    const auto r = tcm_poles(p).poles();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double w2 = grid[i] + p.omega02;
        const double x = w2 - p.omega01 - p.omega02;
        const cplx den = (x - r[0]) * (x - r[1]) * (x - r[2]);
        const double psi2 = pulse_density(ps, grid[i] - ps.excitation_detuning);
        s.values[i] = p.g12 * p.g12 * p.gamma1 * p.gamma2 * psi2 * std::norm((w2 + I * p.kappa / 2.0 - p.omega_c) / den);
    }
    normalize(s);
    return s;
}

std::vector<Peak> peak_report(const SpectrumTrace& s, double rel_prominence) {
    const auto& x = s.grid;
    const auto& y = s.values;
    const std::size_t n = y.size();
    std::vector<Peak> out;
    if (n < 3) return out;
    const double top = *std::max_element(y.begin(), y.end());
    if (!(top > 0.0)) return out;

    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!(y[i] > y[i - 1] && y[i] >= y[i + 1])) continue;
        // Prominence: descend on each side until a higher sample or the edge.
        double lmin = y[i], rmin = y[i];
        std::size_t j = i;
        while (j > 0 && y[j - 1] <= y[i]) lmin = std::min(lmin, y[--j]);
        j = i;
        while (j + 1 < n && y[j + 1] <= y[i]) rmin = std::min(rmin, y[++j]);
        const double prom = y[i] - std::max(lmin, rmin);
        if (prom < rel_prominence * top) continue;

        const double level = y[i] - 0.5 * prom;
        std::size_t a = i, b = i;
        while (a > 0 && y[a] > level) --a;
        while (b + 1 < n && y[b] > level) ++b;
        auto cross = [&](std::size_t lo, std::size_t hi) {
            if (y[hi] == y[lo]) return x[lo];
            return x[lo] + (level - y[lo]) * (x[hi] - x[lo]) / (y[hi] - y[lo]);
        };
        const double xl = y[a] <= level ? cross(a, a + 1) : x[a];
        const double xr = y[b] <= level ? cross(b - 1, b) : x[b];
        if (b - a + 1 < 7) throw GridTooCoarse("peak near " + std::to_string(x[i]) + " spans fewer than 7 samples");

        Peak pk;
        pk.index = i;
        pk.location = x[i];
        pk.height = y[i];
        pk.prominence = prom;
        pk.fwhm = xr - xl;
        const double left = x[i] - xl, right = xr - x[i];
        pk.asymmetry = pk.fwhm > 0.0 ? std::abs(left - right) / pk.fwhm : 0.0;
        out.push_back(pk);
    }
    return out;
}

} // namespace cqed
