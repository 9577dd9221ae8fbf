// spectra.hpp - steady-state output spectra of the cavity-coupled qubit pair.
//
// Spectra are sampled on a detuning grid d2 = omega2 - omega02 and normalized to
// unit area over that grid with the trapezoid rule.

#pragma once

#include <string>
#include <vector>

#include "cqed/model.hpp"

namespace cqed {

enum class SpectrumKind { exchange_emission, raman, input_pulse };

const char* spectrum_kind_name(SpectrumKind k);

struct SpectrumTrace {
    std::vector<double> grid;
    std::vector<double> values;
    double normalization{1.0};   // area of the unnormalized curve over the grid
    SpectrumKind kind{SpectrumKind::exchange_emission};
    SystemParams params;
};

struct PulseSpec {
    double excitation_detuning{0.0};   // omega1 - omega01
    double duration{1.0};              // T_pulse
    double arrival_time{0.0};          // tau; drops out of every |psi|^2

    double linewidth() const;          // 2 sqrt(3) / T_pulse

    bool operator==(const PulseSpec&) const = default;
};

// |psi(x)|^2 for offset x from the pulse center.
double pulse_density(const PulseSpec& ps, double x);

// 4001 points on [-10, 10]; when kappa < 0.1 the band within 10 kappa of the
// cavity detuning is sampled 20 times denser.
std::vector<double> default_spectrum_grid(const SystemParams& p);

double trapezoid(const std::vector<double>& x, const std::vector<double>& y);

// Steady-state P_emx2 at detuning d2, unnormalized.
double emx2_density(const SystemParams& p, double d2);

SpectrumTrace exchange_emission_spectrum(const SystemParams& p, const std::vector<double>& grid);

SpectrumTrace input_pulse_spectrum(const PulseSpec& ps, const std::vector<double>& grid);

// |psi(d2 - d1)|^2 * P_emx2(d2), renormalized.
SpectrumTrace raman_spectrum(const SystemParams& p, const PulseSpec& ps, const std::vector<double>& grid);

// The printed closed form g12^2 G1 G2 |(w2 + i k/2 - wc) psi / prod(w2 - w01 - w02 - w_i)|^2,
// renormalized. Holds for g2 = 0.
SpectrumTrace raman_spectrum_closed(const SystemParams& p, const PulseSpec& ps, const std::vector<double>& grid);

struct Peak {
    double location{};
    double height{};
    double prominence{};
    double fwhm{};
    double asymmetry{};   // |left half width - right half width| / fwhm
    std::size_t index{};
};

// Local maxima whose prominence exceeds rel_prominence times the global maximum.
// Widths are measured at half prominence. Throws GridTooCoarse when a reported
// peak spans fewer than 7 samples.
std::vector<Peak> peak_report(const SpectrumTrace& s, double rel_prominence = 0.01);

} // namespace cqed
