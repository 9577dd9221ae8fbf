// two_qubit_double.hpp - both qubits initially excited.
//
// Two-photon amplitudes are ordered: the first argument is the frequency of the
// photon emitted first. Summed over the four orderings they exhaust the norm.

#pragma once

#include <string>
#include <vector>

#include "cqed/model.hpp"
#include "cqed/quadrature.hpp"
#include "cqed/traces.hpp"

namespace cqed {

double p_surv_ee(const SystemParams& p, double t);

// One-photon sector, frequency resolved at absolute photon frequency.
double p_em2_resolved_ee(const SystemParams& p, double t, double omega2);
double p_emx1_resolved_ee(const SystemParams& p, double t, double omega1);

double p_em2_total_ee(const SystemParams& p, double t, const QuadOptions& q = {});
double p_emx1_total_ee(const SystemParams& p, double t, const QuadOptions& q = {});

// Survival of qubit 1 in its excited state: P_surv + P_em2 + P_emx1.
double p_total_qubit1(const SystemParams& p, double t, const QuadOptions& q = {});

enum class TwoPhoton { em11, em22, em12, em21 };

const char* two_photon_name(TwoPhoton c);

// Ordered two-photon density. first/second are absolute photon frequencies.
// t = kSteady gives the t -> infinity density.
double two_photon_density(const SystemParams& p, TwoPhoton c, double t, double first, double second);

// Same-qubit kernel e[T, mu+, mu-, -i Gamma] shared by em11 and em22.
cplx same_qubit_kernel(const SystemParams& p, double t, double first, double t_sum);

struct TwoPhotonChannelResult {
    double p_em11{};
    double p_em22{};
    double p_em12{};
    double p_em21{};
    double p_total12{};
    std::string dominant;   // "em11", "em22" or "total12"
    SystemParams params;
    double t{};             // kSteady for the steady state
    double error{};         // summed quadrature error estimates
};

// Steady-state channel probability from the factorized kernel.
double steady_separable(const SystemParams& p, TwoPhoton c, const QuadOptions& q, double* error = nullptr);

// rate * int_0^t of the one-photon node feeding the channel, at every time of the
// grid. Exact for flat continua and much cheaper than the double frequency integral.
std::vector<double> two_photon_channel_trace(const SystemParams& p, TwoPhoton c, const std::vector<double>& times,
                                             const QuadOptions& q = {1e-6, 4'000'000});

struct TwoPhotonTrace {
    std::vector<double> time_grid;
    std::vector<double> p_em11, p_em22, p_em12, p_em21, p_total12;
    SystemParams params;
};

// All four channels on one time grid, sharing the time nodes.
TwoPhotonTrace two_photon_trace(const SystemParams& p, const std::vector<double>& times,
                                const QuadOptions& q = {1e-6, 4'000'000});

// force_2d selects the double frequency integral at any t.
double p_two_photon_channel(const SystemParams& p, TwoPhoton c, double t, const QuadOptions& q,
                            double* error = nullptr);

// t = kSteady evaluates the steady state.
TwoPhotonChannelResult p_two_photon(const SystemParams& p, double t, const QuadOptions& q = {1e-4, 40'000'000});

double steady_time_double(const SystemParams& p);

struct DominanceMap {
    std::vector<double> gamma2_grid;
    std::vector<double> g12_grid;
    std::vector<std::vector<TwoPhotonChannelResult>> cells;   // [g12][gamma2]
};

DominanceMap dominance_map(const SystemParams& base, const std::vector<double>& gamma2_grid,
                           const std::vector<double>& g12_grid, const QuadOptions& q = {1e-4, 40'000'000});

} // namespace cqed
