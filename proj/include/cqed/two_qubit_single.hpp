// two_qubit_single.hpp - qubit 1 excited, qubit 2 in its ground state.

#pragma once

#include <vector>

#include "cqed/model.hpp"
#include "cqed/quadrature.hpp"
#include "cqed/traces.hpp"

namespace cqed {

// Frequency-resolved emission through qubit 1 at absolute frequency omega1.
// t = kSteady gives the t -> infinity density.
double p_se_resolved(const SystemParams& p, double t, double omega1);

// Frequency-resolved exchange-emission through qubit 2 at absolute frequency omega_r.
double p_em2_resolved(const SystemParams& p, double t, double omega_r);

double p_surv(const SystemParams& p, double t);
double p_exchg(const SystemParams& p, double t);

// Frequency-integrated channels.
double p_se_total(const SystemParams& p, double t, const QuadOptions& q = {});
double p_em2_total(const SystemParams& p, double t, const QuadOptions& q = {});

// Quadrature spec shaped by the dressed poles.
QuadratureSpec single_spec(const SystemParams& p, double t, const QuadOptions& q);

// t_inf = 40 / (smallest nonzero decay rate among the dressed poles).
double steady_time(const SystemParams& p);

struct SteadyState {
    double p_se{};
    double p_em2{};
    double residual{};   // P_surv + P_exchg at t_inf
};

// Steady-state emission split. Throws NonConvergent when residual >= 1e-6.
SteadyState steady_single(const SystemParams& p, const QuadOptions& q = {});

struct GapMap {
    std::vector<double> gamma2_grid;
    std::vector<double> g12_grid;
    // Row index follows g12, column index follows gamma2.
    std::vector<std::vector<double>> gap;
    std::vector<std::vector<double>> p_se;
    std::vector<std::vector<double>> p_em2;
    std::vector<double> optimal_gamma2;   // per g12, argmax of p_em2 over the gamma2 grid
};

GapMap gap_map(const SystemParams& base, const std::vector<double>& gamma2_grid,
               const std::vector<double>& g12_grid, const QuadOptions& q = {});

} // namespace cqed
