// tavis_cummings.hpp - two dipole-coupled qubits in a cavity, one excitation.

#pragma once

#include <array>
#include <vector>

#include "cqed/model.hpp"
#include "cqed/numerics.hpp"
#include "cqed/quadrature.hpp"
#include "cqed/traces.hpp"

namespace cqed {

struct TcmPoles {
    DressedPair pair;     // qubit-2 / cavity block
    CubicRoots roots;     // poles of the full three-state system
    cplx m_a, m_b, m_c;   // diagonal entries: |e1 g2,0>, |g1 e2,0>, |g1 g2,1>
    cplx d2, d_r;         // numerator shifts of the qubit-2 and cavity channels
    std::array<cplx, 4> cubic;   // coefficients, increasing order

    std::array<cplx, 3> poles() const { return roots.roots(); }
};

TcmPoles tcm_poles(const SystemParams& p);

// det(z - M) of the effective matrix at z.
cplx tcm_characteristic(const TcmPoles& tp, const SystemParams& p, cplx z);

double p_surv_tcm(const SystemParams& p, double t);
double p_surv_tcm(const TcmPoles& tp, double t);

// Populations of |g1 e2,0> and |g1 g2,1> still held at time t.
double p_qubit2_tcm(const TcmPoles& tp, const SystemParams& p, double t);
double p_cavity_tcm(const TcmPoles& tp, const SystemParams& p, double t);

enum class TcmChannel { em1, emx2, emr };

const char* tcm_channel_name(TcmChannel c);

// Frequency-resolved densities at absolute photon frequency. t = kSteady gives the
// t -> infinity spectrum.
double p_em1_resolved(const SystemParams& p, double t, double omega1);
double p_emx2_resolved(const SystemParams& p, double t, double omega2);
double p_emr_resolved(const SystemParams& p, double t, double omega_r);

double tcm_resolved(const TcmPoles& tp, const SystemParams& p, TcmChannel c, double t, double omega);

double tcm_channel_total(const SystemParams& p, TcmChannel c, double t, const QuadOptions& q = {});
double tcm_channel_total(const TcmPoles& tp, const SystemParams& p, TcmChannel c, double t,
                         const QuadOptions& q = {});

double steady_time_tcm(const TcmPoles& tp);

struct TcmSteady {
    double p_em1{}, p_emx2{}, p_emr{};
    double residual{};
};

TcmSteady steady_tcm(const SystemParams& p, const QuadOptions& q = {});

struct DecayRouteMap {
    std::vector<double> kappa_grid;
    std::vector<double> g2_grid;
    // [g2][kappa]
    std::vector<std::vector<double>> p_em1, p_emx2, p_emr;
};

// gamma2 is tied to kappa on every cell; g1 and g12 come from base.
DecayRouteMap decay_route_map(const SystemParams& base, const std::vector<double>& kappa_grid,
                              const std::vector<double>& g2_grid, const QuadOptions& q = {});

} // namespace cqed
