// jaynes_cummings.hpp - one qubit in a cavity.
//
// With the cavity in |0> the problem is the two-qubit single-excitation problem
// with the cavity in the role of qubit 2. With the cavity in |1> there is no
// closed form and the state network is integrated with the oracle machinery.

#pragma once

#include <vector>

#include "cqed/model.hpp"
#include "cqed/oracle.hpp"
#include "cqed/traces.hpp"

namespace cqed {

struct JcmParams {
    double g{0.0};
    double kappa{0.0};
    double gamma1{1.0};
    double detuning{0.0};   // omega_c - omega01

    SystemParams system() const;   // cavity network parameters (g1 = g)
};

// g12 <- g, gamma2 <- kappa, omega02 <- omega_c.
SystemParams map_single_excitation_jcm(double g, double kappa, double gamma1, double detuning);

struct JcmTwoExcitation {
    ProbabilityTrace survival;    // qubit still excited, any cavity or photon content
    ProbabilityTrace norm;        // total probability, ideally 1
    OracleResult raw;
};

// Initial state a^dagger |e, 0>. Throws IntegratorDivergence on norm growth.
JcmTwoExcitation evolve_jcm_two_excitation(const JcmParams& jp, const std::vector<double>& times,
                                          const OracleConfig& cfg = {});

} // namespace cqed
