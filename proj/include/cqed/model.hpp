// model.hpp - physical parameters, dressed poles and state networks.
//
// All quantities are dimensionless in units of the qubit-1 decay rate.
// Frame: the qubit excited-state energies are the zero of energy, so the
// single-excitation states carry -omega02 (|e1 g2>) and -omega01 (|g1 e2>),
// and a free photon of frequency w on top of |g1 g2> carries w - omega01 - omega02.

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace cqed {

using cplx = std::complex<double>;

struct SystemParams {
    double omega01{0.0};
    double omega02{0.0};
    double omega_c{0.0};
    double g1{0.0};
    double g2{0.0};
    double g12{0.0};
    double gamma1{1.0};
    double gamma2{0.0};
    double kappa{0.0};

    bool operator==(const SystemParams&) const = default;
};

struct DerivedParams {
    double omega0{};          // (omega01 + omega02) / 2
    double gamma_mean{};      // (gamma1 + gamma2) / 2
    double detuning_12{};     // omega01 - omega02
    double detuning_21{};     // omega02 - omega01
    double delta_gamma{};     // gamma1 - gamma2
    double delta_c{};         // omega_c - omega01
};

enum class PairVariant {
    single_excitation,   // two-qubit, qubit 2 in ground state
    double_excitation,   // shifted by an emitted photon frequency
    tcm_pair,            // qubit-2 / cavity block of the Tavis-Cummings model
};

struct DressedPair {
    cplx omega_plus;
    cplx omega_minus;
    PairVariant variant{PairVariant::single_excitation};
};

// Detunings of emitted photons, each measured against omega01 + omega02.
struct EmissionDetunings {
    double delta1{};
    double delta1_prime{};
    double delta2{};
    double delta2_prime{};
    double delta_r{};
    double t_sum{};
};

EmissionDetunings make_detunings(const SystemParams& p, double w1, double w1p,
                                 double w2, double w2p, double wr);

DerivedParams validate_params(const SystemParams& p);

// Orders a pair so that plus has the larger real part (ties: larger imaginary part).
DressedPair ordered_pair(cplx a, cplx b, PairVariant v);

DressedPair dressed_pair_single(const SystemParams& p);

enum class Channel { qubit1, qubit2 };

// Pair of the one-photon sector reached from |e1 e2> after emitting a photon of
// absolute frequency w through the given qubit.
DressedPair dressed_pair_double(const SystemParams& p, Channel channel, double emission_frequency);

// ---------------------------------------------------------------------------
// State networks

enum class NetworkKind { two_qubit_1ex, two_qubit_2ex, jcm_2ex, tcm_1ex };

enum class Bath { qubit1 = 0, qubit2 = 1, cavity = 2 };

const char* bath_name(Bath b);

struct NetworkNode {
    std::string label;
    int q1{0};                   // qubit occupations
    int q2{0};
    int n{0};                    // cavity Fock number
    std::vector<Bath> photons;   // emitted photons in emission order
    bool terminal{false};
};

enum class EdgeKind { coupling_g1, coupling_g2, coupling_g12, decay_gamma1, decay_gamma2, decay_kappa };

const char* edge_kind_name(EdgeKind k);
bool is_decay(EdgeKind k);

struct NetworkEdge {
    std::size_t from{};
    std::size_t to{};
    EdgeKind kind{};
    double multiplicity{1.0};    // bosonic sqrt(n) factor on the amplitude
};

struct StateNetwork {
    NetworkKind kind{};
    std::vector<NetworkNode> nodes;
    std::vector<NetworkEdge> edges;
    std::size_t initial{0};

    int excitations(std::size_t node) const;
    std::size_t find(const std::string& label) const;
};

StateNetwork build_network(NetworkKind kind);

const char* network_name(NetworkKind kind);

} // namespace cqed
