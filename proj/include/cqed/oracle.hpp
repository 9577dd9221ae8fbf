// oracle.hpp - brute-force verifier: Schroedinger integration of a state
// network with every emission continuum replaced by a discrete bath.
//
// The photon emitted first is resolved mode by mode. A second emission ends in a
// terminal node and is handled as a Markov sink: the source carries -i rate/2 on
// its diagonal and the outgoing flux is integrated into the sink population.
//
// Bath grid around each emitter frequency: spacing delta, flat weight out to +-X,
// then a smooth taper out to +-U X whose extra weight stands in for the missing
// tail and cancels the leading band-edge frequency shift.

#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cqed/model.hpp"
#include "cqed/traces.hpp"

namespace cqed {

struct OracleConfig {
    double spacing{0.25};            // mode spacing; recurrence time 2 pi / spacing
    double window_scale{100.0};      // X = scale max(1, bath rate) + 4 sum|g| + largest detuning
    double window_half_width{0.0};   // fixed X for every bath when positive
    double taper_end{4.0};           // band edge in units of X; 2 selects the flat-plus-shoulder band
    double tolerance{1e-10};         // Chebyshev truncation threshold
    bool convergence_doubling{false};
    double target_tolerance{1e-4};   // doubling check fails above 10x this

    bool operator==(const OracleConfig&) const = default;
};

// Sparse matrix in compressed-row form.
struct CsrMatrix {
    std::size_t n{};
    std::vector<std::size_t> row_ptr;
    std::vector<std::size_t> col;
    std::vector<cplx> val;
};

enum class MatvecMode { parallel, serial };

// y = A x
void csr_matvec(const CsrMatrix& a, const std::vector<cplx>& x, std::vector<cplx>& y, MatvecMode mode);

struct BathGrid {
    std::vector<double> offset;   // detuning from the emitter frequency
    std::vector<double> weight;   // frequency measure carried by the mode
};

BathGrid make_bath_grid(double spacing, double half_width, double taper_end = 4.0);

double oracle_half_width(const SystemParams& p, const OracleConfig& cfg, Bath bath);

struct OracleSystem {
    CsrMatrix h;                              // effective Hamiltonian
    std::vector<std::size_t> node_begin;      // first index of each network node
    std::vector<std::size_t> node_size;       // 1, or the number of modes
    // Markov sinks: (source node, target node, rate * multiplicity^2)
    struct Sink {
        std::size_t source, target;
        double rate;
    };
    std::vector<Sink> sinks;
    std::size_t initial_index{};
    double spectral_center{}, spectral_radius{};
};

OracleSystem build_oracle_system(const StateNetwork& net, const SystemParams& p, const OracleConfig& cfg);

struct OracleResult {
    std::vector<double> time_grid;
    std::map<std::string, std::vector<double>> population;   // per network node label
    std::vector<double> norm;                                 // amplitude norm plus sink populations
    double error_estimate{0.0};                               // from the doubling check, else 0
    std::size_t modes{};                                      // vector length

    // Sum of the populations of the named nodes.
    std::vector<double> sum(const std::vector<std::string>& labels) const;
    ProbabilityTrace trace(const std::string& label, const std::vector<std::string>& nodes,
                           const SystemParams& p) const;
};

// times must start at 0 and increase.
OracleResult oracle_evolve(const StateNetwork& net, const SystemParams& p, const OracleConfig& cfg,
                           const std::vector<double>& times, MatvecMode mode = MatvecMode::parallel);

} // namespace cqed
