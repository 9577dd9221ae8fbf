#pragma once

#include <string>
#include <vector>

#include "cqed/model.hpp"

namespace cqed {

struct ProbabilityTrace {
    std::vector<double> time_grid;
    std::vector<double> values;
    std::string label;
    SystemParams params;
};

struct QuadOptions {
    double rel_tol{1e-6};
    std::size_t node_budget{4'000'000};
    bool force_2d{false};   // steady two-photon channels: skip the factorized form
};

// n uniform points on [0, t_max].
std::vector<double> uniform_grid(double t_max, std::size_t n);

std::vector<double> linspace(double a, double b, std::size_t n);
std::vector<double> logspace(double a, double b, std::size_t n);

// Free-space reference e^{-gamma1 t}.
ProbabilityTrace free_space_trace(const SystemParams& p, const std::vector<double>& times);

} // namespace cqed
