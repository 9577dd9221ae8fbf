#include "cqed/traces.hpp"

#include <cmath>

namespace cqed {

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = a;
        return v;
    }
    for (std::size_t k = 0; k < n; ++k) v[k] = a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1);
    return v;
}

std::vector<double> logspace(double a, double b, std::size_t n) {
    auto v = linspace(std::log10(a), std::log10(b), n);
    for (auto& x : v) x = std::pow(10.0, x);
    return v;
}

std::vector<double> uniform_grid(double t_max, std::size_t n) { return linspace(0.0, t_max, n); }

ProbabilityTrace free_space_trace(const SystemParams& p, const std::vector<double>& times) {
    ProbabilityTrace tr{times, {}, "free_space", p};
    for (double t : times) tr.values.push_back(std::exp(-p.gamma1 * t));
    return tr;
}

} // namespace cqed
