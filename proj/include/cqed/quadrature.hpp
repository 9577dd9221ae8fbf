// quadrature.hpp - frequency integrals of pole-structured probability densities.
//
// The window is cut into panels whose width is graded towards the pole real
// parts and capped by the oscillation period 2*pi/t; every panel carries a
// 16-point Gauss-Legendre rule. The tails beyond the window come from an
// asymptotic model, fitted near the edge when t is finite. Convergence is checked by halving every panel and by doubling the
// window.

#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "cqed/model.hpp"

namespace cqed {

inline constexpr double kSteady = std::numeric_limits<double>::infinity();

struct QuadratureSpec {
    double center{0.0};
    double half_width{0.0};            // 0 selects the window from the features
    double max_time{kSteady};          // kSteady: non-oscillatory (t -> infinity) density
    double rel_tol{1e-6};
    double abs_tol{1e-12};
    std::size_t node_budget{4'000'000};
    std::vector<cplx> features;        // poles that shape the integrand
};

struct QuadResult {
    double value{};
    double error{};
    std::size_t nodes{};
    int level{};
    double half_width{};
};

enum class Reduction { parallel, serial };

using Integrand1D = std::function<double(double)>;
using Integrand2D = std::function<double(double, double)>;

struct Panel {
    double a;
    double b;
};

double auto_half_width(const QuadratureSpec& spec);

std::vector<Panel> make_panels(const QuadratureSpec& spec, double half_width, int level);

// Gauss-Legendre sum over the panels.
double panel_sum(const Integrand1D& f, const std::vector<Panel>& panels, Reduction mode);

// Window integral plus the closed-form tail estimate, at fixed window and level.
double window_integral(const Integrand1D& f, const QuadratureSpec& spec, double half_width, int level,
                       Reduction mode, std::size_t* nodes = nullptr);

QuadResult integrate_frequency_ex(const Integrand1D& f, const QuadratureSpec& spec,
                                  Reduction mode = Reduction::parallel);

double integrate_frequency(const Integrand1D& f, const QuadratureSpec& spec);

// Nested integral: the outer variable x uses `outer`, the inner variable y uses
// the spec returned by inner(x). The inner grid is calibrated once at the
// outer center and reused for every outer node.
QuadResult integrate_frequency_2d_ex(const Integrand2D& f, const QuadratureSpec& outer,
                                     const std::function<QuadratureSpec(double)>& inner);

double integrate_frequency_2d(const Integrand2D& f, const QuadratureSpec& outer,
                              const QuadratureSpec& inner);

} // namespace cqed
