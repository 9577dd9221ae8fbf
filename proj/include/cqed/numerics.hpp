// numerics.hpp - cubic roots, exponential divided differences, confluent guard.

#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "cqed/model.hpp"

namespace cqed {

inline constexpr double kDegenerateTol = 1e-8;

struct CubicRoots {
    cplx omega_alpha;
    cplx omega_beta;
    cplx omega_gamma;
    double residual{};   // max |p(root)|, evaluated in extended precision

    std::array<cplx, 3> roots() const { return {omega_alpha, omega_beta, omega_gamma}; }
};

// Roots of c3 x^3 + c2 x^2 + c1 x + c0.
CubicRoots solve_cubic(cplx c3, cplx c2, cplx c1, cplx c0);

// |p(x)| in long double, used for the residual contract.
double cubic_residual(cplx c3, cplx c2, cplx c1, cplx c0, cplx x);

enum class PoleStatus { distinct, merged };

PoleStatus degenerate_pole_guard(const DressedPair& pair, double tol = kDegenerateTol);

// Divided difference f[z_0, ..., z_{n-1}] of f(x) = q(x) exp(-i x t), where q is
// a polynomial given by its coefficients in increasing order. Coincident or
// nearly coincident nodes (gap below tol) switch to the confluent form, which is
// the (0, n-1) entry of f(J) for the bidiagonal matrix J with the nodes on its
// diagonal.
cplx exp_divided_difference(std::span<const cplx> nodes, std::span<const cplx> q, double t,
                            double tol = kDegenerateTol);

// The direct residue sum, without the guard. Exposed for tests.
cplx exp_divided_difference_direct(std::span<const cplx> nodes, std::span<const cplx> q, double t);

// The confluent matrix-function form. Exposed for tests.
cplx exp_divided_difference_confluent(std::span<const cplx> nodes, std::span<const cplx> q, double t);

// Smallest pairwise gap between nodes.
double min_node_gap(std::span<const cplx> nodes);

inline cplx poly_eval(std::span<const cplx> q, cplx x) {
    cplx r = 0.0;
    for (std::size_t k = q.size(); k-- > 0;) r = r * x + q[k];
    return r;
}

} // namespace cqed
