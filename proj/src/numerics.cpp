#include "cqed/numerics.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <algorithm>
#include <cmath>
#include <limits>

#include "cqed/errors.hpp"

namespace cqed {

using lcplx = std::complex<long double>;

namespace {

lcplx horner(const std::array<lcplx, 4>& c, lcplx x) {
    return ((c[3] * x + c[2]) * x + c[1]) * x + c[0];
}

lcplx horner_d(const std::array<lcplx, 4>& c, lcplx x) {
    return (3.0L * c[3] * x + 2.0L * c[2]) * x + c[1];
}

bool root_less(const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
}

} // namespace

double cubic_residual(cplx c3, cplx c2, cplx c1, cplx c0, cplx x) {
    const std::array<lcplx, 4> c{lcplx(c0), lcplx(c1), lcplx(c2), lcplx(c3)};
    return static_cast<double>(std::abs(horner(c, lcplx(x))));
}

CubicRoots solve_cubic(cplx c3, cplx c2, cplx c1, cplx c0) {
    if (c3 == cplx(0.0)) throw DegenerateLeadingCoefficient("cubic leading coefficient is zero");

    // Companion matrix of the monic polynomial, then Newton polish in long double.
    Eigen::Matrix3cd comp = Eigen::Matrix3cd::Zero();
    comp(0, 0) = -c2 / c3;
    comp(0, 1) = -c1 / c3;
    comp(0, 2) = -c0 / c3;
    comp(1, 0) = 1.0;
    comp(2, 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(comp, false);
    const std::array<lcplx, 4> c{lcplx(c0), lcplx(c1), lcplx(c2), lcplx(c3)};

    std::array<cplx, 3> r;
    for (int k = 0; k < 3; ++k) {
        lcplx x(es.eigenvalues()[k]);
        long double best = std::abs(horner(c, x));
        lcplx xbest = x;
        for (int it = 0; it < 8 && best > 0.0L; ++it) {
            const lcplx d = horner_d(c, x);
            if (d == lcplx(0.0L)) break;
            x -= horner(c, x) / d;
            const long double v = std::abs(horner(c, x));
            if (v < best) {
                best = v;
                xbest = x;
            }
        }
        r[k] = cplx(static_cast<double>(xbest.real()), static_cast<double>(xbest.imag()));
    }
    std::sort(r.begin(), r.end(), root_less);

    CubicRoots out{r[0], r[1], r[2], 0.0};
    for (const auto& x : r) out.residual = std::max(out.residual, cubic_residual(c3, c2, c1, c0, x));
    return out;
}

PoleStatus degenerate_pole_guard(const DressedPair& pair, double tol) {
    return std::abs(pair.omega_plus - pair.omega_minus) < tol ? PoleStatus::merged : PoleStatus::distinct;
}

double min_node_gap(std::span<const cplx> nodes) {
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b) g = std::min(g, std::abs(nodes[a] - nodes[b]));
    return g;
}

cplx exp_divided_difference_direct(std::span<const cplx> nodes, std::span<const cplx> q, double t) {
    const cplx mi(0.0, -1.0);
    cplx sum = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        cplx den = 1.0;
        for (std::size_t k = 0; k < nodes.size(); ++k)
            if (k != j) den *= nodes[j] - nodes[k];
        sum += poly_eval(q, nodes[j]) * std::exp(mi * nodes[j] * t) / den;
    }
    return sum;
}

cplx exp_divided_difference_confluent(std::span<const cplx> nodes, std::span<const cplx> q, double t) {
    const auto n = static_cast<Eigen::Index>(nodes.size());
    Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        J(k, k) = nodes[static_cast<std::size_t>(k)];
        if (k + 1 < n) J(k, k + 1) = 1.0;
    }
    const Eigen::MatrixXcd E = (cplx(0.0, -t) * J).exp();
    Eigen::MatrixXcd Q = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t k = q.size(); k-- > 0;) {
        Q = Q * J;
        Q.diagonal().array() += q[k];
    }
    return (Q * E)(0, n - 1);
}

cplx exp_divided_difference(std::span<const cplx> nodes, std::span<const cplx> q, double t, double tol) {
    if (min_node_gap(nodes) < tol) return exp_divided_difference_confluent(nodes, q, t);
    return exp_divided_difference_direct(nodes, q, t);
}

} // namespace cqed
