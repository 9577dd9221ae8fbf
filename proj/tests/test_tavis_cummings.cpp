#include <doctest.h>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <random>

#include "cqed/tavis_cummings.hpp"
#include "cqed/two_qubit_single.hpp"

using namespace cqed;

namespace {

Eigen::Matrix3cd effective(const SystemParams& p) {
    const cplx i(0.0, 1.0);
    Eigen::Matrix3cd m;
    m << -p.omega02 - i * p.gamma1 / 2.0, p.g12, p.g1,
         p.g12, -p.omega01 - i * p.gamma2 / 2.0, p.g2,
         p.g1, p.g2, p.omega_c - p.omega01 - p.omega02 - i * p.kappa / 2.0;
    return m;
}

SystemParams draw(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 10.0);
    SystemParams p;
    p.g1 = u(rng);
    p.g2 = u(rng);
    p.g12 = u(rng);
    p.gamma2 = u(rng);
    p.kappa = u(rng);
    p.omega_c = u(rng) - 5.0;
    p.omega02 = 0.2 * (u(rng) - 5.0);
    return p;
}

} // namespace

TEST_CASE("poles are the eigenvalues of the effective matrix") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
        const auto p = draw(rng);
        const auto tp = tcm_poles(p);
        const Eigen::Vector3cd ev = effective(p).eigenvalues();
        for (auto z : tp.poles()) {
            double best = 1e300;
            for (int j = 0; j < 3; ++j) best = std::min(best, std::abs(z - ev(j)));
            CHECK(best < 1e-6);
            CHECK(std::abs(tcm_characteristic(tp, p, z)) < 1e-9 * std::max(1.0, std::norm(z) * std::abs(z)));
        }
    }
}

TEST_CASE("populations match the matrix exponential") {
    std::mt19937_64 rng(9);
    const cplx i(0.0, 1.0);
    for (int k = 0; k < 30; ++k) {
        const auto p = draw(rng);
        const double t = 0.1 * (k % 10) + 0.05;
        const Eigen::Vector3cd a = (effective(p) * (-i * t)).exp().col(0);
        const auto tp = tcm_poles(p);
        CHECK(std::abs(p_surv_tcm(tp, t) - std::norm(a(0))) < 1e-9);
        CHECK(std::abs(p_qubit2_tcm(tp, p, t) - std::norm(a(1))) < 1e-9);
        CHECK(std::abs(p_cavity_tcm(tp, p, t) - std::norm(a(2))) < 1e-9);
    }
}

TEST_CASE("time sum rule") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 5; ++k) {
        const auto p = draw(rng);
        const auto tp = tcm_poles(p);
        for (double t : {0.2, 1.0, 3.0}) {
            const double s = p_surv_tcm(tp, t) + p_qubit2_tcm(tp, p, t) + p_cavity_tcm(tp, p, t) +
                             tcm_channel_total(tp, p, TcmChannel::em1, t) +
                             tcm_channel_total(tp, p, TcmChannel::emx2, t) +
                             tcm_channel_total(tp, p, TcmChannel::emr, t);
            CHECK(std::abs(s - 1.0) < 1e-4);
        }
    }
}

TEST_CASE("steady split sums to one") {
    SystemParams p;
    p.g1 = p.g12 = 1.0;
    p.g2 = 2.0;
    p.kappa = p.gamma2 = 0.7;
    const auto s = steady_tcm(p);
    CHECK(std::abs(s.p_em1 + s.p_emx2 + s.p_emr - 1.0) < 1e-5);
}

TEST_CASE("an empty cavity reduces to the two-qubit problem") {
    SystemParams p;
    p.g12 = 2.0;
    p.gamma2 = 0.5;
    p.kappa = 1.0;
    for (double t : {0.3, 1.0, 4.0}) CHECK(std::abs(p_surv_tcm(p, t) - p_surv(p, t)) < 1e-10);
}

TEST_CASE("g2 decouples qubit 1") {
    // sup |P_surv - e^{-t}| shrinks as g2 grows.
    SystemParams p;
    p.g1 = p.g12 = 5.0;
    p.kappa = p.gamma2 = 1.0;
    double prev = 1e300;
    for (double g2 : {0.0, 5.0, 15.0}) {
        p.g2 = g2;
        const auto tp = tcm_poles(p);
        double d = 0.0;
        for (double t : linspace(0.0, 10.0, 401)) d = std::max(d, std::abs(p_surv_tcm(tp, t) - std::exp(-t)));
        CHECK(d < prev);
        prev = d;
    }
}

TEST_CASE("decay route map rows and columns") {
    SystemParams base;
    base.g1 = base.g12 = 1.0;
    const auto m = decay_route_map(base, {0.5, 2.0}, {0.0, 3.0, 9.0});
    REQUIRE(m.p_em1.size() == 3);
    REQUIRE(m.p_em1[0].size() == 2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(std::abs(m.p_em1[i][j] + m.p_emx2[i][j] + m.p_emr[i][j] - 1.0) < 1e-5);
    // Larger g2 leaves more to qubit 1.
    CHECK(m.p_em1[2][0] > m.p_em1[0][0]);
}

TEST_CASE("an unpopulated dark mode does not block the steady state") {
    // Lossless qubit 2 and cavity at g2 = 0: their antisymmetric mix never couples.
    SystemParams p;
    p.g1 = p.g12 = 1.0;
    const auto s = steady_tcm(p);
    CHECK(s.p_em1 == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(std::abs(s.p_emx2) + std::abs(s.p_emr) < 1e-6);
}
