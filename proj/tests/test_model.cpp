#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "cqed/errors.hpp"
#include "cqed/model.hpp"

using namespace cqed;

TEST_CASE("parameter validation") {
    SystemParams p;
    CHECK_NOTHROW(validate_params(p));
    p.gamma1 = 0.0;
    CHECK_THROWS_AS(validate_params(p), NonPositiveUnitRate);
    p = {};
    p.kappa = -0.1;
    CHECK_THROWS_AS(validate_params(p), NegativeRate);
    p = {};
    p.g12 = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(validate_params(p), NonFiniteParameter);

    p = {};
    p.omega01 = 1.0;
    p.omega02 = 3.0;
    p.omega_c = 4.0;
    p.gamma2 = 2.0;
    const auto d = validate_params(p);
    CHECK(d.omega0 == 2.0);
    CHECK(d.gamma_mean == 1.5);
    CHECK(d.detuning_12 == -2.0);
    CHECK(d.delta_c == 3.0);
}

TEST_CASE("pair ordering") {
    const auto a = ordered_pair({1.0, -1.0}, {2.0, -3.0}, PairVariant::single_excitation);
    CHECK(a.omega_plus == cplx(2.0, -3.0));
    const auto b = ordered_pair({1.0, -3.0}, {1.0, -1.0}, PairVariant::single_excitation);
    CHECK(b.omega_plus == cplx(1.0, -1.0));
}

TEST_CASE("single-excitation pair matches the 2x2 eigenvalues") {
    SystemParams p;
    p.omega01 = 0.3;
    p.omega02 = -0.7;
    p.g12 = 1.3;
    p.gamma2 = 2.5;
    Eigen::Matrix2cd m;
    const cplx i(0.0, 1.0);
    m << -p.omega02 - i * p.gamma1 / 2.0, p.g12, p.g12, -p.omega01 - i * p.gamma2 / 2.0;
    const Eigen::Vector2cd ev = m.eigenvalues();
    const auto d = dressed_pair_single(p);
    const double e1 = std::min(std::abs(d.omega_plus - ev(0)), std::abs(d.omega_plus - ev(1)));
    const double e2 = std::min(std::abs(d.omega_minus - ev(0)), std::abs(d.omega_minus - ev(1)));
    CHECK(e1 < 1e-12);
    CHECK(e2 < 1e-12);
    CHECK(d.omega_plus.real() >= d.omega_minus.real());
}

TEST_CASE("double-excitation pair shifts with the emitted frequency") {
    SystemParams p;
    p.g12 = 2.0;
    p.gamma2 = 0.4;
    const auto a = dressed_pair_double(p, Channel::qubit1, 0.0);
    const auto b = dressed_pair_double(p, Channel::qubit2, 1.5);
    CHECK(std::abs(b.omega_plus - a.omega_plus - 1.5) < 1e-14);
    CHECK(std::abs(b.omega_minus - a.omega_minus - 1.5) < 1e-14);
}

TEST_CASE("networks are deterministic and decay lowers the excitation number") {
    for (auto k : {NetworkKind::two_qubit_1ex, NetworkKind::two_qubit_2ex, NetworkKind::jcm_2ex,
                   NetworkKind::tcm_1ex}) {
        const auto a = build_network(k), b = build_network(k);
        REQUIRE(a.nodes.size() == b.nodes.size());
        for (std::size_t n = 0; n < a.nodes.size(); ++n) CHECK(a.nodes[n].label == b.nodes[n].label);
        const auto matter = [&](std::size_t n) { return a.nodes[n].q1 + a.nodes[n].q2 + a.nodes[n].n; };
        for (const auto& e : a.edges) {
            CHECK(a.excitations(e.to) == a.excitations(e.from));
            CHECK(matter(e.to) == matter(e.from) - (is_decay(e.kind) ? 1 : 0));
        }
    }
    const auto n1 = build_network(NetworkKind::two_qubit_1ex);
    CHECK(n1.nodes.size() == 4);
    CHECK(n1.nodes[n1.initial].label == "e1g2");
    CHECK_NOTHROW(n1.find("g1g2+b2"));
    CHECK_THROWS_AS(n1.find("nowhere"), Error);

    const auto n2 = build_network(NetworkKind::two_qubit_2ex);
    CHECK(n2.nodes.size() == 9);
    CHECK_NOTHROW(n2.find("g1g2+b1+b2"));
    CHECK_NOTHROW(n2.find("g1g2+b2+b1"));
    const auto t = build_network(NetworkKind::tcm_1ex);
    CHECK_NOTHROW(t.find("g1g2,1"));
    CHECK_NOTHROW(t.find("g1g2,0+b3"));
}
