#include <doctest.h>

#include <cmath>

#include "cqed/two_qubit_double.hpp"

using namespace cqed;

TEST_CASE("both-excited survival and identical qubits") {
    SystemParams p;
    p.g12 = 5.0;
    p.gamma2 = 1.0;
    for (double t : {0.0, 0.5, 1.5, 4.0}) {
        CHECK(p_surv_ee(p, t) == doctest::Approx(std::exp(-2.0 * t)));
        CHECK(std::abs(p_total_qubit1(p, t) - std::exp(-t)) < 1e-5);
    }
}

TEST_CASE("steady two-photon channels exhaust the norm") {
    for (auto [g12, g2] : {std::pair{0.5, 0.2}, {5.0, 4.0}, {6.0, 0.1}, {1.0, 10.0}}) {
        SystemParams p;
        p.g12 = g12;
        p.gamma2 = g2;
        const auto r = p_two_photon(p, kSteady);
        CHECK(std::abs(r.p_em11 + r.p_em22 + r.p_total12 - 1.0) < 2e-3);
    }
}

TEST_CASE("separable steady state matches the double integral") {
    SystemParams p;
    p.g12 = 1.5;
    p.gamma2 = 2.0;
    QuadOptions q{1e-4, 40'000'000};
    QuadOptions q2 = q;
    q2.force_2d = true;
    for (auto c : {TwoPhoton::em11, TwoPhoton::em12}) {
        const double a = p_two_photon_channel(p, c, kSteady, q);
        const double b = p_two_photon_channel(p, c, kSteady, q2);
        CHECK(std::abs(a - b) < 1e-3 * std::max(a, 1e-3));
    }
}

TEST_CASE("time route matches the double integral at finite t") {
    SystemParams p;
    p.g12 = 0.5;
    p.gamma2 = 1.0;
    QuadOptions q2{1e-4, 40'000'000};
    q2.force_2d = true;
    const auto tr = two_photon_trace(p, {1.0});
    CHECK(std::abs(tr.p_em11[0] - p_two_photon_channel(p, TwoPhoton::em11, 1.0, q2)) < 1e-5);
    CHECK(std::abs(tr.p_em12[0] - p_two_photon_channel(p, TwoPhoton::em12, 1.0, q2)) < 1e-5);
}

TEST_CASE("two-photon traces rise to the steady state") {
    SystemParams p;
    p.g12 = 0.5;
    p.gamma2 = 1.0;
    const auto tr = two_photon_trace(p, {0.0, 1.0, 5.0, 60.0}, {1e-5, 4'000'000});
    CHECK(tr.p_em11[0] == 0.0);
    for (std::size_t i = 1; i < 4; ++i) CHECK(tr.p_em11[i] > tr.p_em11[i - 1]);
    const auto s = p_two_photon(p, kSteady);
    CHECK(std::abs(tr.p_em11[3] - s.p_em11) < 1e-6);
    CHECK(std::abs(tr.p_total12[3] - s.p_total12) < 1e-6);
    // Equal rates: the channels are symmetric.
    CHECK(std::abs(tr.p_em11[2] - tr.p_em22[2]) < 1e-9);
    CHECK(std::abs(tr.p_em12[2] - tr.p_em21[2]) < 1e-9);
}

TEST_CASE("dominance") {
    SystemParams p;
    p.g12 = 6.0;
    p.gamma2 = 0.1;
    CHECK(p_two_photon(p, kSteady).dominant == "em11");
    p.g12 = 8.0;
    p.gamma2 = 15.0;
    CHECK(p_two_photon(p, kSteady).dominant == "em22");
    p.g12 = 1.0;
    p.gamma2 = 10.0;
    CHECK(p_two_photon(p, kSteady).dominant == "total12");
}
