#include <doctest.h>

#include <cmath>

#include "cqed/errors.hpp"
#include "cqed/jaynes_cummings.hpp"

using namespace cqed;

TEST_CASE("single-excitation mapping") {
    const auto p = map_single_excitation_jcm(2.0, 0.3, 1.0, 0.5);
    CHECK(p.g12 == 2.0);
    CHECK(p.gamma2 == 0.3);
    CHECK(p.omega02 - p.omega01 == doctest::Approx(0.5));
    CHECK_THROWS_AS(map_single_excitation_jcm(1.0, -0.1, 1.0, 0.0), NegativeRate);
}

TEST_CASE("an uncoupled qubit ignores the cavity photon") {
    JcmParams jp;
    jp.kappa = 0.5;
    const auto times = uniform_grid(5.0, 21);
    const auto r = evolve_jcm_two_excitation(jp, times);
    for (std::size_t i = 0; i < times.size(); ++i) {
        CHECK(std::abs(r.survival.values[i] - std::exp(-times[i])) < 1e-3);
        CHECK(std::abs(r.norm.values[i] - 1.0) < 1e-4);
    }
}

TEST_CASE("strong coupling crosses the free-space curve once from below") {
    JcmParams jp;
    jp.g = 2.0;
    jp.kappa = 0.2;
    const auto times = uniform_grid(10.0, 401);
    const auto r = evolve_jcm_two_excitation(jp, times);
    int sign = 0, changes = 0, first = 0;
    for (std::size_t i = 1; i < times.size(); ++i) {
        const double d = r.survival.values[i] - std::exp(-times[i]);
        if (std::abs(d) < 1e-4) continue;
        const int s = d > 0 ? 1 : -1;
        if (sign == 0) first = s;
        if (sign != 0 && s != sign) ++changes;
        sign = s;
    }
    CHECK(first == -1);
    CHECK(changes == 1);
}
