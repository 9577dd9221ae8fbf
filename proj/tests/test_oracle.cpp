#include <doctest.h>

#include <cmath>
#include <random>

#include "cqed/errors.hpp"
#include "cqed/oracle.hpp"
#include "cqed/two_qubit_single.hpp"

using namespace cqed;

TEST_CASE("bath grid weights") {
    const auto b = make_bath_grid(0.25, 20.0);
    double w = 0.0;
    for (double x : b.weight) w += x;
    // Flat part plus the taper reach past 2X of measure.
    CHECK(w > 40.0);
    for (std::size_t i = 1; i < b.offset.size(); ++i) CHECK(b.offset[i] > b.offset[i - 1]);
}

TEST_CASE("an isolated qubit decays exponentially") {
    SystemParams p;
    OracleConfig cfg;
    cfg.window_half_width = 200.0;
    const auto times = uniform_grid(10.0, 41);
    const auto r = oracle_evolve(build_network(NetworkKind::two_qubit_1ex), p, cfg, times);
    const auto& pop = r.population.at("e1g2");
    for (std::size_t i = 0; i < times.size(); ++i) {
        CHECK(std::abs(pop[i] - std::exp(-times[i])) < 1e-4);
        CHECK(std::abs(r.norm[i] - 1.0) < 1e-4);
    }
}

TEST_CASE("serial and parallel matvec agree") {
    SystemParams p;
    p.g12 = 3.0;
    p.gamma2 = 2.0;
    const auto sys = build_oracle_system(build_network(NetworkKind::two_qubit_2ex), p, OracleConfig{});
    std::mt19937_64 rng(1);
    std::normal_distribution<double> n;
    std::vector<cplx> x(sys.h.n), a, b;
    for (auto& v : x) v = {n(rng), n(rng)};
    csr_matvec(sys.h, x, a, MatvecMode::serial);
    csr_matvec(sys.h, x, b, MatvecMode::parallel);
    CHECK(a == b);
}

TEST_CASE("oracle agrees with the closed form") {
    SystemParams p;
    p.g12 = 2.0;
    p.gamma2 = 1.5;
    const auto times = uniform_grid(5.0, 21);
    OracleConfig cfg;
    cfg.convergence_doubling = true;
    const auto r = oracle_evolve(build_network(NetworkKind::two_qubit_1ex), p, cfg, times);
    CHECK(r.error_estimate < 1e-3);
    const auto surv = r.population.at("e1g2");
    const auto ex = r.population.at("g1e2");
    const auto se = r.population.at("g1g2+b1");
    for (std::size_t i = 0; i < times.size(); ++i) {
        CHECK(std::abs(surv[i] - p_surv(p, times[i])) < 1e-3);
        CHECK(std::abs(ex[i] - p_exchg(p, times[i])) < 1e-3);
        CHECK(std::abs(se[i] - p_se_total(p, times[i])) < 1e-3);
    }
}

TEST_CASE("time grid must start at zero and increase") {
    const auto net = build_network(NetworkKind::two_qubit_1ex);
    CHECK_THROWS(oracle_evolve(net, SystemParams{}, OracleConfig{}, {0.5, 1.0}));
    CHECK_THROWS(oracle_evolve(net, SystemParams{}, OracleConfig{}, {0.0, 1.0, 1.0}));
}
