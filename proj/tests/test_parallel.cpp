#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "cqed/parallel.hpp"

using namespace cqed;

TEST_CASE("blocked sums do not depend on the thread count") {
    const auto term = [](std::size_t i) { return std::sin(0.37 * static_cast<double>(i)) / (1.0 + i); };
    set_threads(1);
    const double one = blocked_sum(100'003, term);
    set_threads(4);
    const double four = blocked_sum(100'003, term);
    set_threads(3);
    const double three = blocked_sum(100'003, term);
    CHECK(one == four);
    CHECK(one == three);
    CHECK(std::abs(one - serial_sum(100'003, term)) < 1e-12);
}

TEST_CASE("parallel_for fills every slot and rethrows the first failure") {
    std::vector<int> v(1000, 0);
    parallel_for(v.size(), [&](std::size_t i) { v[i] = static_cast<int>(i); });
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == static_cast<int>(i));
    try {
        parallel_for(100, [](std::size_t i) {
            if (i == 17 || i == 60) throw std::runtime_error(std::to_string(i));
        });
        FAIL("no exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()) == "17");
    }
}

TEST_CASE("thread count from the environment") {
    setenv("CQED_THREADS", "3", 1);
    CHECK(threads_from_env() == 3);
    setenv("CQED_THREADS", "x3", 1);
    CHECK(threads_from_env() == 0);
    setenv("CQED_THREADS", "-2", 1);
    CHECK(threads_from_env() == 0);
    unsetenv("CQED_THREADS");
    CHECK(threads_from_env() == 0);
}
