#include <catch2/catch_amalgamated.hpp>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "fracpseudo/errors.hpp"
#include "fracpseudo/grid.hpp"
#include "fracpseudo/parallel.hpp"
#include "fracpseudo/quadrature.hpp"
#include "fracpseudo/rng.hpp"
#include "oracles.hpp"

using namespace fracpseudo;

TEST_CASE("adaptive quadrature on known integrals") {
    auto r1 = quad::integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0);
    REQUIRE(r1.converged);
    CHECK(std::abs(r1.value - std::sqrt(oracles::pi)) < 1e-12);

    // moderately oscillatory
    auto r2 = quad::integrate([](double x) { return std::cos(20.0 * x); }, 0.0, 1.0);
    CHECK(std::abs(r2.value - std::sin(20.0) / 20.0) < 1e-11);

    // split hints at an interior kink
    auto r3 = quad::integrate([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, 1e-13, 1e-13);
    CHECK(std::abs(r3.value - (0.09 + 0.49) / 2.0) < 1e-12);
}

TEST_CASE("quadrature over the half line") {
    auto r = quad::integrate_to_inf([](double x) { return std::exp(-x); }, 0.0, 1e-12, 1e-12);
    REQUIRE(r.converged);
    CHECK(std::abs(r.value - 1.0) < 1e-10);

    auto r2 = quad::integrate_to_inf([](double x) { return 1.0 / ((1.0 + x) * (1.0 + x)); }, 1.0,
                                     1e-12, 1e-12);
    CHECK(std::abs(r2.value - 0.5) < 1e-10);
}

TEST_CASE("tanh-sinh absorbs endpoint singularities") {
    // int_0^1 x^{-1/2} dx = 2
    auto r = quad::tanh_sinh([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-12);
    CHECK(std::abs(r.value - 2.0) < 1e-10);
    // Beta(1/3, 2/3) = pi / sin(pi/3)
    auto b = quad::tanh_sinh(
        [](double x) { return std::pow(x, -2.0 / 3.0) * std::pow(1.0 - x, -1.0 / 3.0); }, 0.0, 1.0,
        1e-12);
    CHECK(std::abs(b.value - oracles::pi / std::sin(oracles::pi / 3.0)) < 1e-9);
}

TEST_CASE("aitken acceleration collapses geometric tails") {
    std::vector<double> partial;
    double s = 0.0;
    for (int k = 0; k < 12; ++k) {
        s += std::pow(0.7, k);
        partial.push_back(s);
    }
    const double accel = quad::aitken(partial);
    CHECK(std::abs(accel - 1.0 / 0.3) < 1e-9);
}

TEST_CASE("grid points pin both ends") {
    GridSpec g;
    g.x_min = -3.0;
    g.x_max = 7.0;
    g.n = 11;
    const auto xs = g.points();
    REQUIRE(xs.size() == 11);
    CHECK(xs.front() == -3.0);
    CHECK(xs.back() == 7.0);
    CHECK(std::abs(g.h() - 1.0) < 1e-15);

    GridSpec bad;
    bad.x_min = 2.0;
    bad.x_max = 1.0;
    CHECK_THROWS_AS(bad.points(), domain_error);

    GridSpec lg;
    lg.x_min = 0.1;
    lg.x_max = 10.0;
    lg.n = 5;
    lg.log_spaced = true;
    const auto ls = lg.points();
    CHECK(std::abs(ls[2] - 1.0) < 1e-12);
}

TEST_CASE("uniform01 stays inside (0, 1]") {
    auto eng = rng::engine_for(42, 0);
    double lo = 1.0, hi = 0.0;
    for (int i = 0; i < 200000; ++i) {
        const double u = rng::uniform01(eng);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    CHECK(lo > 0.0);
    CHECK(hi <= 1.0);
}

TEST_CASE("per-index engines are deterministic and decorrelated") {
    auto e1 = rng::engine_for(7, 123);
    auto e2 = rng::engine_for(7, 123);
    auto e3 = rng::engine_for(7, 124);
    CHECK(e1() == e2());
    CHECK(e1() != e3());
}

TEST_CASE("poisson sampling inverts the exact cdf") {
    const double mean = 3.7;
    rng::poisson_table tab(mean);
    for (double u : {1e-6, 0.01, 0.2, 0.5, 0.8, 0.95, 0.999, 0.999999})
        CHECK(tab.sample(u) == oracles::poisson_icdf(mean, u));

    rng::poisson_table zero(0.0);
    CHECK(zero.sample(0.5) == 0);
    CHECK_THROWS_AS(rng::poisson_table(-1.0), domain_error);

    // large mean: the median sits within O(1) of the mean
    rng::poisson_table big(2.0e4);
    CHECK(std::abs(static_cast<double>(big.sample(0.5)) - 2.0e4) < 5.0);
}

TEST_CASE("parallel_for fills every slot under any thread budget") {
    const int n = 1000;
    for (const char* budget : {"1", "3", "16"}) {
        setenv("FRACPSEUDO_THREADS", budget, 1);
        std::vector<double> out(n, 0.0);
        parallel_for(n, [&](long long i) { out[static_cast<std::size_t>(i)] = 3.0 * i; });
        bool ok = true;
        for (int i = 0; i < n; ++i) ok = ok && out[static_cast<std::size_t>(i)] == 3.0 * i;
        CHECK(ok);
    }
    unsetenv("FRACPSEUDO_THREADS");
}

TEST_CASE("parallel_for rethrows worker exceptions") {
    setenv("FRACPSEUDO_THREADS", "4", 1);
    CHECK_THROWS_AS(parallel_for(100,
                                 [](long long i) {
                                     if (i == 37) throw domain_error("boom");
                                 }),
                    domain_error);
    unsetenv("FRACPSEUDO_THREADS");
    setenv("FRACPSEUDO_THREADS", "junk", 1);
    CHECK_THROWS_AS(thread_budget(), domain_error);
    unsetenv("FRACPSEUDO_THREADS");
}
