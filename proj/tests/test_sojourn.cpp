#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fracpseudo/errors.hpp"
#include "fracpseudo/sojourn.hpp"
#include "fracpseudo/specfun.hpp"
#include "oracles.hpp"

using namespace fracpseudo;
using namespace fracpseudo::sojourn;

TEST_CASE("sojourn parameter validation") {
    SojournParams s;
    s.beta = 1.0;
    CHECK_THROWS_AS(s.validate(), domain_error);
    s.beta = 0.5;
    s.k = 0;
    CHECK_THROWS_AS(s.validate(), domain_error);
    s.k = 1;
    s.t = 0.0;
    CHECK_THROWS_AS(s.validate(), domain_error);
    s.t = 1.0;
    CHECK_NOTHROW(s.validate());

    CHECK_THROWS_AS(sojourn_even_density(s, 0.0), domain_error);
    CHECK_THROWS_AS(sojourn_even_density(s, -1.0), domain_error);
    s.parity = Parity::odd;
    CHECK_THROWS_AS(sojourn_even_density(s, 1.0), domain_error);
    s.parity = Parity::even;
    CHECK_THROWS_AS(sojourn_odd_density(s, 1.0), domain_error);
    CHECK_THROWS_AS(sojourn_half_closed(0.0, 1.0), domain_error);
    CHECK_THROWS_AS(sojourn_half_closed(1.0, 0.0), domain_error);
}

TEST_CASE("sojourn densities are nonnegative and decreasing far out") {
    SojournParams se{0.7, 1, Parity::even, 1.0};
    SojournParams so{0.4, 1, Parity::odd, 2.0};
    double prev_e = 1e300, prev_o = 1e300;
    for (double x : {0.05, 0.2, 1.0, 5.0, 25.0, 125.0}) {
        const double ve = sojourn_even_density(se, x);
        const double vo = sojourn_odd_density(so, x);
        CHECK(ve >= 0.0);
        CHECK(vo >= 0.0);
        if (x >= 1.0) {
            CHECK(ve < prev_e);
            CHECK(vo < prev_o);
            prev_e = ve;
            prev_o = vo;
        }
    }
}

TEST_CASE("even sojourn density against direct quadrature of the arcsine mixture") {
    SojournParams s{0.6, 1, Parity::even, 1.5};
    for (double x : {0.3, 1.0, 4.0}) {
        // (1/pi) int_x^inf h(s',t) / sqrt(x(s'-x)) ds' with the root handled by
        // splitting at s' = x + 1 and substituting u = sqrt(s'-x) on the head;
        // the tail takes s' = (x+1)e^y, turning its algebraic decay exponential
        // with rate beta + 1/2, so [0, 70] holds everything above 1e-30
        const double head = oracles::simpson(
            [&](double u) { return 2.0 * specfun::subordinator_density(s.beta, x + u * u, s.t); },
            0.0, 1.0, 1e-12);
        const double a = x + 1.0;
        const double tail = oracles::simpson(
            [&](double y) {
                const double sp = a * std::exp(y);
                return specfun::subordinator_density(s.beta, sp, s.t) / std::sqrt(sp - x) * sp;
            },
            0.0, 70.0, 1e-12);
        const double want = (head + tail) / (oracles::pi * std::sqrt(x));
        const double got = sojourn_even_density(s, x, 1e-10);
        INFO("x=" << x);
        CHECK(std::abs(got - want) < 1e-8 * want);
    }
}

TEST_CASE("odd sojourn density against direct quadrature of the Lamperti mixture") {
    SojournParams s{0.5, 1, Parity::odd, 1.0};
    const int m = 3;
    for (double x : {0.3, 1.0, 4.0}) {
        const double head = oracles::simpson(
            [&](double u) {
                return m * specfun::subordinator_density(s.beta, x + std::pow(u, m), s.t);
            },
            0.0, 1.0, 1e-12);
        const double a = x + 1.0;
        const double tail = oracles::simpson(
            [&](double y) {
                const double sp = a * std::exp(y);
                return specfun::subordinator_density(s.beta, sp, s.t) *
                       std::pow(sp - x, -2.0 / 3.0) * sp;
            },
            0.0, 70.0, 1e-12);
        const double want = std::sin(oracles::pi / m) / oracles::pi * std::pow(x, -1.0 / m) *
                            (head + tail);
        const double got = sojourn_odd_density(s, x, 1e-10);
        INFO("x=" << x);
        CHECK(std::abs(got - want) < 1e-8 * want);
    }
}

TEST_CASE("half-order closed form bridges to the quadrature route") {
    // the closed-form kernel's subordinator clock runs sqrt(2) faster
    SojournParams s{0.5, 1, Parity::even, std::sqrt(2.0)};
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        const double a = sojourn_half_closed(1.0, x);
        const double b = sojourn_even_density(s, x, 1e-11);
        INFO("x=" << x);
        CHECK(std::abs(a - b) < 1e-7 * a);
    }
}

TEST_CASE("half-order closed form asymptotics") {
    // for x >> t^2 the mixture flattens to t/(pi sqrt(2 x^3)) / Gamma(3/2)
    const double t = 1.0, x = 1e6;
    const double lead = t / (oracles::pi * std::sqrt(2.0 * x * x * x)) /
                        std::tgamma(1.5);
    CHECK(std::abs(sojourn_half_closed(t, x) - lead) < 1e-3 * lead);
    // and near zero it blows up like x^{-1/2} scaled by the stationary weight
    CHECK(sojourn_half_closed(t, 1e-4) > sojourn_half_closed(t, 1e-2));
}

TEST_CASE("normalization weights match the Beta identities") {
    // sin(pi/m)/pi = 1/B(1/m, (m-1)/m)
    for (int m : {2, 3, 5, 7}) {
        const double lhs = std::sin(oracles::pi / m) / oracles::pi;
        const double rhs = 1.0 / std::beta(1.0 / m, (m - 1.0) / m);
        CHECK(std::abs(lhs - rhs) < 1e-14);
    }
}

TEST_CASE("conditional kernels integrate to one") {
    const double s = 2.3;
    // arcsine kernel (1/pi)/sqrt(x(s-x)) on (0,s): by x <-> s-x symmetry the
    // mass is twice the head integral, with x = u^2 removing the root
    const double mass_even = 4.0 / oracles::pi *
                             oracles::simpson([&](double u) { return 1.0 /
                                                                     std::sqrt(s - u * u); },
                                              0.0, std::sqrt(0.5 * s), 1e-12);
    CHECK(std::abs(mass_even - 1.0) < 1e-10);

    // odd kernel (sin(pi/m)/pi) x^{-1/m}(s-x)^{-(m-1)/m} on (0,s), m = 3:
    // x = u^3 on the head and s - x = v^3 on the tail remove both endpoints
    const double head = oracles::simpson(
        [&](double u) { return 3.0 * u * std::pow(s - u * u * u, -2.0 / 3.0); }, 0.0,
        std::cbrt(0.5 * s), 1e-12);
    const double tail = oracles::simpson(
        [&](double v) { return 3.0 * std::pow(s - v * v * v, -1.0 / 3.0); }, 0.0,
        std::cbrt(0.5 * s), 1e-12);
    const double mass_odd = std::sin(oracles::pi / 3.0) / oracles::pi * (head + tail);
    CHECK(std::abs(mass_odd - 1.0) < 1e-10);
}
