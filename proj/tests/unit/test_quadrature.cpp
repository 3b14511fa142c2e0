#include <cmath>
#include <random>

#include "doctest.h"
#include "oracle_values.hpp"
#include "zq2/constants.hpp"
#include "zq2/errors.hpp"
#include "zq2/quadrature.hpp"

using namespace zq2;

TEST_CASE("Gauss-Legendre rules are exact on polynomials") {
    const GaussLegendre& g16 = GaussLegendre::order16();
    double wsum = 0.0, x30 = 0.0;
    for (size_t i = 0; i < g16.nodes.size(); ++i) {
        wsum += g16.weights[i];
        x30 += g16.weights[i] * std::pow(g16.nodes[i], 30);
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(x30 == doctest::Approx(2.0 / 31.0).epsilon(1e-12));  // degree 31 rule

    const GaussLegendre& g32 = GaussLegendre::order32();
    CHECK(g32.nodes.size() == 32);
    double x62 = 0.0;
    for (size_t i = 0; i < g32.nodes.size(); ++i)
        x62 += g32.weights[i] * std::pow(g32.nodes[i], 62);
    CHECK(x62 == doctest::Approx(2.0 / 63.0).epsilon(1e-11));
}

TEST_CASE("empty interval integrates to exactly zero") {
    CHECK(integrate_z_squared(100.0, 100.0, 1e-8) == 0.0);
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(integrate_z_squared(-1.0, 10.0, 1e-8), DomainError);
    CHECK_THROWS_AS(integrate_z_squared(10.0, 5.0, 1e-8), DomainError);
    CHECK_THROWS_AS(integrate_z_squared(0.0, 10.0, 1e-11), DomainError);
}

TEST_CASE("[0, 100] matches the multiprecision quadrature oracle") {
    const double v = integrate_z_squared(0.0, 100.0, 1e-8);
    CHECK(std::abs(v - oracle::kIntZ2To100) <= 1e-6);
}

TEST_CASE("[0, 1e4] sits within 1% of the second-moment asymptotic") {
    const double v = integrate_z_squared(0.0, 1e4, 1e-6);
    const double asym = 1e4 * std::log(1e4 / kTwoPi) + (2.0 * kEulerC - 1.0) * 1e4;
    CHECK(std::abs(v / asym - 1.0) <= 0.01);
}

TEST_CASE("additivity over random split points") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> pick(50.0, 300.0);
    const double tol = 1e-8;
    for (int trial = 0; trial < 8; ++trial) {
        double a = pick(rng), b = pick(rng), c = pick(rng);
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        const double whole = integrate_z_squared(a, c, tol);
        const double parts =
            integrate_z_squared(a, b, tol) + integrate_z_squared(b, c, tol);
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        CHECK(std::abs(whole - parts) <= 3.0 * tol);
    }
}

TEST_CASE("oscillatory integrator handles a plain smooth function") {
    const double v = integrate_oscillatory(
        [](double t) { return std::sin(t); }, 0.0, kPi, 1e-10);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-10));
}
