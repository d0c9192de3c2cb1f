#include <doctest.h>

#include <cmath>

#include "slw/errors.hpp"
#include "slw/special_functions.hpp"

using namespace slw;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("zeta: closed forms and the Euler-product oracle") {
    CHECK(std::fabs(sf::zeta(2.0) - kPi * kPi / 6.0) < 1e-12);
    CHECK(std::fabs(sf::zeta(4.0) - std::pow(kPi, 4) / 90.0) < 1e-12);
    CHECK_THROWS_AS(sf::zeta(1.0), domain_error);

    // truncation bound p^(1-s)/(s-1) at s = 2
    const double prod = sf::zeta_euler_product(2.0, 10000);
    CHECK(std::fabs(prod - sf::zeta(2.0)) < 1e-4);
}

TEST_CASE("gamma: factorials, reflection, half-integers") {
    CHECK(std::fabs(sf::gamma({1.0, 0.0}).real() - 1.0) < 1e-13);
    CHECK(std::fabs(sf::gamma({5.0, 0.0}).real() - 24.0) < 24.0 * 1e-13);
    CHECK(std::fabs(sf::gamma({0.5, 0.0}).real() - std::sqrt(kPi)) < 1e-13);
    CHECK(std::fabs(sf::gamma({-0.5, 0.0}).real() + 2.0 * std::sqrt(kPi)) < 1e-12);
}

TEST_CASE("xi: value at 2, functional equation, poles") {
    // xi(2) = Gamma(1) pi^{-1} zeta(2) = pi/6
    CHECK(std::fabs(sf::xi_real(2.0) - kPi / 6.0) < 1e-12);
    // xi(4) self-consistency with zeta(4) = pi^4/90
    CHECK(std::fabs(sf::xi_real(4.0) - std::tgamma(2.0) * std::pow(kPi, -2.0) *
                                           std::pow(kPi, 4) / 90.0) < 1e-12);
    CHECK(std::fabs(sf::xi_real(2.7) - sf::xi_real(1.0 - 2.7)) < 1e-10);
    CHECK_THROWS_AS(sf::xi_real(0.0), pole_error);
    CHECK_THROWS_AS(sf::xi_real(1.0), pole_error);

    // residual on the +-3.5 grid in half-integer steps
    for (double s = -3.5; s <= 4.51; s += 0.5) {
        if (std::fabs(s) < 1e-9 || std::fabs(s - 1.0) < 1e-9) continue;
        CHECK(std::fabs(sf::xi_real(s) - sf::xi_real(1.0 - s)) < 1e-10);
    }
}

TEST_CASE("bessel K: half-integer closed forms") {
    auto k_half = [](double x) { return std::sqrt(kPi / (2.0 * x)) * std::exp(-x); };
    for (double x : {0.5, 1.0, 5.0}) {
        CHECK(std::fabs(sf::bessel_k(0.5, x) - k_half(x)) <= 1e-10 * k_half(x));
    }
    // K_{3/2}(x) = sqrt(pi/(2x)) e^{-x} (1 + 1/x)
    const double x = 2.0;
    const double expect = k_half(x) * (1.0 + 1.0 / x);
    CHECK(std::fabs(sf::bessel_k(1.5, x) - expect) <= 1e-10 * expect);

    // even in nu
    CHECK(sf::bessel_k(0.7, 2.3) == sf::bessel_k(-0.7, 2.3));
    CHECK_THROWS_AS(sf::bessel_k(1.0, 0.0), domain_error);
    CHECK_THROWS_AS(sf::bessel_k(1.0, -2.0), domain_error);
}

TEST_CASE("bessel K: monotone decreasing in x, deterministic reruns") {
    double prev = 1e300;
    for (double x = 0.05; x < 30.0; x *= 1.7) {
        const double v = sf::bessel_k(2.5, x);
        CHECK(v < prev);
        prev = v;
    }
    for (double nu : {0.0, 0.75, 2.0})
        for (double x : {0.05, 1.0, 40.0}) CHECK(sf::bessel_k(nu, x) == sf::bessel_k(nu, x));
    // deep tail underflows to the flagged zero
    CHECK(sf::bessel_k(0.5, 745.0) == 0.0);
}

TEST_CASE("precision validation") {
    Precision bad;
    bad.rel_tol = 1e-3;
    CHECK_THROWS_AS(bad.validate(), domain_error);
}
