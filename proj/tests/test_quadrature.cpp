#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wirtinger/quadrature.hpp"

using namespace wirtinger;

TEST_CASE("monomials are exact to 1e-12") {
    for (int k = 0; k <= 12; ++k) {
        QuadResult r = integrate([k](double x) { return std::pow(x, k); },
                                 Interval(0.0, 1.0));
        CHECK(r.value == doctest::Approx(1.0 / (k + 1)).epsilon(1e-12));
    }
}

TEST_CASE("beta function oracle") {
    // int_0^1 x^{a-1}(1-x)^{b-1} dx = B(a,b), via log-gamma
    for (double a : {1.5, 2.0, 3.5, 7.0})
        for (double b : {1.0, 2.5, 4.0}) {
            const double oracle =
                std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
            QuadResult r = integrate(
                [a, b](double x) {
                    return std::pow(x, a - 1.0) * std::pow(1.0 - x, b - 1.0);
                },
                Interval(0.0, 1.0));
            CHECK(r.value == doctest::Approx(oracle).epsilon(1e-9));
        }
}

TEST_CASE("trigonometric oracle") {
    QuadResult r = integrate([](double x) { return std::sin(x); },
                             Interval(0.0, M_PI));
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.error_estimate < 1e-8);
}

TEST_CASE("additivity over subintervals") {
    auto f = [](double x) { return std::exp(-x) * std::cos(5.0 * x); };
    const double whole = integrate(f, Interval(0.0, 3.0)).value;
    const double parts = integrate(f, Interval(0.0, 1.3)).value +
                         integrate(f, Interval(1.3, 3.0)).value;
    CHECK(whole == doctest::Approx(parts).epsilon(1e-11));
}

TEST_CASE("kink pre-splitting handles |x - c|") {
    auto f = [](double x) { return std::abs(x - 0.5); };
    QuadResult r = integrate_split(f, Interval(0.0, 1.0), {0.5});
    CHECK(r.value == doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("NaN integrand raises") {
    CHECK_THROWS_AS(
        integrate([](double) { return std::nan(""); }, Interval(0.0, 1.0)),
        std::invalid_argument);
}

TEST_CASE("error estimate brackets the true error") {
    auto f = [](double x) { return std::sqrt(x); };
    QuadResult r = integrate(f, Interval(0.0, 1.0));
    CHECK(std::abs(r.value - 2.0 / 3.0) <= std::max(r.error_estimate, 1e-10));
}

TEST_CASE("linearity") {
    auto f = [](double x) { return x * x; };
    auto g = [](double x) { return std::cos(x); };
    const double lhs =
        integrate([&](double x) { return 2.0 * f(x) - 3.0 * g(x); },
                  Interval(0.0, 2.0))
            .value;
    const double rhs = 2.0 * integrate(f, Interval(0.0, 2.0)).value -
                       3.0 * integrate(g, Interval(0.0, 2.0)).value;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}
