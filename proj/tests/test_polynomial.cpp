#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wirtinger/polynomial.hpp"

using namespace wirtinger;

TEST_CASE("horner evaluation matches direct powers") {
    Polynomial f({1.0, -3.0, 0.5, 2.0}, Interval(-2.0, 2.0));
    for (double x : {-2.0, -0.7, 0.0, 0.3, 1.9}) {
        const double direct = 1.0 - 3.0 * x + 0.5 * x * x + 2.0 * x * x * x;
        CHECK(f(x) == doctest::Approx(direct).epsilon(1e-15));
    }
}

TEST_CASE("zero extension clips outside the domain") {
    Polynomial f({1.0, 1.0}, Interval(0.0, 1.0), true);
    CHECK(f(0.5) == doctest::Approx(1.5));
    CHECK(f(1.5) == 0.0);
    CHECK(f(-0.5) == 0.0);
    CHECK(f.eval_raw(1.5) == doctest::Approx(2.5));
}

TEST_CASE("trailing zeros are stripped") {
    Polynomial f({1.0, 2.0, 0.0, 0.0}, Interval(0.0, 1.0));
    CHECK(f.degree() == 1);
    Polynomial z({0.0, 0.0}, Interval(0.0, 1.0));
    CHECK(z.is_zero());
}

TEST_CASE("derivative is exact on coefficients") {
    // f = x^4 - 2x^2 + 3x, f'' = 12x^2 - 4
    Polynomial f({0.0, 3.0, -2.0, 0.0, 1.0}, Interval(0.0, 1.0));
    Polynomial d2 = poly_derivative(f, 2);
    REQUIRE(d2.degree() == 2);
    CHECK(d2.coeffs()[0] == doctest::Approx(-4.0));
    CHECK(d2.coeffs()[1] == doctest::Approx(0.0));
    CHECK(d2.coeffs()[2] == doctest::Approx(12.0));
    CHECK(poly_derivative(f, 5).is_zero());
}

TEST_CASE("arithmetic operators") {
    Polynomial f({1.0, 1.0}, Interval(0.0, 1.0));
    Polynomial g({0.0, 0.0, 1.0}, Interval(0.0, 1.0));
    Polynomial s = f + g;
    Polynomial p = f * g;
    for (double x : {0.1, 0.5, 0.9}) {
        CHECK(s(x) == doctest::Approx(f(x) + g(x)));
        CHECK(p(x) == doctest::Approx(f(x) * g(x)));
        CHECK((3.0 * f)(x) == doctest::Approx(3.0 * f(x)));
    }
}

TEST_CASE("dilation is exact pointwise") {
    Polynomial f({0.5, -1.0, 2.0, 0.25}, Interval(0.0, 1.0));
    const double theta = 3.7;
    Polynomial g = dilate(f, theta);
    CHECK(g.domain().a == doctest::Approx(0.0));
    CHECK(g.domain().b == doctest::Approx(theta));
    for (double x : {0.2, 1.0, 2.5, 3.6})
        CHECK(g(x) == doctest::Approx(f.eval_raw(x / theta)).epsilon(1e-14));
    CHECK_THROWS_AS(dilate(f, 0.0), std::domain_error);
    CHECK_THROWS_AS(dilate(f, -1.0), std::domain_error);
}

TEST_CASE("extremal family expands the binomial") {
    // g_{3,1}(x) = x(1-x)^2 = x - 2x^2 + x^3
    Polynomial g = extremal_g(3, 1);
    REQUIRE(g.degree() == 3);
    CHECK(g.coeffs()[0] == doctest::Approx(0.0));
    CHECK(g.coeffs()[1] == doctest::Approx(1.0));
    CHECK(g.coeffs()[2] == doctest::Approx(-2.0));
    CHECK(g.coeffs()[3] == doctest::Approx(1.0));
    CHECK(g.extended_by_zero());
    CHECK(g(2.0) == 0.0);

    // |g_{n,k}^{(n)}| = n! everywhere
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            Polynomial dn = poly_derivative(extremal_g(n, k), n);
            REQUIRE(dn.degree() == 0);
            double fact = 1.0;
            for (int i = 2; i <= n; ++i) fact *= i;
            CHECK(std::abs(dn.coeffs()[0]) == doctest::Approx(fact));
        }
}

TEST_CASE("zero class membership") {
    CHECK(zero_class_check(extremal_g(3, 1), {3, 1}, 1e-12));
    CHECK(zero_class_check(extremal_g(4, 2), {4, 2}, 1e-12));
    // x itself has no zero at the right endpoint
    Polynomial f({0.0, 1.0}, Interval(0.0, 1.0));
    CHECK(!zero_class_check(f, {2, 1}, 1e-12));
    // (g * q) stays in the class for any polynomial q
    Polynomial q({1.0, -0.5, 2.0}, Interval(0.0, 1.0));
    CHECK(zero_class_check(extremal_g(2, 1) * q, {2, 1}, 1e-12));
    CHECK_THROWS_AS(ZeroClassSpec(1, 0), std::domain_error);
    CHECK_THROWS_AS(ZeroClassSpec(2, 3), std::domain_error);
}

TEST_CASE("real roots by bisection") {
    // (x - 0.3)(x - 0.7) = 0.21 - x + x^2
    Polynomial f({0.21, -1.0, 1.0}, Interval(0.0, 1.0));
    auto roots = real_roots(f, Interval(0.0, 1.0));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == doctest::Approx(0.3).epsilon(1e-10));
    CHECK(roots[1] == doctest::Approx(0.7).epsilon(1e-10));

    Polynomial none({1.0, 0.0, 1.0}, Interval(0.0, 1.0));
    CHECK(real_roots(none, Interval(0.0, 1.0)).empty());
}

TEST_CASE("interval validation") {
    CHECK_THROWS_AS(Interval(1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(Interval(0.0, std::numeric_limits<double>::infinity()),
                    std::domain_error);
    Interval iv(-1.0, 2.0);
    CHECK(iv.length() == doctest::Approx(3.0));
    CHECK(iv.contains(0.0));
    CHECK(!iv.contains(2.5));
}
