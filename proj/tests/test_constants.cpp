#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wirtinger/constants.hpp"

using namespace wirtinger;

TEST_CASE("brink_K(2,2) = 1/pi") {
    CHECK(brink_K(2.0, 2.0).value == doctest::Approx(1.0 / M_PI).epsilon(1e-12));
}

TEST_CASE("brink_K against an independent beta-function form") {
    // K(p,q) = (q/2) (1 + p'/q)^{1/p} (1 + q/p')^{-1/q} / B(1/q, 1/p');
    // oracle recomputed through std::beta instead of the log-gamma route.
    for (double p : {1.5, 2.0, 3.0, 5.0})
        for (double q : {1.2, 2.0, 4.0}) {
            const double ps = p / (p - 1.0);
            const double oracle = (q / 2.0) * std::pow(1.0 + ps / q, 1.0 / p) /
                                  std::pow(1.0 + q / ps, 1.0 / q) /
                                  std::beta(1.0 / q, 1.0 / ps);
            CHECK(brink_K(p, q).value == doctest::Approx(oracle).epsilon(1e-12));
        }
    CHECK_THROWS_AS(brink_K(1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(brink_K(2.0, 0.5), std::domain_error);
}

TEST_CASE("sharp constant is the transposed evaluation") {
    for (double p : {1.5, 2.0, 3.0})
        for (double q : {1.3, 2.0, 4.5})
            CHECK(sharp_brink_constant(p, q) ==
                  doctest::Approx(brink_K(q, p).value));
}

TEST_CASE("beesack constant") {
    // p = 2: (1/(2-1)) (2 / (2 sin(pi/2)))^2 = 1
    CHECK(beesack_constant(2.0).value == doctest::Approx(1.0).epsilon(1e-15));
    const double p = 3.0;
    const double oracle =
        (1.0 / (p - 1.0)) * std::pow(0.5 * p / std::sin(M_PI / p), p);
    CHECK(beesack_constant(p).value == doctest::Approx(oracle).epsilon(1e-15));
    CHECK_THROWS_AS(beesack_constant(1.0), std::domain_error);
}

TEST_CASE("A(n,k) lower bounds") {
    // (2,1): 1/(2! * 3^3) = 1/54
    CHECK(ank_lower_bound(2, 1).value == doctest::Approx(1.0 / 54.0));
    // (3,1): 1*2^2/(3! * 4^4) = 4/1536 = 1/384
    CHECK(ank_lower_bound(3, 1).value == doctest::Approx(1.0 / 384.0));
    // k = 0 uses 0^0 = 1: (2,0): 2^2/(2! * 3^3) = 2/27
    CHECK(ank_lower_bound(2, 0).value == doctest::Approx(2.0 / 27.0));

    // the Orlicz variant is (n+1) times larger
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(ank_lower_bound_orlicz(n, k).value ==
                  doctest::Approx((n + 1.0) * ank_lower_bound(n, k).value));

    CHECK_THROWS_AS(ank_lower_bound(1, 0), std::domain_error);
    CHECK_THROWS_AS(ank_lower_bound(3, 4), std::domain_error);
}

TEST_CASE("g_{n,k} extrema") {
    // (2,1): max 1/4 at x = 1/2; core min 1/9 on [1/3, 2/3]
    GnkExtrema e = gnk_extrema(2, 1);
    CHECK(e.max.value == doctest::Approx(0.25));
    CHECK(e.core_min.value == doctest::Approx(1.0 / 9.0));
    CHECK(e.alpha == doctest::Approx(1.0 / 3.0));
    CHECK(e.beta == doctest::Approx(1.0 / 3.0));
    CHECK(e.core_min.value < e.max.value);

    // (4,1): 1*27/256
    CHECK(gnk_extrema(4, 1).max.value == doctest::Approx(27.0 / 256.0));
}

TEST_CASE("formula names round the id enum") {
    CHECK(formula_name(FormulaId::BrinkK) == "brink_K");
    CHECK(formula_name(FormulaId::Beesack) == "beesack");
    CHECK(formula_name(FormulaId::AnkLowerGls) == "ank_lb_gls");
    CHECK(formula_name(FormulaId::AnkLowerOrlicz) == "ank_lb_orlicz");
    CHECK(formula_name(FormulaId::GnkMax) == "gnk_max");
    CHECK(formula_name(FormulaId::GnkCoreMin) == "gnk_core_min");
}
