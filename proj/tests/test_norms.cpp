#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wirtinger/norms.hpp"

using namespace wirtinger;

namespace {

// |g_{n,k}|_p on (0,1) via the beta function
double gnk_lp_oracle(int n, int k, double p) {
    const double lg = std::lgamma(k * p + 1.0) + std::lgamma((n - k) * p + 1.0) -
                      std::lgamma(n * p + 2.0);
    return std::exp(lg / p);
}

} // namespace

TEST_CASE("lp norm of the extremal family matches the beta oracle") {
    const Interval iv(0.0, 1.0);
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
            for (double p : {1.0, 1.5, 2.0, 3.0, 7.0}) {
                const double got = lp_norm(extremal_g(n, k), p, iv).value;
                CHECK(got == doctest::Approx(gnk_lp_oracle(n, k, p)).epsilon(1e-9));
            }
}

TEST_CASE("lp norm survives extreme exponents without underflow") {
    const Interval iv(0.0, 1.0);
    // (sup g_{4,2})^400 = (1/16)^400 underflows; the scaled route must not.
    const double got = lp_norm(extremal_g(4, 2), 400.0, iv).value;
    CHECK(got > 0.0);
    CHECK(got < sup_norm(extremal_g(4, 2), iv).value);
    CHECK(got == doctest::Approx(gnk_lp_oracle(4, 2, 400.0)).epsilon(1e-6));
}

TEST_CASE("homogeneity of the lp norm") {
    const Interval iv(0.0, 1.0);
    Polynomial f = extremal_g(3, 2);
    for (double p : {1.0, 2.0, 5.0})
        CHECK(lp_norm(-7.5 * f, p, iv).value ==
              doctest::Approx(7.5 * lp_norm(f, p, iv).value).epsilon(1e-12));
}

TEST_CASE("Lyapunov monotonicity under the normalized measure") {
    const Interval iv(0.0, 2.0);
    Polynomial f({0.3, 1.0, -0.8}, iv);
    const Evaluable e = Evaluable::from(f, iv);
    double prev = 0.0;
    for (double p : {1.0, 1.5, 2.0, 3.0, 6.0, 12.0}) {
        const double cur = normalized_lp_norm(e, p, iv.length()).value;
        CHECK(cur >= prev * (1.0 - 1e-12));
        prev = cur;
    }
    CHECK(prev <= sup_norm(e).value * (1.0 + 1e-12));
}

TEST_CASE("p -> infinity recovers the sup norm") {
    const Interval iv(0.0, 1.0);
    Polynomial g = extremal_g(2, 1);
    const double sup = sup_norm(g, iv).value;
    CHECK(sup == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(normalized_lp_norm(g, 800.0, iv).value ==
          doctest::Approx(sup).epsilon(2e-2));
    CHECK(lp_norm(Evaluable::from(g, iv),
                  std::numeric_limits<double>::infinity())
              .value == doctest::Approx(sup));
}

TEST_CASE("grand Lebesgue norm and fundamental with psi = 1") {
    PsiGen psi = PsiGen::constant(1.0, 1.5, 4.0);
    // phi(delta) = sup_{p in (1.5,4)} delta^{1/p}: p -> B for delta < 1
    CHECK(gls_fundamental(psi, 0.25).value ==
          doctest::Approx(std::pow(0.25, 1.0 / 4.0)).epsilon(1e-6));
    // and p -> A for delta > 1
    CHECK(gls_fundamental(psi, 9.0).value ==
          doctest::Approx(std::pow(9.0, 1.0 / 1.5)).epsilon(1e-6));

    const Interval iv(0.0, 1.0);
    Polynomial g = extremal_g(2, 1);
    // |g|_p increases in p, so the norm is the limit value at p -> B
    CHECK(gls_norm(g, psi, iv).value ==
          doctest::Approx(lp_norm(g, 4.0, iv).value).epsilon(1e-6));

    // normalization: a constant-c generator behaves exactly like c = 1
    PsiGen scaled = PsiGen::constant(10.0, 1.5, 4.0);
    CHECK(scaled.scale() == doctest::Approx(10.0));
    CHECK(gls_norm(g, scaled, iv).value ==
          doctest::Approx(gls_norm(g, psi, iv).value).epsilon(1e-12));
}

TEST_CASE("Luxemburg norm closed form for the unit function") {
    const Interval iv(0.0, 1.0);
    Polynomial one({1.0}, iv);
    for (double p : {1.5, 2.0, 3.0}) {
        const double oracle = p * std::pow(p - 1.0, 1.0 / p - 1.0);
        OrliczGen phi = OrliczGen::power(p);
        const double norm = luxemburg_norm(one, phi, iv).value;
        CHECK(norm == doctest::Approx(oracle).epsilon(1e-8));
        // the fundamental at delta = 1 is the same optimization
        CHECK(orlicz_fundamental(phi, 1.0).value ==
              doctest::Approx(norm).epsilon(1e-10));
    }
}

TEST_CASE("Luxemburg norm is homogeneous") {
    const Interval iv(0.0, 1.0);
    Polynomial g = extremal_g(2, 1);
    OrliczGen phi = OrliczGen::power(2.5);
    const double base = luxemburg_norm(g, phi, iv).value;
    CHECK(luxemburg_norm(4.0 * g, phi, iv).value ==
          doctest::Approx(4.0 * base).epsilon(1e-7));
}

TEST_CASE("zygmund fundamental closed form") {
    const double q = 2.0, gamma = 1.0, d = 0.5;
    const double oracle =
        std::pow(d, 1.0 / q) *
        std::pow(1.0 + std::abs(std::log(d)), gamma / q);
    CHECK(zygmund_fundamental(q, gamma, d).value == doctest::Approx(oracle));
    const double printed = std::pow(d, -1.0 / q) *
                           std::pow(1.0 + std::abs(std::log(d)), gamma / q);
    CHECK(zygmund_fundamental(q, gamma, d, ZygmundExponent::Printed).value ==
          doctest::Approx(printed));
}

TEST_CASE("dispatching fundamental") {
    CHECK(fundamental(Lebesgue{3.0}, 8.0).value ==
          doctest::Approx(std::pow(8.0, 1.0 / 3.0)));
    CHECK(fundamental(Zygmund{2.0, 1.0}, 0.5).value ==
          doctest::Approx(zygmund_fundamental(2.0, 1.0, 0.5).value));
    OrliczGen phi = OrliczGen::power(2.0);
    CHECK(fundamental(Orlicz{phi}, 1.0).value ==
          doctest::Approx(orlicz_fundamental(phi, 1.0).value));
}

TEST_CASE("R functional is norm over fundamental") {
    const Interval iv(0.0, 1.0);
    Polynomial g = extremal_g(2, 1);
    SpaceSpec X = Lebesgue{2.0};
    const double r = r_functional(g, X, iv).value;
    CHECK(r == doctest::Approx(lp_norm(g, 2.0, iv).value /
                               fundamental(X, iv.length()).value));
}

TEST_CASE("space construction guards") {
    CHECK_THROWS(PsiGen::constant(1.0, 0.5, 3.0));   // A >= 1 required
    CHECK_THROWS(PsiGen::constant(1.0, 3.0, 2.0));   // A < B required
    CHECK_THROWS(OrliczGen::custom([](double u) { return std::sqrt(u); }));
    // zygmund generator doubles C until the convexity spot-check passes
    OrliczGen z = zygmund_orlicz_gen(2.0, 1.0);
    CHECK(z(0.0) == doctest::Approx(0.0));
    CHECK(z(2.0) > z(1.0));
}
