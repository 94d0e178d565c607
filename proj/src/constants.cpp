#include "wirtinger/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace wirtinger {

namespace {

double pow00(double base, double expo) {
    // 0^0 := 1 (continuous limit of k^k)
    if (expo == 0.0) return 1.0;
    return std::pow(base, expo);
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void require_nk(int n, int k) {
    if (n < 2 || k < 0 || k > n)
        throw std::domain_error("require n >= 2, 0 <= k <= n");
}

} // namespace

std::string formula_name(FormulaId id) {
    switch (id) {
        case FormulaId::BrinkK: return "brink_K";
        case FormulaId::Beesack: return "beesack";
        case FormulaId::AnkLowerGls: return "ank_lb_gls";
        case FormulaId::AnkLowerOrlicz: return "ank_lb_orlicz";
        case FormulaId::GnkMax: return "gnk_max";
        case FormulaId::GnkCoreMin: return "gnk_core_min";
    }
    return "?";
}

ConstantValue brink_K(double p, double q) {
    if (!(p > 1.0) || !(q > 1.0))
        throw std::domain_error("brink_K: p > 1 and q > 1 required");
    const double ps = p / (p - 1.0);
    const double log_gamma =
        std::lgamma(1.0 / q + 1.0 / ps) - std::lgamma(1.0 / q) - std::lgamma(1.0 / ps);
    const double value = (q / 2.0) * std::pow(1.0 + ps / q, 1.0 / p) /
                         std::pow(1.0 + q / ps, 1.0 / q) * std::exp(log_gamma);
    return {value, FormulaId::BrinkK};
}

double sharp_brink_constant(double p, double q) { return brink_K(q, p).value; }

ConstantValue beesack_constant(double p) {
    if (!(p > 1.0)) throw std::domain_error("beesack_constant: p > 1 required");
    const double value =
        1.0 / (p - 1.0) * std::pow(0.5 * p / std::sin(M_PI / p), p);
    return {value, FormulaId::Beesack};
}

ConstantValue ank_lower_bound(int n, int k) {
    require_nk(n, k);
    const double num = pow00(k, k) * pow00(n - k, n - k);
    const double value = num / (factorial(n) * std::pow(n + 1.0, n + 1.0));
    return {value, FormulaId::AnkLowerGls};
}

ConstantValue ank_lower_bound_orlicz(int n, int k) {
    require_nk(n, k);
    const double num = pow00(k, k) * pow00(n - k, n - k);
    const double value = num / (factorial(n) * std::pow(n + 1.0, n));
    return {value, FormulaId::AnkLowerOrlicz};
}

GnkExtrema gnk_extrema(int n, int k) {
    require_nk(n, k);
    const double num = pow00(k, k) * pow00(n - k, n - k);
    GnkExtrema e{
        {num / std::pow(static_cast<double>(n), n), FormulaId::GnkMax},
        {num / std::pow(n + 1.0, n), FormulaId::GnkCoreMin},
        static_cast<double>(k) / (n + 1),
        static_cast<double>(n - k) / (n + 1)};
    return e;
}

} // namespace wirtinger
