#include "wirtinger/spaces.hpp"

#include <cmath>
#include <stdexcept>

namespace wirtinger {

namespace {

double grid_infimum(const std::function<double(double)>& psi, double A, double B) {
    const double hi = std::isfinite(B) ? B : 500.0;
    const double lo = A * (1.0 + 1e-9) + 1e-9;
    const double hi_c = hi - 1e-9 * std::max(1.0, hi);
    double inf = std::numeric_limits<double>::infinity();
    const int n = 256;
    for (int i = 0; i <= n; ++i) {
        const double p = lo * std::pow(hi_c / lo, static_cast<double>(i) / n);
        const double v = psi(p);
        if (!(v > 0.0))
            throw std::domain_error("PsiGen: psi must be positive on (A,B)");
        inf = std::min(inf, v);
    }
    return inf;
}

bool convexity_spot_check(const std::function<double(double)>& phi) {
    if (phi(0.0) != 0.0) return false;
    double prev = 0.0;
    for (int e = -10; e <= 10; ++e) {
        const double u = std::pow(2.0, e);
        const double v = phi(u);
        if (!(v >= prev)) return false;  // monotone
        prev = v;
        const double h = u * 1e-3;
        const double second = phi(u + h) - 2.0 * v + phi(u - h);
        if (second < -1e-9 * std::max(1.0, std::abs(v))) return false;
    }
    return true;
}

} // namespace

PsiGen::PsiGen(std::function<double(double)> psi, double A, double B, Form form,
               bool normalize)
    : psi_(std::move(psi)), A_(A), B_(B), form_(form) {
    if (!(A >= 1.0) || !(B > A))
        throw std::domain_error("PsiGen: require 1 <= A < B");
    if (normalize) scale_ = grid_infimum(psi_, A_, B_);
}

PsiGen PsiGen::constant(double c, double A, double B, bool normalize) {
    if (!(c > 0.0)) throw std::domain_error("PsiGen::constant: c > 0 required");
    return PsiGen([c](double) { return c; }, A, B, Form::Constant, normalize);
}

PsiGen PsiGen::power(double c, double exponent, double A, double B,
                     bool normalize) {
    if (!(c > 0.0)) throw std::domain_error("PsiGen::power: c > 0 required");
    return PsiGen([c, exponent](double p) { return c * std::pow(p, exponent); },
                  A, B, Form::Power, normalize);
}

PsiGen PsiGen::custom(std::function<double(double)> psi, double A, double B,
                      bool normalize) {
    return PsiGen(std::move(psi), A, B, Form::Table, normalize);
}

OrliczGen::OrliczGen(std::function<double(double)> phi,
                     std::variant<std::monostate, PowerTag, ZygmundTag> tag)
    : phi_(std::move(phi)), tag_(std::move(tag)) {
    if (!convexity_spot_check(phi_))
        throw std::domain_error(
            "OrliczGen: convexity/monotonicity spot-check failed");
}

OrliczGen OrliczGen::power(double p) {
    if (!(p >= 1.0)) throw std::domain_error("OrliczGen::power: p >= 1 required");
    return OrliczGen([p](double u) { return std::pow(std::abs(u), p); },
                     PowerTag{p});
}

OrliczGen OrliczGen::custom(std::function<double(double)> phi) {
    return OrliczGen(std::move(phi), std::monostate{});
}

OrliczGen zygmund_orlicz_gen(double q, double gamma, double C) {
    if (!(q > 1.0)) throw std::domain_error("zygmund_orlicz_gen: q > 1 required");
    if (!(C >= 2.718281828459045))
        throw std::domain_error("zygmund_orlicz_gen: C >= e required");
    for (int tries = 0; tries < 40; ++tries) {
        auto phi = [q, gamma, C](double u) {
            const double a = std::abs(u);
            if (a == 0.0) return 0.0;
            return std::pow(a, q) * std::pow(std::log(C + a), gamma);
        };
        if (convexity_spot_check(phi))
            return OrliczGen(phi, OrliczGen::ZygmundTag{q, gamma, C});
        C *= 2.0;
    }
    throw std::domain_error(
        "zygmund_orlicz_gen: no C found passing the convexity spot-check");
}

std::string space_name(const SpaceSpec& space) {
    if (std::holds_alternative<Lebesgue>(space)) return "lebesgue";
    if (std::holds_alternative<GrandLebesgue>(space)) return "gls";
    if (std::holds_alternative<Orlicz>(space)) return "orlicz";
    return "zygmund";
}

} // namespace wirtinger
