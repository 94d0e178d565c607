#include "wirtinger/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace wirtinger {

namespace {

std::vector<double> strip_trailing(std::vector<double> c) {
    double scale = 0.0;
    for (double v : c) scale = std::max(scale, std::abs(v));
    const double thresh = scale * 1e-14;
    while (c.size() > 1 && std::abs(c.back()) <= thresh) c.pop_back();
    if (c.empty()) c.push_back(0.0);
    return c;
}

} // namespace

Polynomial::Polynomial(std::vector<double> coeffs, Interval domain,
                       bool extended_by_zero)
    : coeffs_(strip_trailing(std::move(coeffs))),
      domain_(domain),
      extended_by_zero_(extended_by_zero) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double Polynomial::eval_raw(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

double Polynomial::operator()(double x) const {
    if (extended_by_zero_ && (x < domain_.a || x > domain_.b)) return 0.0;
    return eval_raw(x);
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    std::vector<double> c(std::max(f.coeffs().size(), g.coeffs().size()), 0.0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) c[i] += f.coeffs()[i];
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) c[i] += g.coeffs()[i];
    return {std::move(c), f.domain(), f.extended_by_zero()};
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    std::vector<double> c(f.coeffs().size() + g.coeffs().size() - 1, 0.0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            c[i + j] += f.coeffs()[i] * g.coeffs()[j];
    return {std::move(c), f.domain(), f.extended_by_zero() || g.extended_by_zero()};
}

Polynomial operator*(double a, const Polynomial& f) {
    std::vector<double> c = f.coeffs();
    for (double& v : c) v *= a;
    return {std::move(c), f.domain(), f.extended_by_zero()};
}

Polynomial poly_derivative(const Polynomial& f, int order) {
    if (order < 0) throw std::domain_error("poly_derivative: order >= 0");
    std::vector<double> c = f.coeffs();
    for (int r = 0; r < order; ++r) {
        if (c.size() <= 1) {
            c = {0.0};
            break;
        }
        std::vector<double> d(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i)
            d[i - 1] = c[i] * static_cast<double>(i);
        c = std::move(d);
    }
    return {std::move(c), f.domain(), f.extended_by_zero()};
}

Polynomial dilate(const Polynomial& f, double theta) {
    if (!(theta > 0.0) || !std::isfinite(theta))
        throw std::domain_error("dilate: theta must be positive and finite");
    std::vector<double> c = f.coeffs();
    double pw = 1.0;
    for (std::size_t i = 1; i < c.size(); ++i) {
        pw /= theta;
        c[i] *= pw;
    }
    Interval dom(f.domain().a * theta, f.domain().b * theta);
    return {std::move(c), dom, f.extended_by_zero()};
}

Polynomial extremal_g(int n, int k) {
    if (n < 1 || k < 0 || k > n)
        throw std::domain_error("extremal_g: require n >= 1, 0 <= k <= n");
    // Expand x^k (1-x)^{n-k} by the binomial theorem.
    const int m = n - k;
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    double binom = 1.0;
    for (int j = 0; j <= m; ++j) {
        c[static_cast<std::size_t>(k + j)] = (j % 2 == 0 ? binom : -binom);
        binom = binom * static_cast<double>(m - j) / static_cast<double>(j + 1);
    }
    return {std::move(c), Interval(0.0, 1.0), /*extended_by_zero=*/true};
}

bool zero_class_check(const Polynomial& f, const ZeroClassSpec& spec, double tol) {
    Polynomial d = f;
    for (int i = 0; i < spec.k; ++i) {
        if (std::abs(d.eval_raw(f.domain().a)) > tol) return false;
        d = poly_derivative(d, 1);
    }
    d = f;
    for (int j = 0; j <= spec.n - spec.k - 1; ++j) {
        if (std::abs(d.eval_raw(f.domain().b)) > tol) return false;
        d = poly_derivative(d, 1);
    }
    return true;
}

std::vector<double> real_roots(const Polynomial& f, const Interval& iv,
                               int grid_points) {
    std::vector<double> roots;
    const double h = iv.length() / grid_points;
    double x0 = iv.a;
    double y0 = f.eval_raw(x0);
    for (int i = 1; i <= grid_points; ++i) {
        const double x1 = iv.a + i * h;
        const double y1 = f.eval_raw(x1);
        if (y0 == 0.0) {
            roots.push_back(x0);
        } else if (y0 * y1 < 0.0) {
            double lo = x0, hi = x1;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double ym = f.eval_raw(mid);
                if (ym == 0.0) { lo = hi = mid; break; }
                if (ym * y0 < 0.0) hi = mid; else lo = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        x0 = x1;
        y0 = y1;
    }
    if (y0 == 0.0) roots.push_back(x0);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [&](double a, double b) { return b - a < h * 1e-6; }),
                roots.end());
    return roots;
}

} // namespace wirtinger
