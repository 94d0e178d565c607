#ifndef WIRTINGER_POLYNOMIAL_HPP
#define WIRTINGER_POLYNOMIAL_HPP

#include <vector>

#include "wirtinger/interval.hpp"

namespace wirtinger {

/// Exact-coefficient polynomial on an interval, optionally extended by zero
/// outside its domain. Coefficients are stored in ascending degree order and
/// trailing near-zeros are stripped at construction.
class Polynomial {
  public:
    Polynomial(std::vector<double> coeffs, Interval domain,
               bool extended_by_zero = false);

    /// Evaluates the polynomial; returns 0 outside the domain when the
    /// zero-extension flag is set.
    double operator()(double x) const;

    /// Horner evaluation ignoring the zero-extension clip.
    double eval_raw(double x) const;

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    const Interval& domain() const { return domain_; }
    bool extended_by_zero() const { return extended_by_zero_; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

  private:
    std::vector<double> coeffs_;
    Interval domain_;
    bool extended_by_zero_;
};

Polynomial operator+(const Polynomial& f, const Polynomial& g);
Polynomial operator*(const Polynomial& f, const Polynomial& g);
Polynomial operator*(double c, const Polynomial& f);

/// Exact coefficient-wise derivative of the given order.
Polynomial poly_derivative(const Polynomial& f, int order = 1);

/// Dilation T_theta[f](x) = f(x/theta); coefficients rescale exactly by
/// theta^{-i} and the domain scales by theta.
Polynomial dilate(const Polynomial& f, double theta);

/// Extremal family g_{n,k}(x) = x^k (1-x)^{n-k} on [0,1], extended by zero.
Polynomial extremal_g(int n, int k);

/// Membership class: k-fold zero at the left endpoint, (n-k)-fold zero at
/// the right endpoint.
struct ZeroClassSpec {
    int n;
    int k;

    ZeroClassSpec(int n_, int k_) : n(n_), k(k_) {
        if (n < 2 || k < 0 || k > n)
            throw std::domain_error("ZeroClassSpec: require n >= 2, 0 <= k <= n");
    }
};

/// True iff |f^{(i)}(a)| <= tol for i < k and |f^{(j)}(b)| <= tol for
/// j <= n-k-1. Empty derivative lists hold vacuously.
bool zero_class_check(const Polynomial& f, const ZeroClassSpec& spec, double tol);

/// Real roots of f inside iv located by sign-change bisection on a uniform
/// grid. Used to pre-split |f|^p integrands at their kinks.
std::vector<double> real_roots(const Polynomial& f, const Interval& iv,
                               int grid_points = 1024);

} // namespace wirtinger

#endif
