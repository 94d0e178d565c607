#ifndef WIRTINGER_NORMS_HPP
#define WIRTINGER_NORMS_HPP

#include <functional>
#include <vector>

#include "wirtinger/function_handle.hpp"
#include "wirtinger/interval.hpp"
#include "wirtinger/polynomial.hpp"
#include "wirtinger/quadrature.hpp"
#include "wirtinger/spaces.hpp"

namespace wirtinger {

struct NormValue {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Internal adapter: an evaluable function together with the kink locations
/// of |f|^p (sign changes of f) and the integration window.
struct Evaluable {
    std::function<double(double)> f;
    std::vector<double> kinks;
    Interval window;       // integration clipped to the support
    double sup_hint = 0.0; // sup |f| over the window
    bool sup_exact = false;

    static Evaluable from(const Polynomial& f, const Interval& iv);
    static Evaluable from(const FunctionHandle& f, const Interval& iv);
};

NormValue lp_norm(const Evaluable& f, double p);
NormValue lp_norm(const Polynomial& f, double p, const Interval& iv);
NormValue lp_norm(const FunctionHandle& f, double p, const Interval& iv);

NormValue sup_norm(const Evaluable& f);
NormValue sup_norm(const Polynomial& f, const Interval& iv);
NormValue sup_norm(const FunctionHandle& f, const Interval& iv);

/// |f|^{(Delta)}_p = Delta^{-1/p} |f|_p (normalized Lebesgue measure).
NormValue normalized_lp_norm(const Evaluable& f, double p, double delta);
NormValue normalized_lp_norm(const Polynomial& f, double p, const Interval& iv);

/// ||f||G(psi) = sup_{p in (A,B)} |f|_p / psi(p). Divergence along the grid
/// is reported as an infinite value, not an error.
NormValue gls_norm(const Evaluable& f, const PsiGen& gen);
NormValue gls_norm(const Polynomial& f, const PsiGen& gen, const Interval& iv);

/// phi(delta, G(psi)) = sup_{p in (A,B)} delta^{1/p} / psi(p).
NormValue gls_fundamental(const PsiGen& gen, double delta);

/// ||h||L(Phi) = inf_{v>0} v^{-1} [1 + int_0^Delta Phi(v h(x)) dx].
NormValue luxemburg_norm(const Evaluable& f, const OrliczGen& gen);
NormValue luxemburg_norm(const Polynomial& f, const OrliczGen& gen,
                         const Interval& iv);

/// phi(L(Phi), delta) = inf_{v>0} v^{-1} [1 + delta Phi(v)].
NormValue orlicz_fundamental(const OrliczGen& gen, double delta);

enum class ZygmundExponent {
    Increasing,  // delta^{+1/q}, the r.i. convention (default)
    Printed      // delta^{-1/q} as printed
};

/// delta^{1/q} (1 + |log delta|)^{gamma/q}.
NormValue zygmund_fundamental(double q, double gamma, double delta,
                              ZygmundExponent convention = ZygmundExponent::Increasing);

/// Dispatching fundamental function phi(X, delta).
NormValue fundamental(const SpaceSpec& space, double delta);

/// Norm of f in the given space.
NormValue space_norm(const Evaluable& f, const SpaceSpec& space);
NormValue space_norm(const Polynomial& f, const SpaceSpec& space,
                     const Interval& iv);

/// Norm of f in the given space under the normalized measure m/Delta
/// (density 1/Delta folded into the integral).
NormValue space_norm_normalized(const Evaluable& f, const SpaceSpec& space,
                                double delta);

/// R(f; X, Delta) = ||f||X / phi(X, Delta).
NormValue r_functional(const Evaluable& f, const SpaceSpec& space);
NormValue r_functional(const Polynomial& f, const SpaceSpec& space,
                       const Interval& iv);

} // namespace wirtinger

#endif
