#ifndef WIRTINGER_CONSTANTS_HPP
#define WIRTINGER_CONSTANTS_HPP

#include <string>

namespace wirtinger {

enum class FormulaId {
    BrinkK,
    Beesack,
    AnkLowerGls,
    AnkLowerOrlicz,
    GnkMax,
    GnkCoreMin,
};

struct ConstantValue {
    double value;
    FormulaId formula_id;
};

std::string formula_name(FormulaId id);

/// K(p,q) = (q/2) (1+p*/q)^{1/p} (1+q/p*)^{-1/q}
///          Gamma(1/q+1/p*) / (Gamma(1/q) Gamma(1/p*)), p* = p/(p-1).
/// Evaluated with log-Gamma. Note: the valid sharp-constant orientation for
/// |f|_p <= K |f'|_q transposes the arguments; see sharp_brink_constant.
ConstantValue brink_K(double p, double q);

/// Sharp constant for |f|_p <= C(p,q) |f'|_q with f(a)=f(b)=0 on a unit
/// interval: the K formula with its arguments transposed (the orientation
/// that the inequality actually satisfies numerically).
double sharp_brink_constant(double p, double q);

/// (1/(p-1)) (p/2 / sin(pi/p))^p.
ConstantValue beesack_constant(double p);

/// k^k (n-k)^{n-k} / (n! (n+1)^{n+1}), with 0^0 = 1.
ConstantValue ank_lower_bound(int n, int k);

/// k^k (n-k)^{n-k} / (n! (n+1)^n) = (n+1) * ank_lower_bound.
ConstantValue ank_lower_bound_orlicz(int n, int k);

struct GnkExtrema {
    ConstantValue max;       // k^k (n-k)^{n-k} / n^n at x = k/n
    ConstantValue core_min;  // lower bound k^k (n-k)^{n-k} / (n+1)^n on the core
    double alpha;            // k/(n+1)
    double beta;             // (n-k)/(n+1); core interval is [alpha, 1-beta]
};

GnkExtrema gnk_extrema(int n, int k);

} // namespace wirtinger

#endif
