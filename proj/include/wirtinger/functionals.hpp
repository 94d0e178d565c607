#ifndef WIRTINGER_FUNCTIONALS_HPP
#define WIRTINGER_FUNCTIONALS_HPP

#include <map>
#include <string>
#include <vector>

#include "wirtinger/constants.hpp"
#include "wirtinger/function_handle.hpp"
#include "wirtinger/norms.hpp"
#include "wirtinger/polynomial.hpp"
#include "wirtinger/spaces.hpp"

namespace wirtinger {

/// Outcome of one theorem / inequality verification.
/// Empirical suprema over function families certify lower bounds of sups and
/// upper bounds of infs only; `certified` states which side the report
/// certifies.
struct VerdictReport {
    std::string theorem_id;
    std::map<std::string, double> parameters;
    double observed = 0.0;
    double bound = 0.0;
    bool satisfied = false;
    double margin = 0.0;
    int samples = 0;
    std::string certified;
    std::vector<std::string> warnings;
};

constexpr double kVerdictTol = 1e-6;

/// Trial set over Z(n,k). Random trials are degree-`degree` polynomials with
/// coefficients in [-1,1] multiplied by g_{n,k}, which enforces membership
/// exactly.
struct TrialFamily {
    enum class Kind { Extremal, RandomZClass, User };
    Kind kind = Kind::Extremal;
    int n = 2;
    int k = 1;
    int count = 1;
    unsigned long seed = 42;
    int degree = 8;
    std::vector<Polynomial> user;
};

std::vector<Polynomial> generate_trials(const TrialFamily& family);

/// p,q log-spaced in [1.05, 50], 24 points.
std::vector<double> default_pq_grid();
/// Delta log-spaced in [1e-3, 1e3], 25 points.
std::vector<double> default_delta_grid();

/// |f|_2 <= ((b-a)/2pi) |f'|_2 for f(a)=f(b), integral zero.
VerdictReport classical_wirtinger_check(const FunctionHandle& f, const Interval& iv);

/// Beesack: int_0^{pi/2} |u|^p <= beesack_constant(p) int_0^{pi/2} |u'|^p,
/// u(0)=0. (The classical statement is sometimes printed with upper limit p
/// on the right side; the domain [0,pi/2] is used and a warning recorded.)
VerdictReport beesack_check(const FunctionHandle& u, double p);

/// |f|_p / (Delta^{n+1/p-1/q} |f^{(n)}|_q) for f in Z(n,k).
double brink_ratio(const Polynomial& f, int n, int k, double p, double q,
                   const Interval& iv);

/// Empirical sup of brink_ratio over family x p_grid x q_grid on (0,1),
/// compared against the closed-form lower bound for A(n,k).
VerdictReport estimate_Ank(int n, int k, const TrialFamily& family,
                           const std::vector<double>& p_grid,
                           const std::vector<double>& q_grid);

/// W functional: sup_f R(T_Delta f; X) / (Delta^n R((T_Delta f)^{(n)}; Y)).
double w_functional(const SpaceSpec& X, const SpaceSpec& Y, int n, int k,
                    double delta, const TrialFamily& family);

/// Same with both norms taken under the normalized measure m/Delta.
double w_functional_normalized(const SpaceSpec& X, const SpaceSpec& Y, int n,
                               int k, double delta, const TrialFamily& family);

/// V_Delta for a Grand Lebesgue pair.
double v_delta(const Polynomial& f_proto, const PsiGen& nu_gen,
               const PsiGen& psi_gen, int n, double delta);

/// Theorem on the dilation-uniform lower bound: inf over the Delta grid of
/// the extremal-family supremum of the V quotient vs the closed-form bound.
VerdictReport v0_lower_check(const PsiGen& psi_gen, const PsiGen& nu_gen, int n,
                             int k,
                             const std::vector<double>& delta_grid = default_delta_grid());

struct ZygmundParams {
    double r0;
    double s0;
};

/// r0 = q + gamma/(q[1+|log Delta|]), s0 = p - beta/(p[1+|log Delta|]);
/// ranges r0 in [q, q+1), s0 in (0.5(1+p), p] enforced.
ZygmundParams zygmund_params(double p, double q, double gamma, double beta,
                             double delta);

/// Zygmund-pair Wirtinger quotient at one Delta (empirical sup over family).
double zygmund_wo(double p, double q, double gamma, double beta, int n, int k,
                  double delta, const TrialFamily& family);

/// Uniform-boundedness check for the Zygmund pair: fit the constant as the
/// coarse-grid max over Delta, then require no fine-grid point to exceed
/// 1.05x the fitted constant.
VerdictReport verify_zygmund_boundedness(double p, double q, double gamma,
                                         double beta, int n, int k,
                                         const TrialFamily& family);

/// Orlicz-pair lower bound: inf over the Delta grid of the extremal-family
/// supremum of the two-space quotient with the numerator fundamental taken
/// at Delta/(n+1), vs k^k(n-k)^{n-k}/(n!(n+1)^n).
VerdictReport orlicz_wbar(const OrliczGen& phi, const OrliczGen& phi1, int n,
                          int k,
                          const std::vector<double>& delta_grid = default_delta_grid());

/// nu(p) = inf_{q in (q_lo,q_hi)} [C(p,q) psi(q)] where C is the sharp
/// first-order constant (transposed-argument K formula).
double nu_from_psi(const PsiGen& psi_gen, double p, double q_lo, double q_hi);

/// |f|_p <= nu(p) ||f'||G(psi) on every p of the grid, plus the aggregated
/// ||f||G(nu) <= ||f'||G(psi) comparison with nu clipped to the grid span.
/// With natural_choice, psi(q) := |f'|_q (un-normalized) and the check
/// reduces to |f|_p <= nu(p).
VerdictReport verify_thm71(const Polynomial& f, const PsiGen& psi_gen,
                           const std::vector<double>& p_grid,
                           bool natural_choice = false);

/// Delta-sweep of w_functional: for a Lebesgue pair requires max/min within
/// 1+1e-3 (exact Delta-cancellation); otherwise requires the sweep max to
/// stay below the empirical A(n,k) cap.
VerdictReport verify_w_sweep(const SpaceSpec& X, const SpaceSpec& Y, int n,
                             int k, const TrialFamily& family,
                             const std::vector<double>& delta_grid = default_delta_grid());

} // namespace wirtinger

#endif
