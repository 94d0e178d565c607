#ifndef WIRTINGER_SPACES_HPP
#define WIRTINGER_SPACES_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <variant>

namespace wirtinger {

/// Generating function psi(p) of a Grand Lebesgue space with moment support
/// (A,B). By default psi is divided by its grid-infimum at construction so
/// that inf psi = 1; the applied factor is retained in scale().
class PsiGen {
  public:
    enum class Form { Constant, Power, Table };

    static PsiGen constant(double c, double A, double B, bool normalize = true);
    /// psi(p) = c * p^exponent.
    static PsiGen power(double c, double exponent, double A, double B,
                        bool normalize = true);
    static PsiGen custom(std::function<double(double)> psi, double A, double B,
                         bool normalize = true);

    double operator()(double p) const { return psi_(p) / scale_; }
    double A() const { return A_; }
    double B() const { return B_; }
    bool unbounded() const { return !std::isfinite(B_); }
    Form form() const { return form_; }
    /// Normalization factor that was divided out (1 when normalize=false).
    double scale() const { return scale_; }

  private:
    PsiGen(std::function<double(double)> psi, double A, double B, Form form,
           bool normalize);

    std::function<double(double)> psi_;
    double A_;
    double B_;
    Form form_;
    double scale_ = 1.0;
};

/// Orlicz function Phi(u): convex, non-decreasing, Phi(0)=0 (spot-checked on
/// a dyadic grid at construction).
class OrliczGen {
  public:
    struct PowerTag { double p; };
    struct ZygmundTag { double q; double gamma; double C; };

    static OrliczGen power(double p);
    static OrliczGen custom(std::function<double(double)> phi);

    double operator()(double u) const { return phi_(u); }
    bool is_power() const { return std::holds_alternative<PowerTag>(tag_); }
    const std::variant<std::monostate, PowerTag, ZygmundTag>& descriptor() const {
        return tag_;
    }

    friend OrliczGen zygmund_orlicz_gen(double q, double gamma, double C);

  private:
    OrliczGen(std::function<double(double)> phi,
              std::variant<std::monostate, PowerTag, ZygmundTag> tag);

    std::function<double(double)> phi_;
    std::variant<std::monostate, PowerTag, ZygmundTag> tag_;
};

/// Phi(u) = |u|^q [log(C + u)]^gamma generating the Zygmund space
/// L_q (Log)^gamma L. C defaults to e and is doubled automatically until the
/// convexity spot-check passes.
OrliczGen zygmund_orlicz_gen(double q, double gamma,
                             double C = 2.718281828459045);

struct Lebesgue {
    double p;  // in [1, inf]
};
struct GrandLebesgue {
    PsiGen gen;
};
struct Orlicz {
    OrliczGen gen;
};
struct Zygmund {
    double q;
    double gamma;
    double C = 2.718281828459045;
};

/// Tagged union of the function-space descriptions.
using SpaceSpec = std::variant<Lebesgue, GrandLebesgue, Orlicz, Zygmund>;

std::string space_name(const SpaceSpec& space);

} // namespace wirtinger

#endif
