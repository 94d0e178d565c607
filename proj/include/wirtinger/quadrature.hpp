#ifndef WIRTINGER_QUADRATURE_HPP
#define WIRTINGER_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <vector>

#include "wirtinger/interval.hpp"

namespace wirtinger {

struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_depth = 60;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
};

/// Thrown when the adaptive scheme exhausts max_depth; carries the best
/// estimate reached so far.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& msg, QuadResult best)
        : std::runtime_error(msg), best_estimate(best) {}
    QuadResult best_estimate;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over iv.
/// NaN from the integrand raises std::invalid_argument.
QuadResult integrate(const std::function<double(double)>& f, const Interval& iv,
                     const QuadConfig& cfg = {});

/// Same, with the interval pre-split at the given interior breakpoints
/// (e.g. the roots of a polynomial under |.|^p).
QuadResult integrate_split(const std::function<double(double)>& f,
                           const Interval& iv,
                           const std::vector<double>& breakpoints,
                           const QuadConfig& cfg = {});

} // namespace wirtinger

#endif
