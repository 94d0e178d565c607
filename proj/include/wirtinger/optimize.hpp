#ifndef WIRTINGER_OPTIMIZE_HPP
#define WIRTINGER_OPTIMIZE_HPP

#include <functional>
#include <utility>

namespace wirtinger {

struct ScalarMin {
    double x;
    double value;
};

/// Golden-section minimization on [a,b]; x_tol is absolute in x.
ScalarMin golden_min(const std::function<double(double)>& f, double a, double b,
                     double x_tol = 1e-10);

/// Minimizes t -> f(t) on a log axis: evaluates a grid of n log-spaced points
/// on [lo,hi] (first grid point wins ties), then golden-refines around the
/// argmax's neighbours. Returns the minimum over grid and refinement.
ScalarMin log_grid_min(const std::function<double(double)>& f, double lo,
                       double hi, int n = 64, double log_tol = 1e-10);

/// Same machinery for a supremum.
ScalarMin log_grid_max(const std::function<double(double)>& f, double lo,
                       double hi, int n = 64, double log_tol = 1e-10);

/// Bracketed minimization of v -> f(v) over v>0 on the log axis with
/// geometric bracket expansion starting from [lo,hi]. Throws
/// std::runtime_error when the objective stays monotone over 60 decades.
ScalarMin bracketed_log_min(const std::function<double(double)>& f,
                            double lo = 1e-6, double hi = 1e6,
                            double log_tol = 1e-10);

} // namespace wirtinger

#endif
