#include "wirtinger/optimize.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace wirtinger {

namespace {
constexpr double kInvPhi = 0.6180339887498949;
}

ScalarMin golden_min(const std::function<double(double)>& f, double a, double b,
                     double x_tol) {
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > x_tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

ScalarMin log_grid_min(const std::function<double(double)>& f, double lo,
                       double hi, int n, double log_tol) {
    if (!(lo > 0.0 && hi > lo))
        throw std::domain_error("log_grid_min: require 0 < lo < hi");
    const double la = std::log(lo), lb = std::log(hi);
    std::vector<double> xs(n);
    int best = 0;
    double best_val = 0.0;
    for (int i = 0; i < n; ++i) {
        xs[i] = std::exp(la + (lb - la) * i / (n - 1));
        const double v = f(xs[i]);
        if (i == 0 || v < best_val) {  // first grid point wins ties
            best = i;
            best_val = v;
        }
    }
    const double ra = std::log(xs[best > 0 ? best - 1 : 0]);
    const double rb = std::log(xs[best + 1 < n ? best + 1 : n - 1]);
    ScalarMin refined{xs[best], best_val};
    if (rb > ra) {
        ScalarMin g = golden_min([&](double t) { return f(std::exp(t)); }, ra, rb,
                                 log_tol);
        if (g.value < refined.value) refined = {std::exp(g.x), g.value};
    }
    return refined;
}

ScalarMin log_grid_max(const std::function<double(double)>& f, double lo,
                       double hi, int n, double log_tol) {
    ScalarMin m = log_grid_min([&](double x) { return -f(x); }, lo, hi, n, log_tol);
    return {m.x, -m.value};
}

ScalarMin bracketed_log_min(const std::function<double(double)>& f, double lo,
                            double hi, double log_tol) {
    double la = std::log(lo), lb = std::log(hi);
    auto g = [&](double t) { return f(std::exp(t)); };
    // Expand until an interior point beats both ends.
    for (int round = 0;; ++round) {
        const int n = 33;
        double best_val = 0.0;
        int best = 0;
        for (int i = 0; i < n; ++i) {
            const double v = g(la + (lb - la) * i / (n - 1));
            if (i == 0 || v < best_val) {
                best = i;
                best_val = v;
            }
        }
        if (best > 0 && best < n - 1) {
            const double h = (lb - la) / (n - 1);
            ScalarMin m = golden_min(g, la + (best - 1) * h, la + (best + 1) * h,
                                     log_tol);
            return {std::exp(m.x), m.value};
        }
        if (lb - la > 60.0 * std::log(10.0))
            throw std::runtime_error(
                "bracketed_log_min: objective monotone over 60 decades");
        if (best == 0)
            la -= (lb - la);
        else
            lb += (lb - la);
    }
}

} // namespace wirtinger
