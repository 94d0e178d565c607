#ifndef WIRTINGER_INTERVAL_HPP
#define WIRTINGER_INTERVAL_HPP

#include <cmath>
#include <stdexcept>

namespace wirtinger {

/// Finite open interval (a,b) with positive length.
struct Interval {
    double a;
    double b;

    Interval(double a_, double b_) : a(a_), b(b_) {
        if (!(std::isfinite(a) && std::isfinite(b)) || !(a < b))
            throw std::domain_error("Interval: require finite a < b");
    }

    double length() const { return b - a; }
    bool contains(double x) const { return x >= a && x <= b; }
};

} // namespace wirtinger

#endif
