#include "wirtinger/function_handle.hpp"

#include <cmath>
#include <stdexcept>

namespace wirtinger {

FunctionHandle dilate(const FunctionHandle& f, double theta) {
    if (!(theta > 0.0) || !std::isfinite(theta))
        throw std::domain_error("dilate: theta must be positive and finite");
    FunctionHandle out{
        [g = f.evaluator, theta](double x) { return g(x / theta); },
        {},
        Interval(f.domain.a * theta, f.domain.b * theta)};
    double scale = 1.0;
    for (const auto& d : f.derivative_chain) {
        scale /= theta;
        out.derivative_chain.push_back(
            [d, theta, scale](double x) { return scale * d(x / theta); });
    }
    return out;
}

FunctionHandle make_sin(double omega, Interval domain) {
    FunctionHandle h{[omega](double x) { return std::sin(omega * x); }, {}, domain};
    h.derivative_chain = {
        [omega](double x) { return omega * std::cos(omega * x); },
        [omega](double x) { return -omega * omega * std::sin(omega * x); },
        [omega](double x) { return -omega * omega * omega * std::cos(omega * x); },
        [omega](double x) { return omega * omega * omega * omega * std::sin(omega * x); },
    };
    return h;
}

} // namespace wirtinger
