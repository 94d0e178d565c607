#ifndef WIRTINGER_FUNCTION_HANDLE_HPP
#define WIRTINGER_FUNCTION_HANDLE_HPP

#include <functional>
#include <vector>

#include "wirtinger/interval.hpp"

namespace wirtinger {

/// Generic non-polynomial input: an evaluator plus an optional chain of
/// exact derivatives (derivatives[i] is the (i+1)-th derivative).
struct FunctionHandle {
    std::function<double(double)> evaluator;
    std::vector<std::function<double(double)>> derivative_chain;
    Interval domain;

    double operator()(double x) const { return evaluator(x); }
};

/// T_theta[f](x) = f(x/theta); derivative chain picks up theta^{-(i+1)}.
FunctionHandle dilate(const FunctionHandle& f, double theta);

/// f(x) = sin(omega x) with a four-deep exact derivative chain.
FunctionHandle make_sin(double omega, Interval domain);

} // namespace wirtinger

#endif
