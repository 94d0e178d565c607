#include "wirtinger/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wirtinger/optimize.hpp"

namespace wirtinger {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPMax = 500.0;  // sup-norm limit beyond this

Interval clip_window(const Interval& support, const Interval& iv) {
    const double a = std::max(support.a, iv.a);
    const double b = std::min(support.b, iv.b);
    if (a < b) return {a, b};
    return iv;  // empty overlap: the zero extension makes f vanish on iv
}

double dense_sup(const std::function<double(double)>& f, const Interval& iv,
                 int samples = 4096) {
    double best = 0.0;
    double best_x = iv.a;
    for (int i = 0; i <= samples; ++i) {
        const double x = iv.a + iv.length() * i / samples;
        const double v = std::abs(f(x));
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    // local refinement around the best sample
    const double h = iv.length() / samples;
    const double lo = std::max(iv.a, best_x - h);
    const double hi = std::min(iv.b, best_x + h);
    if (hi > lo) {
        ScalarMin m = golden_min([&](double x) { return -std::abs(f(x)); }, lo, hi,
                                 iv.length() * 1e-13);
        best = std::max(best, -m.value);
    }
    return best;
}

/// Shared sup-over-p sweep for Grand Lebesgue style objectives.
/// Evaluates moment(p)/psi(p) on a 64-point log grid over the clipped
/// support plus golden refinement; the first grid argmax wins ties.
NormValue gls_sup_sweep(const std::function<double(double)>& moment,
                        const PsiGen& gen, double limit_candidate) {
    const double lo = gen.A() * (1.0 + 1e-9) + 1e-9;
    const double hi_raw = gen.unbounded() ? kPMax : gen.B();
    const double hi = std::min(hi_raw - 1e-9 * std::max(1.0, hi_raw), kPMax);
    if (!(hi > lo)) throw std::domain_error("gls sweep: empty moment support");
    bool diverged = false;
    auto obj = [&](double p) {
        const double v = moment(p) / gen(p);
        if (!std::isfinite(v)) diverged = true;
        return v;
    };
    ScalarMin m = log_grid_max(obj, lo, hi, 64, 1e-10);
    double value = m.value;
    if (gen.unbounded() && std::isfinite(limit_candidate))
        value = std::max(value, limit_candidate);
    if (diverged || !std::isfinite(value)) return {kInf, 0.0};
    return {value, std::abs(value) * 1e-9};
}

NormValue luxemburg_generic(const std::function<double(double)>& integral_of_phi_v,
                            double lux_floor = 0.0) {
    ScalarMin m = bracketed_log_min(
        [&](double v) { return (1.0 + integral_of_phi_v(v)) / v; });
    const double value = std::max(m.value, lux_floor);
    return {value, std::abs(value) * 1e-9};
}

} // namespace

Evaluable Evaluable::from(const Polynomial& f, const Interval& iv) {
    const Interval window =
        f.extended_by_zero() ? clip_window(f.domain(), iv) : iv;
    Evaluable ev{[f](double x) { return f(x); },
                 real_roots(f, window),
                 window};
    // exact sup via critical points of f'
    double best = std::max(std::abs(f(window.a)), std::abs(f(window.b)));
    const Polynomial df = poly_derivative(f, 1);
    for (double x : real_roots(df, window, 2048))
        best = std::max(best, std::abs(f(x)));
    ev.sup_hint = best;
    ev.sup_exact = true;
    return ev;
}

Evaluable Evaluable::from(const FunctionHandle& f, const Interval& iv) {
    Evaluable ev{f.evaluator, {}, iv};
    ev.sup_hint = dense_sup(f.evaluator, iv);
    ev.sup_exact = false;
    return ev;
}

NormValue lp_norm(const Evaluable& f, double p) {
    if (!(p >= 1.0)) throw std::domain_error("lp_norm: p >= 1 required");
    if (!std::isfinite(p)) return sup_norm(f);
    const double scale = f.sup_hint > 0.0 ? f.sup_hint : 1.0;
    if (f.sup_hint == 0.0 && f.sup_exact) return {0.0, 0.0};
    QuadResult q = integrate_split(
        [&](double x) { return std::pow(std::abs(f.f(x)) / scale, p); }, f.window,
        f.kinks);
    if (q.value <= 0.0) return {0.0, q.error_estimate};
    const double value = scale * std::pow(q.value, 1.0 / p);
    const double err = value * q.error_estimate / (p * q.value);
    return {value, err};
}

NormValue lp_norm(const Polynomial& f, double p, const Interval& iv) {
    return lp_norm(Evaluable::from(f, iv), p);
}

NormValue lp_norm(const FunctionHandle& f, double p, const Interval& iv) {
    return lp_norm(Evaluable::from(f, iv), p);
}

NormValue sup_norm(const Evaluable& f) {
    if (f.sup_exact) return {f.sup_hint, 0.0};
    return {dense_sup(f.f, f.window), 0.0};
}

NormValue sup_norm(const Polynomial& f, const Interval& iv) {
    return sup_norm(Evaluable::from(f, iv));
}

NormValue sup_norm(const FunctionHandle& f, const Interval& iv) {
    return sup_norm(Evaluable::from(f, iv));
}

NormValue normalized_lp_norm(const Evaluable& f, double p, double delta) {
    NormValue n = lp_norm(f, p);
    const double factor = std::isfinite(p) ? std::pow(delta, -1.0 / p) : 1.0;
    return {factor * n.value, factor * n.error_estimate};
}

NormValue normalized_lp_norm(const Polynomial& f, double p, const Interval& iv) {
    return normalized_lp_norm(Evaluable::from(f, iv), p, iv.length());
}

NormValue gls_norm(const Evaluable& f, const PsiGen& gen) {
    const double hi = gen.unbounded() ? kPMax : gen.B();
    const double limit = gen.unbounded() ? sup_norm(f).value / gen(hi) : -kInf;
    return gls_sup_sweep([&](double p) { return lp_norm(f, p).value; }, gen,
                         limit);
}

NormValue gls_norm(const Polynomial& f, const PsiGen& gen, const Interval& iv) {
    return gls_norm(Evaluable::from(f, iv), gen);
}

NormValue gls_fundamental(const PsiGen& gen, double delta) {
    if (!(delta > 0.0)) throw std::domain_error("gls_fundamental: delta > 0");
    const double hi = gen.unbounded() ? kPMax : gen.B();
    const double limit = gen.unbounded() ? 1.0 / gen(hi) : -kInf;
    return gls_sup_sweep([&](double p) { return std::pow(delta, 1.0 / p); }, gen,
                         limit);
}

NormValue luxemburg_norm(const Evaluable& f, const OrliczGen& gen) {
    return luxemburg_generic([&](double v) {
        return integrate_split(
                   [&](double x) { return gen(v * f.f(x)); }, f.window, f.kinks)
            .value;
    });
}

NormValue luxemburg_norm(const Polynomial& f, const OrliczGen& gen,
                         const Interval& iv) {
    return luxemburg_norm(Evaluable::from(f, iv), gen);
}

NormValue orlicz_fundamental(const OrliczGen& gen, double delta) {
    if (!(delta > 0.0)) throw std::domain_error("orlicz_fundamental: delta > 0");
    return luxemburg_generic([&](double v) { return delta * gen(v); });
}

NormValue zygmund_fundamental(double q, double gamma, double delta,
                              ZygmundExponent convention) {
    if (!(q > 1.0) || !(delta > 0.0))
        throw std::domain_error("zygmund_fundamental: q > 1, delta > 0 required");
    const double expo = convention == ZygmundExponent::Increasing ? 1.0 : -1.0;
    const double value = std::pow(delta, expo / q) *
                         std::pow(1.0 + std::abs(std::log(delta)), gamma / q);
    return {value, 0.0};
}

NormValue fundamental(const SpaceSpec& space, double delta) {
    if (!(delta > 0.0)) throw std::domain_error("fundamental: delta > 0 required");
    if (const auto* leb = std::get_if<Lebesgue>(&space)) {
        const double v =
            std::isfinite(leb->p) ? std::pow(delta, 1.0 / leb->p) : 1.0;
        return {v, 0.0};
    }
    if (const auto* gls = std::get_if<GrandLebesgue>(&space))
        return gls_fundamental(gls->gen, delta);
    if (const auto* orl = std::get_if<Orlicz>(&space))
        return orlicz_fundamental(orl->gen, delta);
    const auto& z = std::get<Zygmund>(space);
    return zygmund_fundamental(z.q, z.gamma, delta);
}

NormValue space_norm(const Evaluable& f, const SpaceSpec& space) {
    if (const auto* leb = std::get_if<Lebesgue>(&space))
        return std::isfinite(leb->p) ? lp_norm(f, leb->p) : sup_norm(f);
    if (const auto* gls = std::get_if<GrandLebesgue>(&space))
        return gls_norm(f, gls->gen);
    if (const auto* orl = std::get_if<Orlicz>(&space))
        return luxemburg_norm(f, orl->gen);
    const auto& z = std::get<Zygmund>(space);
    return luxemburg_norm(f, zygmund_orlicz_gen(z.q, z.gamma, z.C));
}

NormValue space_norm(const Polynomial& f, const SpaceSpec& space,
                     const Interval& iv) {
    return space_norm(Evaluable::from(f, iv), space);
}

NormValue space_norm_normalized(const Evaluable& f, const SpaceSpec& space,
                                double delta) {
    if (!(delta > 0.0))
        throw std::domain_error("space_norm_normalized: delta > 0 required");
    if (const auto* leb = std::get_if<Lebesgue>(&space))
        return std::isfinite(leb->p) ? normalized_lp_norm(f, leb->p, delta)
                                     : sup_norm(f);
    if (const auto* gls = std::get_if<GrandLebesgue>(&space)) {
        const PsiGen& gen = gls->gen;
        const double hi = gen.unbounded() ? kPMax : gen.B();
        const double limit = gen.unbounded() ? sup_norm(f).value / gen(hi) : -kInf;
        return gls_sup_sweep(
            [&](double p) { return normalized_lp_norm(f, p, delta).value; }, gen,
            limit);
    }
    const OrliczGen gen = std::holds_alternative<Orlicz>(space)
                              ? std::get<Orlicz>(space).gen
                              : zygmund_orlicz_gen(std::get<Zygmund>(space).q,
                                                   std::get<Zygmund>(space).gamma,
                                                   std::get<Zygmund>(space).C);
    return luxemburg_generic([&](double v) {
        return integrate_split([&](double x) { return gen(v * f.f(x)); },
                               f.window, f.kinks)
                   .value /
               delta;
    });
}

NormValue r_functional(const Evaluable& f, const SpaceSpec& space) {
    const NormValue n = space_norm(f, space);
    const NormValue phi = fundamental(space, f.window.length());
    if (!(phi.value > 0.0))
        throw std::runtime_error("r_functional: zero fundamental function");
    return {n.value / phi.value, n.error_estimate / phi.value};
}

NormValue r_functional(const Polynomial& f, const SpaceSpec& space,
                       const Interval& iv) {
    const NormValue n = space_norm(f, space, iv);
    const NormValue phi = fundamental(space, iv.length());
    if (!(phi.value > 0.0))
        throw std::runtime_error("r_functional: zero fundamental function");
    return {n.value / phi.value, n.error_estimate / phi.value};
}

} // namespace wirtinger
