#include "hcwand/rootfind.hpp"

#include <cmath>
#include <stdexcept>

namespace hcwand {

Bracket invariant_bracket(const DecreasingMap& map) {
    double alpha = map.limit_at_infinity();
    return {alpha, map(alpha)};
}

double solve_bracketed_root(const std::function<double(double)>& fn, Bracket bracket,
                            const RootOptions& opts,
                            const std::function<double(double)>* dfn) {
    double lo = bracket.lo, hi = bracket.hi;
    if (!(lo < hi)) throw std::invalid_argument("solve_bracketed_root: empty bracket");
    double flo = fn(lo), fhi = fn(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0)
        throw std::invalid_argument("solve_bracketed_root: no sign change across bracket");

    double mid = 0.5 * (lo + hi), fmid = fn(mid);
    for (int i = 0; i < opts.max_bisect; ++i) {
        mid = 0.5 * (lo + hi);
        fmid = fn(mid);
        if (fmid == 0.0) return mid;
        if (flo * fmid < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
        if (hi - lo <= opts.rel_width_tol * std::max(1.0, std::abs(mid))) break;
    }

    double x = 0.5 * (lo + hi);
    if (dfn) {
        // Newton polish, rejected whenever a step leaves the bracket
        for (int i = 0; i < opts.max_newton; ++i) {
            double f = fn(x);
            if (std::abs(f) <= opts.residual_tol) break;
            double d = (*dfn)(x);
            if (d == 0.0) break;
            double xn = x - f / d;
            if (!(xn > lo && xn < hi)) break;
            if (xn == x) break;
            x = xn;
        }
    }
    return x;
}

FixedPointResult solve_decreasing_fixed_point(const std::function<double(double)>& map,
                                              Bracket bracket,
                                              const std::function<double(double)>& derivative,
                                              const RootOptions& opts) {
    auto fn = [&](double x) { return map(x) - x; };
    std::function<double(double)> dfn = [&](double x) { return derivative(x) - 1.0; };
    double x0 = solve_bracketed_root(fn, bracket, opts, &dfn);
    return {x0, derivative(x0), std::abs(map(x0) - x0)};
}

FixedPointResult solve_decreasing_fixed_point(const DecreasingMap& map,
                                              const RootOptions& opts) {
    Bracket br = invariant_bracket(map);
    // widen marginally so the sign change is strict at the endpoints
    br.lo *= 0.5;
    br.hi = br.hi * 2.0 + 1.0;
    auto fn = [&](double x) { return map(x); };
    auto dfn = [&](double x) { return map.derivative(x); };
    FixedPointResult r = solve_decreasing_fixed_point(fn, br, dfn, opts);
    r.derivative_at_x0 = map.derivative_at_fixed_point(r.x0);
    return r;
}

std::optional<TwoCycle> find_two_cycle(const DecreasingMap& map, double x0,
                                       Bracket bracket, const RootOptions& opts) {
    double d = map.derivative_at_fixed_point(x0);
    if (d >= -1.0 || std::abs(d + 1.0) < 1e-9) return std::nullopt;  // attracting or tangent

    auto h = [&](double x) { return map(map(x)) - x; };

    double lo = bracket.lo;
    while (lo > 0.0 && h(lo) <= 0.0) lo *= 0.5;  // h - id > 0 near 0 (h(0+) = lambda/2^k)
    if (!(lo > 0.0)) return std::nullopt;

    double delta = 1e-6 * x0;
    double hi = x0 - delta;
    // escalate the exclusion offset near tangency
    while (delta < 0.5 * x0 && (hi <= lo || h(hi) >= 0.0)) {
        delta *= 10.0;
        hi = x0 - delta;
    }
    if (hi <= lo || h(hi) >= 0.0) return std::nullopt;

    double x1 = solve_bracketed_root(h, {lo, hi}, opts);
    double x2 = map(x1);
    if (!(x1 < x0 && x2 > x0)) return std::nullopt;
    return TwoCycle{x1, x2};
}

}  // namespace hcwand
