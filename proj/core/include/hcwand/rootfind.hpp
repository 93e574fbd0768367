#pragma once

#include <functional>
#include <optional>

#include "hcwand/maps.hpp"

namespace hcwand {

struct Bracket {
    double lo;
    double hi;
};

// [alpha, beta] with alpha = lambda/2^k, beta = map(alpha); the map sends
// this interval into itself.
Bracket invariant_bracket(const DecreasingMap& map);

struct RootOptions {
    double residual_tol = 1e-12;
    double rel_width_tol = 1e-14;
    int max_bisect = 200;
    int max_newton = 50;
};

// Bisection with an optional Newton polish kept inside the bracket.
// Requires a sign change across the bracket.
double solve_bracketed_root(const std::function<double(double)>& fn, Bracket bracket,
                            const RootOptions& opts = {},
                            const std::function<double(double)>* dfn = nullptr);

struct FixedPointResult {
    double x0;
    double derivative_at_x0;
    double residual;
};

// Unique fixed point of a continuous strictly decreasing map on the bracket.
FixedPointResult solve_decreasing_fixed_point(const std::function<double(double)>& map,
                                              Bracket bracket,
                                              const std::function<double(double)>& derivative,
                                              const RootOptions& opts = {});

FixedPointResult solve_decreasing_fixed_point(const DecreasingMap& map,
                                              const RootOptions& opts = {});

struct TwoCycle {
    double x1;  // < x0
    double x2;  // > x0
};

// 2-cycle of a decreasing map around its repelling fixed point x0: the two
// extreme fixed points of map(map(x)).  Returns nullopt when the fixed point
// is attracting or tangent (derivative at x0 >= -1 up to tolerance).
std::optional<TwoCycle> find_two_cycle(const DecreasingMap& map, double x0,
                                       Bracket bracket, const RootOptions& opts = {});

}  // namespace hcwand
