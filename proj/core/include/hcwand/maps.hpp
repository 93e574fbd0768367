#pragma once

#include <cmath>
#include <stdexcept>

// The scalar maps driving the one-unknown reductions.  All of them are of
// the form x -> lambda * ((s + x) / (2x))^k with a positive shift s, hence
// strictly decreasing on (0, inf) with limit lambda / 2^k at infinity.

namespace hcwand {

inline double ipow(double base, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

enum class MapFamily {
    TiQ2,    // shift 2, fixed points solve the 2-periodic TI equation
    TiQ4Diag,// shift 1 + lambda2, diagonal of the 4-periodic TI system
    BipQ2,   // f: shift 2, the 2-periodic bipartite map
    BipQ4,   // g: shift 1 + gamma, the I4 map of the 4-periodic system
};

struct DecreasingMap {
    int k;
    double lambda;
    double shift;   // 2 or 1 + lambda2 / 1 + gamma

    double operator()(double x) const {
        return lambda * ipow((shift + x) / (2.0 * x), k);
    }

    double derivative(double x) const {
        return -lambda * k * shift * ipow(shift + x, k - 1) / (ipow(2.0, k) * ipow(x, k + 1));
    }

    // simplification valid only where map(x0) = x0
    double derivative_at_fixed_point(double x0) const {
        return -k * shift / (shift + x0);
    }

    double limit_at_infinity() const { return lambda / ipow(2.0, k); }
};

inline DecreasingMap make_map(MapFamily family, int k, double lambda, double aux = 0.0) {
    if (k < 2) throw std::invalid_argument("make_map: k must be >= 2");
    if (!(lambda > 0.0)) throw std::invalid_argument("make_map: lambda must be positive");
    switch (family) {
        case MapFamily::TiQ2:
        case MapFamily::BipQ2:
            return {k, lambda, 2.0};
        case MapFamily::TiQ4Diag:
        case MapFamily::BipQ4:
            if (!(aux > 0.0))
                throw std::invalid_argument("make_map: lambda2/gamma must be positive");
            return {k, lambda, 1.0 + aux};
    }
    throw std::invalid_argument("make_map: unknown family");
}

inline double derivative_at(MapFamily family, int k, double lambda, double aux, double x) {
    if (!(x > 0.0)) throw std::invalid_argument("derivative_at: x must be positive");
    return make_map(family, k, lambda, aux).derivative(x);
}

}  // namespace hcwand
