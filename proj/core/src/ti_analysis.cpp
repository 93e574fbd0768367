#include "hcwand/ti_analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "hcwand/exact_verify.hpp"
#include "hcwand/maps.hpp"
#include "hcwand/rootfind.hpp"

namespace hcwand {

namespace {

void require_params(int k, double lambda, double lambda2 = 1.0) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    if (!(lambda2 > 0.0)) throw std::invalid_argument("lambda2 must be positive");
}

// direct summation, stable at t = 1
double geom_sum(double t, int lo, int hi) {
    double s = 0.0;
    for (int i = lo; i <= hi; ++i) s += ipow(t, i);
    return s;
}

}  // namespace

double solve_ti_q2(int k, double lambda) {
    require_params(k, lambda);
    return solve_decreasing_fixed_point(make_map(MapFamily::TiQ2, k, lambda)).x0;
}

double lambda_cr1(int k, double lambda2) {
    require_params(k, 1.0, lambda2);
    return ipow(2.0, k) * (lambda2 + 1.0) / ((k - 1) * ipow(double(k), k));
}

double solve_ti_q4_diagonal(int k, double lambda, double lambda2) {
    require_params(k, lambda, lambda2);
    return solve_decreasing_fixed_point(make_map(MapFamily::TiQ4Diag, k, lambda, lambda2)).x0;
}

double lambda_of_t(double t, int k, double lambda2) {
    require_params(k, 1.0, lambda2);
    if (!(t > 0.0)) throw std::invalid_argument("lambda_of_t: t must be positive");
    double num = (lambda2 + 1.0) * ipow(ipow(t, k) + 1.0, k);
    double den = geom_sum(t, 1, k - 1) * ipow(geom_sum(t, 0, k - 1), k);
    return num / den;
}

double lambda_curve_derivative(double t, int k, double lambda2) {
    require_params(k, 1.0, lambda2);
    if (!(t > 0.0)) throw std::invalid_argument("lambda_curve_derivative: t must be positive");
    static thread_local int cached_k = -1;
    static thread_local std::vector<double> eta;
    if (cached_k != k) {
        exact::ExactPoly p = exact::eta_poly(k);
        eta.clear();
        for (const auto& c : p.coeffs) eta.push_back(static_cast<double>(c));
        cached_k = k;
    }
    double x = t - 1.0;
    double eta_val = 0.0;
    for (auto it = eta.rbegin(); it != eta.rend(); ++it) eta_val = eta_val * x + *it;
    double A = geom_sum(t, 0, k - 1);
    double B = geom_sum(t, 0, k - 2);
    double num = (lambda2 + 1.0) * ipow(ipow(t, k) + 1.0, k - 1) * x * eta_val;
    double den = t * t * ipow(A, k + 1) * B * B;
    return num / den;
}

std::optional<double> invert_lambda_curve(double lambda, int k, double lambda2) {
    require_params(k, lambda, lambda2);
    if (lambda <= lambda_cr1(k, lambda2)) return std::nullopt;
    double lo = 1.0 + 1e-8;
    if (lambda_of_t(lo, k, lambda2) >= lambda) return std::nullopt;  // within rounding of the minimum
    double hi = 2.0;
    while (lambda_of_t(hi, k, lambda2) <= lambda) hi *= 2.0;  // lambda(t) -> inf with t
    auto fn = [&](double t) { return lambda_of_t(t, k, lambda2) - lambda; };
    return solve_bracketed_root(fn, {lo, hi});
}

SolutionSet enumerate_ti_q4(int k, double lambda, double lambda2) {
    require_params(k, lambda, lambda2);
    ReducedSystem sys(k, 4, ActivityProfile::q4(lambda, lambda2), SystemKind::TI);

    SolutionSet out;
    double astar = solve_ti_q4_diagonal(k, lambda, lambda2);
    std::vector<double> zdiag = {astar, lambda2, astar};
    out.solutions.push_back({astar, astar, sys.max_abs_residual(zdiag)});

    std::optional<double> t = invert_lambda_curve(lambda, k, lambda2);
    if (!t) {
        out.regime = Regime::Unique;
        return out;
    }
    out.regime = Regime::Triple;
    double c = (lambda2 + 1.0) / geom_sum(*t, 1, k - 1);
    double a = ipow(*t, k) * c;   // a > c on the canonical t > 1 branch
    std::vector<double> z1 = {a, lambda2, c};
    std::vector<double> z2 = {c, lambda2, a};
    out.solutions.push_back({a, c, sys.max_abs_residual(z1)});
    out.solutions.push_back({c, a, sys.max_abs_residual(z2)});
    return out;
}

LambdaCurvePoint lambda_curve_point(double t, int k, double lambda2) {
    double c = (lambda2 + 1.0) / geom_sum(t, 1, k - 1);
    return {t, lambda_of_t(t, k, lambda2), ipow(t, k) * c, c};
}

double locate_curve_minimum(int k, double lambda2) {
    auto dfn = [&](double t) { return lambda_curve_derivative(t, k, lambda2); };
    return solve_bracketed_root(dfn, {0.5, 2.0});
}

PeriodicBoundaryLaw assemble_ti_vector_q2(double a) {
    return PeriodicBoundaryLaw(2, {1.0, a});
}

PeriodicBoundaryLaw assemble_ti_vector_q4(double a, double c, double lambda2) {
    return PeriodicBoundaryLaw(4, {1.0, a, lambda2, c});
}

}  // namespace hcwand
