#pragma once

#include <optional>
#include <vector>

#include "hcwand/wand_model.hpp"

// Translation-invariant solutions: the unique 2-periodic law, and the
// 4-periodic diagonal / off-diagonal branches parametrized by the ratio
// t = (lambda2 + 1 + a) / (lambda2 + 1 + c).

namespace hcwand {

enum class Regime { Unique, Triple };

struct PairSolution {
    double first;
    double second;
    double residual;  // max |reduced-system residual|
};

struct SolutionSet {
    Regime regime;
    std::vector<PairSolution> solutions;  // diagonal first, then the swapped pair
};

// unique positive root of 2^k a^{k+1} = lambda (a+2)^k
double solve_ti_q2(int k, double lambda);

// 2^k (lambda2 + 1) / ((k-1) k^k): threshold for the off-diagonal branch
double lambda_cr1(int k, double lambda2);

// unique positive fixed point of x -> lambda ((1 + lambda2 + x) / (2x))^k
double solve_ti_q4_diagonal(int k, double lambda, double lambda2);

double lambda_of_t(double t, int k, double lambda2);

// d lambda / dt in the cancellation-free factored form
// (lambda2+1) (t^k+1)^{k-1} (t-1) eta(t-1) / (t^2 A^{k+1} B^2),
// with A = sum_{0}^{k-1} t^i, B = sum_{0}^{k-2} t^i and eta the exact
// quotient of the numerator polynomial by (t-1)^4
double lambda_curve_derivative(double t, int k, double lambda2);

// the unique t > 1 with lambda(t) = lambda; none for lambda <= lambda_cr1
std::optional<double> invert_lambda_curve(double lambda, int k, double lambda2);

SolutionSet enumerate_ti_q4(int k, double lambda, double lambda2);

struct LambdaCurvePoint {
    double t;
    double lambda;
    double a;
    double c;
};

LambdaCurvePoint lambda_curve_point(double t, int k, double lambda2);

// argmin of lambda(t), by bisecting the analytic derivative
double locate_curve_minimum(int k, double lambda2);

// period descriptor (1, a) for q = 2
PeriodicBoundaryLaw assemble_ti_vector_q2(double a);
// period descriptor (1, a, lambda2, c) for q = 4
PeriodicBoundaryLaw assemble_ti_vector_q4(double a, double c, double lambda2);

}  // namespace hcwand
