#pragma once

#include <string>
#include <vector>

#include "hcwand/ti_analysis.hpp"

// Lambda sweeps over the enumerable modes, with a bisection refinement of
// the bifurcation point.  The refinement bisects a smooth criticality
// indicator rather than the discontinuous solution count: for the bipartite
// modes this is map-derivative-at-fixed-point + 1; for the TI q=4 mode it is
// the antisymmetric-perturbation growth factor of the two-variable system
// minus 1 (k a* / (1 + lambda2 + a*) - 1), which changes sign exactly where
// the off-diagonal branch appears.

namespace hcwand {

enum class ScanMode { TiQ4, BipQ2, BipQ4I4 };

struct ScanRow {
    double lambda;
    int count;              // 1 or 3
    double a_star;          // central (diagonal) solution
    double a1, a2;          // off-diagonal pair; NaN when absent
    double criterion;       // smooth criticality indicator, sign flips at lambda_cr
};

struct ScanResult {
    ScanMode mode;
    int k;
    double aux;             // lambda2 or gamma; unused for BipQ2
    std::vector<ScanRow> rows;
    double closed_form_cr;
    double empirical_cr;    // bisection on the criterion inside the scanned range; NaN if no flip
    double rel_err;
};

double closed_form_critical(ScanMode mode, int k, double aux);

// sign of this flips exactly at the closed-form critical lambda
double critical_criterion(ScanMode mode, int k, double aux, double lambda);

ScanRow scan_point(ScanMode mode, int k, double aux, double lambda);

// threads <= 0 means: HCWAND_THREADS if set, else hardware concurrency
ScanResult scan_lambda(ScanMode mode, int k, double aux, double lambda_min, double lambda_max,
                       int steps, int threads = 0);

double refine_critical(ScanMode mode, int k, double aux, double lambda_lo, double lambda_hi);

std::vector<LambdaCurvePoint> emit_curve(int k, double lambda2, double t_min, double t_max,
                                         int steps);

std::string mode_name(ScanMode mode);

}  // namespace hcwand
