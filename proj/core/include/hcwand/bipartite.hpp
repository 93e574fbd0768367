#pragma once

#include <array>
#include <vector>

#include "hcwand/maps.hpp"
#include "hcwand/ti_analysis.hpp"
#include "hcwand/wand_model.hpp"

// Height-periodic (bipartite) solutions: the 2-periodic system a = f(c),
// c = f(a), and the 4-periodic system restricted to the invariant sets of
// the alternating map W on (a, b, c, d).

namespace hcwand {

double lambda_cr2(int k);
double lambda_cr3(int k, double gamma);

// {(a*,a*)} for lambda >= lambda_cr2, plus the 2-cycle pair below it
SolutionSet solve_bip_q2(int k, double lambda);

enum class InvariantSetId { I1, I2, I3, I4 };

// a' = lambda ((1+gamma+c)/(c+d))^k etc: one application of the alternating map
std::array<double, 4> w_map(const std::array<double, 4>& x, int k, double lambda, double gamma);

bool in_invariant_set(InvariantSetId id, const std::array<double, 4>& x, double tol);

struct BipartiteSolution {
    double a, b, c, d;
    std::vector<InvariantSetId> memberships;
    double residual;  // max |reduced bipartite residual|, q = 4
};

// unique solution on I3 (forced onto the diagonal a = b = c = d)
BipartiteSolution solve_bip_q4_I3(int k, double lambda, double gamma);

// solutions on I4 via the scalar map g
SolutionSet solve_bip_q4_I4(int k, double lambda, double gamma);

std::vector<BipartiteSolution> enumerate_bip_q4(int k, double lambda, double gamma);

// Numerical S-shape certificate for the composite h = m(m(x)) of the q=2 map
// f or the q=4 map g: monotone increasing, finite limits, and a unique
// inflection located through the auxiliary decreasing function.
struct SShapeCertificate {
    bool increasing_on_grid;
    double h_at_zero;        // observed limit as x -> 0+
    double h_at_infinity;    // observed limit as x -> inf
    double expected_h_inf;   // lambda ((2^k s + lambda) / (2 lambda))^k with s the map shift
    bool endpoint_signs_ok;  // aux > 0 at the left probe, < 0 at the right probe
    double inflection_x;
    bool ok;
};

SShapeCertificate s_shape_certificate(MapFamily family, int k, double lambda, double aux = 0.0);

// Non-exhaustive exploration of the full 4-variable system by damped
// fixed-point iteration of W from random positive starts.
std::vector<BipartiteSolution> explore_bip_q4(int k, double lambda, double gamma,
                                              int starts, unsigned long long seed);

}  // namespace hcwand
