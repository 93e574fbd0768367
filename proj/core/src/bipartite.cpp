#include "hcwand/bipartite.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "hcwand/rootfind.hpp"

namespace hcwand {

namespace {

void require_params(int k, double lambda, double gamma = 1.0) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
}

double cr_from_parts(double pow2_part, int k) {
    return pow2_part * ipow(double(k - 1), k + 1) / ipow(double(k), k);
}

double bip_q2_residual(int k, double lambda, double a, double c) {
    ReducedSystem sys(k, 2, ActivityProfile::ti_q2(lambda), SystemKind::Bipartite);
    std::vector<double> z = {a, c};
    return sys.max_abs_residual(z);
}

double bip_q4_residual(int k, double lambda, double gamma, double a, double b, double c,
                       double d) {
    ReducedSystem sys(k, 4, ActivityProfile::q4(lambda, gamma), SystemKind::Bipartite);
    std::vector<double> z = {a, gamma, b, c, gamma, d};
    return sys.max_abs_residual(z);
}

}  // namespace

double lambda_cr2(int k) {
    require_params(k, 1.0);
    return cr_from_parts(ipow(2.0, k + 1), k);
}

double lambda_cr3(int k, double gamma) {
    require_params(k, 1.0, gamma);
    return cr_from_parts(ipow(2.0, k) * (gamma + 1.0), k);
}

namespace {

// shared structure of the q=2 and q=4(I4) enumerations: the diagonal fixed
// point of a decreasing map plus its 2-cycle when the fixed point repels
SolutionSet enumerate_swap_system(const DecreasingMap& map,
                                  const std::function<double(double, double)>& residual) {
    SolutionSet out;
    FixedPointResult fp = solve_decreasing_fixed_point(map);
    out.solutions.push_back({fp.x0, fp.x0, residual(fp.x0, fp.x0)});
    auto cyc = find_two_cycle(map, fp.x0, invariant_bracket(map));
    if (!cyc) {
        out.regime = Regime::Unique;
        return out;
    }
    out.regime = Regime::Triple;
    out.solutions.push_back({cyc->x1, cyc->x2, residual(cyc->x1, cyc->x2)});
    out.solutions.push_back({cyc->x2, cyc->x1, residual(cyc->x2, cyc->x1)});
    return out;
}

}  // namespace

SolutionSet solve_bip_q2(int k, double lambda) {
    require_params(k, lambda);
    DecreasingMap f = make_map(MapFamily::BipQ2, k, lambda);
    return enumerate_swap_system(
        f, [&](double a, double c) { return bip_q2_residual(k, lambda, a, c); });
}

std::array<double, 4> w_map(const std::array<double, 4>& x, int k, double lambda, double gamma) {
    require_params(k, lambda, gamma);
    auto [a, b, c, d] = x;
    double s = 1.0 + gamma;
    return {lambda * ipow((s + c) / (c + d), k), lambda * ipow((s + d) / (c + d), k),
            lambda * ipow((s + a) / (a + b), k), lambda * ipow((s + b) / (a + b), k)};
}

bool in_invariant_set(InvariantSetId id, const std::array<double, 4>& x, double tol) {
    auto near = [tol](double u, double v) {
        return std::abs(u - v) <= tol * std::max({1.0, std::abs(u), std::abs(v)});
    };
    auto [a, b, c, d] = x;
    switch (id) {
        case InvariantSetId::I1: return near(a, b) && near(b, c) && near(c, d);
        case InvariantSetId::I2: return near(a, c) && near(b, d);
        case InvariantSetId::I3: return near(a, d) && near(b, c);
        case InvariantSetId::I4: return near(a, b) && near(c, d);
    }
    return false;
}

namespace {

std::vector<InvariantSetId> memberships_of(const std::array<double, 4>& x) {
    std::vector<InvariantSetId> m;
    for (auto id : {InvariantSetId::I1, InvariantSetId::I2, InvariantSetId::I3,
                    InvariantSetId::I4})
        if (in_invariant_set(id, x, 1e-9)) m.push_back(id);
    return m;
}

BipartiteSolution make_bip_solution(int k, double lambda, double gamma,
                                    const std::array<double, 4>& x) {
    BipartiteSolution s{x[0], x[1], x[2], x[3], memberships_of(x),
                        bip_q4_residual(k, lambda, gamma, x[0], x[1], x[2], x[3])};
    return s;
}

}  // namespace

BipartiteSolution solve_bip_q4_I3(int k, double lambda, double gamma) {
    require_params(k, lambda, gamma);
    // on I3 the system forces a = b, so the solution is the diagonal fixed point
    double astar = solve_decreasing_fixed_point(make_map(MapFamily::BipQ4, k, lambda, gamma)).x0;
    return make_bip_solution(k, lambda, gamma, {astar, astar, astar, astar});
}

SolutionSet solve_bip_q4_I4(int k, double lambda, double gamma) {
    require_params(k, lambda, gamma);
    DecreasingMap g = make_map(MapFamily::BipQ4, k, lambda, gamma);
    return enumerate_swap_system(g, [&](double a, double c) {
        return bip_q4_residual(k, lambda, gamma, a, a, c, c);
    });
}

std::vector<BipartiteSolution> enumerate_bip_q4(int k, double lambda, double gamma) {
    SolutionSet i4 = solve_bip_q4_I4(k, lambda, gamma);
    std::vector<BipartiteSolution> out;
    for (const PairSolution& p : i4.solutions)
        out.push_back(make_bip_solution(k, lambda, gamma, {p.first, p.first, p.second, p.second}));
    return out;
}

SShapeCertificate s_shape_certificate(MapFamily family, int k, double lambda, double aux) {
    if (family != MapFamily::BipQ2 && family != MapFamily::BipQ4)
        throw std::invalid_argument("s_shape_certificate: unsupported map family");
    DecreasingMap m = make_map(family, k, lambda, aux);
    auto h = [&](double x) { return m(m(x)); };

    SShapeCertificate cert{};
    cert.increasing_on_grid = true;
    double prev = h(1e-6);
    for (int i = 1; i <= 240; ++i) {
        double x = 1e-6 * std::pow(10.0, i / 20.0);
        double hx = h(x);
        // tolerate rounding jitter on the flat plateaus near the limits
        if (hx < prev * (1.0 - 1e-12)) cert.increasing_on_grid = false;
        prev = hx;
    }
    cert.h_at_zero = h(1e-12);
    cert.h_at_infinity = h(1e12);
    cert.expected_h_inf = lambda * ipow((ipow(2.0, k) * m.shift + lambda) / (2.0 * lambda), k);

    // the inflection of h is the unique zero of a decreasing auxiliary function
    std::function<double(double)> auxfn;
    double left, right;
    if (family == MapFamily::BipQ2) {
        auxfn = [&, m](double x) {
            return 0.5 * m(x) * (k - x - 1.0) + k * k - x - 1.0;
        };
        left = 1.0;
        right = double(k) * k;
    } else {
        double g1 = 1.0 + aux;
        auxfn = [&, m, g1](double x) {
            return m(x) * ((k - 1.0) * g1 - 2.0 * x) + ((double(k) * k - 1.0) * g1 - 2.0 * x) * g1;
        };
        left = 0.5;
        right = (double(k) * k - 1.0) * g1 / 2.0;
    }
    cert.endpoint_signs_ok = auxfn(left) > 0.0 && auxfn(right) < 0.0;
    if (cert.endpoint_signs_ok)
        cert.inflection_x = solve_bracketed_root(auxfn, {left, right});

    double lim0 = m.limit_at_infinity();
    cert.ok = cert.increasing_on_grid && cert.endpoint_signs_ok &&
              std::abs(cert.h_at_zero - lim0) <= 1e-6 * lim0 &&
              std::abs(cert.h_at_infinity - cert.expected_h_inf) <= 1e-6 * cert.expected_h_inf;
    return cert;
}

std::vector<BipartiteSolution> explore_bip_q4(int k, double lambda, double gamma, int starts,
                                              unsigned long long seed) {
    require_params(k, lambda, gamma);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> logu(-2.0, 2.0);
    std::vector<BipartiteSolution> found;
    for (int s = 0; s < starts; ++s) {
        std::array<double, 4> x;
        for (double& v : x) v = std::pow(10.0, logu(rng));
        bool bad = false;
        for (int it = 0; it < 5000 && !bad; ++it) {
            std::array<double, 4> w = w_map(x, k, lambda, gamma);
            for (int j = 0; j < 4; ++j) {
                x[j] = 0.5 * (x[j] + w[j]);  // damped iteration
                if (!std::isfinite(x[j]) || x[j] <= 0.0) bad = true;
            }
        }
        if (bad) continue;
        std::array<double, 4> w = w_map(x, k, lambda, gamma);
        double dev = 0.0;
        for (int j = 0; j < 4; ++j) dev = std::max(dev, std::abs(w[j] - x[j]) / x[j]);
        if (dev > 1e-10) continue;
        bool dup = false;
        for (const BipartiteSolution& f : found) {
            std::array<double, 4> y = {f.a, f.b, f.c, f.d};
            double dist = 0.0;
            for (int j = 0; j < 4; ++j) dist = std::max(dist, std::abs(y[j] - x[j]) / x[j]);
            if (dist < 1e-6) dup = true;
        }
        if (!dup) found.push_back(make_bip_solution(k, lambda, gamma, x));
    }
    return found;
}

}  // namespace hcwand
