#include "hcwand/scan.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "hcwand/bipartite.hpp"
#include "hcwand/rootfind.hpp"

namespace hcwand {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HCWAND_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

double closed_form_critical(ScanMode mode, int k, double aux) {
    switch (mode) {
        case ScanMode::TiQ4: return lambda_cr1(k, aux);
        case ScanMode::BipQ2: return lambda_cr2(k);
        case ScanMode::BipQ4I4: return lambda_cr3(k, aux);
    }
    throw std::invalid_argument("closed_form_critical: unknown mode");
}

double critical_criterion(ScanMode mode, int k, double aux, double lambda) {
    switch (mode) {
        case ScanMode::TiQ4: {
            double astar = solve_ti_q4_diagonal(k, lambda, aux);
            return double(k) * astar / (1.0 + aux + astar) - 1.0;
        }
        case ScanMode::BipQ2: {
            DecreasingMap f = make_map(MapFamily::BipQ2, k, lambda);
            FixedPointResult fp = solve_decreasing_fixed_point(f);
            return fp.derivative_at_x0 + 1.0;
        }
        case ScanMode::BipQ4I4: {
            DecreasingMap g = make_map(MapFamily::BipQ4, k, lambda, aux);
            FixedPointResult fp = solve_decreasing_fixed_point(g);
            return fp.derivative_at_x0 + 1.0;
        }
    }
    throw std::invalid_argument("critical_criterion: unknown mode");
}

ScanRow scan_point(ScanMode mode, int k, double aux, double lambda) {
    ScanRow row{lambda, 1, kNaN, kNaN, kNaN, critical_criterion(mode, k, aux, lambda)};
    SolutionSet set = mode == ScanMode::TiQ4    ? enumerate_ti_q4(k, lambda, aux)
                      : mode == ScanMode::BipQ2 ? solve_bip_q2(k, lambda)
                                                : solve_bip_q4_I4(k, lambda, aux);
    row.count = static_cast<int>(set.solutions.size());
    row.a_star = set.solutions.front().first;
    if (set.regime == Regime::Triple) {
        row.a1 = set.solutions[1].first;
        row.a2 = set.solutions[1].second;
    }
    return row;
}

ScanResult scan_lambda(ScanMode mode, int k, double aux, double lambda_min, double lambda_max,
                       int steps, int threads) {
    if (steps < 2) throw std::invalid_argument("scan_lambda: need at least 2 steps");
    if (!(lambda_min > 0.0 && lambda_max > lambda_min))
        throw std::invalid_argument("scan_lambda: degenerate lambda range");

    ScanResult res;
    res.mode = mode;
    res.k = k;
    res.aux = aux;
    res.rows.resize(static_cast<size_t>(steps));

    int nthreads = std::min(resolve_threads(threads), steps);
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t]() {
            try {
                for (int i = t; i < steps; i += nthreads) {
                    double lam = lambda_min + (lambda_max - lambda_min) * i / (steps - 1);
                    res.rows[static_cast<size_t>(i)] = scan_point(mode, k, aux, lam);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);

    res.closed_form_cr = closed_form_critical(mode, k, aux);
    res.empirical_cr = kNaN;
    res.rel_err = kNaN;
    // refine between the first pair of grid points where the indicator flips;
    // a grid point may land exactly on the zero of the indicator
    for (size_t i = 0; i < res.rows.size(); ++i) {
        if (res.rows[i].criterion == 0.0) {
            res.empirical_cr = res.rows[i].lambda;
        } else if (i > 0 && res.rows[i - 1].criterion * res.rows[i].criterion < 0.0) {
            res.empirical_cr =
                refine_critical(mode, k, aux, res.rows[i - 1].lambda, res.rows[i].lambda);
        } else {
            continue;
        }
        res.rel_err = std::abs(res.empirical_cr - res.closed_form_cr) / res.closed_form_cr;
        break;
    }
    return res;
}

double refine_critical(ScanMode mode, int k, double aux, double lambda_lo, double lambda_hi) {
    auto fn = [&](double lam) { return critical_criterion(mode, k, aux, lam); };
    return solve_bracketed_root(fn, {lambda_lo, lambda_hi});
}

std::vector<LambdaCurvePoint> emit_curve(int k, double lambda2, double t_min, double t_max,
                                         int steps) {
    if (!(t_min > 0.0 && t_max > t_min)) throw std::invalid_argument("emit_curve: bad t range");
    if (steps < 2) throw std::invalid_argument("emit_curve: need at least 2 steps");
    std::vector<LambdaCurvePoint> rows;
    rows.reserve(static_cast<size_t>(steps));
    double llo = std::log(t_min), lhi = std::log(t_max);
    for (int i = 0; i < steps; ++i) {
        double t = std::exp(llo + (lhi - llo) * i / (steps - 1));
        rows.push_back(lambda_curve_point(t, k, lambda2));
    }
    return rows;
}

std::string mode_name(ScanMode mode) {
    switch (mode) {
        case ScanMode::TiQ4: return "ti-q4";
        case ScanMode::BipQ2: return "bip-q2";
        case ScanMode::BipQ4I4: return "bip-q4-I4";
    }
    return "?";
}

}  // namespace hcwand
