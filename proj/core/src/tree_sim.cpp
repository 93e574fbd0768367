#include "hcwand/tree_sim.hpp"

#include <cassert>
#include <cmath>
#include <random>
#include <stdexcept>

namespace hcwand {

TruncatedLaw::TruncatedLaw(int M_, std::vector<double> v) : M(M_), values(std::move(v)) {
    if (M < 3) throw std::invalid_argument("TruncatedLaw: M must be >= 3");
    if (values.size() != static_cast<size_t>(2 * M + 1))
        throw std::invalid_argument("TruncatedLaw: need 2M+1 values");
    for (double x : values)
        if (!(x > 0.0)) throw std::invalid_argument("TruncatedLaw: entries must be positive");
}

TruncatedLaw step(std::span<const TruncatedLaw> children, int k,
                  const ActivityProfile& activities, int M) {
    if (static_cast<int>(children.size()) != k)
        throw std::invalid_argument("step: need exactly k child laws");
    if (M < 3) throw std::invalid_argument("step: M must be >= 3");

    TruncatedLaw out;
    out.M = M;
    out.values.assign(static_cast<size_t>(2 * M + 1), 0.0);
    for (long long j = -M; j <= M; ++j) {
        double prod = activities.at(j);
        for (const TruncatedLaw& ch : children) {
            double denom = ch.at(-1) + ch.at(1);
            assert(denom > 0.0);
            double num = is_odd_spin(j) ? ch.at(j - 1) + ch.at(j) + ch.at(j + 1)
                                        : ch.at(j - 1) + ch.at(j + 1);
            prod *= num / denom;
        }
        out.ref(j) = prod;
    }
    double z0 = out.at(0);
    for (double& v : out.values) v /= z0;
    return out;
}

TruncatedLaw make_boundary(BoundaryKind kind, int M, const std::vector<double>& pattern,
                           double noise, std::uint64_t seed) {
    TruncatedLaw law;
    law.M = M;
    law.values.assign(static_cast<size_t>(2 * M + 1), 1.0);
    switch (kind) {
        case BoundaryKind::ConstantOne:
            break;
        case BoundaryKind::ExactPattern:
        case BoundaryKind::PerturbedPattern: {
            if (pattern.empty()) throw std::invalid_argument("make_boundary: pattern required");
            int q = static_cast<int>(pattern.size());
            // perturb the pattern entries, not each spin: the perturbed law
            // stays q-periodic, so the recursion acts on it through the
            // scalar maps whose regimes the solver analyses
            std::vector<double> p = pattern;
            if (kind == BoundaryKind::PerturbedPattern) {
                std::mt19937_64 rng(seed);
                std::uniform_real_distribution<double> u(-noise, noise);
                for (double& v : p) v *= 1.0 + u(rng);
            }
            for (long long j = -M; j <= M; ++j)
                law.ref(j) = p[static_cast<size_t>(mod_floor(j, q))];
            break;
        }
        case BoundaryKind::Spike:
            law.ref(1) = 10.0;
            break;
    }
    double z0 = law.at(0);
    for (double& v : law.values) v /= z0;
    return law;
}

double pattern_deviation(const TruncatedLaw& law, const std::vector<double>& pattern,
                         int margin) {
    int q = static_cast<int>(pattern.size());
    if (margin < 0 || margin >= law.M)
        throw std::invalid_argument("pattern_deviation: margin out of range");
    double worst = 0.0;
    for (long long j = -(law.M - margin); j <= law.M - margin; ++j) {
        double target = pattern[static_cast<size_t>(mod_floor(j, q))];
        worst = std::max(worst, std::abs(law.at(j) - target) / target);
    }
    return worst;
}

RecursionRun run(int k, int depth, int M, const ActivityProfile& activities,
                 const TruncatedLaw& boundary, const std::vector<double>& target_pattern,
                 const RunOptions& opts) {
    if (depth < 1) throw std::invalid_argument("run: depth must be >= 1");
    RecursionRun r;
    r.k = k;
    r.depth = depth;
    r.M = M;
    r.levels.push_back(boundary);
    if (!target_pattern.empty())
        r.metrics.push_back(pattern_deviation(boundary, target_pattern, opts.metric_margin));

    for (int level = 1; level <= depth && !r.diverged; ++level) {
        std::vector<TruncatedLaw> children(static_cast<size_t>(k), r.levels.back());
        TruncatedLaw next = step(children, k, activities, M);
        for (double& v : next.values) {
            if (!std::isfinite(v) || v > opts.overflow_bound) {
                v = opts.overflow_bound;
                r.diverged = true;
            } else if (!(v > 0.0)) {
                // underflow to zero: positivity of the law is lost
                r.diverged = true;
            }
        }
        r.levels.push_back(std::move(next));
        if (!target_pattern.empty())
            r.metrics.push_back(
                pattern_deviation(r.levels.back(), target_pattern, opts.metric_margin));
    }
    if (!r.metrics.empty() && !r.diverged)
        r.converged = r.metrics.back() < opts.convergence_tol;
    return r;
}

}  // namespace hcwand
