#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hcwand/wand_model.hpp"

// Leaf-to-root iteration of the raw boundary-law recursion on a truncated
// spin window [-M, M].  Spins beyond the window contribute 0 to neighbour
// sums; after each step the law is renormalized so the spin-0 entry is 1.

namespace hcwand {

struct TruncatedLaw {
    int M = 0;
    std::vector<double> values;  // 2M+1 entries, spin i stored at i+M

    TruncatedLaw() = default;
    TruncatedLaw(int M_, std::vector<double> v);

    double at(long long spin) const {
        if (spin < -M || spin > M) return 0.0;
        return values[static_cast<size_t>(spin + M)];
    }
    double& ref(long long spin) { return values[static_cast<size_t>(spin + M)]; }
};

TruncatedLaw step(std::span<const TruncatedLaw> children, int k,
                  const ActivityProfile& activities, int M);

enum class BoundaryKind { ConstantOne, ExactPattern, PerturbedPattern, Spike };

// pattern is the q-periodic target (pattern[mod_floor(i, q)]); noise is a
// multiplicative half-width for PerturbedPattern
TruncatedLaw make_boundary(BoundaryKind kind, int M, const std::vector<double>& pattern,
                           double noise, std::uint64_t seed);

// max over |i| <= M-margin of the relative deviation from the periodic
// pattern; the window edge loses one neighbour contribution per step, so a
// depth-d run is only trustworthy with margin >= d + 1
double pattern_deviation(const TruncatedLaw& law, const std::vector<double>& pattern,
                         int margin = 2);

struct RecursionRun {
    int k = 0;
    int depth = 0;
    int M = 0;
    bool diverged = false;
    bool converged = false;
    std::vector<TruncatedLaw> levels;   // levels[0] = boundary, levels[depth] = root
    std::vector<double> metrics;        // deviation per level vs target (if given)
};

struct RunOptions {
    double overflow_bound = 1e100;
    double convergence_tol = 1e-8;
    int metric_margin = 2;  // window excluded from the deviation metric
};

RecursionRun run(int k, int depth, int M, const ActivityProfile& activities,
                 const TruncatedLaw& boundary, const std::vector<double>& target_pattern = {},
                 const RunOptions& opts = {});

}  // namespace hcwand
