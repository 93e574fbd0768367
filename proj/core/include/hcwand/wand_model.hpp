#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Compatibility structure of the "wand" graph on the integers: odd spins are
// adjacent to themselves and to both even neighbours, even spins only to
// their two odd neighbours.  Activities and boundary laws are q-periodic in
// the spin index, normalized so that the entry at spin 0 equals 1.

namespace hcwand {

// mathematical mod: result is always in [0, m)
inline long long mod_floor(long long i, long long m) {
    long long r = i % m;
    return r < 0 ? r + m : r;
}

inline bool is_odd_spin(long long s) { return mod_floor(s, 2) == 1; }

// Neighbour set of a spin in the wand graph.
std::vector<long long> neighbors(long long spin);

struct ActivityProfile {
    int period = 0;                 // q, even for solvable systems
    std::vector<double> values;     // values[0] == 1

    ActivityProfile(int q, std::vector<double> vals);

    double at(long long spin) const { return values[mod_floor(spin, period)]; }

    // (1, lambda): q = 2, even activity normalized to 1
    static ActivityProfile ti_q2(double lambda);
    // (1, lambda, lambda2, lambda): the symmetric q = 4 profile
    static ActivityProfile q4(double lambda, double lambda2);
    // (1, lambda1, lambda2, lambda3): general q = 4, residuals only
    static ActivityProfile q4_general(double lambda1, double lambda2, double lambda3);
};

struct PeriodicBoundaryLaw {
    int period = 0;
    std::vector<double> values;     // values[0] == 1

    PeriodicBoundaryLaw(int q, std::vector<double> vals);

    double at(long long spin) const { return values[mod_floor(spin, period)]; }

    // Positive periodic entries: the series over all spins diverges, so the
    // law never defines a probability measure.
    bool normalisable() const { return false; }
};

struct BipartitePair {
    PeriodicBoundaryLaw even_level;   // z
    PeriodicBoundaryLaw odd_level;    // z~

    BipartitePair(PeriodicBoundaryLaw z, PeriodicBoundaryLaw zt);
};

// Witness for the non-existence of odd-period solutions: the forced linear
// identity z_{2i} + z_{2i+1} + z_{2i+2} = z_{2i+q} + z_{2i+q+2} collapses,
// under q-periodicity, to z_{2i+1} = 0.
struct OddPeriodCertificate {
    int q;
    long long forced_zero_spin;            // representative spin with z = 0
    std::vector<long long> lhs_spins;      // {2i, 2i+1, 2i+2}
    std::vector<long long> rhs_spins;      // {2i+q, 2i+q+2}
    std::string identity;
};

class OddPeriodError : public std::invalid_argument {
public:
    explicit OddPeriodError(OddPeriodCertificate cert);
    const OddPeriodCertificate& certificate() const { return cert_; }

private:
    OddPeriodCertificate cert_;
};

OddPeriodCertificate odd_period_witness(int k, int q, const ActivityProfile& activities);

enum class SystemKind { TI, Bipartite };

// The q-periodic fixed-point system folded onto one period, with z_0 = 1
// eliminated.  Unknowns are z_1..z_{q-1} (TI) or z_1..z_{q-1}, z~_1..z~_{q-1}
// (bipartite).  Positive zeros of the residual are exactly the q-periodic
// solutions.
class ReducedSystem {
public:
    ReducedSystem(int k, int q, ActivityProfile activities, SystemKind kind);

    int tree_order() const { return k_; }
    int period() const { return q_; }
    SystemKind kind() const { return kind_; }
    const ActivityProfile& activities() const { return activities_; }

    int unknown_count() const {
        return kind_ == SystemKind::TI ? q_ - 1 : 2 * (q_ - 1);
    }

    std::vector<double> residual(std::span<const double> z) const;

    double max_abs_residual(std::span<const double> z) const;

private:
    int k_;
    int q_;
    ActivityProfile activities_;
    SystemKind kind_;
};

ReducedSystem build_reduced_system(int k, int q, const ActivityProfile& activities,
                                   SystemKind kind);

}  // namespace hcwand
