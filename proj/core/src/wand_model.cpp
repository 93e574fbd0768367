#include "hcwand/wand_model.hpp"

#include <cmath>
#include <sstream>

namespace hcwand {

std::vector<long long> neighbors(long long spin) {
    if (is_odd_spin(spin)) return {spin - 1, spin, spin + 1};
    return {spin - 1, spin + 1};
}

static void check_positive(const std::vector<double>& vals, const char* what) {
    for (double v : vals)
        if (!(v > 0.0))
            throw std::invalid_argument(std::string(what) + ": entries must be strictly positive");
}

ActivityProfile::ActivityProfile(int q, std::vector<double> vals)
    : period(q), values(std::move(vals)) {
    if (q < 1) throw std::invalid_argument("ActivityProfile: period must be >= 1");
    if (static_cast<int>(values.size()) != q)
        throw std::invalid_argument("ActivityProfile: value count must equal period");
    check_positive(values, "ActivityProfile");
    if (values[0] != 1.0)
        throw std::invalid_argument("ActivityProfile: lambda_0 must equal 1");
}

ActivityProfile ActivityProfile::ti_q2(double lambda) {
    return ActivityProfile(2, {1.0, lambda});
}

ActivityProfile ActivityProfile::q4(double lambda, double lambda2) {
    return ActivityProfile(4, {1.0, lambda, lambda2, lambda});
}

ActivityProfile ActivityProfile::q4_general(double lambda1, double lambda2, double lambda3) {
    return ActivityProfile(4, {1.0, lambda1, lambda2, lambda3});
}

PeriodicBoundaryLaw::PeriodicBoundaryLaw(int q, std::vector<double> vals)
    : period(q), values(std::move(vals)) {
    if (q < 1) throw std::invalid_argument("PeriodicBoundaryLaw: period must be >= 1");
    if (static_cast<int>(values.size()) != q)
        throw std::invalid_argument("PeriodicBoundaryLaw: value count must equal period");
    check_positive(values, "PeriodicBoundaryLaw");
    if (values[0] != 1.0)
        throw std::invalid_argument("PeriodicBoundaryLaw: z_0 must equal 1");
}

BipartitePair::BipartitePair(PeriodicBoundaryLaw z, PeriodicBoundaryLaw zt)
    : even_level(std::move(z)), odd_level(std::move(zt)) {
    if (even_level.period != odd_level.period)
        throw std::invalid_argument("BipartitePair: periods must match");
}

OddPeriodError::OddPeriodError(OddPeriodCertificate cert)
    : std::invalid_argument("no-odd-period: the system has no positive q-periodic solutions for odd q=" +
                            std::to_string(cert.q) + " (" + cert.identity + ")"),
      cert_(std::move(cert)) {}

OddPeriodCertificate odd_period_witness(int k, int q, const ActivityProfile& activities) {
    (void)k;
    (void)activities;
    if (q % 2 == 0)
        throw std::invalid_argument("odd_period_witness: q is even");
    OddPeriodCertificate cert;
    cert.q = q;
    // representative i = 0
    cert.lhs_spins = {0, 1, 2};
    cert.rhs_spins = {q, q + 2};
    cert.forced_zero_spin = 1;
    std::ostringstream os;
    os << "z[0]+z[1]+z[2] = z[" << q << "]+z[" << q + 2
       << "]; q-periodicity forces z[1] = 0";
    cert.identity = os.str();
    return cert;
}

ReducedSystem::ReducedSystem(int k, int q, ActivityProfile activities, SystemKind kind)
    : k_(k), q_(q), activities_(std::move(activities)), kind_(kind) {
    if (k < 2) throw std::invalid_argument("ReducedSystem: tree order k must be >= 2");
    if (q < 1) throw std::invalid_argument("ReducedSystem: period must be >= 1");
    if (q % 2 != 0) throw OddPeriodError(odd_period_witness(k, q, activities_));
    if (activities_.period != q)
        throw std::invalid_argument("ReducedSystem: activity period must equal q");
}

namespace {

// periodic extension with z_0 = 1 and unknowns z_1..z_{q-1}
struct Folded {
    int q;
    std::span<const double> z;  // q-1 entries

    double at(long long spin) const {
        long long j = mod_floor(spin, q);
        return j == 0 ? 1.0 : z[static_cast<size_t>(j - 1)];
    }
};

double rhs_at(long long j, int k, const ActivityProfile& acts, const Folded& src) {
    double denom = src.at(-1) + src.at(1);
    double num = is_odd_spin(j) ? src.at(j - 1) + src.at(j) + src.at(j + 1)
                                : src.at(j - 1) + src.at(j + 1);
    return acts.at(j) * std::pow(num / denom, k);
}

}  // namespace

std::vector<double> ReducedSystem::residual(std::span<const double> z) const {
    if (static_cast<int>(z.size()) != unknown_count())
        throw std::invalid_argument("residual: wrong unknown count");
    for (double v : z)
        if (!(v > 0.0)) throw std::invalid_argument("residual: unknowns must be strictly positive");

    std::vector<double> res;
    res.reserve(z.size());
    if (kind_ == SystemKind::TI) {
        Folded f{q_, z};
        for (long long j = 1; j < q_; ++j)
            res.push_back(f.at(j) - rhs_at(j, k_, activities_, f));
    } else {
        size_t n = static_cast<size_t>(q_ - 1);
        Folded even{q_, z.subspan(0, n)};
        Folded odd{q_, z.subspan(n, n)};
        // each level is driven by the other level
        for (long long j = 1; j < q_; ++j)
            res.push_back(even.at(j) - rhs_at(j, k_, activities_, odd));
        for (long long j = 1; j < q_; ++j)
            res.push_back(odd.at(j) - rhs_at(j, k_, activities_, even));
    }
    return res;
}

double ReducedSystem::max_abs_residual(std::span<const double> z) const {
    double m = 0.0;
    for (double r : residual(z)) m = std::max(m, std::abs(r));
    return m;
}

ReducedSystem build_reduced_system(int k, int q, const ActivityProfile& activities,
                                   SystemKind kind) {
    return ReducedSystem(k, q, activities, kind);
}

}  // namespace hcwand
