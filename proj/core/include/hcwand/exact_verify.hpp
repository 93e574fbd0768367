#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Exact-arithmetic certification of the combinatorial identities behind the
// monotonicity of the lambda(t) curve: the quartic root at t = 1 of the
// numerator polynomial, positivity of its higher coefficients, and the
// binomial inequality used in the induction.

namespace hcwand::exact {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int r);

struct ExactPoly {
    std::vector<BigInt> coeffs;  // coeffs[i] multiplies x^i; trailing zeros trimmed

    void trim();
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const BigInt& coeff(int i) const;

    BigRat eval(const BigRat& x) const;

    ExactPoly operator+(const ExactPoly& o) const;
    ExactPoly operator-(const ExactPoly& o) const;
    ExactPoly operator*(const ExactPoly& o) const;
};

// monomial c * x^p
ExactPoly monomial(const BigInt& c, int p);

// theta(t,k) = (t^k-1)(t^2k-1) + k t (t^{k-2}-1)(t^2k-1) - 2k^2 t^k (t-1)(t^{k-1}-1),
// expanded in t
ExactPoly theta_poly(int k);

// the same polynomial expanded in x = t - 1, built from binomial expansions
ExactPoly theta1_poly(int k);

// theta1 / x^4, valid once the low coefficients vanish
ExactPoly eta_poly(int k);

// coefficient of x^4 must equal k^2 (k-1)(2k^2 - k + 3) / 6
BigRat theta1_x4_coeff_formula(int k);

bool check_low_coeffs(int k);
bool check_nonneg_high_coeffs(int k);

// C(2k, i) >= 2k C(k, i-1) for i = 3..k+1
bool check_binomial_inequality(int k);

bool eta_positive_samples(int k, std::span<const BigRat> t_grid);

// sign changes in the exact coefficient sequence of 2^k a^{k+1} - lambda (a+2)^k
int descartes_sign_count(int k, const BigRat& lambda);

// exact rational equal to the given double
BigRat rational_from_double(double x);

struct VerifyReport {
    int k;
    bool low_coeffs_ok;
    bool x4_formula_ok;
    bool high_coeffs_positive;
    bool binomial_inequality_ok;
    bool descartes_ok;
    bool eta_positive_ok;
    bool all_ok() const {
        return low_coeffs_ok && x4_formula_ok && high_coeffs_positive &&
               binomial_inequality_ok && descartes_ok && eta_positive_ok;
    }
};

VerifyReport verify_k(int k);

}  // namespace hcwand::exact
