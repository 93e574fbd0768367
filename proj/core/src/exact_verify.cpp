#include "hcwand/exact_verify.hpp"

#include <cmath>
#include <stdexcept>

namespace hcwand::exact {

BigInt binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    BigInt num = 1, den = 1;
    for (int i = 0; i < r; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

void ExactPoly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

const BigInt& ExactPoly::coeff(int i) const {
    static const BigInt zero = 0;
    if (i < 0 || i >= static_cast<int>(coeffs.size())) return zero;
    return coeffs[static_cast<size_t>(i)];
}

BigRat ExactPoly::eval(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + BigRat(*it);
    return acc;
}

ExactPoly ExactPoly::operator+(const ExactPoly& o) const {
    ExactPoly r;
    r.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()), 0);
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += coeffs[i];
    for (size_t i = 0; i < o.coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    r.trim();
    return r;
}

ExactPoly ExactPoly::operator-(const ExactPoly& o) const {
    ExactPoly r;
    r.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()), 0);
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += coeffs[i];
    for (size_t i = 0; i < o.coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
    r.trim();
    return r;
}

ExactPoly ExactPoly::operator*(const ExactPoly& o) const {
    ExactPoly r;
    if (coeffs.empty() || o.coeffs.empty()) return r;
    r.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, 0);
    for (size_t i = 0; i < coeffs.size(); ++i)
        for (size_t j = 0; j < o.coeffs.size(); ++j) r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
    r.trim();
    return r;
}

ExactPoly monomial(const BigInt& c, int p) {
    ExactPoly r;
    r.coeffs.assign(static_cast<size_t>(p) + 1, 0);
    r.coeffs.back() = c;
    r.trim();
    return r;
}

namespace {

// t^n - 1
ExactPoly tpow_minus_one(int n) {
    ExactPoly r = monomial(1, n);
    return r - monomial(1, 0);
}

// sum_{i=a}^{b} C(n, i) x^{i+off}
ExactPoly binom_sum(int n, int a, int b, int off = 0) {
    ExactPoly r;
    if (b < a) return r;
    r.coeffs.assign(static_cast<size_t>(b + off) + 1, 0);
    for (int i = a; i <= b; ++i) r.coeffs[static_cast<size_t>(i + off)] = binomial(n, i);
    r.trim();
    return r;
}

}  // namespace

ExactPoly theta_poly(int k) {
    if (k < 2) throw std::invalid_argument("theta_poly: k must be >= 2");
    ExactPoly t2k = tpow_minus_one(2 * k);
    ExactPoly first = tpow_minus_one(k) * t2k;
    ExactPoly second = monomial(k, 1) * tpow_minus_one(k - 2) * t2k;
    ExactPoly third = monomial(2 * static_cast<BigInt>(k) * k, k) * tpow_minus_one(1) *
                      tpow_minus_one(k - 1);
    return first + second - third;
}

ExactPoly theta1_poly(int k) {
    if (k < 2) throw std::invalid_argument("theta1_poly: k must be >= 2");
    ExactPoly A = binom_sum(2 * k, 1, 2 * k);                       // (x+1)^2k - 1
    ExactPoly B = binom_sum(k, 1, k);                               // (x+1)^k - 1
    ExactPoly xplus1 = binom_sum(1, 0, 1);
    ExactPoly C = monomial(k, 0) * xplus1 * binom_sum(k - 2, 1, k - 2);
    ExactPoly D = binom_sum(k, 0, k, 1);                            // x (x+1)^k
    ExactPoly E = binom_sum(k - 1, 1, k - 1);                       // (x+1)^{k-1} - 1
    return A * (B + C) - monomial(2 * static_cast<BigInt>(k) * k, 0) * D * E;
}

ExactPoly eta_poly(int k) {
    if (!check_low_coeffs(k))
        throw std::domain_error("eta_poly: low coefficients of theta1 do not vanish");
    ExactPoly t1 = theta1_poly(k);
    ExactPoly r;
    if (t1.degree() >= 4) r.coeffs.assign(t1.coeffs.begin() + 4, t1.coeffs.end());
    return r;
}

BigRat theta1_x4_coeff_formula(int k) {
    BigInt kk = k;
    return BigRat(kk * kk * (kk - 1) * (2 * kk * kk - kk + 3), 6);
}

bool check_low_coeffs(int k) {
    ExactPoly t1 = theta1_poly(k);
    for (int i = 0; i <= 3; ++i)
        if (t1.coeff(i) != 0) return false;
    return BigRat(t1.coeff(4)) == theta1_x4_coeff_formula(k);
}

bool check_nonneg_high_coeffs(int k) {
    ExactPoly t1 = theta1_poly(k);
    for (int i = 4; i <= t1.degree(); ++i)
        if (t1.coeff(i) <= 0) return false;
    return t1.degree() >= 4;
}

bool check_binomial_inequality(int k) {
    for (int i = 3; i <= k + 1; ++i)
        if (binomial(2 * k, i) < 2 * k * binomial(k, i - 1)) return false;
    return true;
}

bool eta_positive_samples(int k, std::span<const BigRat> t_grid) {
    ExactPoly eta = eta_poly(k);  // throws when the x^4 division is invalid
    for (const BigRat& t : t_grid) {
        if (!(t > 0)) throw std::invalid_argument("eta_positive_samples: grid must be positive");
        if (eta.eval(t - 1) <= 0) return false;
    }
    return true;
}

int descartes_sign_count(int k, const BigRat& lambda) {
    if (!(lambda > 0)) throw std::invalid_argument("descartes_sign_count: lambda must be positive");
    BigInt p = boost::multiprecision::numerator(lambda);
    BigInt q = boost::multiprecision::denominator(lambda);
    // q * 2^k a^{k+1} - p (a+2)^k, coefficients in a
    std::vector<BigInt> c(static_cast<size_t>(k) + 2, 0);
    c[static_cast<size_t>(k) + 1] = q << k;
    for (int j = 0; j <= k; ++j)
        c[static_cast<size_t>(j)] -= p * binomial(k, j) * (BigInt(1) << (k - j));
    int changes = 0;
    int prev = 0;
    for (const BigInt& v : c) {
        int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
    }
    return changes;
}

BigRat rational_from_double(double x) {
    if (x == 0.0) return 0;
    if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite");
    int e = 0;
    double m = std::frexp(x, &e);
    auto im = static_cast<long long>(std::ldexp(m, 53));
    e -= 53;
    BigRat r(im);
    if (e > 0)
        r *= BigRat(BigInt(1) << e);
    else if (e < 0)
        r /= BigRat(BigInt(1) << -e);
    return r;
}

VerifyReport verify_k(int k) {
    VerifyReport rep{};
    rep.k = k;
    rep.low_coeffs_ok = true;
    ExactPoly t1 = theta1_poly(k);
    for (int i = 0; i <= 3; ++i) rep.low_coeffs_ok = rep.low_coeffs_ok && t1.coeff(i) == 0;
    rep.x4_formula_ok = BigRat(t1.coeff(4)) == theta1_x4_coeff_formula(k);
    rep.high_coeffs_positive = check_nonneg_high_coeffs(k);
    rep.binomial_inequality_ok = check_binomial_inequality(k);
    rep.descartes_ok = true;
    for (const BigRat& lam : {BigRat(1, 3), BigRat(2), BigRat(1000000, 7)})
        rep.descartes_ok = rep.descartes_ok && descartes_sign_count(k, lam) == 1;
    std::vector<BigRat> grid = {BigRat(1, 2),  BigRat(3, 2), BigRat(2), BigRat(10),
                                BigRat(1, 10), BigRat(1000001, 1000000)};
    rep.eta_positive_ok = rep.low_coeffs_ok && rep.x4_formula_ok &&
                          eta_positive_samples(k, grid);
    return rep;
}

}  // namespace hcwand::exact
