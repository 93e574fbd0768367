#include <array>
#include <cmath>

#include <doctest.h>

#include "hcwand/exact_verify.hpp"
#include "hcwand/ti_analysis.hpp"

using namespace hcwand::exact;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(40, 20) == BigInt("137846528820"));
}

TEST_CASE("exact polynomial arithmetic") {
    ExactPoly p = monomial(1, 2) + monomial(-2, 1) + monomial(1, 0);  // (x-1)^2
    ExactPoly q = monomial(1, 1) + monomial(-1, 0);                   // x-1
    CHECK((q * q).coeffs == p.coeffs);
    CHECK((p - q * q).degree() == -1);
    CHECK(p.eval(BigRat(3)) == BigRat(4));
    CHECK(p.eval(BigRat(1, 2)) == BigRat(1, 4));
}

TEST_CASE("the two theta expansions agree") {
    for (int k : {2, 3, 4, 5, 8}) {
        ExactPoly in_t = theta_poly(k);
        ExactPoly in_x = theta1_poly(k);
        // substitute t = x + 1 via evaluation on a rational grid
        for (int i = -3; i <= 3; ++i) {
            BigRat x(i, 2);
            CHECK(in_t.eval(x + 1) == in_x.eval(x));
        }
    }
}

TEST_CASE("low coefficients vanish and the quartic coefficient is exact") {
    for (int k = 2; k <= 12; ++k) {
        CHECK(check_low_coeffs(k));
        ExactPoly p = theta1_poly(k);
        BigRat formula = theta1_x4_coeff_formula(k);
        CHECK(BigRat(p.coeff(4)) == formula);
        // k^2 (k-1)(2k^2 - k + 3) / 6
        long long kk = k;
        CHECK(formula == BigRat(kk * kk * (kk - 1) * (2 * kk * kk - kk + 3), 6));
    }
}

TEST_CASE("higher coefficients and the binomial inequality") {
    for (int k = 2; k <= 12; ++k) {
        CHECK(check_nonneg_high_coeffs(k));
        CHECK(check_binomial_inequality(k));
    }
}

TEST_CASE("eta stays positive at sample points") {
    std::array<BigRat, 6> grid = {BigRat(1, 2), BigRat(3, 2), BigRat(2), BigRat(10),
                                  BigRat(1, 10), BigRat(1000001, 1000000)};
    for (int k : {2, 3, 5, 9}) CHECK(eta_positive_samples(k, grid));
}

TEST_CASE("eta matches the floating-point curve derivative factor") {
    // lambda'(t) = (l2+1)(t^k+1)^{k-1} (t-1) eta(t-1) / (t^2 A^{k+1} B^2)
    int k = 3;
    double l2 = 0.4;
    for (double t : {0.4, 0.9, 1.7, 4.0}) {
        ExactPoly eta = eta_poly(k);
        BigRat x = rational_from_double(t) - 1;
        double eta_val = static_cast<double>(eta.eval(x));
        double A = 1 + t + t * t;
        double B = 1 + t;
        double expect = (l2 + 1) * std::pow(std::pow(t, k) + 1, k - 1) * (t - 1) * eta_val /
                        (t * t * std::pow(A, k + 1) * B * B);
        CHECK(hcwand::lambda_curve_derivative(t, k, l2) ==
              doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("descartes certificate of root uniqueness") {
    for (int k : {2, 3, 4, 7}) {
        CHECK(descartes_sign_count(k, BigRat(1, 3)) == 1);
        CHECK(descartes_sign_count(k, BigRat(2)) == 1);
        CHECK(descartes_sign_count(k, BigRat(1000000, 7)) == 1);
    }
}

TEST_CASE("rational_from_double is exact") {
    CHECK(rational_from_double(0.5) == BigRat(1, 2));
    CHECK(rational_from_double(3.0) == BigRat(3));
    CHECK(static_cast<double>(rational_from_double(0.1)) == 0.1);
    CHECK(rational_from_double(0.1) != BigRat(1, 10));
}

TEST_CASE("full verification sweep") {
    for (int k = 2; k <= 10; ++k) {
        auto r = verify_k(k);
        CHECK(r.k == k);
        CHECK(r.all_ok());
    }
}
