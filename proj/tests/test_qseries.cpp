#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mexlab/qseries.hpp"

using mexlab::Int;
using mexlab::TruncatedSeries;

namespace {

TruncatedSeries from_coeffs(const std::vector<long>& cs) {
  TruncatedSeries s(static_cast<int>(cs.size()) - 1);
  for (std::size_t i = 0; i < cs.size(); ++i) s.coeff(static_cast<int>(i)) = cs[i];
  return s;
}

TruncatedSeries random_series(int order, std::mt19937& rng) {
  std::uniform_int_distribution<long> dist(-9, 9);
  TruncatedSeries s(order);
  for (int d = 0; d <= order; ++d) s.coeff(d) = dist(rng);
  return s;
}

}  // namespace

TEST_CASE("pochhammer products expand correctly") {
  CHECK(mexlab::pochhammer_inf(1, 1, 5) == from_coeffs({1, -1, -1, 0, 0, 1}));
  CHECK(mexlab::pochhammer_fin(1, 1, 0, 8) == TruncatedSeries::one(8));
  CHECK(mexlab::pochhammer_inv_inf(1, 1, 5) == from_coeffs({1, 1, 2, 3, 5, 7}));
  // (q;q)_2 = (1-q)(1-q^2) = 1 - q - q^2 + q^3
  CHECK(mexlab::pochhammer_fin(1, 1, 2, 5) == from_coeffs({1, -1, -1, 1, 0, 0}));
  // (-q;q)_inf has the distinct-partition counts as inverse-free expansion:
  // 1 + q + q^2 + 2q^3 + 2q^4 + 3q^5
  CHECK(mexlab::pochhammer_inf(1, 1, 5, -1) == from_coeffs({1, 1, 1, 2, 2, 3}));
}

TEST_CASE("unit laws and reciprocal") {
  TruncatedSeries one_minus_q = from_coeffs({1, -1, 0, 0, 0, 0, 0, 0});
  TruncatedSeries inv = one_minus_q.reciprocal();
  CHECK(inv == from_coeffs({1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK(one_minus_q * inv == TruncatedSeries::one(7));

  TruncatedSeries neg = from_coeffs({-1, 1, 4, -3});
  CHECK(neg * neg.reciprocal() == TruncatedSeries::one(3));

  CHECK_THROWS_AS(from_coeffs({2, 1}).reciprocal(), std::domain_error);
  CHECK_THROWS_AS(from_coeffs({0, 1}).reciprocal(), std::domain_error);
}

TEST_CASE("multiplication is commutative and matches on both routes") {
  std::mt19937 rng(20240517);
  for (int round = 0; round < 6; ++round) {
    TruncatedSeries a = random_series(200, rng);
    TruncatedSeries b = random_series(200, rng);
    TruncatedSeries ab = a * b;
    CHECK(ab == b * a);
    CHECK(mexlab::mul_schoolbook(a, b) == ab);
    CHECK(mexlab::mul_karatsuba(a, b) == ab);
  }
  // Uneven orders truncate to the smaller one.
  std::mt19937 rng2(7);
  TruncatedSeries a = random_series(90, rng2);
  TruncatedSeries b = random_series(300, rng2);
  TruncatedSeries ab = a * b;
  CHECK(ab.order() == 90);
  CHECK(mexlab::mul_karatsuba(a, b) == ab);
  CHECK(mexlab::mul_schoolbook(a, b) == ab);
}

TEST_CASE("pentagonal recurrence equals the product expansion") {
  CHECK(mexlab::partition_gf(500) == mexlab::pochhammer_inv_inf(1, 1, 500));
  TruncatedSeries gf = mexlab::partition_gf(5);
  CHECK(gf == from_coeffs({1, 1, 2, 3, 5, 7}));
}

TEST_CASE("euler product is supported on generalized pentagonal exponents") {
  TruncatedSeries euler = mexlab::pochhammer_inf(1, 1, 500);
  std::vector<long> expected_sign(501, 0);
  for (long k = 1;; ++k) {
    long g1 = k * (3 * k - 1) / 2;
    if (g1 > 500) break;
    long g2 = k * (3 * k + 1) / 2;
    long sign = (k % 2 == 0) ? 1 : -1;
    expected_sign[g1] = sign;
    if (g2 <= 500) expected_sign[g2] = sign;
  }
  expected_sign[0] = 1;
  for (int d = 0; d <= 500; ++d) CHECK(euler.coeff(d) == Int(expected_sign[d]));
}

TEST_CASE("sigma-mex series") {
  TruncatedSeries s = mexlab::gf_sigma_mex(3);
  CHECK(s == from_coeffs({1, 2, 3, 6}));
  // Euler's identity at series level: (-q;q)_inf = 1/(q;q^2)_inf, squared.
  TruncatedSeries via_odd = mexlab::pochhammer_inv_inf(1, 2, 60);
  CHECK(mexlab::gf_sigma_mex(60) == via_odd * via_odd);
}

TEST_CASE("sigma rc-mex closed form") {
  TruncatedSeries r2 = mexlab::gf_sigma_rc_mex_rhs(2, 2);
  CHECK(r2 == from_coeffs({1, 2, 5}));
  CHECK(mexlab::gf_sigma_rc_mex_rhs(1, 300) == mexlab::gf_sigma_mex(300));
}

TEST_CASE("corollary terms") {
  TruncatedSeries t1 = mexlab::gf_corollary_term(2, 1, 2);
  CHECK(t1.coeff(0) == 1);
  CHECK(t1.coeff(2) == 4);
  TruncatedSeries t2 = mexlab::gf_corollary_term(2, 2, 2);
  CHECK(t2.coeff(0) == 1);
  CHECK(t2.coeff(2) == 3);
  // m = r+1 collapses to the plain partition series.
  CHECK(mexlab::gf_corollary_term(3, 4, 80) == mexlab::partition_gf(80));
  CHECK_THROWS_AS(mexlab::gf_corollary_term(2, 4, 5), std::domain_error);
}

TEST_CASE("largest-repeating series") {
  for (long j = 0; j <= 5; ++j) {
    CHECK(mexlab::gf_largest_repeating(1, j, 12).coeff(0) == Int(j == 0 ? 1 : 0));
  }
  // r = 1 specializes to q^j/(q;q)_j, counting by largest part: at j = 1 only
  // the all-ones partition of each n remains.
  CHECK(mexlab::gf_largest_repeating(1, 1, 10) ==
        mexlab::pochhammer_inv_inf(1, 1, 10) * mexlab::pochhammer_inf(2, 1, 10) *
            mexlab::TruncatedSeries::monomial(10, 1));
  CHECK(mexlab::gf_largest_repeating(2, 2, 7).coeff(7) == 3);  // 3+2+2, 2+2+2+1, 2+2+1+1+1
}

TEST_CASE("q-binomial specialization holds") {
  CHECK(mexlab::q_binomial_specialized(1, 50));
  CHECK(mexlab::q_binomial_specialized(2, 50));
  CHECK(mexlab::q_binomial_specialized(3, 50));
  CHECK(mexlab::q_binomial_specialized(1, 0));
}

TEST_CASE("sigma-mex parity sits on doubled pentagonal numbers") {
  TruncatedSeries s = mexlab::gf_sigma_mex(200);
  std::vector<bool> doubled(201, false);
  for (long j = 0;; ++j) {
    long lo = j * (3 * j - 1);
    if (lo > 200 && j > 0) break;
    long hi = j * (3 * j + 1);
    if (lo <= 200) doubled[lo] = true;
    if (hi <= 200) doubled[hi] = true;
  }
  for (int n = 0; n <= 200; ++n) CHECK(mexlab::is_odd(s.coeff(n)) == doubled[n]);
}

TEST_CASE("shift and truncation behave") {
  TruncatedSeries s = from_coeffs({1, 2, 3});
  TruncatedSeries shifted = s;
  shifted.shift(2);
  CHECK(shifted == from_coeffs({0, 0, 1}));
  TruncatedSeries gone = s;
  gone.shift(5);
  CHECK(gone == TruncatedSeries(2));
  CHECK(s.truncated(1) == from_coeffs({1, 2}));
  CHECK(s.truncated(4) == from_coeffs({1, 2, 3, 0, 0}));
}
