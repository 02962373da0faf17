#pragma once

#include <vector>

#include "mexlab/bigint.hpp"

namespace mexlab {

// Formal power series in q truncated at a fixed order: coefficients are exact
// for every degree 0..order(). Binary operations truncate to the smaller
// order. Values are immutable in spirit: all member mutators are builder
// steps, and shared values are never mutated concurrently.
class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_(1) {}
  explicit TruncatedSeries(int order);
  static TruncatedSeries constant(int order, long c0);
  static TruncatedSeries one(int order) { return constant(order, 1); }
  static TruncatedSeries monomial(int order, long exponent, long c = 1);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Int& coeff(int d) const;
  Int& coeff(int d);

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(long scalar);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  // Multiplicative inverse through the order; the constant term must be +-1.
  TruncatedSeries reciprocal() const;

  TruncatedSeries truncated(int new_order) const;

  // Sparse builder steps for q-Pochhammer style products:
  //   mul_binomial: *(1 - sign q^k)      div_binomial: /(1 - sign q^k)
  TruncatedSeries& mul_binomial(long k, long sign);
  TruncatedSeries& div_binomial(long k, long sign);
  TruncatedSeries& shift(long e);  // *q^e; degrees past the order fall off

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Int> coeffs_;  // size order()+1
};

// Both multiplication routes are exposed so they can be checked against each
// other; operator* dispatches on size.
TruncatedSeries mul_schoolbook(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul_karatsuba(const TruncatedSeries& a, const TruncatedSeries& b);

// $(q^c; q^d)_\infty$ specialized to monomial arguments: the product of
// (1 - prefix*q^{c+td}) over every factor with exponent <= order. prefix is
// +1 or -1, so prefix = -1 gives $(-q^c; q^d)_\infty$.
TruncatedSeries pochhammer_inf(long c, long d, int order, long prefix = 1);
TruncatedSeries pochhammer_inv_inf(long c, long d, int order, long prefix = 1);
// $(q^c; q^d)_{n\_terms}$.
TruncatedSeries pochhammer_fin(long c, long d, long n_terms, int order, long prefix = 1);

// Coefficient n is p(n), by the pentagonal-number recurrence; agrees with
// pochhammer_inv_inf(1, 1, order) exactly.
TruncatedSeries partition_gf(int order);

// Coefficient n is the sum of minimal excludants over the partitions of n,
// built as $(-q; q)_\infty^2$.
TruncatedSeries gf_sigma_mex(int order);

// Coefficient n is the sum of r-chain minimal excludants over the partitions
// of n: -(r-1)/(q;q)_inf + (q^{r+1};q^{r+1})_inf/(q;q)_inf *
// sum_{m=1}^{r} 1/(q^m;q^{r+1})_inf. For r = 1 this equals gf_sigma_mex.
TruncatedSeries gf_sigma_rc_mex_rhs(long r, int order);

// One term of the sum above: (q^{r+1};q^{r+1})_inf/(q;q)_inf * 1/(q^m;q^{r+1})_inf
// with 1 <= m <= r+1. Coefficient n counts (r+1)-regular partitions of n with
// parts == m (mod r+1) in two colors.
TruncatedSeries gf_corollary_term(long r, long m, int order);

// Coefficient n counts partitions of n whose largest r-repeating part is
// exactly j: q^{rj}/(q;q)_j * prod_{u>j}(1 + q^u + ... + q^{u(r-1)}).
TruncatedSeries gf_largest_repeating(long r, long j, int order);

// Checks sum_{n>=0} z^n/(q;q)_n = 1/(z;q)_inf at z = q^zexp through the order.
bool q_binomial_specialized(long zexp, int order);

}  // namespace mexlab
