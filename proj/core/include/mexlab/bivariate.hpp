#pragma once

#include <vector>

#include "mexlab/qseries.hpp"

namespace mexlab {

// Power series in q truncated at a fixed order whose q^d coefficient is an
// exact polynomial in the tracking variable w. Every builder below only
// attaches w to positive q-powers, so the w-degree never exceeds the
// q-degree; row d simply stores w-coefficients 0..d.
class BivariateSeries {
 public:
  explicit BivariateSeries(int order);
  static BivariateSeries one(int order);
  static BivariateSeries from_univariate(const TruncatedSeries& u);

  int order() const { return order_; }
  const Int& coeff(int qdeg, int wdeg) const;  // zero outside the stored triangle

  BivariateSeries& mul_univariate(const TruncatedSeries& u);
  // *(1 - sign w^wexp q^qexp) and its exact inverse; requires wexp <= qexp so
  // the triangle shape is preserved (qexp = 0 is allowed when wexp = 0).
  BivariateSeries& mul_factor(long wexp, long qexp, long sign);
  BivariateSeries& div_factor(long wexp, long qexp, long sign);
  BivariateSeries& shift_q(long e);

  TruncatedSeries coeff_of_w(long m) const;
  TruncatedSeries at_w_one() const;
  // Exact d/dw evaluated at w = 1, per q-degree: coefficient d becomes
  // sum_m m * [w^m q^d].
  TruncatedSeries w_derivative_at_1() const;

  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

 private:
  int order_ = 0;
  std::vector<std::vector<Int>> rows_;  // rows_[d] has size d+1
};

// Partitions with w tracking the number of parts greater than the minimal
// excludant: 1/((q;q^2)_inf (wq^2;q^2)_inf). The same array also counts
// partitions by their number of even parts.
BivariateSeries gf_alpha_bivariate(int order);

// Partitions whose largest (r+1)-repeating part is exactly j, with w tracking
// the number of parts greater than j:
//   q^{j(r+1)} ((wq^{j+1})^{r+1}; q^{r+1})_inf / ((q;q)_j (wq^{j+1};q)_inf).
BivariateSeries gf_interm1(long j, long r, int order);

// Partitions with w tracking the number of parts divisible by r:
//   (q^r;q^r)_inf / (q;q)_inf * 1/(wq^r;q^r)_inf.
BivariateSeries gf_multiples_tracking(long r, int order);

}  // namespace mexlab
