#include "mexlab/bivariate.hpp"

#include <stdexcept>

namespace mexlab {

namespace {
const Int kZero(0);
}

BivariateSeries::BivariateSeries(int order) : order_(order) {
  if (order < 0) throw std::domain_error("BivariateSeries: order must be >= 0");
  rows_.resize(static_cast<std::size_t>(order) + 1);
  for (int d = 0; d <= order; ++d) rows_[d].assign(static_cast<std::size_t>(d) + 1, Int(0));
}

BivariateSeries BivariateSeries::one(int order) {
  BivariateSeries b(order);
  b.rows_[0][0] = 1;
  return b;
}

BivariateSeries BivariateSeries::from_univariate(const TruncatedSeries& u) {
  BivariateSeries b(u.order());
  for (int d = 0; d <= u.order(); ++d) b.rows_[d][0] = u.coeff(d);
  return b;
}

const Int& BivariateSeries::coeff(int qdeg, int wdeg) const {
  if (qdeg < 0 || qdeg > order_ || wdeg < 0) throw std::out_of_range("BivariateSeries::coeff");
  const auto& row = rows_[static_cast<std::size_t>(qdeg)];
  if (wdeg >= static_cast<int>(row.size())) return kZero;
  return row[static_cast<std::size_t>(wdeg)];
}

BivariateSeries& BivariateSeries::mul_univariate(const TruncatedSeries& u) {
  int n = std::min(order_, u.order());
  BivariateSeries out(n);
  for (int d = 0; d <= n; ++d) {
    for (int e = 0; e <= d; ++e) {
      const Int& ue = u.coeff(e);
      if (ue == 0) continue;
      const auto& src = rows_[static_cast<std::size_t>(d - e)];
      auto& dst = out.rows_[static_cast<std::size_t>(d)];
      for (std::size_t m = 0; m < src.size(); ++m) {
        if (src[m] == 0) continue;
        mpz_addmul(dst[m].get_mpz_t(), ue.get_mpz_t(), src[m].get_mpz_t());
      }
    }
  }
  *this = std::move(out);
  return *this;
}

BivariateSeries& BivariateSeries::mul_factor(long wexp, long qexp, long sign) {
  if (sign != 1 && sign != -1) throw std::domain_error("mul_factor: sign must be +-1");
  if (wexp < 0 || qexp < 1 || wexp > qexp) {
    throw std::domain_error("mul_factor: need 0 <= wexp <= qexp, qexp >= 1");
  }
  for (long d = order_; d >= qexp; --d) {
    auto& dst = rows_[static_cast<std::size_t>(d)];
    const auto& src = rows_[static_cast<std::size_t>(d - qexp)];
    for (long m = static_cast<long>(dst.size()) - 1; m >= wexp; --m) {
      long sm = m - wexp;
      if (sm >= static_cast<long>(src.size())) continue;
      if (src[sm] == 0) continue;
      if (sign > 0) {
        dst[m] -= src[sm];
      } else {
        dst[m] += src[sm];
      }
    }
  }
  return *this;
}

BivariateSeries& BivariateSeries::div_factor(long wexp, long qexp, long sign) {
  if (sign != 1 && sign != -1) throw std::domain_error("div_factor: sign must be +-1");
  if (wexp < 0 || qexp < 1 || wexp > qexp) {
    throw std::domain_error("div_factor: need 0 <= wexp <= qexp, qexp >= 1");
  }
  // Geometric expansion: ascending q-degrees reuse already-updated rows.
  for (long d = qexp; d <= order_; ++d) {
    auto& dst = rows_[static_cast<std::size_t>(d)];
    const auto& src = rows_[static_cast<std::size_t>(d - qexp)];
    for (long m = wexp; m < static_cast<long>(dst.size()); ++m) {
      long sm = m - wexp;
      if (sm >= static_cast<long>(src.size())) continue;
      if (src[sm] == 0) continue;
      if (sign > 0) {
        dst[m] += src[sm];
      } else {
        dst[m] -= src[sm];
      }
    }
  }
  return *this;
}

BivariateSeries& BivariateSeries::shift_q(long e) {
  if (e < 0) throw std::domain_error("shift_q: exponent must be >= 0");
  if (e == 0) return *this;
  for (long d = order_; d >= 0; --d) {
    auto& dst = rows_[static_cast<std::size_t>(d)];
    if (d >= e) {
      const auto& src = rows_[static_cast<std::size_t>(d - e)];
      for (std::size_t m = 0; m < dst.size(); ++m) {
        dst[m] = (m < src.size()) ? src[m] : Int(0);
      }
    } else {
      for (auto& c : dst) c = 0;
    }
  }
  return *this;
}

TruncatedSeries BivariateSeries::coeff_of_w(long m) const {
  if (m < 0) throw std::domain_error("coeff_of_w: m must be >= 0");
  TruncatedSeries out(order_);
  for (int d = 0; d <= order_; ++d) {
    const auto& row = rows_[static_cast<std::size_t>(d)];
    if (m < static_cast<long>(row.size())) out.coeff(d) = row[static_cast<std::size_t>(m)];
  }
  return out;
}

TruncatedSeries BivariateSeries::at_w_one() const {
  TruncatedSeries out(order_);
  for (int d = 0; d <= order_; ++d) {
    Int acc(0);
    for (const Int& c : rows_[static_cast<std::size_t>(d)]) acc += c;
    out.coeff(d) = std::move(acc);
  }
  return out;
}

TruncatedSeries BivariateSeries::w_derivative_at_1() const {
  TruncatedSeries out(order_);
  for (int d = 0; d <= order_; ++d) {
    const auto& row = rows_[static_cast<std::size_t>(d)];
    Int acc(0);
    for (std::size_t m = 1; m < row.size(); ++m) {
      if (row[m] == 0) continue;
      Int term = row[m];
      term *= static_cast<long>(m);
      acc += term;
    }
    out.coeff(d) = std::move(acc);
  }
  return out;
}

BivariateSeries gf_alpha_bivariate(int order) {
  BivariateSeries b = BivariateSeries::one(order);
  for (long o = 1; o <= order; o += 2) b.div_factor(0, o, 1);
  for (long e = 2; e <= order; e += 2) b.div_factor(1, e, 1);
  return b;
}

BivariateSeries gf_interm1(long j, long r, int order) {
  if (j < 0 || r < 1) throw std::domain_error("gf_interm1: need j >= 0, r >= 1");
  BivariateSeries b = BivariateSeries::one(order);
  for (long t = 0;; ++t) {
    long qexp = (r + 1) * (j + 1 + t);
    if (qexp > order) break;
    b.mul_factor(r + 1, qexp, 1);
  }
  for (long e = j + 1; e <= order; ++e) b.div_factor(1, e, 1);
  for (long e = 1; e <= std::min(j, static_cast<long>(order)); ++e) b.div_factor(0, e, 1);
  b.shift_q(j * (r + 1));
  return b;
}

BivariateSeries gf_multiples_tracking(long r, int order) {
  if (r < 1) throw std::domain_error("gf_multiples_tracking: r must be >= 1");
  TruncatedSeries u = partition_gf(order);
  for (long e = r; e <= order; e += r) u.mul_binomial(e, 1);
  BivariateSeries b = BivariateSeries::from_univariate(u);
  for (long e = r; e <= order; e += r) b.div_factor(1, e, 1);
  return b;
}

}  // namespace mexlab
