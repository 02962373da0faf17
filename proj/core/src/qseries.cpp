#include "mexlab/qseries.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>

namespace mexlab {

namespace {

void check_order(int order) {
  if (order < 0) throw std::domain_error("TruncatedSeries: order must be >= 0");
}

void check_sign(long sign) {
  if (sign != 1 && sign != -1) throw std::domain_error("series factor sign must be +-1");
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  check_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Int(0));
}

TruncatedSeries TruncatedSeries::constant(int order, long c0) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c0;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, long exponent, long c) {
  TruncatedSeries s(order);
  if (exponent < 0) throw std::domain_error("monomial: exponent must be >= 0");
  if (exponent <= order) s.coeffs_[static_cast<std::size_t>(exponent)] = c;
  return s;
}

const Int& TruncatedSeries::coeff(int d) const {
  if (d < 0 || d > order()) throw std::out_of_range("TruncatedSeries::coeff");
  return coeffs_[static_cast<std::size_t>(d)];
}

Int& TruncatedSeries::coeff(int d) {
  if (d < 0 || d > order()) throw std::out_of_range("TruncatedSeries::coeff");
  return coeffs_[static_cast<std::size_t>(d)];
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  int n = std::min(order(), rhs.order());
  coeffs_.resize(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) coeffs_[d] += rhs.coeffs_[d];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  int n = std::min(order(), rhs.order());
  coeffs_.resize(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) coeffs_[d] -= rhs.coeffs_[d];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs) {
  *this = *this * rhs;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(long scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  // Schoolbook wins for short series; the split-multiply path takes over once
  // the coefficient vectors are long enough to amortize its bookkeeping.
  constexpr int kKaratsubaThreshold = 128;
  if (std::min(a.order(), b.order()) >= kKaratsubaThreshold) return mul_karatsuba(a, b);
  return mul_schoolbook(a, b);
}

TruncatedSeries mul_schoolbook(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i) {
    const Int& ai = a.coeff(i);
    if (ai == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      const Int& bj = b.coeff(j);
      if (bj == 0) continue;
      mpz_addmul(out.coeff(i + j).get_mpz_t(), ai.get_mpz_t(), bj.get_mpz_t());
    }
  }
  return out;
}

namespace {

// Full (untruncated) products on raw coefficient vectors.
std::vector<Int> full_schoolbook(std::span<const Int> a, std::span<const Int> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Int> out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

std::vector<Int> full_karatsuba(std::span<const Int> a, std::span<const Int> b) {
  constexpr std::size_t kBase = 32;
  if (a.size() <= kBase || b.size() <= kBase) return full_schoolbook(a, b);
  std::size_t h = std::max(a.size(), b.size()) / 2;
  auto lo = [&](std::span<const Int> v) { return v.subspan(0, std::min(h, v.size())); };
  auto hi = [&](std::span<const Int> v) {
    return v.size() > h ? v.subspan(h) : std::span<const Int>();
  };
  std::vector<Int> z0 = full_karatsuba(lo(a), lo(b));
  std::vector<Int> z2 = full_karatsuba(hi(a), hi(b));
  auto sum = [&](std::span<const Int> x, std::span<const Int> y) {
    std::vector<Int> s(std::max(x.size(), y.size()), Int(0));
    for (std::size_t i = 0; i < x.size(); ++i) s[i] += x[i];
    for (std::size_t i = 0; i < y.size(); ++i) s[i] += y[i];
    return s;
  };
  std::vector<Int> sa = sum(lo(a), hi(a));
  std::vector<Int> sb = sum(lo(b), hi(b));
  std::vector<Int> z1 = full_karatsuba(sa, sb);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
  std::vector<Int> out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) {
    if (i + h < out.size()) out[i + h] += z1[i];
  }
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * h] += z2[i];
  return out;
}

}  // namespace

TruncatedSeries mul_karatsuba(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.order(), b.order());
  std::vector<Int> av, bv;
  av.reserve(n + 1);
  bv.reserve(n + 1);
  for (int d = 0; d <= n; ++d) {
    av.push_back(a.coeff(d));
    bv.push_back(b.coeff(d));
  }
  std::vector<Int> full = full_karatsuba(av, bv);
  TruncatedSeries out(n);
  for (int d = 0; d <= n && d < static_cast<int>(full.size()); ++d) {
    out.coeff(d) = std::move(full[static_cast<std::size_t>(d)]);
  }
  return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  const Int& a0 = coeffs_[0];
  if (a0 != 1 && a0 != -1) {
    throw std::domain_error("reciprocal: constant term must be +1 or -1");
  }
  int n = order();
  TruncatedSeries out(n);
  out.coeffs_[0] = a0;  // 1/(+-1) = +-1
  for (int d = 1; d <= n; ++d) {
    Int s(0);
    for (int k = 1; k <= d; ++k) {
      if (coeffs_[k] == 0) continue;
      mpz_addmul(s.get_mpz_t(), coeffs_[k].get_mpz_t(), out.coeffs_[d - k].get_mpz_t());
    }
    s = -s;
    if (a0 == -1) s = -s;
    out.coeffs_[static_cast<std::size_t>(d)] = std::move(s);
  }
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  check_order(new_order);
  TruncatedSeries out(new_order);
  int n = std::min(order(), new_order);
  for (int d = 0; d <= n; ++d) out.coeffs_[d] = coeffs_[d];
  return out;
}

TruncatedSeries& TruncatedSeries::mul_binomial(long k, long sign) {
  check_sign(sign);
  if (k < 1) throw std::domain_error("mul_binomial: exponent must be >= 1");
  for (long d = order(); d >= k; --d) {
    if (sign > 0) {
      coeffs_[d] -= coeffs_[d - k];
    } else {
      coeffs_[d] += coeffs_[d - k];
    }
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::div_binomial(long k, long sign) {
  check_sign(sign);
  if (k < 1) throw std::domain_error("div_binomial: exponent must be >= 1");
  for (long d = k; d <= order(); ++d) {
    if (sign > 0) {
      coeffs_[d] += coeffs_[d - k];
    } else {
      coeffs_[d] -= coeffs_[d - k];
    }
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::shift(long e) {
  if (e < 0) throw std::domain_error("shift: exponent must be >= 0");
  if (e == 0) return *this;
  long n = order();
  if (e > n) {
    for (auto& c : coeffs_) c = 0;
    return *this;
  }
  for (long d = n; d >= e; --d) coeffs_[d] = std::move(coeffs_[d - e]);
  for (long d = 0; d < e; ++d) coeffs_[d] = 0;
  return *this;
}

TruncatedSeries pochhammer_inf(long c, long d, int order, long prefix) {
  if (c < 1 || d < 1) throw std::domain_error("pochhammer_inf: c and d must be >= 1");
  TruncatedSeries s = TruncatedSeries::one(order);
  for (long e = c; e <= order; e += d) s.mul_binomial(e, prefix);
  return s;
}

TruncatedSeries pochhammer_inv_inf(long c, long d, int order, long prefix) {
  if (c < 1 || d < 1) throw std::domain_error("pochhammer_inv_inf: c and d must be >= 1");
  TruncatedSeries s = TruncatedSeries::one(order);
  for (long e = c; e <= order; e += d) s.div_binomial(e, prefix);
  return s;
}

TruncatedSeries pochhammer_fin(long c, long d, long n_terms, int order, long prefix) {
  if (c < 1 || d < 1) throw std::domain_error("pochhammer_fin: c and d must be >= 1");
  if (n_terms < 0) throw std::domain_error("pochhammer_fin: n_terms must be >= 0");
  TruncatedSeries s = TruncatedSeries::one(order);
  for (long t = 0; t < n_terms; ++t) {
    long e = c + t * d;
    if (e > order) break;  // remaining factors are 1 mod q^{order+1}
    s.mul_binomial(e, prefix);
  }
  return s;
}

TruncatedSeries partition_gf(int order) {
  check_order(order);
  TruncatedSeries p(order);
  p.coeff(0) = 1;
  for (int n = 1; n <= order; ++n) {
    Int acc(0);
    for (long k = 1;; ++k) {
      long g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      long g2 = k * (3 * k + 1) / 2;
      if (k % 2 == 1) {
        acc += p.coeff(static_cast<int>(n - g1));
        if (g2 <= n) acc += p.coeff(static_cast<int>(n - g2));
      } else {
        acc -= p.coeff(static_cast<int>(n - g1));
        if (g2 <= n) acc -= p.coeff(static_cast<int>(n - g2));
      }
    }
    p.coeff(n) = std::move(acc);
  }
  return p;
}

TruncatedSeries gf_sigma_mex(int order) {
  TruncatedSeries t = pochhammer_inf(1, 1, order, -1);
  return t * t;
}

TruncatedSeries gf_corollary_term(long r, long m, int order) {
  if (r < 1) throw std::domain_error("gf_corollary_term: r must be >= 1");
  if (m < 1 || m > r + 1) throw std::domain_error("gf_corollary_term: m must lie in [1, r+1]");
  TruncatedSeries s = partition_gf(order);
  for (long e = r + 1; e <= order; e += r + 1) s.mul_binomial(e, 1);
  for (long e = m; e <= order; e += r + 1) s.div_binomial(e, 1);
  return s;
}

TruncatedSeries gf_sigma_rc_mex_rhs(long r, int order) {
  if (r < 1) throw std::domain_error("gf_sigma_rc_mex_rhs: r must be >= 1");
  TruncatedSeries acc(order);
  for (long m = 1; m <= r; ++m) acc += gf_corollary_term(r, m, order);
  TruncatedSeries head = partition_gf(order);
  head *= -(r - 1);
  acc += head;
  return acc;
}

TruncatedSeries gf_largest_repeating(long r, long j, int order) {
  if (r < 1 || j < 0) throw std::domain_error("gf_largest_repeating: need r >= 1, j >= 0");
  if (j > 0 && j > order / r) return TruncatedSeries(order);  // prefactor q^{rj} vanishes
  TruncatedSeries s = TruncatedSeries::one(order);
  for (long u = j + 1; u <= order; ++u) {
    if (u * r <= order) s.mul_binomial(u * r, 1);
    s.div_binomial(u, 1);
  }
  for (long e = 1; e <= std::min(j, static_cast<long>(order)); ++e) s.div_binomial(e, 1);
  s.shift(r * j);
  return s;
}

bool q_binomial_specialized(long zexp, int order) {
  if (zexp < 1) throw std::domain_error("q_binomial_specialized: zexp must be >= 1");
  TruncatedSeries lhs(order);
  TruncatedSeries term = TruncatedSeries::one(order);  // 1/(q;q)_k, maintained incrementally
  for (long k = 0; k * zexp <= order; ++k) {
    if (k > 0) term.div_binomial(k, 1);
    TruncatedSeries t = term;
    t.shift(k * zexp);
    lhs += t;
  }
  TruncatedSeries rhs = pochhammer_inv_inf(zexp, 1, order);
  return lhs == rhs;
}

}  // namespace mexlab
