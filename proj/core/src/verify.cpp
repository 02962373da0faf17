#include "mexlab/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <utility>

#include "json.hpp"
#include "mexlab/bivariate.hpp"
#include "mexlab/census.hpp"
#include "mexlab/enumerate.hpp"

namespace mexlab::verify {

namespace {

using nlohmann::json;
using PartitionPred = std::function<bool(const Partition&)>;

constexpr long kDefaultCeiling = 90;
constexpr std::size_t kWitnessLimit = 10;

void check_scan_ceiling(const Params& p) {
  if (p.override_ceiling) return;
  long ceiling = resource_ceiling();
  if (p.max_n > ceiling) {
    throw ResourceCeilingError("max_n " + std::to_string(p.max_n) +
                               " exceeds the exhaustive-scan ceiling " + std::to_string(ceiling) +
                               " (set MEXLAB_MAX_N or pass the override flag)");
  }
}

long parts_greater_than(const Partition& p, long bound) {
  long count = 0;
  for (const auto& e : p.frequencies()) {
    if (e.value > bound) count += e.count;
  }
  return count;
}

std::vector<std::string> witness_partitions(long n, const PartitionPred& pred) {
  std::vector<std::string> out;
  if (!pred) return out;
  PartitionStream stream(n);
  while (out.size() < kWitnessLimit && stream.next()) {
    Partition p = stream.partition();
    if (pred(p)) out.push_back(p.to_string());
  }
  return out;
}

Witness make_witness(long n, std::optional<long> r, std::optional<long> j, std::optional<long> m,
                     std::string lhs, std::string rhs, const PartitionPred& lhs_pred = nullptr,
                     const PartitionPred& rhs_pred = nullptr) {
  Witness w;
  w.n = n;
  w.r = r;
  w.j = j;
  w.m = m;
  w.lhs = std::move(lhs);
  w.rhs = std::move(rhs);
  w.partitions_lhs = witness_partitions(n, lhs_pred);
  w.partitions_rhs = witness_partitions(n, rhs_pred);
  return w;
}

void fail(IdentityReport& rep, Witness w) {
  rep.pass = false;
  if (!rep.witness) rep.witness = std::move(w);
}

std::string u64s(std::uint64_t v) { return std::to_string(v); }

std::vector<long> r_at_least(const Params& p, long lo) {
  std::vector<long> out;
  for (long r : p.r_values) {
    if (r >= lo) out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Identity runners. Each scans in lexicographic (n, r, j, m) witness order and
// stops at the first mismatch.
// ---------------------------------------------------------------------------

void run_euler(const Params& P, IdentityReport& rep) {
  check_scan_ceiling(P);
  ConstraintSpec odd = regular_spec(2);
  ConstraintSpec dis;
  dis.distinct = true;
  for (long n = 0; n <= P.max_n; ++n) {
    std::uint64_t lhs = count_constrained(n, odd);
    std::uint64_t rhs = count_constrained(n, dis);
    if (lhs != rhs) {
      fail(rep, make_witness(n, std::nullopt, std::nullopt, std::nullopt, u64s(lhs), u64s(rhs),
                             [&](const Partition& p) { return odd.matches(p); },
                             [&](const Partition& p) { return dis.matches(p); }));
      return;
    }
  }
}

void run_glaisher(const Params& P, IdentityReport& rep) {
  check_scan_ceiling(P);
  for (long n = 0; n <= P.max_n; ++n) {
    for (long r : r_at_least(P, 2)) {
      ConstraintSpec reg = regular_spec(r);
      ConstraintSpec freq;
      freq.max_frequency = r - 1;
      std::uint64_t lhs = count_constrained(n, reg);
      std::uint64_t rhs = count_constrained(n, freq);
      if (lhs != rhs) {
        fail(rep, make_witness(n, r, std::nullopt, std::nullopt, u64s(lhs), u64s(rhs),
                               [&](const Partition& p) { return reg.matches(p); },
                               [&](const Partition& p) { return freq.matches(p); }));
        return;
      }
    }
  }
}

void run_franklin(const Params& P, IdentityReport& rep) {
  check_scan_ceiling(P);
  for (long n = 0; n <= P.max_n; ++n) {
    for (long r : r_at_least(P, 2)) {
      FranklinGlaisherCensus census = franklin_glaisher_census(n, r);
      long j_hi = std::max(census.divisible_side.max_key(0), census.repeating_side.max_key(0));
      if (P.max_j >= 0) j_hi = std::min(j_hi, P.max_j);
      for (long j = 0; j <= j_hi; ++j) {
        std::uint64_t lhs = census.divisible_side.at(j);
        std::uint64_t rhs = census.repeating_side.at(j);
        if (lhs != rhs) {
          fail(rep, make_witness(
                        n, r, j, std::nullopt, u64s(lhs), u64s(rhs),
                        [&, j](const Partition& p) {
                          long c = 0;
                          for (const auto& e : p.frequencies()) c += (e.value % r == 0);
                          return c == j;
                        },
                        [&, j](const Partition& p) {
                          long c = 0;
                          for (const auto& e : p.frequencies()) c += (e.count >= r);
                          return c == j;
                        }));
          return;
        }
      }
    }
  }
}

void run_three_way(const Params& P, IdentityReport& rep) {
  check_scan_ceiling(P);
  for (long n = 0; n <= P.max_n; ++n) {
    for (long r : r_at_least(P, 2)) {
      ThreeWayCensus census = three_way_census(n, r);
      long j_hi = std::max({census.multiples.max_key(0), census.largest_repeating.max_key(0),
                            census.beyond_chain_mex.max_key(0)});
      if (P.max_j >= 0) j_hi = std::min(j_hi, P.max_j);
      for (long j = 0; j <= j_hi; ++j) {
        std::uint64_t a = census.multiples.at(j);
        std::uint64_t b = census.largest_repeating.at(j);
        std::uint64_t c = census.beyond_chain_mex.at(j);
        auto mult_pred = [&, j](const Partition& p) {
          return p.part_counters(r, 0).multiples_of_r == j;
        };
        if (a != b) {
          fail(rep, make_witness(n, r, j, std::nullopt, u64s(a), u64s(b), mult_pred,
                                 [&, j](const Partition& p) {
                                   return p.repeating_part_extrema(r).largest == j;
                                 }));
          return;
        }
        if (a != c) {
          fail(rep, make_witness(n, r, j, std::nullopt, u64s(a), u64s(c), mult_pred,
                                 [&, j](const Partition& p) {
                                   return parts_greater_than(p, p.chain_mex(r - 1)) == j;
                                 }));
          return;
        }
      }
    }
  }
}

void run_gf_multiples(const Params& P, IdentityReport& rep) {
  check_scan_ceiling(P);
  std::vector<long> rs = r_at_least(P, 2);
  std::vector<BivariateSeries> series;
  series.reserve(rs.size());
  for (long r : rs) series.push_back(gf_multiples_tracking(r, static_cast<int>(P.max_n)));
  for (long n = 0; n <= P.max_n; ++n) {
    for (std::size_t i = 0; i < rs.size(); ++i) {
      long r = rs[i];
      CountTable census = multiples_census(n, r);
      long j_hi = std::max(census.max_key(0), 0L);
      if (P.max_j >= 0) j_hi = std::min(j_hi, P.max_j);
      for (long j = 0; j <= j_hi; ++j) {
        Int lhs = series[i].coeff(static_cast<int>(n), static_cast<int>(j));
        Int rhs(static_cast<unsigned long>(census.at(j)));
        if (lhs != rhs) {
          fail(rep, make_witness(n, r, j, std::nullopt, lhs.get_str(), rhs.get_str(), nullptr,
                                 [&, j](const Partition& p) {
                                   return p.part_counters(r, 0).multiples_of_r == j;
                                 }));
          return;
        }
      }
    }
  }
}

void run_prop_alpha(const Params& P, IdentityReport& rep) {
  check_scan_ceiling(P);
  BivariateSeries series = gf_alpha_bivariate(static_cast<int>(P.max_n));
  for (long n = 0; n <= P.max_n; ++n) {
    CountTable alpha = alpha_census(n);
    CountTable even = multiples_census(n, 2);
    long j_hi = std::max({alpha.max_key(0), even.max_key(0), 0L});
    if (P.max_j >= 0) j_hi = std::min(j_hi, P.max_j);
    for (long j = 0; j <= j_hi; ++j) {
      Int coeff = series.coeff(static_cast<int>(n), static_cast<int>(j));
      Int a(static_cast<unsigned long>(alpha.at(j)));
      Int e(static_cast<unsigned long>(even.at(j)));
      auto alpha_pred = [&, j](const Partition& p) {
        return parts_greater_than(p, p.chain_mex(1)) == j;
      };
      auto even_pred = [&, j](const Partition& p) {
        return p.part_counters(2, 0).multiples_of_r == j;
      };
      if (coeff != a) {
        fail(rep, make_witness(n, std::nullopt, j, std::nullopt, coeff.get_str(), a.get_str(),
                               nullptr, alpha_pred));
        return;
      }
      if (a != e) {
        fail(rep,
             make_witness(n, std::nullopt, j, std::nullopt, a.get_str(), e.get_str(), alpha_pred,
                          even_pred));
        return;
      }
    }
  }
}

void run_lemma_refine(const Params& P, IdentityReport& rep) {
  check_scan_ceiling(P);
  for (long n = 0; n <= P.max_n; ++n) {
    for (long r : r_at_least(P, 1)) {
      RefineCensus census = refine_census(n, r);
      auto diff = first_cell_difference(census.table_a, census.table_b);
      if (diff) {
        long j = (*diff)[0];
        long k = (*diff)[1];
        fail(rep, make_witness(n, r, j, k, u64s(census.table_a.at(j, k)),
                               u64s(census.table_b.at(j, k)),
                               [&, j, k](const Partition& p) {
                                 return p.chain_mex(r) == k &&
                                        parts_greater_than(p, p.chain_mex(r)) == j;
                               },
                               [&, j, k](const Partition& p) {
                                 long lj = p.repeating_part_extrema(r + 1).largest;
                                 return lj == j && parts_greater_than(p, lj) == k - 1;
                               }));
        return;
      }
    }
  }
}

void run_interm1(const Params& P, IdentityReport& rep) {
  check_scan_ceiling(P);
  int order = static_cast<int>(P.max_n);
  std::vector<long> rs = r_at_least(P, 1);
  // Per r, the whole j-family of series plus their exact w-derivatives.
  std::vector<std::vector<BivariateSeries>> fam(rs.size());
  std::vector<std::vector<TruncatedSeries>> deriv(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (long j = 0; j * (rs[i] + 1) <= P.max_n; ++j) {
      fam[i].push_back(gf_interm1(j, rs[i], order));
      deriv[i].push_back(fam[i].back().w_derivative_at_1());
    }
  }
  for (long n = 0; n <= P.max_n; ++n) {
    for (std::size_t i = 0; i < rs.size(); ++i) {
      long r = rs[i];
      CountTable census = q_bivariate_census_all(n, r + 1);
      long j_hi = static_cast<long>(fam[i].size()) - 1;
      if (P.max_j >= 0) j_hi = std::min(j_hi, P.max_j);
      for (long j = 0; j <= j_hi; ++j) {
        for (long m = 0; m <= n; ++m) {
          Int lhs = fam[i][j].coeff(static_cast<int>(n), static_cast<int>(m));
          Int rhs(static_cast<unsigned long>(census.at(j, m)));
          if (lhs != rhs) {
            fail(rep, make_witness(n, r, j, m, lhs.get_str(), rhs.get_str(), nullptr,
                                   [&, j, m](const Partition& p) {
                                     long lj = p.repeating_part_extrema(r + 1).largest;
                                     return lj == j && parts_greater_than(p, j) == m;
                                   }));
            return;
          }
        }
        // d/dw at w=1 against the m-weighted census row.
        Int weighted(0);
        for (const auto& [key, count] : census.cells) {
          if (key[0] == j) weighted += Int(static_cast<unsigned long>(count)) * key[1];
        }
        Int dcoeff = deriv[i][j].coeff(static_cast<int>(n));
        if (dcoeff != weighted) {
          fail(rep, make_witness(n, r, j, std::nullopt, dcoeff.get_str(), weighted.get_str(),
                                 nullptr, nullptr));
          return;
        }
      }
    }
  }
}

void run_sigma_rc_chain(const Params& P, IdentityReport& rep) {
  check_scan_ceiling(P);
  for (long n = 0; n <= P.max_n; ++n) {
    for (long r : r_at_least(P, 1)) {
      CountTable census = q_bivariate_census_all(n, r + 1);
      std::uint64_t weighted = 0;
      for (const auto& [key, count] : census.cells) {
        weighted += count * static_cast<std::uint64_t>(key[1]);
      }
      std::uint64_t sigma = sigma_chain_mex(n, r);
      std::uint64_t pn = count_partitions(n);
      if (weighted + pn != sigma) {
        fail(rep, make_witness(n, r, std::nullopt, std::nullopt, u64s(weighted + pn), u64s(sigma),
                               nullptr, nullptr));
        return;
      }
    }
  }
  // Series form: sum_j d/dw of the j-th family member at w=1 equals
  // (q^{r+1};q^{r+1})_inf/(q;q)_inf (sum_{m=1}^r 1/(q^m;q^{r+1})_inf -
  // r/(q^{r+1};q^{r+1})_inf), and adding 1/(q;q)_inf lands on the closed form.
  for (long r : r_at_least(P, 1)) {
    TruncatedSeries lhs(P.order);
    for (long j = 0; j * (r + 1) <= P.order; ++j) {
      lhs += gf_interm1(j, r, P.order).w_derivative_at_1();
    }
    TruncatedSeries inner(P.order);
    for (long m = 1; m <= r; ++m) inner += pochhammer_inv_inf(m, r + 1, P.order);
    TruncatedSeries tail = pochhammer_inv_inf(r + 1, r + 1, P.order);
    tail *= r;
    inner -= tail;
    TruncatedSeries rhs = pochhammer_inf(r + 1, r + 1, P.order) * partition_gf(P.order) * inner;
    for (int d = 0; d <= P.order; ++d) {
      if (lhs.coeff(d) != rhs.coeff(d)) {
        fail(rep, make_witness(d, r, std::nullopt, std::nullopt, lhs.coeff(d).get_str(),
                               rhs.coeff(d).get_str(), nullptr, nullptr));
        return;
      }
    }
    TruncatedSeries closed = partition_gf(P.order) + lhs;
    TruncatedSeries stated = gf_sigma_rc_mex_rhs(r, P.order);
    for (int d = 0; d <= P.order; ++d) {
      if (closed.coeff(d) != stated.coeff(d)) {
        fail(rep, make_witness(d, r, std::nullopt, std::nullopt, closed.coeff(d).get_str(),
                               stated.coeff(d).get_str(), nullptr, nullptr));
        return;
      }
    }
  }
}

void run_gfn_sigma_rc_mex(const Params& P, IdentityReport& rep) {
  check_scan_ceiling(P);
  std::vector<long> rs = r_at_least(P, 1);
  std::vector<TruncatedSeries> series;
  series.reserve(rs.size());
  for (long r : rs) {
    series.push_back(gf_sigma_rc_mex_rhs(r, static_cast<int>(P.max_n)));
    if (P.inject_mismatch && P.max_n >= 1) {
      series.back().coeff(static_cast<int>(std::min(P.max_n, 5L))) += 1;
    }
  }
  for (long n = 0; n <= P.max_n; ++n) {
    for (std::size_t i = 0; i < rs.size(); ++i) {
      long r = rs[i];
      Int lhs = series[i].coeff(static_cast<int>(n));
      std::uint64_t rhs = sigma_chain_mex(n, r);
      if (lhs != Int(static_cast<unsigned long>(rhs))) {
        fail(rep, make_witness(n, r, std::nullopt, std::nullopt, lhs.get_str(), u64s(rhs), nullptr,
                               [](const Partition&) { return true; }));
        return;
      }
    }
  }
  // r = 1 closes the chain of specializations: the stated right side must be
  // (-q;q)_inf^2 coefficientwise.
  for (long r : rs) {
    if (r != 1) continue;
    TruncatedSeries lhs = gf_sigma_rc_mex_rhs(1, P.order);
    TruncatedSeries rhs = gf_sigma_mex(P.order);
    for (int d = 0; d <= P.order; ++d) {
      if (lhs.coeff(d) != rhs.coeff(d)) {
        fail(rep, make_witness(d, 1, std::nullopt, std::nullopt, lhs.coeff(d).get_str(),
                               rhs.coeff(d).get_str(), nullptr, nullptr));
        return;
      }
    }
  }
}

void run_cor_two_color(const Params& P, IdentityReport& rep) {
  check_scan_ceiling(P);
  std::vector<long> rs = r_at_least(P, 1);
  // Colored-multiset counts, one enumeration pass per (r, residue).
  std::vector<std::vector<std::vector<std::uint64_t>>> colored(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (long j = 1; j <= rs[i]; ++j) {
      colored[i].push_back(count_colored_upto(P.max_n, two_colored_regular(rs[i] + 1, j)));
    }
  }
  TruncatedSeries p_series = partition_gf(static_cast<int>(P.max_n));
  std::vector<std::uint64_t> d2;
  bool has_r1 = false;
  for (long r : rs) has_r1 = has_r1 || (r == 1);
  if (has_r1) d2 = count_colored_upto(P.max_n, two_colored_distinct());
  for (long n = 0; n <= P.max_n; ++n) {
    for (std::size_t i = 0; i < rs.size(); ++i) {
      long r = rs[i];
      Int lhs(static_cast<unsigned long>(sigma_chain_mex(n, r)));
      Int rhs = p_series.coeff(static_cast<int>(n));
      rhs *= -(r - 1);
      for (long j = 1; j <= r; ++j) {
        rhs += Int(static_cast<unsigned long>(colored[i][static_cast<std::size_t>(j - 1)]
                                                     [static_cast<std::size_t>(n)]));
      }
      if (lhs != rhs) {
        fail(rep, make_witness(n, r, std::nullopt, std::nullopt, lhs.get_str(), rhs.get_str(),
                               [](const Partition&) { return true; }, nullptr));
        return;
      }
      if (r == 1) {
        std::uint64_t dd = d2[static_cast<std::size_t>(n)];
        if (lhs != Int(static_cast<unsigned long>(dd))) {
          fail(rep, make_witness(n, 1, std::nullopt, std::nullopt, lhs.get_str(), u64s(dd),
                                 [](const Partition&) { return true; }, nullptr));
          return;
        }
      }
    }
  }
}

void run_fk_sum(const Params& P, IdentityReport& rep) {
  check_scan_ceiling(P);
  int order = static_cast<int>(P.max_n);
  long j_hi = (P.max_j >= 0) ? P.max_j : 5;
  for (long r : r_at_least(P, 2)) {
    // F_k: largest part exactly k, successive gaps < r, smallest part < r.
    // Coefficients come from constrained enumeration, degree by degree.
    std::vector<TruncatedSeries> fk;
    for (long k = 0; k <= P.max_n; ++k) {
      ConstraintSpec spec;
      spec.exact_largest_part = k;
      spec.max_successive_gap = r - 1;
      TruncatedSeries f(order);
      for (long n = k; n <= P.max_n; ++n) {
        f.coeff(static_cast<int>(n)) = static_cast<unsigned long>(count_constrained(n, spec));
      }
      fk.push_back(std::move(f));
    }
    for (long j = 0; j <= j_hi; ++j) {
      TruncatedSeries lhs(order);
      for (long k = 0; k <= P.max_n && k * j <= P.max_n; ++k) {
        TruncatedSeries term = fk[static_cast<std::size_t>(k)];
        term.shift(k * j);
        lhs += term;
      }
      TruncatedSeries rhs = TruncatedSeries::one(order);
      for (long u = j + 1; u <= order; ++u) {
        if (u * r <= order) rhs.mul_binomial(u * r, 1);
        rhs.div_binomial(u, 1);
      }
      for (int d = 0; d <= order; ++d) {
        if (lhs.coeff(d) != rhs.coeff(d)) {
          fail(rep, make_witness(d, r, j, std::nullopt, lhs.coeff(d).get_str(),
                                 rhs.coeff(d).get_str(), nullptr, nullptr));
          return;
        }
      }
    }
  }
}

void run_inner_sum_collapse(const Params& P, IdentityReport& rep) {
  for (long r : r_at_least(P, 1)) {
    TruncatedSeries lhs(P.order);
    TruncatedSeries term = TruncatedSeries::one(P.order);  // 1/(q^{r+1};q^{r+1})_j
    for (long m = 1; m <= P.max_m; ++m) {
      long j = m - 1;
      if (j >= 1 && j * (r + 1) <= P.order) term.div_binomial(j * (r + 1), 1);
      TruncatedSeries shifted = term;
      shifted.shift(j * (r + 1));
      lhs += shifted;  // now sum_{i=0}^{j} q^{i(r+1)}/(q^{r+1};q^{r+1})_i
      TruncatedSeries rhs = TruncatedSeries::one(P.order);
      for (long t = 1; t <= m - 1 && t * (r + 1) <= P.order; ++t) rhs.div_binomial(t * (r + 1), 1);
      for (int d = 0; d <= P.order; ++d) {
        if (lhs.coeff(d) != rhs.coeff(d)) {
          fail(rep, make_witness(d, r, std::nullopt, m, lhs.coeff(d).get_str(),
                                 rhs.coeff(d).get_str(), nullptr, nullptr));
          return;
        }
      }
    }
  }
}

void run_qbinom_a0(const Params& P, IdentityReport& rep) {
  for (long z : P.zexp_values) {
    TruncatedSeries lhs(P.order);
    TruncatedSeries term = TruncatedSeries::one(P.order);
    for (long k = 0; k * z <= P.order; ++k) {
      if (k > 0) term.div_binomial(k, 1);
      TruncatedSeries t = term;
      t.shift(k * z);
      lhs += t;
    }
    TruncatedSeries rhs = pochhammer_inv_inf(z, 1, P.order);
    for (int d = 0; d <= P.order; ++d) {
      if (lhs.coeff(d) != rhs.coeff(d)) {
        fail(rep, make_witness(d, std::nullopt, std::nullopt, z, lhs.coeff(d).get_str(),
                               rhs.coeff(d).get_str(), nullptr, nullptr));
        return;
      }
    }
  }
}

void run_chain_maex(const Params& P, IdentityReport& rep) {
  check_scan_ceiling(P);
  struct Combo {
    MaexDomain domain;
    MaexWindow window;
  };
  const Combo combos[] = {
      {MaexDomain::maex_exists, MaexWindow::positive_only},
      {MaexDomain::maex_exists, MaexWindow::allow_below_one},
      {MaexDomain::nongapfree_literal, MaexWindow::positive_only},
      {MaexDomain::nongapfree_literal, MaexWindow::allow_below_one},
  };
  std::vector<long> rs = r_at_least(P, 2);
  bool any_full_pass = false;
  bool r2_ok = true;
  for (const Combo& combo : combos) {
    InterpretationResult result;
    result.domain = to_string(combo.domain);
    result.window = to_string(combo.window);
    result.pass = true;
    for (long n = 0; n <= P.max_n && result.pass; ++n) {
      for (long r : rs) {
        ChainMaexCensus census = chain_maex_census(n, r, combo.domain, combo.window);
        auto diff = first_cell_difference(census.beyond_maex, census.smallest_repeating);
        if (diff) {
          long j = (*diff)[0];
          result.pass = false;
          result.witness = make_witness(
              n, r, j, std::nullopt, u64s(census.beyond_maex.at(j)),
              u64s(census.smallest_repeating.at(j)),
              [&, j, combo](const Partition& p) {
                auto maex = p.chain_maex(r - 1, combo.window);
                if (combo.domain == MaexDomain::maex_exists) {
                  return maex && parts_greater_than(p, *maex) == j;
                }
                return !p.is_gap_free() && parts_greater_than(p, maex.value_or(0)) == j;
              },
              [&, j](const Partition& p) { return p.repeating_part_extrema(r).smallest == j; });
          if (r == 2) r2_ok = false;
          break;
        }
      }
    }
    any_full_pass = any_full_pass || result.pass;
    rep.interpretations.push_back(std::move(result));
  }
  rep.pass = any_full_pass && r2_ok;
  if (!rep.pass) {
    for (const auto& result : rep.interpretations) {
      if (!result.pass && result.witness) {
        rep.witness = result.witness;
        break;
      }
    }
  }
}

void run_parity_sigma_mex(const Params& P, IdentityReport& rep) {
  TruncatedSeries series = gf_sigma_mex(P.order);
  std::vector<bool> doubled_pentagonal(static_cast<std::size_t>(P.order) + 1, false);
  for (long j = 0;; ++j) {
    long lo = j * (3 * j - 1);
    long hi = j * (3 * j + 1);
    if (lo > P.order && hi > P.order) break;
    if (lo <= P.order) doubled_pentagonal[static_cast<std::size_t>(lo)] = true;
    if (hi <= P.order) doubled_pentagonal[static_cast<std::size_t>(hi)] = true;
  }
  for (int n = 0; n <= P.order; ++n) {
    bool odd = is_odd(series.coeff(n));
    bool expected = doubled_pentagonal[static_cast<std::size_t>(n)];
    if (odd != expected) {
      fail(rep, make_witness(n, std::nullopt, std::nullopt, std::nullopt,
                             series.coeff(n).get_str(),
                             expected ? "odd expected" : "even expected", nullptr, nullptr));
      return;
    }
  }
}

void run_gf_vs_census(const Params& P, IdentityReport& rep) {
  check_scan_ceiling(P);
  int order = static_cast<int>(P.max_n);
  TruncatedSeries p_series = partition_gf(order);
  TruncatedSeries sigma_series = gf_sigma_mex(order);
  std::vector<std::uint64_t> d2 = count_colored_upto(P.max_n, two_colored_distinct());
  struct ColoredCheck {
    long r;
    long m;
    TruncatedSeries series;
    std::vector<std::uint64_t> counts;
  };
  std::vector<ColoredCheck> colored;
  for (long r : r_at_least(P, 1)) {
    if (r > 3) continue;  // larger moduli add nothing new and scans get wide
    for (long m = 1; m <= r; ++m) {
      colored.push_back({r, m, gf_corollary_term(r, m, order),
                         count_colored_upto(P.max_n, two_colored_regular(r + 1, m))});
    }
  }
  for (long n = 0; n <= P.max_n; ++n) {
    Int pn(static_cast<unsigned long>(count_partitions(n)));
    if (p_series.coeff(static_cast<int>(n)) != pn) {
      fail(rep, make_witness(n, std::nullopt, std::nullopt, std::nullopt,
                             p_series.coeff(static_cast<int>(n)).get_str(), pn.get_str(), nullptr,
                             [](const Partition&) { return true; }));
      return;
    }
    Int sm(static_cast<unsigned long>(sigma_chain_mex(n, 1)));
    if (sigma_series.coeff(static_cast<int>(n)) != sm) {
      fail(rep, make_witness(n, std::nullopt, std::nullopt, std::nullopt,
                             sigma_series.coeff(static_cast<int>(n)).get_str(), sm.get_str(),
                             nullptr, nullptr));
      return;
    }
    if (sigma_series.coeff(static_cast<int>(n)) !=
        Int(static_cast<unsigned long>(d2[static_cast<std::size_t>(n)]))) {
      fail(rep, make_witness(n, std::nullopt, std::nullopt, std::nullopt,
                             sigma_series.coeff(static_cast<int>(n)).get_str(),
                             u64s(d2[static_cast<std::size_t>(n)]), nullptr, nullptr));
      return;
    }
    for (const auto& check : colored) {
      Int lhs = check.series.coeff(static_cast<int>(n));
      Int rhs(static_cast<unsigned long>(check.counts[static_cast<std::size_t>(n)]));
      if (lhs != rhs) {
        fail(rep, make_witness(n, check.r, std::nullopt, check.m, lhs.get_str(), rhs.get_str(),
                               nullptr, nullptr));
        return;
      }
    }
  }
}

struct RegistryEntry {
  std::string id;
  std::string description;
  void (*run)(const Params&, IdentityReport&);
};

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = {
      {"euler", "partitions into odd parts vs. into distinct parts, counted exhaustively",
       run_euler},
      {"glaisher", "r-regular partitions vs. partitions with every frequency below r", run_glaisher},
      {"franklin",
       "j distinct values divisible by r vs. j distinct values repeating at least r times",
       run_franklin},
      {"thm-3way",
       "j multiples of r vs. largest r-repeating part j vs. j parts beyond the (r-1)-chain mex",
       run_three_way},
      {"gf-multiples-r",
       "series with w tracking multiples of r vs. the multiples census, coefficient by coefficient",
       run_gf_multiples},
      {"prop-alpha",
       "bivariate mex series vs. the parts-beyond-mex census vs. the even-parts census",
       run_prop_alpha},
      {"lemma-refine",
       "(j parts beyond r-chain mex k) vs. (largest (r+1)-repeating part j, k-1 parts beyond j)",
       run_lemma_refine},
      {"interm1",
       "bivariate largest-repeating series vs. the (j, m) census, plus its exact w-derivative",
       run_interm1},
      {"sigma-rc-chain",
       "m-weighted census identity and the series collapse of the summed w-derivatives",
       run_sigma_rc_chain},
      {"gfn-sigma-rc-mex",
       "closed-form sigma_rc-mex series vs. the brute-force chain-mex sums; r = 1 matches "
       "(-q;q)_inf^2",
       run_gfn_sigma_rc_mex},
      {"cor-two-color",
       "sigma_rc-mex(n) = -(r-1)p(n) + two-colored regular counts; r = 1 matches D_2",
       run_cor_two_color},
      {"fk-sum",
       "sum of gap-constrained largest-part series against the frequency-bounded product",
       run_fk_sum},
      {"inner-sum-collapse",
       "partial sums of q^{j(r+1)}/(q^{r+1};q^{r+1})_j collapse to 1/(q^{r+1};q^{r+1})_{m-1}",
       run_inner_sum_collapse},
      {"qbinom-a0", "sum_n z^n/(q;q)_n = 1/(z;q)_inf at z = q^zexp", run_qbinom_a0},
      {"thm-chain-maex",
       "j parts beyond the (r-1)-chain maex vs. smallest r-repeating part j, under every "
       "domain/window reading",
       run_chain_maex},
      {"parity-sigma-mex", "sigma-mex(n) is odd exactly at n = j(3j+-1)", run_parity_sigma_mex},
      {"gf-vs-census-suite",
       "every series builder with an enumeration counterpart agrees with the brute-force counts",
       run_gf_vs_census},
  };
  return entries;
}

json witness_to_json(const Witness& w) {
  json out;
  out["n"] = w.n;
  out["r"] = w.r ? json(*w.r) : json(nullptr);
  out["j"] = w.j ? json(*w.j) : json(nullptr);
  out["m"] = w.m ? json(*w.m) : json(nullptr);
  out["lhs"] = w.lhs;
  out["rhs"] = w.rhs;
  out["partitions_lhs"] = w.partitions_lhs;
  out["partitions_rhs"] = w.partitions_rhs;
  return out;
}

json report_to_json_obj(const IdentityReport& rep) {
  json out;
  out["identity_id"] = rep.identity_id;
  json params;
  params["max_n"] = rep.params.max_n;
  params["r"] = rep.params.r_values;
  params["j"] = rep.params.max_j < 0 ? json(nullptr) : json(rep.params.max_j);
  params["order"] = rep.params.order;
  out["params"] = params;
  out["status"] = rep.pass ? "pass" : "fail";
  out["witness"] = rep.witness ? witness_to_json(*rep.witness) : json(nullptr);
  out["duration_ms"] = rep.duration_ms;
  if (!rep.interpretations.empty()) {
    json arr = json::array();
    for (const auto& interp : rep.interpretations) {
      json item;
      item["domain"] = interp.domain;
      item["window"] = interp.window;
      item["status"] = interp.pass ? "pass" : "fail";
      item["witness"] = interp.witness ? witness_to_json(*interp.witness) : json(nullptr);
      arr.push_back(item);
    }
    out["interpretations"] = arr;
  }
  return out;
}

}  // namespace

long resource_ceiling() {
  if (const char* env = std::getenv("MEXLAB_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return v;
  }
  return kDefaultCeiling;
}

std::vector<std::string> registered_identities() {
  std::vector<std::string> out;
  for (const auto& entry : registry()) out.push_back(entry.id);
  return out;
}

std::string identity_description(const std::string& id) {
  for (const auto& entry : registry()) {
    if (entry.id == id) return entry.description;
  }
  throw UnknownIdentityError("unknown identity: " + id);
}

IdentityReport verify_identity(const std::string& id, const Params& params) {
  for (const auto& entry : registry()) {
    if (entry.id != id) continue;
    IdentityReport rep;
    rep.identity_id = id;
    rep.params = params;
    rep.pass = true;
    auto start = std::chrono::steady_clock::now();
    entry.run(params, rep);
    if (params.with_timings) {
      rep.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    }
    return rep;
  }
  throw UnknownIdentityError("unknown identity: " + id);
}

std::vector<IdentityReport> run_suite(const Params& params) {
  std::vector<IdentityReport> out;
  for (const auto& entry : registry()) out.push_back(verify_identity(entry.id, params));
  return out;
}

std::string report_to_json(const IdentityReport& report) {
  return report_to_json_obj(report).dump();
}

std::string suite_to_json(const std::vector<IdentityReport>& reports) {
  json arr = json::array();
  for (const auto& rep : reports) arr.push_back(report_to_json_obj(rep));
  return arr.dump();
}

std::string report_to_human(const IdentityReport& report) {
  std::string out = report.pass ? "PASS " : "FAIL ";
  out += report.identity_id;
  out += " (max_n=" + std::to_string(report.params.max_n) + ", r=";
  for (std::size_t i = 0; i < report.params.r_values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(report.params.r_values[i]);
  }
  out += ", order=" + std::to_string(report.params.order) + ")";
  if (report.params.with_timings) out += " [" + std::to_string(report.duration_ms) + " ms]";
  auto witness_lines = [&](const Witness& w, const std::string& indent) {
    std::string s = indent + "first mismatch: n=" + std::to_string(w.n);
    if (w.r) s += " r=" + std::to_string(*w.r);
    if (w.j) s += " j=" + std::to_string(*w.j);
    if (w.m) s += " m=" + std::to_string(*w.m);
    s += " lhs=" + w.lhs + " rhs=" + w.rhs + "\n";
    if (!w.partitions_lhs.empty()) {
      s += indent + "lhs partitions:";
      for (const auto& p : w.partitions_lhs) s += " " + p;
      s += "\n";
    }
    if (!w.partitions_rhs.empty()) {
      s += indent + "rhs partitions:";
      for (const auto& p : w.partitions_rhs) s += " " + p;
      s += "\n";
    }
    return s;
  };
  out += "\n";
  if (report.witness) out += witness_lines(*report.witness, "  ");
  for (const auto& interp : report.interpretations) {
    out += "  interpretation " + interp.domain + "/" + interp.window + ": " +
           (interp.pass ? "pass" : "fail") + "\n";
    if (interp.witness) out += witness_lines(*interp.witness, "    ");
  }
  return out;
}

}  // namespace mexlab::verify
