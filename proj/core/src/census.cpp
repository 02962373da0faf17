#include "mexlab/census.hpp"

#include <optional>
#include <stdexcept>

#include "mexlab/enumerate.hpp"

namespace mexlab {

namespace {

template <typename Fn>
void scan(long n, Fn&& fn) {
  PartitionStream stream(n);
  while (stream.next()) fn(stream.partition());
}

long parts_greater_than(const Partition& p, long bound) {
  long count = 0;
  for (const auto& e : p.frequencies()) {
    if (e.value > bound) count += e.count;
  }
  return count;
}

}  // namespace

std::uint64_t CountTable::at(long a, long b) const {
  auto it = cells.find({a, b});
  return it == cells.end() ? 0 : it->second;
}

std::uint64_t CountTable::total() const {
  std::uint64_t sum = 0;
  for (const auto& [key, count] : cells) sum += count;
  return sum;
}

long CountTable::max_key(int axis) const {
  long best = -1;
  for (const auto& [key, count] : cells) best = std::max(best, key[static_cast<std::size_t>(axis)]);
  return best;
}

std::optional<std::array<long, 2>> first_cell_difference(const CountTable& a, const CountTable& b) {
  auto ia = a.cells.begin();
  auto ib = b.cells.begin();
  while (ia != a.cells.end() || ib != b.cells.end()) {
    if (ib == b.cells.end() || (ia != a.cells.end() && ia->first < ib->first)) {
      if (ia->second != 0) return ia->first;
      ++ia;
    } else if (ia == a.cells.end() || ib->first < ia->first) {
      if (ib->second != 0) return ib->first;
      ++ib;
    } else {
      if (ia->second != ib->second) return ia->first;
      ++ia;
      ++ib;
    }
  }
  return std::nullopt;
}

std::uint64_t count_partitions(long n) {
  std::uint64_t count = 0;
  PartitionStream stream(n);
  while (stream.next()) ++count;
  return count;
}

ThreeWayCensus three_way_census(long n, long r) {
  if (r < 2) throw std::domain_error("three_way_census: r must be >= 2");
  ThreeWayCensus out;
  out.n = n;
  out.r = r;
  out.multiples.statistic = "multiples-of-r";
  out.largest_repeating.statistic = "largest-r-repeating";
  out.beyond_chain_mex.statistic = "beyond-chain-mex";
  out.multiples.axes = out.largest_repeating.axes = out.beyond_chain_mex.axes = {"j"};
  scan(n, [&](const Partition& p) {
    out.multiples.add(p.part_counters(r, 0).multiples_of_r);
    out.largest_repeating.add(p.repeating_part_extrema(r).largest);
    out.beyond_chain_mex.add(parts_greater_than(p, p.chain_mex(r - 1)));
  });
  return out;
}

CountTable q_bivariate_census_all(long n, long s) {
  if (s < 1) throw std::domain_error("q_bivariate_census_all: s must be >= 1");
  CountTable out;
  out.statistic = "largest-repeating-with-overcount";
  out.axes = {"j", "m"};
  scan(n, [&](const Partition& p) {
    long j = p.repeating_part_extrema(s).largest;
    out.add(j, parts_greater_than(p, j));
  });
  return out;
}

CountTable q_bivariate_census(long n, long s, long j) {
  CountTable all = q_bivariate_census_all(n, s);
  CountTable out;
  out.statistic = all.statistic;
  out.axes = {"m"};
  for (const auto& [key, count] : all.cells) {
    if (key[0] == j) out.add(key[1], 0, count);
  }
  return out;
}

std::uint64_t sigma_chain_mex(long n, long r) {
  if (r < 1) throw std::domain_error("sigma_chain_mex: r must be >= 1");
  std::uint64_t sum = 0;
  scan(n, [&](const Partition& p) { sum += static_cast<std::uint64_t>(p.chain_mex(r)); });
  return sum;
}

RefineCensus refine_census(long n, long r) {
  if (r < 1) throw std::domain_error("refine_census: r must be >= 1");
  RefineCensus out;
  out.n = n;
  out.r = r;
  out.table_a.statistic = "beyond-chain-mex-by-mex";
  out.table_b.statistic = "largest-repeating-by-overcount";
  out.table_a.axes = out.table_b.axes = {"j", "k"};
  scan(n, [&](const Partition& p) {
    long k = p.chain_mex(r);
    out.table_a.add(parts_greater_than(p, k), k);
    long j = p.repeating_part_extrema(r + 1).largest;
    out.table_b.add(j, 1 + parts_greater_than(p, j));
  });
  return out;
}

FranklinGlaisherCensus franklin_glaisher_census(long n, long r) {
  if (r < 2) throw std::domain_error("franklin_glaisher_census: r must be >= 2");
  FranklinGlaisherCensus out;
  out.n = n;
  out.r = r;
  out.divisible_side.statistic = "distinct-values-divisible";
  out.repeating_side.statistic = "distinct-values-repeating";
  out.divisible_side.axes = out.repeating_side.axes = {"j"};
  scan(n, [&](const Partition& p) {
    long divisible = 0;
    long repeating = 0;
    for (const auto& e : p.frequencies()) {
      if (e.value % r == 0) ++divisible;
      if (e.count >= r) ++repeating;
    }
    out.divisible_side.add(divisible);
    out.repeating_side.add(repeating);
    if (divisible == 0) ++out.regular_count;
    if (repeating == 0) ++out.frequency_bounded_count;
  });
  return out;
}

const char* to_string(MaexDomain d) {
  return d == MaexDomain::maex_exists ? "maex-exists" : "non-gapfree-literal";
}

const char* to_string(MaexWindow w) {
  return w == MaexWindow::positive_only ? "positive-only" : "allow-below-one";
}

ChainMaexCensus chain_maex_census(long n, long r, MaexDomain domain, MaexWindow window) {
  if (r < 2) throw std::domain_error("chain_maex_census: r must be >= 2");
  ChainMaexCensus out;
  out.n = n;
  out.r = r;
  out.domain = domain;
  out.window = window;
  out.beyond_maex.statistic = "beyond-chain-maex";
  out.smallest_repeating.statistic = "smallest-r-repeating";
  out.beyond_maex.axes = out.smallest_repeating.axes = {"j"};
  scan(n, [&](const Partition& p) {
    long small = p.repeating_part_extrema(r).smallest;
    if (small >= 1) out.smallest_repeating.add(small);
    std::optional<long> maex = p.chain_maex(r - 1, window);
    if (domain == MaexDomain::maex_exists) {
      if (maex) out.beyond_maex.add(parts_greater_than(p, *maex));
    } else if (!p.is_gap_free()) {
      out.beyond_maex.add(parts_greater_than(p, maex.value_or(0)));
    }
  });
  return out;
}

CountTable alpha_census(long n) {
  CountTable out;
  out.statistic = "beyond-mex";
  out.axes = {"j"};
  scan(n, [&](const Partition& p) { out.add(parts_greater_than(p, p.chain_mex(1))); });
  return out;
}

CountTable multiples_census(long n, long r) {
  if (r < 1) throw std::domain_error("multiples_census: r must be >= 1");
  CountTable out;
  out.statistic = "multiples-of-r";
  out.axes = {"j"};
  scan(n, [&](const Partition& p) { out.add(p.part_counters(r, 0).multiples_of_r); });
  return out;
}

}  // namespace mexlab
