#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mexlab/partition.hpp"

namespace mexlab {

// A small (j[, k]) -> count grid produced by one exhaustive scan. Cells are
// only materialized when hit, so equal tables compare equal as maps.
struct CountTable {
  std::string statistic;
  std::vector<std::string> axes;
  std::map<std::array<long, 2>, std::uint64_t> cells;

  void add(long a, long b = 0, std::uint64_t delta = 1) { cells[{a, b}] += delta; }
  std::uint64_t at(long a, long b = 0) const;
  std::uint64_t total() const;
  long max_key(int axis) const;  // -1 when empty

  friend bool operator==(const CountTable& x, const CountTable& y) { return x.cells == y.cells; }
};

// First cell (in lexicographic key order) where the two tables disagree,
// treating missing cells as zero.
std::optional<std::array<long, 2>> first_cell_difference(const CountTable& a, const CountTable& b);

std::uint64_t count_partitions(long n);

// Per j: (a) exactly j parts divisible by r, (b) largest r-repeating part j,
// (c) j parts greater than the (r-1)-chain mex. Requires r >= 2.
struct ThreeWayCensus {
  long n = 0;
  long r = 0;
  CountTable multiples;
  CountTable largest_repeating;
  CountTable beyond_chain_mex;
};
ThreeWayCensus three_way_census(long n, long r);

// Cells (j, m): largest s-repeating part exactly j with exactly m parts
// greater than j. Requires s >= 1.
CountTable q_bivariate_census_all(long n, long s);
// Fixed-j slice of the same scan, over m.
CountTable q_bivariate_census(long n, long s, long j);

// Sum of the r-chain mex over every partition of n.
std::uint64_t sigma_chain_mex(long n, long r);

// Table A: j parts greater than the r-chain mex, whose r-chain mex is k.
// Table B: largest (r+1)-repeating part j with exactly k-1 parts beyond j.
struct RefineCensus {
  long n = 0;
  long r = 0;
  CountTable table_a;
  CountTable table_b;
};
RefineCensus refine_census(long n, long r);

// Per j: exactly j distinct part-values divisible by r vs. exactly j distinct
// part-values occurring at least r times; the scalars are the j = 0 column
// (r-regular partitions vs. partitions with every frequency < r).
struct FranklinGlaisherCensus {
  long n = 0;
  long r = 0;
  CountTable divisible_side;
  CountTable repeating_side;
  std::uint64_t regular_count = 0;
  std::uint64_t frequency_bounded_count = 0;
};
FranklinGlaisherCensus franklin_glaisher_census(long n, long r);

// Which partitions the left column of the chain-maex census ranges over.
enum class MaexDomain {
  maex_exists,         // partitions where the (r-1)-chain maex exists
  nongapfree_literal,  // every non-gap-free partition; an absent maex counts as 0
};
const char* to_string(MaexDomain d);
const char* to_string(MaexWindow w);

// Per j >= 1: partitions with exactly j parts greater than their (r-1)-chain
// maex (domain/window as requested) vs. partitions whose smallest r-repeating
// part is j. Requires r >= 2. The defaults are the pair under which the two
// columns agree for every r; at r = 2 all four combinations coincide.
struct ChainMaexCensus {
  long n = 0;
  long r = 0;
  MaexDomain domain = MaexDomain::maex_exists;
  MaexWindow window = MaexWindow::positive_only;
  CountTable beyond_maex;
  CountTable smallest_repeating;
};
ChainMaexCensus chain_maex_census(long n, long r, MaexDomain domain = MaexDomain::maex_exists,
                                  MaexWindow window = MaexWindow::positive_only);

// Per j: exactly j parts greater than the minimal excludant.
CountTable alpha_census(long n);
// Per j: exactly j parts divisible by r (with multiplicity).
CountTable multiples_census(long n, long r);

}  // namespace mexlab
