#include "doctest.h"
#include "mexlab/census.hpp"
#include "mexlab/enumerate.hpp"

using mexlab::CountTable;
using mexlab::MaexDomain;
using mexlab::MaexWindow;

TEST_CASE("three-way census reproduces the illustration cells") {
  mexlab::ThreeWayCensus t7r2 = mexlab::three_way_census(7, 2);
  CHECK(t7r2.multiples.at(2) == 3);
  CHECK(t7r2.largest_repeating.at(2) == 3);
  CHECK(t7r2.beyond_chain_mex.at(2) == 3);

  mexlab::ThreeWayCensus t7r3 = mexlab::three_way_census(7, 3);
  CHECK(t7r3.multiples.at(1) == 5);
  CHECK(t7r3.largest_repeating.at(1) == 5);
  CHECK(t7r3.beyond_chain_mex.at(1) == 5);

  mexlab::ThreeWayCensus t6r2 = mexlab::three_way_census(6, 2);
  CHECK(t6r2.multiples.at(0) == 4);
  CHECK(t6r2.largest_repeating.at(0) == 4);
  CHECK(t6r2.beyond_chain_mex.at(0) == 4);
}

TEST_CASE("three-way columns each cover the whole partition set") {
  for (long n = 0; n <= 20; ++n) {
    std::uint64_t pn = mexlab::count_partitions(n);
    for (long r = 2; r <= 3; ++r) {
      mexlab::ThreeWayCensus census = mexlab::three_way_census(n, r);
      CHECK(census.multiples.total() == pn);
      CHECK(census.largest_repeating.total() == pn);
      CHECK(census.beyond_chain_mex.total() == pn);
    }
  }
}

TEST_CASE("largest-repeating overcount census") {
  CountTable t = mexlab::q_bivariate_census(3, 2, 1);
  CHECK(t.at(0) == 1);  // only (1,1,1)
  CHECK(t.total() == 1);

  // Marginal over m equals the unrefined largest-repeating count.
  for (long n = 0; n <= 15; ++n) {
    CountTable all = mexlab::q_bivariate_census_all(n, 3);
    mexlab::ThreeWayCensus three = mexlab::three_way_census(n, 3);
    for (long j = 0; j <= n; ++j) {
      std::uint64_t marginal = 0;
      for (const auto& [key, count] : all.cells) {
        if (key[0] == j) marginal += count;
      }
      CHECK(marginal == three.largest_repeating.at(j));
    }
  }
  CountTable n7 = mexlab::q_bivariate_census_all(7, 3);
  std::uint64_t j1 = 0;
  for (const auto& [key, count] : n7.cells) {
    if (key[0] == 1) j1 += count;
  }
  CHECK(j1 == 5);
}

TEST_CASE("sigma chain mex sums") {
  CHECK(mexlab::sigma_chain_mex(3, 1) == 6);
  CHECK(mexlab::sigma_chain_mex(2, 2) == 5);
  for (long r = 1; r <= 5; ++r) CHECK(mexlab::sigma_chain_mex(0, r) == 1);
}

TEST_CASE("refinement tables agree cellwise") {
  mexlab::RefineCensus small = mexlab::refine_census(2, 1);
  CHECK(small.table_a.at(1, 1) == 1);
  CHECK(small.table_a.at(0, 2) == 1);
  CHECK(small.table_a == small.table_b);

  for (long n = 0; n <= 18; ++n) {
    for (long r = 1; r <= 3; ++r) {
      mexlab::RefineCensus census = mexlab::refine_census(n, r);
      CHECK(census.table_a == census.table_b);
      CHECK(census.table_a.total() == mexlab::count_partitions(n));
    }
  }
}

TEST_CASE("franklin and glaisher censuses") {
  mexlab::FranklinGlaisherCensus n4r2 = mexlab::franklin_glaisher_census(4, 2);
  CHECK(n4r2.divisible_side.at(1) == 3);
  CHECK(n4r2.repeating_side.at(1) == 3);

  mexlab::FranklinGlaisherCensus n5r3 = mexlab::franklin_glaisher_census(5, 3);
  CHECK(n5r3.regular_count == 5);
  CHECK(n5r3.frequency_bounded_count == 5);

  // The scalar pair is the j = 0 column; for r = 2 both sides are the
  // odd-parts/distinct-parts counts.
  mexlab::FranklinGlaisherCensus n6r2 = mexlab::franklin_glaisher_census(6, 2);
  CHECK(n6r2.divisible_side.at(0) == 4);
  CHECK(n6r2.repeating_side.at(0) == 4);
  CHECK(n6r2.regular_count == 4);
  CHECK(n6r2.frequency_bounded_count == 4);
}

TEST_CASE("chain-maex census at r = 2 matches the classical statement") {
  for (long n = 0; n <= 20; ++n) {
    mexlab::ChainMaexCensus census = mexlab::chain_maex_census(n, 2);
    CHECK(census.beyond_maex == census.smallest_repeating);
  }
  // All four domain/window readings coincide at r = 2.
  for (long n = 0; n <= 12; ++n) {
    auto base = mexlab::chain_maex_census(n, 2).beyond_maex;
    for (MaexDomain d : {MaexDomain::maex_exists, MaexDomain::nongapfree_literal}) {
      for (MaexWindow w : {MaexWindow::positive_only, MaexWindow::allow_below_one}) {
        CHECK(mexlab::chain_maex_census(n, 2, d, w).beyond_maex == base);
      }
    }
  }
}

TEST_CASE("chain-maex census at r = 3 under the existence domain") {
  for (long n = 0; n <= 20; ++n) {
    mexlab::ChainMaexCensus census =
        mexlab::chain_maex_census(n, 3, MaexDomain::maex_exists, MaexWindow::positive_only);
    CHECK(census.beyond_maex == census.smallest_repeating);
  }
  // The below-one window breaks the identity (first at n = 2).
  mexlab::ChainMaexCensus broken =
      mexlab::chain_maex_census(2, 3, MaexDomain::maex_exists, MaexWindow::allow_below_one);
  CHECK(broken.beyond_maex.at(1) == 1);
  CHECK(broken.smallest_repeating.at(1) == 0);
}

TEST_CASE("alpha census") {
  CountTable alpha6 = mexlab::alpha_census(6);
  CHECK(alpha6.at(0) == 4);
  CountTable alpha0 = mexlab::alpha_census(0);
  CHECK(alpha0.at(0) == 1);
  CHECK(alpha0.total() == 1);
}

TEST_CASE("first_cell_difference reports the smallest mismatch") {
  CountTable a, b;
  a.add(0, 0, 2);
  a.add(1, 1, 3);
  b.add(0, 0, 2);
  b.add(1, 1, 4);
  auto diff = mexlab::first_cell_difference(a, b);
  REQUIRE(diff.has_value());
  CHECK((*diff)[0] == 1);
  CHECK((*diff)[1] == 1);
  b.cells[{1, 1}] = 3;
  CHECK_FALSE(mexlab::first_cell_difference(a, b).has_value());
  b.add(0, 5, 0);  // explicit zero cells do not count as differences
  CHECK_FALSE(mexlab::first_cell_difference(a, b).has_value());
}
