#include <stdexcept>

#include "doctest.h"
#include "mexlab/enumerate.hpp"
#include "mexlab/partition.hpp"

using mexlab::MaexWindow;
using mexlab::Partition;
using mexlab::PartitionStream;

TEST_CASE("from_parts canonicalizes and validates") {
  Partition p = Partition::from_parts({1, 4, 4, 3, 7, 1, 4});
  CHECK(p == Partition::from_parts({7, 4, 4, 4, 3, 1, 1}));
  CHECK(p.weight() == 24);
  CHECK(p.to_string() == "7+4+4+4+3+1+1");

  Partition empty = Partition::from_parts({});
  CHECK(empty.weight() == 0);
  CHECK(empty.empty());
  CHECK(empty.to_string() == "0");

  CHECK_THROWS_AS(Partition::from_parts({3, 0}), std::domain_error);
  CHECK_THROWS_AS(Partition::from_parts({-2}), std::domain_error);
}

TEST_CASE("basic statistics") {
  Partition p = Partition::from_parts({7, 4, 4, 4, 3, 1, 1});
  CHECK(p.largest_part() == 7);
  CHECK(p.smallest_part() == 1);
  CHECK(p.num_parts() == 7);
  CHECK(p.frequency_of(4) == 3);
  CHECK(p.frequency_of(2) == 0);

  Partition empty;
  CHECK(empty.largest_part() == 0);
  CHECK(empty.smallest_part() == 0);
  CHECK(empty.num_parts() == 0);
  CHECK(empty.frequency_of(1) == 0);

  Partition q = Partition::from_parts({2, 2, 1});
  CHECK(q.largest_part() == 2);
  CHECK(q.smallest_part() == 1);
  CHECK(q.num_parts() == 3);
  CHECK(q.frequency_of(2) == 2);
}

TEST_CASE("conjugate examples") {
  CHECK(Partition::from_parts({3}).conjugate() == Partition::from_parts({1, 1, 1}));
  CHECK(Partition::from_parts({2, 1}).conjugate() == Partition::from_parts({2, 1}));
  // Column counts of the Young diagram of (4,3,1).
  CHECK(Partition::from_parts({4, 3, 1}).conjugate() == Partition::from_parts({3, 2, 2, 1}));
  CHECK(Partition().conjugate() == Partition());
}

TEST_CASE("conjugation is an involution swapping largest part and part count") {
  for (long n = 0; n <= 30; ++n) {
    bool ok = true;
    PartitionStream stream(n);
    while (stream.next()) {
      Partition p = stream.partition();
      Partition c = p.conjugate();
      ok = ok && c.weight() == n;
      ok = ok && c.largest_part() == p.num_parts();
      ok = ok && c.num_parts() == p.largest_part();
      ok = ok && c.conjugate() == p;
    }
    CHECK(ok);
  }
}

TEST_CASE("chain mex on the worked example") {
  Partition p = Partition::from_parts({7, 4, 4, 4, 3, 1, 1});
  CHECK(p.chain_mex(1) == 2);
  CHECK(p.chain_mex(2) == 5);
  CHECK(p.chain_mex(3) == 8);
  CHECK(p.chain_mex(9) == 8);
  Partition empty;
  for (long r = 1; r <= 5; ++r) CHECK(empty.chain_mex(r) == 1);
  CHECK_THROWS_AS(p.chain_mex(0), std::domain_error);
}

TEST_CASE("chain mex properties, exhaustive") {
  for (long n = 0; n <= 25; ++n) {
    bool ok = true;
    PartitionStream stream(n);
    while (stream.next()) {
      Partition p = stream.partition();
      long prev = 0;
      for (long r = 1; r <= p.largest_part() + 2; ++r) {
        long k = p.chain_mex(r);
        ok = ok && k >= prev;                       // nondecreasing in r
        ok = ok && k <= p.largest_part() + 1;       // never beyond l+1
        for (long t = k; t < k + r; ++t) ok = ok && p.frequency_of(t) == 0;
        if (k > 1) ok = ok && p.frequency_of(k - 1) > 0;  // least window
        prev = k;
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("chain maex examples") {
  Partition p = Partition::from_parts({5, 3, 1});
  CHECK(p.chain_maex(1) == 4);
  CHECK_FALSE(p.chain_maex(2).has_value());
  CHECK(Partition::from_parts({3}).chain_maex(2) == 2);
  CHECK_FALSE(Partition().chain_maex(1).has_value());
  CHECK_FALSE(Partition::from_parts({1}).chain_maex(1).has_value());

  // The two window conventions only differ when the window would dip below 1.
  Partition q = Partition::from_parts({2, 2});
  CHECK(q.chain_maex(2, MaexWindow::allow_below_one) == 1);
  CHECK_FALSE(q.chain_maex(2, MaexWindow::positive_only).has_value());
  CHECK(q.chain_maex(1, MaexWindow::allow_below_one) == q.chain_maex(1, MaexWindow::positive_only));
}

TEST_CASE("maex conventions agree at t = 1 and vanish on gap-free partitions") {
  for (long n = 0; n <= 20; ++n) {
    bool ok = true;
    PartitionStream stream(n);
    while (stream.next()) {
      Partition p = stream.partition();
      ok = ok && p.chain_maex(1, MaexWindow::allow_below_one) ==
                     p.chain_maex(1, MaexWindow::positive_only);
      if (p.is_gap_free()) {
        for (long t = 1; t <= 3; ++t) ok = ok && !p.chain_maex(t).has_value();
      }
      // At t = 1 the maex exists exactly for the non-gap-free partitions.
      ok = ok && (p.chain_maex(1).has_value() == !p.is_gap_free());
    }
    CHECK(ok);
  }
}

TEST_CASE("repeating part extrema") {
  auto e = Partition::from_parts({3, 2, 2}).repeating_part_extrema(2);
  CHECK(e.largest == 2);
  CHECK(e.smallest == 2);
  CHECK(Partition::from_parts({4, 1, 1, 1}).repeating_part_extrema(3).largest == 1);
  CHECK(Partition::from_parts({6, 1}).repeating_part_extrema(2).largest == 0);
  CHECK(Partition::from_parts({6, 1}).repeating_part_extrema(2).smallest == 0);
  // r = 1: the largest 1-repeating part is the largest part.
  Partition p = Partition::from_parts({7, 4, 4, 4, 3, 1, 1});
  CHECK(p.repeating_part_extrema(1).largest == p.largest_part());
  CHECK(p.repeating_part_extrema(1).smallest == p.smallest_part());
}

TEST_CASE("part counters") {
  CHECK(Partition::from_parts({6, 1}).part_counters(3, 0).multiples_of_r == 1);
  CHECK(Partition::from_parts({2, 2, 1, 1, 1}).part_counters(2, 0).multiples_of_r == 2);
  CHECK(Partition::from_parts({3, 2, 1}).is_gap_free());
  CHECK_FALSE(Partition::from_parts({5, 3, 1}).is_gap_free());
  CHECK(Partition().is_gap_free());
  Partition p = Partition::from_parts({7, 4, 4, 4, 3, 1, 1});
  CHECK(p.part_counters(1, 0).parts_greater_than_bound == p.num_parts());
  CHECK(p.part_counters(1, 4).parts_greater_than_bound == 1);
}

TEST_CASE("no parts beyond mex is the same as gap-free") {
  for (long n = 0; n <= 30; ++n) {
    bool ok = true;
    PartitionStream stream(n);
    while (stream.next()) {
      Partition p = stream.partition();
      bool none_beyond = p.part_counters(1, p.chain_mex(1)).parts_greater_than_bound == 0;
      ok = ok && (none_beyond == p.is_gap_free());
    }
    CHECK(ok);
  }
}
