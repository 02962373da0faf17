#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mexlab/partition.hpp"

namespace mexlab {

// Conjunctive structural constraints for partition generation. The same
// struct doubles as a filter predicate (matches) so constrained streams can
// be cross-checked against re-filtered unconstrained ones.
struct ConstraintSpec {
  std::optional<long> max_frequency;      // every value occurs at most this many times
  std::optional<long> forbidden_modulus;  // used with forbidden_residues below
  std::vector<long> forbidden_residues;   // values v with v % modulus in this set are excluded
  bool distinct = false;
  std::optional<long> exact_largest_part;  // 0 admits only the empty partition
  // Successive distinct parts differ by at most g AND the smallest part is at
  // most g (the virtual gap down from 0 counts, so 1..largest is reachable in
  // steps of <= g).
  std::optional<long> max_successive_gap;
  std::optional<long> min_part;

  bool admits_value(long v) const {
    if (min_part && v < *min_part) return false;
    if (forbidden_modulus) {
      long res = v % *forbidden_modulus;
      for (long f : forbidden_residues) {
        if (res == ((f % *forbidden_modulus) + *forbidden_modulus) % *forbidden_modulus) return false;
      }
    }
    return true;
  }

  long frequency_cap() const {
    if (distinct) return 1;
    if (max_frequency) return *max_frequency;
    return std::numeric_limits<long>::max();
  }

  bool matches(const Partition& p) const;
};

// m-regular partitions (no part divisible by m).
ConstraintSpec regular_spec(long m);

// Streams the partitions of n in descending lexicographic order of the parts
// view. Single consumer; independent streams are independent.
class PartitionStream {
 public:
  explicit PartitionStream(long n);
  bool next();  // advance to the next partition; false once exhausted
  const std::vector<long>& parts() const { return parts_; }
  Partition partition() const { return Partition::from_sorted_parts_desc(parts_); }

 private:
  long n_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::vector<long> parts_;
};

namespace detail {

template <typename Fn>
void constrained_rec(long rem, long max_next, long run, std::vector<long>& acc,
                     const ConstraintSpec& spec, long cap, Fn& fn) {
  if (rem == 0) {
    if (spec.max_successive_gap && !acc.empty() && acc.back() > *spec.max_successive_gap) return;
    fn(static_cast<const std::vector<long>&>(acc));
    return;
  }
  long lo = spec.min_part.value_or(1);
  for (long v = std::min(max_next, rem); v >= lo; --v) {
    long next_run = 1;
    if (!acc.empty()) {
      if (v == acc.back()) {
        if (run >= cap) continue;
        next_run = run + 1;
      } else if (spec.max_successive_gap && acc.back() - v > *spec.max_successive_gap) {
        break;  // every smaller v violates the gap bound as well
      }
    }
    if (!spec.admits_value(v)) continue;
    acc.push_back(v);
    constrained_rec(rem - v, v, next_run, acc, spec, cap, fn);
    acc.pop_back();
  }
}

}  // namespace detail

// Visits every partition of n satisfying the constraints, in descending
// lexicographic order; fn receives the nonincreasing parts view. Fixing
// exact_largest_part also serves as the by-largest-part work splitter for
// parallel censuses (strata are disjoint; aggregate with a commutative fold).
template <typename Fn>
void for_each_constrained(long n, const ConstraintSpec& spec, Fn&& fn) {
  if (n < 0) throw std::domain_error("for_each_constrained: n must be >= 0");
  std::vector<long> acc;
  const long cap = spec.frequency_cap();
  Fn& f = fn;
  if (spec.exact_largest_part) {
    long k = *spec.exact_largest_part;
    if (k == 0) {
      if (n == 0) f(static_cast<const std::vector<long>&>(acc));
      return;
    }
    if (k < 0 || k > n || !spec.admits_value(k)) return;
    acc.push_back(k);
    detail::constrained_rec(n - k, k, 1, acc, spec, cap, f);
  } else {
    detail::constrained_rec(n, n, 0, acc, spec, cap, f);
  }
}

template <typename Fn>
void for_each_partition(long n, Fn&& fn) {
  PartitionStream s(n);
  while (s.next()) fn(s.parts());
}

std::uint64_t count_constrained(long n, const ConstraintSpec& spec);
std::vector<Partition> collect_constrained(long n, const ConstraintSpec& spec);

// Two-colored enumeration: values congruent to two_color_residue modulo
// modulus come in two distinguishable colors, every other admissible value is
// uncolored. A colored multiset assigns a multiplicity to each colored
// symbol; distinct/max_frequency from the base constraints cap symbols
// individually, residue and min_part rules apply to the underlying value.
struct ColoredSpec {
  long modulus = 1;
  long two_color_residue = 1;  // in [1, modulus]
  ConstraintSpec base;

  bool two_colored(long v) const {
    return (((v - two_color_residue) % modulus) + modulus) % modulus == 0;
  }
};

// Counts colored multisets of every weight 0..max_n in one enumeration pass.
std::vector<std::uint64_t> count_colored_upto(long max_n, const ColoredSpec& spec);
std::uint64_t count_colored(long n, const ColoredSpec& spec);

// p_m(j, n): m-regular partitions with parts == j (mod m) in two colors.
ColoredSpec two_colored_regular(long modulus, long residue);
// D_2(n): partitions into distinct parts with two colors.
ColoredSpec two_colored_distinct();

}  // namespace mexlab
