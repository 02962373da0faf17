#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mexlab {

// One (value, multiplicity) run of a partition's frequency representation.
struct FreqEntry {
  long value = 0;
  long count = 0;
  friend bool operator==(const FreqEntry&, const FreqEntry&) = default;
};

// How chain_maex treats integers below 1 when a window of consecutive missing
// integers would reach past 1.
enum class MaexWindow {
  allow_below_one,  // integers <= 0 count as non-occurring
  positive_only,    // the whole window k, k-1, ..., k-t+1 must lie in [1, oo)
};

struct RepeatExtrema {
  long largest = 0;  // 0 encodes "no value repeats >= r times"
  long smallest = 0;
};

struct PartCounters {
  long multiples_of_r = 0;            // parts divisible by r, with multiplicity
  long parts_greater_than_bound = 0;  // parts > bound, with multiplicity
  bool is_gap_free = false;
};

// An integer partition, stored canonically as an ascending frequency map.
// Values are immutable after construction and safe to share across threads;
// every statistic below is a pure function of the value.
class Partition {
 public:
  Partition() = default;  // the empty partition (weight 0)

  // Canonicalizes an arbitrary bag of positive integers; input order is
  // irrelevant. Throws std::domain_error on any value <= 0.
  static Partition from_parts(std::span<const long> values);
  static Partition from_parts(std::initializer_list<long> values);

  // Fast path for callers that already hold a nonincreasing positive vector.
  static Partition from_sorted_parts_desc(std::span<const long> parts);

  long weight() const { return weight_; }
  bool empty() const { return freq_.empty(); }
  long largest_part() const { return freq_.empty() ? 0 : freq_.back().value; }
  long smallest_part() const { return freq_.empty() ? 0 : freq_.front().value; }
  long num_parts() const;
  long frequency_of(long value) const;
  const std::vector<FreqEntry>& frequencies() const { return freq_; }
  std::vector<long> parts() const;  // nonincreasing, materialized on demand

  // Transpose of the Young diagram, built directly in frequency form as
  // <1^{p1-p2} 2^{p2-p3} ...>. Swaps largest_part and num_parts.
  Partition conjugate() const;

  // Least k >= 1 such that none of k, k+1, ..., k+r-1 occurs as a part.
  // r = 1 is the classical minimal excludant. Always <= largest_part() + 1.
  long chain_mex(long r) const;

  // Largest k with 1 <= k < largest_part() such that none of k, k-1, ...,
  // k-t+1 occurs; absent when no such k exists. Gap-free partitions have no
  // such k for any t. The window treatment below 1 is configurable; the
  // default lets windows extend past 1, which for t = 1 coincides with the
  // classical maximal excludant either way.
  std::optional<long> chain_maex(long t, MaexWindow window = MaexWindow::allow_below_one) const;

  // Largest and smallest value occurring at least r times; 0 means "none".
  // For r = 1 the largest is just largest_part().
  RepeatExtrema repeating_part_extrema(long r) const;

  // multiples_of_r and parts>bound counted with multiplicity; gap-free means
  // smallest part 1 and every integer up to the largest part occurring (the
  // empty partition is gap-free by convention).
  PartCounters part_counters(long r, long bound) const;
  bool is_gap_free() const;

  std::string to_string() const;  // "7+4+4+4+3+1+1"; the empty partition prints "0"

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<FreqEntry> freq_;  // ascending by value, all counts >= 1
  long weight_ = 0;
};

}  // namespace mexlab
