#include "mexlab/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace mexlab {

Partition Partition::from_parts(std::span<const long> values) {
  std::vector<long> sorted(values.begin(), values.end());
  for (long v : sorted) {
    if (v <= 0) throw std::domain_error("Partition: parts must be positive integers");
  }
  std::sort(sorted.begin(), sorted.end());
  Partition p;
  for (long v : sorted) {
    if (!p.freq_.empty() && p.freq_.back().value == v) {
      ++p.freq_.back().count;
    } else {
      p.freq_.push_back({v, 1});
    }
    p.weight_ += v;
  }
  return p;
}

Partition Partition::from_parts(std::initializer_list<long> values) {
  return from_parts(std::span<const long>(values.begin(), values.size()));
}

Partition Partition::from_sorted_parts_desc(std::span<const long> parts) {
  Partition p;
  p.freq_.reserve(parts.size());
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    long v = *it;
    if (!p.freq_.empty() && p.freq_.back().value == v) {
      ++p.freq_.back().count;
    } else {
      p.freq_.push_back({v, 1});
    }
    p.weight_ += v;
  }
  return p;
}

long Partition::num_parts() const {
  long n = 0;
  for (const auto& e : freq_) n += e.count;
  return n;
}

long Partition::frequency_of(long value) const {
  auto it = std::lower_bound(freq_.begin(), freq_.end(), value,
                             [](const FreqEntry& e, long v) { return e.value < v; });
  return (it != freq_.end() && it->value == value) ? it->count : 0;
}

std::vector<long> Partition::parts() const {
  std::vector<long> out;
  out.reserve(static_cast<std::size_t>(num_parts()));
  for (auto it = freq_.rbegin(); it != freq_.rend(); ++it) {
    out.insert(out.end(), static_cast<std::size_t>(it->count), it->value);
  }
  return out;
}

Partition Partition::conjugate() const {
  // Frequency of i in the conjugate is p_i - p_{i+1} over the nonincreasing
  // parts view, so the conjugate's runs come out already ascending.
  std::vector<long> ps = parts();
  Partition out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    long next = (i + 1 < ps.size()) ? ps[i + 1] : 0;
    long diff = ps[i] - next;
    if (diff > 0) out.freq_.push_back({static_cast<long>(i) + 1, diff});
  }
  out.weight_ = weight_;
  return out;
}

long Partition::chain_mex(long r) const {
  if (r < 1) throw std::domain_error("chain_mex: r must be >= 1");
  // Windows of r consecutive missing integers live in the gaps between
  // occurring values (or beyond the largest part, which always works).
  long prev = 0;
  for (const auto& e : freq_) {
    if (e.value - prev - 1 >= r) return prev + 1;
    prev = e.value;
  }
  return prev + 1;
}

std::optional<long> Partition::chain_maex(long t, MaexWindow window) const {
  if (t < 1) throw std::domain_error("chain_maex: t must be >= 1");
  if (freq_.empty()) return std::nullopt;
  // Scan the gaps between occurring values from the top; the highest missing
  // run long enough to hold a window of t yields the answer k = run top.
  for (std::size_t i = freq_.size(); i-- > 0;) {
    long upper = freq_[i].value;                    // occurring; k < upper <= largest
    long lower = (i == 0) ? 0 : freq_[i - 1].value;  // occurring (0: floor sentinel)
    long k = upper - 1;
    if (k < 1) continue;
    long run = upper - lower - 1;  // missing integers strictly between
    if (run <= 0) continue;
    if (i == 0 && window == MaexWindow::allow_below_one) return k;
    if (run >= t) return k;
  }
  return std::nullopt;
}

RepeatExtrema Partition::repeating_part_extrema(long r) const {
  if (r < 1) throw std::domain_error("repeating_part_extrema: r must be >= 1");
  RepeatExtrema out;
  for (const auto& e : freq_) {
    if (e.count >= r) {
      if (out.smallest == 0) out.smallest = e.value;
      out.largest = e.value;
    }
  }
  return out;
}

PartCounters Partition::part_counters(long r, long bound) const {
  if (r < 1) throw std::domain_error("part_counters: r must be >= 1");
  PartCounters out;
  for (const auto& e : freq_) {
    if (e.value % r == 0) out.multiples_of_r += e.count;
    if (e.value > bound) out.parts_greater_than_bound += e.count;
  }
  out.is_gap_free = is_gap_free();
  return out;
}

bool Partition::is_gap_free() const {
  if (freq_.empty()) return true;
  if (freq_.front().value != 1) return false;
  for (std::size_t i = 1; i < freq_.size(); ++i) {
    if (freq_[i].value != freq_[i - 1].value + 1) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  if (freq_.empty()) return "0";
  std::string out;
  for (auto it = freq_.rbegin(); it != freq_.rend(); ++it) {
    for (long c = 0; c < it->count; ++c) {
      if (!out.empty()) out += '+';
      out += std::to_string(it->value);
    }
  }
  return out;
}

}  // namespace mexlab
