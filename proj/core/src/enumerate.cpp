#include "mexlab/enumerate.hpp"

#include <algorithm>

namespace mexlab {

bool ConstraintSpec::matches(const Partition& p) const {
  const long cap = frequency_cap();
  for (const auto& e : p.frequencies()) {
    if (e.count > cap) return false;
    if (!admits_value(e.value)) return false;
  }
  if (exact_largest_part && p.largest_part() != *exact_largest_part) return false;
  if (max_successive_gap && !p.empty()) {
    long g = *max_successive_gap;
    if (p.smallest_part() > g) return false;
    const auto& fs = p.frequencies();
    for (std::size_t i = 1; i < fs.size(); ++i) {
      if (fs[i].value - fs[i - 1].value > g) return false;
    }
  }
  return true;
}

ConstraintSpec regular_spec(long m) {
  ConstraintSpec spec;
  spec.forbidden_modulus = m;
  spec.forbidden_residues = {0};
  return spec;
}

PartitionStream::PartitionStream(long n) : n_(n) {
  if (n < 0) throw std::domain_error("PartitionStream: n must be >= 0");
}

bool PartitionStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    parts_.clear();
    if (n_ > 0) parts_.push_back(n_);
    return true;
  }
  // Descending lexicographic successor: absorb the trailing 1s, decrement the
  // rightmost part > 1, then redistribute greedily.
  long rem = 0;
  while (!parts_.empty() && parts_.back() == 1) {
    parts_.pop_back();
    ++rem;
  }
  if (parts_.empty()) {
    done_ = true;
    return false;
  }
  --parts_.back();
  ++rem;
  long chunk = parts_.back();
  while (rem > 0) {
    long t = std::min(chunk, rem);
    parts_.push_back(t);
    rem -= t;
  }
  return true;
}

std::uint64_t count_constrained(long n, const ConstraintSpec& spec) {
  std::uint64_t count = 0;
  for_each_constrained(n, spec, [&](const std::vector<long>&) { ++count; });
  return count;
}

std::vector<Partition> collect_constrained(long n, const ConstraintSpec& spec) {
  std::vector<Partition> out;
  for_each_constrained(n, spec, [&](const std::vector<long>& parts) {
    out.push_back(Partition::from_sorted_parts_desc(parts));
  });
  return out;
}

std::vector<std::uint64_t> count_colored_upto(long max_n, const ColoredSpec& spec) {
  if (max_n < 0) throw std::domain_error("count_colored_upto: max_n must be >= 0");
  if (spec.modulus < 1 || spec.two_color_residue < 1 || spec.two_color_residue > spec.modulus) {
    throw std::domain_error("count_colored_upto: residue must lie in [1, modulus]");
  }
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_n) + 1, 0);
  counts[0] = 1;  // the empty multiset
  const long cap = spec.base.frequency_cap();
  const long lo = std::max(1L, spec.base.min_part.value_or(1));
  // DFS over colored multisets, largest value first. Each node fixes a
  // positive multiplicity split for one value, so every node is exactly one
  // multiset and one pass tallies all weights at once.
  auto rec = [&](auto&& self, long vmax, long used) -> void {
    for (long v = std::min(vmax, max_n - used); v >= lo; --v) {
      if (!spec.base.admits_value(v)) continue;
      long room = (max_n - used) / v;  // max total copies of v
      if (spec.two_colored(v)) {
        long a_hi = std::min(cap, room);
        for (long a = 0; a <= a_hi; ++a) {
          long b_hi = std::min(cap, room - a);
          for (long b = (a == 0 ? 1 : 0); b <= b_hi; ++b) {
            long w = used + (a + b) * v;
            ++counts[static_cast<std::size_t>(w)];
            self(self, v - 1, w);
          }
        }
      } else {
        long mu_hi = std::min(cap, room);
        for (long mu = 1; mu <= mu_hi; ++mu) {
          long w = used + mu * v;
          ++counts[static_cast<std::size_t>(w)];
          self(self, v - 1, w);
        }
      }
    }
  };
  rec(rec, max_n, 0);
  return counts;
}

std::uint64_t count_colored(long n, const ColoredSpec& spec) {
  return count_colored_upto(n, spec).back();
}

ColoredSpec two_colored_regular(long modulus, long residue) {
  ColoredSpec spec;
  spec.modulus = modulus;
  spec.two_color_residue = residue;
  spec.base = regular_spec(modulus);
  return spec;
}

ColoredSpec two_colored_distinct() {
  ColoredSpec spec;
  spec.modulus = 1;
  spec.two_color_residue = 1;
  spec.base.distinct = true;
  return spec;
}

}  // namespace mexlab
