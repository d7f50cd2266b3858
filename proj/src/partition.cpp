#include "tspectra/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tspectra {

std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::NonPositivePart: return "NonPositivePart";
    case Errc::NotMonotone: return "NotMonotone";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NonMonotoneOutput: return "NonMonotoneOutput";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::RoundingFailure: return "RoundingFailure";
    case Errc::FirstRowTooSmall: return "FirstRowTooSmall";
    case Errc::Unreachable: return "Unreachable";
    case Errc::NoPlanFound: return "NoPlanFound";
    case Errc::NotFound: return "NotFound";
    case Errc::BadArgument: return "BadArgument";
  }
  return "Unknown";
}

i64 Composition::sum() const {
  return std::accumulate(parts.begin(), parts.end(), i64{0});
}

bool Composition::weakly_decreasing() const {
  return std::is_sorted(parts.rbegin(), parts.rend());
}

Result<Partition> Partition::parse(std::span<const i64> parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) {
      return make_error(Errc::NonPositivePart,
                        "part " + std::to_string(parts[i]) + " at index " +
                            std::to_string(i) + " is not positive",
                        static_cast<i64>(i));
    }
  }
  for (size_t i = 0; i + 1 < parts.size(); ++i) {
    if (parts[i] < parts[i + 1]) {
      return make_error(Errc::NotMonotone,
                        "parts increase at index " + std::to_string(i),
                        static_cast<i64>(i));
    }
  }
  Partition p;
  p.parts_.assign(parts.begin(), parts.end());
  p.n_ = std::accumulate(parts.begin(), parts.end(), i64{0});
  return p;
}

Result<Partition> Partition::from_multiplicity_spec(const MultiplicitySpec& spec) {
  i64 prev = 0;
  for (const auto& [part, count] : spec.entries) {
    if (part <= 0 || count <= 0) {
      return make_error(Errc::InvalidSpec, "parts and counts must be positive");
    }
    if (prev != 0 && part >= prev) {
      return make_error(Errc::InvalidSpec, "parts must be strictly decreasing");
    }
    prev = part;
  }
  std::vector<i64> parts;
  for (const auto& [part, count] : spec.entries) {
    parts.insert(parts.end(), static_cast<size_t>(count), part);
  }
  return parse(parts);
}

Partition Partition::unchecked(std::vector<i64> parts) {
  Partition p;
  p.n_ = std::accumulate(parts.begin(), parts.end(), i64{0});
  p.parts_ = std::move(parts);
  return p;
}

Partition Partition::conjugate() const {
  std::vector<i64> cols;
  cols.reserve(static_cast<size_t>(first()));
  for (i64 col = 1; col <= first(); ++col) {
    i64 len = 0;
    for (i64 part : parts_) {
      if (part >= col) ++len; else break;
    }
    cols.push_back(len);
  }
  return unchecked(std::move(cols));
}

MultiplicitySpec Partition::multiplicities() const {
  MultiplicitySpec spec;
  for (i64 part : parts_) {
    if (!spec.entries.empty() && spec.entries.back().first == part) {
      ++spec.entries.back().second;
    } else {
      spec.entries.emplace_back(part, 1);
    }
  }
  return spec;
}

PartitionGenerator::PartitionGenerator(i64 n) : PartitionGenerator(n, n) {}

PartitionGenerator::PartitionGenerator(i64 n, i64 max_part)
    : remaining_init_(n), max_part_(std::min(max_part, n)) {
  if (n < 0 || (n > 0 && max_part_ < 1)) done_ = true;
}

// Descending lex successor: shrink the rightmost part > 1 by one and refill
// the tail greedily with that value.
const std::vector<i64>* PartitionGenerator::next() {
  if (done_) return nullptr;
  if (first_) {
    first_ = false;
    parts_.clear();
    i64 r = remaining_init_;
    while (r > 0) {
      i64 take = std::min(max_part_, r);
      parts_.push_back(take);
      r -= take;
    }
    return &parts_;  // n == 0 yields the empty partition once
  }
  size_t j = parts_.size();
  while (j > 0 && parts_[j - 1] == 1) --j;
  if (j == 0) {
    done_ = true;
    return nullptr;
  }
  i64 spill = parts_[j - 1] + static_cast<i64>(parts_.size() - j);
  i64 fill = parts_[j - 1] - 1;
  parts_.resize(j - 1);
  while (spill > 0) {
    i64 take = std::min(fill, spill);
    parts_.push_back(take);
    spill -= take;
  }
  return &parts_;
}

i64 partition_count(i64 n) {
  if (n < 0) throw std::invalid_argument("partition_count: n must be >= 0");
  std::vector<unsigned long long> p(static_cast<size_t>(n) + 1, 0);
  p[0] = 1;
  for (i64 m = 1; m <= n; ++m) {
    unsigned long long total = 0;
    bool add = true;
    for (i64 k = 1;; ++k) {
      i64 g1 = k * (3 * k - 1) / 2;
      i64 g2 = k * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      unsigned long long term = 0;
      if (g1 <= m) term += p[static_cast<size_t>(m - g1)];
      if (g2 <= m) term += p[static_cast<size_t>(m - g2)];
      if (add) {
        unsigned long long next = total + term;
        if (next < total) throw std::overflow_error("partition_count overflow");
        total = next;
      } else {
        total -= term;
      }
      add = !add;
    }
    if (total > static_cast<unsigned long long>(INT64_MAX)) {
      throw std::overflow_error("partition_count overflow");
    }
    p[static_cast<size_t>(m)] = total;
  }
  return static_cast<i64>(p[static_cast<size_t>(n)]);
}

}  // namespace tspectra
