#pragma once

#include <span>
#include <utility>
#include <vector>

#include "tspectra/core.hpp"

namespace tspectra {

// Run-length notation: (part, count) pairs with parts strictly decreasing.
struct MultiplicitySpec {
  std::vector<std::pair<i64, i64>> entries;
};

// Positive parts with no monotonicity requirement. Table rows land here
// before validation, since some of them are not weakly decreasing at
// boundary parameters.
struct Composition {
  std::vector<i64> parts;

  i64 sum() const;
  bool weakly_decreasing() const;
};

// Weakly decreasing positive parts; the unique empty partition of 0 is the
// default-constructed value. Immutable after construction.
class Partition {
 public:
  Partition() = default;

  static Result<Partition> parse(std::span<const i64> parts);
  static Result<Partition> from_multiplicity_spec(const MultiplicitySpec& spec);
  // Caller guarantees validity; used on enumeration hot paths.
  static Partition unchecked(std::vector<i64> parts);

  const std::vector<i64>& parts() const { return parts_; }
  i64 n() const { return n_; }
  i64 count() const { return static_cast<i64>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  i64 first() const { return parts_.empty() ? 0 : parts_.front(); }

  Partition conjugate() const;
  MultiplicitySpec multiplicities() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<i64> parts_;
  i64 n_ = 0;
};

// Streams the partitions of n in descending lexicographic order, parts
// capped by max_part. Single consumer; the pointee is reused between calls.
class PartitionGenerator {
 public:
  explicit PartitionGenerator(i64 n);
  PartitionGenerator(i64 n, i64 max_part);

  const std::vector<i64>* next();

 private:
  std::vector<i64> parts_;
  i64 remaining_init_ = 0;
  i64 max_part_ = 0;
  bool first_ = true;
  bool done_ = false;
};

// Calls f(std::span<const i64>) for every partition of n, descending lex.
template <typename F>
void for_each_partition(i64 n, F&& f) {
  PartitionGenerator gen(n);
  while (const std::vector<i64>* p = gen.next()) {
    f(std::span<const i64>(*p));
  }
}

// p(n) by the pentagonal-number recurrence; deliberately a separate code
// path from the generator so each can check the other. Throws
// std::overflow_error once p(n) leaves the 64-bit range (n > ~400).
i64 partition_count(i64 n);

}  // namespace tspectra
