#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tspectra/core.hpp"
#include "tspectra/partition.hpp"

namespace tspectra {

// The diagram of `shape` filled with col - row (1-based indices). Transposing
// the shape negates every entry; the diagonal is zero.
struct TableauView {
  const Partition& shape;

  bool contains(i64 row, i64 col) const {
    return row >= 1 && row <= shape.count() && col >= 1 &&
           col <= shape.parts()[static_cast<size_t>(row - 1)];
  }
  i64 entry(i64 row, i64 col) const { return col - row; }
};

// Row formula: sum over rows of part*(part - 2*row + 1)/2.
i64 eigenvalue(const Partition& p);

// Same quantity by walking the diagram box by box; shares no code with
// eigenvalue() so the two act as each other's oracle.
i64 content_sum(const Partition& p);

struct ArmLeg {
  i64 arm;
  i64 leg;
  bool operator==(const ArmLeg&) const = default;
};

// One (arm sum, leg sum) pair per diagonal box; the grand total equals the
// eigenvalue.
std::vector<ArmLeg> arm_leg_decomposition(const Partition& p);

// eigenvalue(p) == eigenvalue(p minus first row) + C(first,2) - (n - first).
bool lift_identity_check(const Partition& p);

// Number of standard Young tableaux of shape p (hook-length formula).
// Errors: ResourceLimit for n > 20.
Result<i64> hook_dimension(const Partition& p);

struct SpectrumReport {
  i64 n = 0;
  std::vector<i64> values;  // sorted ascending
  std::optional<std::map<i64, i64>> multiplicities;
  std::optional<std::map<i64, Partition>> witnesses;
};

struct BruteOptions {
  bool with_witnesses = false;
  int threads = 1;
  bool limit_override = false;
  i64 ceiling = 85;
};

// Distinct eigenvalues over all partitions of n; optional first-in-order
// witnesses. Deterministic for any thread count.
Result<SpectrumReport> brute_spectrum(i64 n, const BruteOptions& opts = {});

// Adds total multiplicity sum(hook_dimension^2) per value; n <= 12.
Result<SpectrumReport> spectrum_with_multiplicity(i64 n);

// Builds the n! x n! adjacency matrix (f ~ g iff f g^-1 is a transposition),
// solves it numerically and rounds to integers (tolerance 1e-6).
// Multiplicities for n <= 5; n <= 6 overall.
Result<SpectrumReport> cayley_adjacency_spectrum(i64 n);

}  // namespace tspectra
