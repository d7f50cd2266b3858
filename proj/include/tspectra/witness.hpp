#pragma once

#include <string>
#include <vector>

#include "tspectra/core.hpp"
#include "tspectra/partition.hpp"
#include "tspectra/recipes.hpp"

namespace tspectra {

struct DerivationStep {
  enum class Kind { Recipe, Lift, Conjugate, Search };
  Kind kind;
  RecipeId recipe = RecipeId::OddTop;  // Recipe only
  i64 a = 0, c = 0;                    // Recipe only
  i64 lambda1 = 0;                     // Lift only
  i64 budget = 0;                      // Search only (for replay)

  bool operator==(const DerivationStep&) const = default;
};

// A replayable proof that `target` is an eigenvalue for this n. Steps are in
// application order: one producing step (Recipe or Search) followed by
// Conjugate/Lift transformations.
struct WitnessCertificate {
  i64 n = 0;
  i64 target = 0;
  Partition partition;
  std::vector<DerivationStep> derivation;
  i64 achieved = 0;
  bool verified = false;
};

// (lambda1, base...) of lambda1 + |base|. Errors: FirstRowTooSmall.
Result<Partition> lift(const Partition& base, i64 lambda1);

// Certificate for -target via conjugation (contents negate).
WitnessCertificate negate_certificate(const WitnessCertificate& cert);

// Single-recipe witness selected by catalog order at the cell
// a: C(a-1,2) < e <= C(a,2), c = C(a,2) - e. Errors: Unreachable.
Result<WitnessCertificate> constructive_witness(i64 n, i64 e);

struct LiftOptions {
  int max_depth = 4;
  i64 eval_budget = 20000;  // candidate evaluations per top-level call
};

// Witness through one or more first-row lifts; canonical lambda1 = floor(n/3)
// is tried first, then the admissible range descending. Sub-witnesses are
// recipe/conjugate only (no search). Errors: NoPlanFound.
Result<WitnessCertificate> lift_plan(i64 n, i64 e, const LiftOptions& opts = {});

struct SearchOptions {
  i64 budget = 1'000'000;  // max partitions scanned
};

// Scans the partitions of n in descending lex order, pruning prefixes whose
// completions cannot reach e; self-conjugate shortcut for e = 0. Errors:
// NotFound (budget exhausted or e absent).
Result<WitnessCertificate> fallback_search(i64 n, i64 e,
                                           const SearchOptions& opts = {});

// Strategy order: sign reduction, e in {0,1} -> search, constructive band,
// small-value recipes, lifts (canonical then generalized), search.
Result<WitnessCertificate> witness(i64 n, i64 e);

struct CoverageReport {
  i64 n = 0, lo = 0, hi = 0;
  i64 covered = 0;
  std::vector<i64> missing;  // ascending
  std::vector<std::pair<i64, std::string>> derivations;  // target -> summary
};

CoverageReport coverage(i64 n, i64 lo, i64 hi);

// The two closing inequalities of the main interval argument, at
// lambda1 = floor(n/3), n' = n - lambda1.
bool theorem_c_inequalities(i64 n);

// Re-executes the recorded derivation; true iff it reproduces the partition
// exactly and the eigenvalue matches the target.
bool replay_derivation(const WitnessCertificate& cert);

std::string derivation_summary(const WitnessCertificate& cert);

// C(floor((n-15)/3), 2): the upper edge of the directly-constructible band.
inline i64 constructive_bound(i64 n) {
  i64 m = floor_div(n - 15, 3);
  return m < 2 ? 0 : choose2(m);
}

}  // namespace tspectra
