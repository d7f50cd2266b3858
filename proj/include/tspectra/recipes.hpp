#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tspectra/core.hpp"
#include "tspectra/partition.hpp"

namespace tspectra {

// One id per constructive row. Odd/Even refers to the parity of n - a.
enum class RecipeId {
  OddTop,
  OddMinus1,
  OddSmallA,
  OddT1Row1,
  OddT1Row2,
  OddT1Row3,
  OddT1Row4,
  OddT1Row5,
  OddT1Row6,
  OddT1Row7,
  OddT2Row1,
  OddT2Row2,
  EvenTop,
  EvenMinus1,
  EvenMinus2,
  EvenMinus3,
  EvenSmallA,
  EvenT3Row1,
  EvenT3Row2,
  EvenT3Row3,
  EvenT3Row4,
  EvenT3Row5,
  EvenT4Row1,
  EvenT4Row2,
  Small2Odd,
  Small2Even,
  Small3Odd,
  Small3Even,
};

std::string_view to_string(RecipeId id);
std::optional<RecipeId> recipe_from_string(std::string_view name);

// Every recipe is keyed by the cell (a, c) with target C(a,2) - c. For the
// small-a rows c plays the role of b; the small-value rows are pinned at
// a = 3, c in {0, 1}.
struct Recipe {
  RecipeId id;
  bool (*applicable)(i64 n, i64 a, i64 c);
  i64 target(i64 a, i64 c) const { return choose2(a) - c; }
};

struct ConstructionResult {
  RecipeId recipe;
  Composition raw;                    // in construction order, zero runs dropped
  std::optional<Partition> partition; // absent when the row is not monotone
  i64 target = 0;
  std::optional<i64> achieved;
};

// All 28 recipes in catalog order (dispatch ties go to the lowest index).
std::span<const Recipe> recipe_catalog();

// Builds the row for a recipe at (n, a, c). OutOfRange when the parameters
// violate the stated bounds (or a run count would be negative). A
// non-monotone row is returned successfully with partition/achieved absent,
// so callers can route it to their own fallback.
Result<ConstructionResult> apply_recipe(RecipeId id, i64 n, i64 a, i64 c);

// Named entry points, one per family; the table forms select the row
// from c themselves.
Result<ConstructionResult> odd_top(i64 n, i64 a);
Result<ConstructionResult> odd_minus1(i64 n, i64 a);
Result<ConstructionResult> odd_small_a(i64 n, i64 a, i64 b);
Result<ConstructionResult> odd_table1(i64 n, i64 a, i64 c);
Result<ConstructionResult> odd_table2(i64 n, i64 a, i64 c);
Result<ConstructionResult> even_top(i64 n, i64 a);
Result<ConstructionResult> even_minus1(i64 n, i64 a);
Result<ConstructionResult> even_minus2(i64 n, i64 a);
Result<ConstructionResult> even_minus3(i64 n, i64 a);
Result<ConstructionResult> even_small_a(i64 n, i64 a, i64 b);
Result<ConstructionResult> even_table3(i64 n, i64 a, i64 c);
Result<ConstructionResult> even_table4(i64 n, i64 a, i64 c);
Result<ConstructionResult> small_value(i64 n, i64 e);

// b as the tables define it: (*) odd case (n-3a-1)/2, (**) even (n-3a+2)/2.
inline i64 table_b_odd(i64 n, i64 a) { return (n - 3 * a - 1) / 2; }
inline i64 table_b_even(i64 n, i64 a) { return (n - 3 * a + 2) / 2; }

struct ErrataRecord {
  RecipeId recipe;
  i64 n = 0, a = 0, c = 0;
  i64 target = 0;
  std::vector<i64> raw;
  // "non_monotone" | "sum_mismatch" | "target_mismatch"
  std::string failure;
  // for non-monotone rows: does sorting the parts still hit the target?
  bool sorted_achieves_target = false;
};

// Exhaustive check of every recipe over its applicable range with n <= max_n.
// Returns every failing parameter point (expected: only boundary
// non-monotone rows).
std::vector<ErrataRecord> sweep_recipes(i64 max_n);

}  // namespace tspectra
