#include "tspectra/recipes.hpp"

#include <algorithm>
#include <array>

#include "tspectra/spectrum.hpp"

namespace tspectra {

namespace {

struct Run {
  i64 part;
  i64 count;
};

using RunList = std::vector<Run>;

bool odd_gap(i64 n, i64 a) { return a >= 1 && n > a && (n - a) % 2 == 1; }
bool even_gap(i64 n, i64 a) { return a >= 1 && n > a && (n - a) % 2 == 0; }

// ---- applicability ranges, one predicate per family ----------------------

bool odd_top_range(i64 n, i64 a, i64 c) {
  return c == 0 && odd_gap(n, a) && n >= 7 && a >= 2 && 3 * a <= n - 1;
}
bool odd_minus1_range(i64 n, i64 a, i64 c) {
  return c == 1 && odd_gap(n, a) && n >= 9 && a >= 2 && 3 * a <= n - 1;
}
bool odd_small_a_range(i64 n, i64 a, i64 c) {
  return odd_gap(n, a) && a >= 4 && 5 * a <= n + 3 && c >= 2 && c <= a - 2;
}
bool odd_t1_range(i64 n, i64 a) {
  return odd_gap(n, a) && a >= ceil_div(n + 3, 5) && 3 * a <= n - 15;
}
bool odd_t2_range(i64 n, i64 a) {
  return odd_gap(n, a) && a >= ceil_div(n + 7, 5) && 3 * a <= n - 11;
}
bool even_top_range(i64 n, i64 a, i64 c) {
  return c == 0 && even_gap(n, a) && n >= 13 && a >= 3 && 3 * a <= n - 4;
}
bool even_minus1_range(i64 n, i64 a, i64 c) {
  return c == 1 && even_gap(n, a) && n >= 10 && a >= 2 && 3 * a <= n - 2;
}
bool even_minus2_range(i64 n, i64 a, i64 c) {
  return c == 2 && even_gap(n, a) && a >= 5 && 3 * a <= n - 12;
}
bool even_minus3_range(i64 n, i64 a, i64 c) {
  return c == 3 && even_gap(n, a) && a >= 5 && 3 * a <= n - 4;
}
bool even_small_a_range(i64 n, i64 a, i64 c) {
  return even_gap(n, a) && a >= 6 && 5 * a <= n + 4 && c >= 4 && c <= a - 2;
}
bool even_t3_range(i64 n, i64 a) {
  return even_gap(n, a) && a >= ceil_div(n + 4, 5) && 3 * a <= n - 15;
}
bool even_t4_range(i64 n, i64 a) {
  return even_gap(n, a) && a >= ceil_div(n + 10, 5) && 3 * a <= n - 2;
}

// ---- the rows themselves --------------------------------------------------

RunList rows_odd_top(i64 n, i64 a, i64) {
  return {{(n - a + 1) / 2, 1}, {a + 1, 1}, {1, (n - a - 3) / 2}};
}
RunList rows_odd_minus1(i64 n, i64 a, i64) {
  return {{(n - a - 1) / 2, 1}, {a + 1, 1}, {3, 1}, {1, (n - a - 7) / 2}};
}
RunList rows_odd_small_a(i64 n, i64 a, i64 b) {
  return {{(n - a + 1 - 2 * b) / 2, 1},
          {a + 1, 1},
          {b + 2, 1},
          {2, b - 1},
          {1, (n - a - 3 - 4 * b) / 2}};
}
RunList rows_odd_t1r1(i64 n, i64 a, i64) {
  i64 b = table_b_odd(n, a);
  return {{a, 1}, {a - 1, 1}, {b, 1}, {7, 1}, {6, 1}, {4, 1},
          {2, b - 7}, {1, a - b - 1}};
}
RunList rows_odd_t1r2(i64 n, i64 a, i64) {
  i64 b = table_b_odd(n, a);
  return {{a, 2}, {b, 1}, {6, 2}, {3, 1}, {2, b - 7}, {1, a - b}};
}
RunList rows_odd_t1r3(i64 n, i64 a, i64 c) {
  i64 b = table_b_odd(n, a);
  return {{a, 2}, {b - c + 5, 1}, {2 + c, 1}, {4, 1},
          {3, c - 3}, {2, b + 2 - 2 * c}, {1, a - b + c - 5}};
}
RunList rows_odd_t1r4(i64 n, i64 a, i64 c) {
  i64 b = table_b_odd(n, a);
  return {{a, 2}, {c + 2, 1}, {b - c + 4, 1}, {6, 1},
          {3, b - c - 2}, {2, 2 * c - b - 1}, {1, a - c - 3}};
}
RunList rows_odd_t1r5(i64 n, i64 a, i64) {
  i64 b = table_b_odd(n, a);
  return {{a, 2}, {b, 1}, {7, 1}, {4, 1}, {3, 1}, {2, b - 6}, {1, a - b - 1}};
}
RunList rows_odd_t1r6(i64 n, i64 a, i64) {
  i64 b = table_b_odd(n, a);
  return {{a, 2}, {b + 1, 1}, {6, 1}, {4, 1}, {2, b - 4}, {1, a - b - 2}};
}
RunList rows_odd_t1r7(i64 n, i64 a, i64) {
  i64 b = table_b_odd(n, a);
  return {{a, 1}, {a - 1, 1}, {b, 1}, {7, 1}, {5, 1}, {4, 1},
          {2, b - 6}, {1, a - b - 2}};
}
RunList rows_odd_t2r1(i64 n, i64 a, i64 c) {
  i64 b = table_b_odd(n, a);
  return {{a, 1}, {a + b - c + 2, 1}, {c + 1, 1}, {4, 1},
          {2, c - 3}, {1, a + b - 2 * c}};
}
RunList rows_odd_t2r2(i64 n, i64 a, i64 c) {
  i64 b = table_b_odd(n, a);
  return {{a, 1}, {c + 1, 1}, {a + b - c - 1, 1}, {6, 2},
          {2, a + b - c - 7}, {1, 2 * c - a - b + 3}};
}
RunList rows_even_top(i64 n, i64 a, i64) {
  return {{(n - a - 2) / 2, 1}, {a + 1, 1}, {4, 1}, {1, (n - a - 8) / 2}};
}
RunList rows_even_minus1(i64 n, i64 a, i64) {
  return {{(n - a) / 2, 1}, {a + 1, 1}, {2, 1}, {1, (n - a - 6) / 2}};
}
RunList rows_even_minus2(i64 n, i64 a, i64) {
  return {{(n - a - 10) / 2, 1}, {a + 1, 1}, {6, 1}, {5, 1}, {3, 1},
          {1, (n - a - 20) / 2}};
}
RunList rows_even_minus3(i64 n, i64 a, i64) {
  return {{(n - a - 2) / 2, 1}, {a + 1, 1}, {3, 1}, {2, 1},
          {1, (n - a - 10) / 2}};
}
RunList rows_even_small_a(i64 n, i64 a, i64 b) {
  return {{(n - a - 2 * b + 2) / 2, 1}, {a + 1, 1}, {b + 1, 1}, {3, 1},
          {2, b - 3}, {1, (n - a - 4 * b) / 2}};
}
RunList rows_even_t3r1(i64 n, i64 a, i64 c) {
  i64 b = table_b_even(n, a);
  return {{a, 2}, {3 + b - c, 1}, {3 + c, 1}, {3, c - 1},
          {2, b - 2 * c - 1}, {1, a - b + c - 3}};
}
RunList rows_even_t3r2(i64 n, i64 a, i64) {
  i64 b = table_b_even(n, a);
  if (b % 2 == 1) {
    return {{a, 1}, {a - 1, 1}, {(b + 7) / 2, 1}, {(b + 5) / 2, 1}, {5, 1},
            {3, (b - 5) / 2}, {1, a - (b + 9) / 2}};
  }
  // even b; carrying the odd-b row's standalone 5 over would make the
  // parts sum to n + 5, so it has no counterpart here
  return {{a, 1}, {a - 1, 1}, {(b + 8) / 2, 1}, {(b + 6) / 2, 1},
          {3, (b - 2) / 2}, {1, a - b / 2 - 5}};
}
RunList rows_even_t3r3(i64 n, i64 a, i64 c) {
  i64 b = table_b_even(n, a);
  return {{a, 2}, {2 + c, 1}, {b - c + 4, 1}, {3, b - c - 1},
          {2, 2 * c - b - 1}, {1, a - c - 3}};
}
RunList rows_even_t3r4(i64 n, i64 a, i64) {
  i64 b = table_b_even(n, a);
  return {{a, 1}, {a - 1, 1}, {b - 1, 1}, {6, 2}, {3, 1}, {2, b - 7},
          {1, a - b - 1}};
}
RunList rows_even_t3r5(i64 n, i64 a, i64) {
  i64 b = table_b_even(n, a);
  return {{a, 2}, {b, 1}, {5, 1}, {4, 1}, {2, b - 5}, {1, a - b - 1}};
}
RunList rows_even_t4r1(i64 n, i64 a, i64 c) {
  i64 b = table_b_even(n, a);
  return {{a, 1}, {a + b - c + 1, 1}, {c + 1, 1}, {3, 1},
          {2, c - 3}, {1, a + b - 2 * c - 1}};
}
RunList rows_even_t4r2(i64 n, i64 a, i64 c) {
  i64 b = table_b_even(n, a);
  return {{a, 1}, {c + 1, 1}, {a + b - c, 1}, {5, 1},
          {2, a + b - c - 5}, {1, 2 * c - a - b + 2}};
}
RunList rows_small2_odd(i64 n, i64, i64) {
  return {{(n - 3) / 2, 1}, {4, 1}, {2, 1}, {1, (n - 9) / 2}};
}
RunList rows_small2_even(i64 n, i64, i64) {
  return {{(n - 4) / 2, 1}, {4, 1}, {3, 1}, {1, (n - 10) / 2}};
}
RunList rows_small3_odd(i64 n, i64, i64) {
  return {{(n - 5) / 2, 1}, {4, 2}, {1, (n - 11) / 2}};
}
RunList rows_small3_even(i64 n, i64, i64) {
  return {{(n - 2) / 2, 1}, {4, 1}, {1, (n - 6) / 2}};
}

using RowsFn = RunList (*)(i64, i64, i64);

RowsFn rows_fn(RecipeId id) {
  switch (id) {
    case RecipeId::OddTop: return rows_odd_top;
    case RecipeId::OddMinus1: return rows_odd_minus1;
    case RecipeId::OddSmallA: return rows_odd_small_a;
    case RecipeId::OddT1Row1: return rows_odd_t1r1;
    case RecipeId::OddT1Row2: return rows_odd_t1r2;
    case RecipeId::OddT1Row3: return rows_odd_t1r3;
    case RecipeId::OddT1Row4: return rows_odd_t1r4;
    case RecipeId::OddT1Row5: return rows_odd_t1r5;
    case RecipeId::OddT1Row6: return rows_odd_t1r6;
    case RecipeId::OddT1Row7: return rows_odd_t1r7;
    case RecipeId::OddT2Row1: return rows_odd_t2r1;
    case RecipeId::OddT2Row2: return rows_odd_t2r2;
    case RecipeId::EvenTop: return rows_even_top;
    case RecipeId::EvenMinus1: return rows_even_minus1;
    case RecipeId::EvenMinus2: return rows_even_minus2;
    case RecipeId::EvenMinus3: return rows_even_minus3;
    case RecipeId::EvenSmallA: return rows_even_small_a;
    case RecipeId::EvenT3Row1: return rows_even_t3r1;
    case RecipeId::EvenT3Row2: return rows_even_t3r2;
    case RecipeId::EvenT3Row3: return rows_even_t3r3;
    case RecipeId::EvenT3Row4: return rows_even_t3r4;
    case RecipeId::EvenT3Row5: return rows_even_t3r5;
    case RecipeId::EvenT4Row1: return rows_even_t4r1;
    case RecipeId::EvenT4Row2: return rows_even_t4r2;
    case RecipeId::Small2Odd: return rows_small2_odd;
    case RecipeId::Small2Even: return rows_small2_even;
    case RecipeId::Small3Odd: return rows_small3_odd;
    case RecipeId::Small3Even: return rows_small3_even;
  }
  return nullptr;
}

// A negative run count means the row shape does not exist at this
// parameter point; such points are out of range, not errata.
bool well_formed(const RunList& runs) {
  for (const Run& run : runs) {
    if (run.count < 0) return false;
    if (run.count > 0 && run.part < 1) return false;
  }
  return true;
}

bool stated_range(RecipeId id, i64 n, i64 a, i64 c) {
  switch (id) {
    case RecipeId::OddTop: return odd_top_range(n, a, c);
    case RecipeId::OddMinus1: return odd_minus1_range(n, a, c);
    case RecipeId::OddSmallA: return odd_small_a_range(n, a, c);
    case RecipeId::OddT1Row1: return odd_t1_range(n, a) && c == 2;
    case RecipeId::OddT1Row2: return odd_t1_range(n, a) && c == 3;
    case RecipeId::OddT1Row3: {
      if (!odd_t1_range(n, a)) return false;
      i64 b = table_b_odd(n, a);
      return c >= 4 && c <= ceil_div(b, 2);
    }
    case RecipeId::OddT1Row4: {
      if (!odd_t1_range(n, a)) return false;
      i64 b = table_b_odd(n, a);
      return c >= ceil_div(b, 2) + 1 && c <= b - 2;
    }
    case RecipeId::OddT1Row5:
      return odd_t1_range(n, a) && c == table_b_odd(n, a) - 1;
    case RecipeId::OddT1Row6:
      return odd_t1_range(n, a) && c == table_b_odd(n, a);
    case RecipeId::OddT1Row7:
      return odd_t1_range(n, a) && c == table_b_odd(n, a) + 1;
    case RecipeId::OddT2Row1: {
      if (!odd_t2_range(n, a)) return false;
      i64 b = table_b_odd(n, a);
      return c >= b + 2 && c <= floor_div(a + b, 2);
    }
    case RecipeId::OddT2Row2: {
      if (!odd_t2_range(n, a)) return false;
      i64 b = table_b_odd(n, a);
      return c >= floor_div(a + b, 2) && c <= a - 2;
    }
    case RecipeId::EvenTop: return even_top_range(n, a, c);
    case RecipeId::EvenMinus1: return even_minus1_range(n, a, c);
    case RecipeId::EvenMinus2: return even_minus2_range(n, a, c);
    case RecipeId::EvenMinus3: return even_minus3_range(n, a, c);
    case RecipeId::EvenSmallA: return even_small_a_range(n, a, c);
    case RecipeId::EvenT3Row1: {
      if (!even_t3_range(n, a)) return false;
      i64 b = table_b_even(n, a);
      return c >= 2 && c <= floor_div(b - 1, 2);
    }
    case RecipeId::EvenT3Row2:
      return even_t3_range(n, a) && c == ceil_div(table_b_even(n, a), 2);
    case RecipeId::EvenT3Row3: {
      if (!even_t3_range(n, a)) return false;
      i64 b = table_b_even(n, a);
      return c >= ceil_div(b, 2) + 1 && c <= b - 1;
    }
    case RecipeId::EvenT3Row4:
      return even_t3_range(n, a) && c == table_b_even(n, a);
    case RecipeId::EvenT3Row5:
      return even_t3_range(n, a) && c == table_b_even(n, a) + 1;
    case RecipeId::EvenT4Row1: {
      if (!even_t4_range(n, a)) return false;
      i64 b = table_b_even(n, a);
      return c >= b + 2 && c <= floor_div(a + b - 2, 2);
    }
    case RecipeId::EvenT4Row2: {
      if (!even_t4_range(n, a)) return false;
      i64 b = table_b_even(n, a);
      return c >= std::max(ceil_div(a + b - 2, 2), b + 2) && c <= a - 2;
    }
    case RecipeId::Small2Odd:
      return a == 3 && c == 1 && n % 2 == 1 && n >= 11;
    case RecipeId::Small2Even:
      return a == 3 && c == 1 && n % 2 == 0 && n >= 12;
    case RecipeId::Small3Odd:
      return a == 3 && c == 0 && n % 2 == 1 && n >= 13;
    case RecipeId::Small3Even:
      return a == 3 && c == 0 && n % 2 == 0 && n >= 10;
  }
  return false;
}

template <RecipeId Id>
bool applicable_fn(i64 n, i64 a, i64 c) {
  return stated_range(Id, n, a, c) && well_formed(rows_fn(Id)(n, a, c));
}

constexpr std::array<std::pair<RecipeId, std::string_view>, 28> kNames = {{
    {RecipeId::OddTop, "OddTop"},
    {RecipeId::OddMinus1, "OddMinus1"},
    {RecipeId::OddSmallA, "OddSmallA"},
    {RecipeId::OddT1Row1, "OddT1Row1"},
    {RecipeId::OddT1Row2, "OddT1Row2"},
    {RecipeId::OddT1Row3, "OddT1Row3"},
    {RecipeId::OddT1Row4, "OddT1Row4"},
    {RecipeId::OddT1Row5, "OddT1Row5"},
    {RecipeId::OddT1Row6, "OddT1Row6"},
    {RecipeId::OddT1Row7, "OddT1Row7"},
    {RecipeId::OddT2Row1, "OddT2Row1"},
    {RecipeId::OddT2Row2, "OddT2Row2"},
    {RecipeId::EvenTop, "EvenTop"},
    {RecipeId::EvenMinus1, "EvenMinus1"},
    {RecipeId::EvenMinus2, "EvenMinus2"},
    {RecipeId::EvenMinus3, "EvenMinus3"},
    {RecipeId::EvenSmallA, "EvenSmallA"},
    {RecipeId::EvenT3Row1, "EvenT3Row1"},
    {RecipeId::EvenT3Row2, "EvenT3Row2"},
    {RecipeId::EvenT3Row3, "EvenT3Row3"},
    {RecipeId::EvenT3Row4, "EvenT3Row4"},
    {RecipeId::EvenT3Row5, "EvenT3Row5"},
    {RecipeId::EvenT4Row1, "EvenT4Row1"},
    {RecipeId::EvenT4Row2, "EvenT4Row2"},
    {RecipeId::Small2Odd, "Small2Odd"},
    {RecipeId::Small2Even, "Small2Even"},
    {RecipeId::Small3Odd, "Small3Odd"},
    {RecipeId::Small3Even, "Small3Even"},
}};

template <size_t... Is>
constexpr std::array<Recipe, sizeof...(Is)> make_catalog(
    std::index_sequence<Is...>) {
  return {{Recipe{kNames[Is].first,
                  &applicable_fn<kNames[Is].first>}...}};
}

constexpr auto kCatalog = make_catalog(std::make_index_sequence<28>{});

}  // namespace

std::string_view to_string(RecipeId id) {
  for (const auto& [key, name] : kNames) {
    if (key == id) return name;
  }
  return "?";
}

std::optional<RecipeId> recipe_from_string(std::string_view name) {
  for (const auto& [key, candidate] : kNames) {
    if (candidate == name) return key;
  }
  return std::nullopt;
}

std::span<const Recipe> recipe_catalog() { return kCatalog; }

Result<ConstructionResult> apply_recipe(RecipeId id, i64 n, i64 a, i64 c) {
  if (!stated_range(id, n, a, c) || !well_formed(rows_fn(id)(n, a, c))) {
    return make_error(Errc::OutOfRange,
                      std::string(to_string(id)) + " is not applicable at (n=" +
                          std::to_string(n) + ", a=" + std::to_string(a) +
                          ", c=" + std::to_string(c) + ")");
  }
  ConstructionResult result;
  result.recipe = id;
  result.target = choose2(a) - c;
  for (const Run& run : rows_fn(id)(n, a, c)) {
    result.raw.parts.insert(result.raw.parts.end(),
                            static_cast<size_t>(run.count), run.part);
  }
  if (result.raw.weakly_decreasing()) {
    auto parsed = Partition::parse(result.raw.parts);
    result.partition = parsed.value();
    result.achieved = eigenvalue(*result.partition);
  }
  return result;
}

Result<ConstructionResult> odd_top(i64 n, i64 a) {
  return apply_recipe(RecipeId::OddTop, n, a, 0);
}
Result<ConstructionResult> odd_minus1(i64 n, i64 a) {
  return apply_recipe(RecipeId::OddMinus1, n, a, 1);
}
Result<ConstructionResult> odd_small_a(i64 n, i64 a, i64 b) {
  return apply_recipe(RecipeId::OddSmallA, n, a, b);
}

Result<ConstructionResult> odd_table1(i64 n, i64 a, i64 c) {
  i64 b = table_b_odd(n, a);
  if (c < 2 || c > b + 1) {
    return make_error(Errc::OutOfRange, "c outside [2, b+1]");
  }
  RecipeId row;
  if (c == 2) row = RecipeId::OddT1Row1;
  else if (c == 3) row = RecipeId::OddT1Row2;
  else if (c >= 4 && c <= ceil_div(b, 2)) row = RecipeId::OddT1Row3;
  else if (c <= b - 2) row = RecipeId::OddT1Row4;
  else if (c == b - 1) row = RecipeId::OddT1Row5;
  else if (c == b) row = RecipeId::OddT1Row6;
  else if (c == b + 1) row = RecipeId::OddT1Row7;
  else {
    return make_error(Errc::OutOfRange, "c outside [2, b+1]");
  }
  return apply_recipe(row, n, a, c);
}

Result<ConstructionResult> odd_table2(i64 n, i64 a, i64 c) {
  i64 b = table_b_odd(n, a);
  if (c <= floor_div(a + b, 2)) return apply_recipe(RecipeId::OddT2Row1, n, a, c);
  return apply_recipe(RecipeId::OddT2Row2, n, a, c);
}

Result<ConstructionResult> even_top(i64 n, i64 a) {
  return apply_recipe(RecipeId::EvenTop, n, a, 0);
}
Result<ConstructionResult> even_minus1(i64 n, i64 a) {
  return apply_recipe(RecipeId::EvenMinus1, n, a, 1);
}
Result<ConstructionResult> even_minus2(i64 n, i64 a) {
  return apply_recipe(RecipeId::EvenMinus2, n, a, 2);
}
Result<ConstructionResult> even_minus3(i64 n, i64 a) {
  return apply_recipe(RecipeId::EvenMinus3, n, a, 3);
}
Result<ConstructionResult> even_small_a(i64 n, i64 a, i64 b) {
  return apply_recipe(RecipeId::EvenSmallA, n, a, b);
}

Result<ConstructionResult> even_table3(i64 n, i64 a, i64 c) {
  i64 b = table_b_even(n, a);
  if (c < 2 || c > b + 1) {
    return make_error(Errc::OutOfRange, "c outside [2, b+1]");
  }
  RecipeId row;
  if (c >= 2 && c <= floor_div(b - 1, 2)) row = RecipeId::EvenT3Row1;
  else if (c == ceil_div(b, 2)) row = RecipeId::EvenT3Row2;
  else if (c <= b - 1) row = RecipeId::EvenT3Row3;
  else if (c == b) row = RecipeId::EvenT3Row4;
  else if (c == b + 1) row = RecipeId::EvenT3Row5;
  else {
    return make_error(Errc::OutOfRange, "c outside [2, b+1]");
  }
  return apply_recipe(row, n, a, c);
}

Result<ConstructionResult> even_table4(i64 n, i64 a, i64 c) {
  i64 b = table_b_even(n, a);
  if (c <= floor_div(a + b - 2, 2)) {
    return apply_recipe(RecipeId::EvenT4Row1, n, a, c);
  }
  return apply_recipe(RecipeId::EvenT4Row2, n, a, c);
}

Result<ConstructionResult> small_value(i64 n, i64 e) {
  if (e == 2) {
    RecipeId id = (n % 2 == 1) ? RecipeId::Small2Odd : RecipeId::Small2Even;
    return apply_recipe(id, n, 3, 1);
  }
  if (e == 3) {
    RecipeId id = (n % 2 == 1) ? RecipeId::Small3Odd : RecipeId::Small3Even;
    return apply_recipe(id, n, 3, 0);
  }
  return make_error(Errc::OutOfRange, "small_value covers e in {2, 3}");
}

std::vector<ErrataRecord> sweep_recipes(i64 max_n) {
  std::vector<ErrataRecord> errata;
  for (const Recipe& recipe : recipe_catalog()) {
    for (i64 n = 1; n <= max_n; ++n) {
      i64 a_hi = n / 3 + 2;
      for (i64 a = 2; a <= a_hi; ++a) {
        for (i64 c = 0; c <= a + 1; ++c) {
          if (!recipe.applicable(n, a, c)) continue;
          auto built = apply_recipe(recipe.id, n, a, c);
          const ConstructionResult& result = built.value();
          i64 sum = result.raw.sum();
          if (sum != n) {
            errata.push_back({recipe.id, n, a, c, result.target,
                              result.raw.parts, "sum_mismatch", false});
            continue;
          }
          if (!result.partition.has_value()) {
            std::vector<i64> sorted = result.raw.parts;
            std::sort(sorted.rbegin(), sorted.rend());
            Partition rearranged = Partition::unchecked(sorted);
            errata.push_back({recipe.id, n, a, c, result.target,
                              result.raw.parts, "non_monotone",
                              eigenvalue(rearranged) == result.target});
            continue;
          }
          if (*result.achieved != result.target) {
            errata.push_back({recipe.id, n, a, c, result.target,
                              result.raw.parts, "target_mismatch", false});
          }
        }
      }
    }
  }
  return errata;
}

}  // namespace tspectra
