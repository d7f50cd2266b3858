#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "tspectra/partition.hpp"

using namespace tspectra;

namespace {

Partition make(std::initializer_list<i64> parts) {
  return Partition::parse(std::vector<i64>(parts)).value();
}

}  // namespace

TEST_CASE("validate accepts weakly decreasing positive parts") {
  auto p = Partition::parse(std::vector<i64>{4, 3, 1});
  REQUIRE(p.ok());
  CHECK(p->n() == 8);
  CHECK(p->count() == 3);

  auto single = Partition::parse(std::vector<i64>{1});
  REQUIRE(single.ok());
  CHECK(single->n() == 1);

  auto empty = Partition::parse(std::vector<i64>{});
  REQUIRE(empty.ok());
  CHECK(empty->n() == 0);
  CHECK(empty->empty());
}

TEST_CASE("validate rejects order and sign violations") {
  auto increasing = Partition::parse(std::vector<i64>{3, 4, 1});
  REQUIRE(!increasing.ok());
  CHECK(increasing.error().code == Errc::NotMonotone);
  CHECK(increasing.error().detail == 0);

  auto zero = Partition::parse(std::vector<i64>{3, 0});
  REQUIRE(!zero.ok());
  CHECK(zero.error().code == Errc::NonPositivePart);

  auto negative = Partition::parse(std::vector<i64>{-2});
  REQUIRE(!negative.ok());
  CHECK(negative.error().code == Errc::NonPositivePart);
}

TEST_CASE("multiplicity spec expansion") {
  MultiplicitySpec spec{{{5, 1}, {4, 1}, {1, 2}}};
  auto p = Partition::from_multiplicity_spec(spec);
  REQUIRE(p.ok());
  CHECK(p->parts() == std::vector<i64>{5, 4, 1, 1});

  MultiplicitySpec run{{{7, 3}}};
  CHECK(Partition::from_multiplicity_spec(run)->parts() ==
        std::vector<i64>{7, 7, 7});

  MultiplicitySpec unordered{{{2, 1}, {3, 1}}};
  auto bad = Partition::from_multiplicity_spec(unordered);
  REQUIRE(!bad.ok());
  CHECK(bad.error().code == Errc::InvalidSpec);

  MultiplicitySpec zero_count{{{2, 0}}};
  CHECK(!Partition::from_multiplicity_spec(zero_count).ok());
}

TEST_CASE("conjugate") {
  CHECK(make({4, 4, 1, 1}).conjugate().parts() == std::vector<i64>{4, 2, 2, 2});
  CHECK(make({6}).conjugate().parts() == std::vector<i64>{1, 1, 1, 1, 1, 1});
  CHECK(make({3, 2, 1}).conjugate().parts() == std::vector<i64>{3, 2, 1});
}

TEST_CASE("generator yields descending lex order") {
  PartitionGenerator gen(5);
  std::vector<std::vector<i64>> seen;
  while (const std::vector<i64>* p = gen.next()) seen.push_back(*p);
  REQUIRE(seen.size() == 7);
  CHECK(seen.front() == std::vector<i64>{5});
  CHECK(seen.back() == std::vector<i64>{1, 1, 1, 1, 1});
  for (size_t i = 0; i + 1 < seen.size(); ++i) {
    CHECK(seen[i] > seen[i + 1]);  // lexicographic comparison
  }
}

TEST_CASE("generator respects max_part") {
  PartitionGenerator gen(6, 2);
  std::vector<std::vector<i64>> seen;
  while (const std::vector<i64>* p = gen.next()) seen.push_back(*p);
  // partitions of 6 into parts <= 2: 222, 2211, 21111, 111111
  REQUIRE(seen.size() == 4);
  CHECK(seen.front() == std::vector<i64>{2, 2, 2});
}

TEST_CASE("bounded generator counts match the restricted-count recurrence") {
  // p(n, k) = number of partitions of n into parts <= k
  constexpr i64 kMax = 25;
  i64 table[kMax + 1][kMax + 1] = {};
  for (i64 k = 0; k <= kMax; ++k) table[0][k] = 1;
  for (i64 n = 1; n <= kMax; ++n) {
    for (i64 k = 1; k <= kMax; ++k) {
      table[n][k] = table[n][k - 1] + (n >= k ? table[n - k][k] : 0);
    }
  }
  for (i64 n = 0; n <= kMax; ++n) {
    for (i64 k = 1; k <= n; ++k) {
      i64 streamed = 0;
      PartitionGenerator gen(n, k);
      while (const std::vector<i64>* p = gen.next()) {
        ++streamed;
        for (i64 part : *p) CHECK(part <= k);
      }
      CHECK(streamed == table[n][k]);
    }
  }
}

TEST_CASE("partition_count matches known values") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(1) == 1);
  CHECK(partition_count(5) == 7);
  CHECK(partition_count(10) == 42);
  CHECK(partition_count(26) == 2436);
  CHECK(partition_count(76) == 9289091);
}

TEST_CASE("generator count equals the recurrence for n <= 30") {
  for (i64 n = 0; n <= 30; ++n) {
    i64 total = 0;
    std::set<std::vector<i64>> distinct;
    for_each_partition(n, [&](std::span<const i64> parts) {
      ++total;
      distinct.emplace(parts.begin(), parts.end());
      REQUIRE(Partition::parse(parts).ok());
    });
    CHECK(total == partition_count(n));
    CHECK(static_cast<i64>(distinct.size()) == total);
  }
}

TEST_CASE("conjugate is an involution with swapped dimensions, n <= 30") {
  for (i64 n = 1; n <= 30; ++n) {
    for_each_partition(n, [&](std::span<const i64> parts) {
      Partition p = Partition::unchecked({parts.begin(), parts.end()});
      Partition conj = p.conjugate();
      CHECK(conj.n() == p.n());
      CHECK(conj.first() == p.count());
      CHECK(conj.conjugate() == p);
    });
  }
}

TEST_CASE("parse agrees with a reference predicate on random sequences") {
  // small xorshift so the cases are fixed across runs
  uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next = [&state] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int round = 0; round < 20000; ++round) {
    std::vector<i64> seq(next() % 8);
    for (i64& part : seq) part = static_cast<i64>(next() % 13) - 2;
    bool positive = std::all_of(seq.begin(), seq.end(),
                                [](i64 p) { return p > 0; });
    bool sorted = std::is_sorted(seq.rbegin(), seq.rend());
    auto parsed = Partition::parse(seq);
    CHECK(parsed.ok() == (positive && sorted));
    if (parsed.ok()) {
      CHECK(parsed->n() ==
            std::accumulate(seq.begin(), seq.end(), i64{0}));
      CHECK(parsed->count() == static_cast<i64>(seq.size()));
    } else {
      CHECK(parsed.error().detail >= 0);
      CHECK(parsed.error().detail < static_cast<i64>(seq.size()));
    }
  }
}

TEST_CASE("multiplicity round trip, n <= 30") {
  for (i64 n = 0; n <= 30; ++n) {
    for_each_partition(n, [&](std::span<const i64> parts) {
      Partition p = Partition::unchecked({parts.begin(), parts.end()});
      auto back = Partition::from_multiplicity_spec(p.multiplicities());
      REQUIRE(back.ok());
      CHECK(*back == p);
    });
  }
}
