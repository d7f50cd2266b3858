#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tspectra/io.hpp"
#include "tspectra/witness.hpp"

using namespace tspectra;

TEST_CASE("spectrum report serializes deterministically") {
  auto report = brute_spectrum(4);
  REQUIRE(report.ok());
  std::string dumped = to_json(*report).dump();
  CHECK(dumped ==
        R"({"n":4,"values":[-6,-2,0,2,6],"multiplicities":null,"witnesses":null})");
  CHECK(dumped == to_json(*brute_spectrum(4)).dump());
}

TEST_CASE("multiplicities serialize with string keys in value order") {
  auto report = spectrum_with_multiplicity(3);
  REQUIRE(report.ok());
  CHECK(to_json(*report).dump() ==
        R"({"n":3,"values":[-3,0,3],"multiplicities":{"-3":1,"0":4,"3":1},"witnesses":null})");
}

TEST_CASE("csv export lists one row per value") {
  auto report = brute_spectrum(4);
  CHECK(to_csv(*report) == "value\n-6\n-2\n0\n2\n6\n");

  BruteOptions opts;
  opts.with_witnesses = true;
  auto with_wit = brute_spectrum(3, opts);
  CHECK(to_csv(*with_wit) ==
        "value,witness\n-3,1 1 1\n0,2 1\n3,3\n");
}

TEST_CASE("certificate serialization carries the derivation") {
  auto cert = witness(76, 300);
  REQUIRE(cert.ok());
  json out = to_json(*cert);
  CHECK(out["n"] == 76);
  CHECK(out["target"] == 300);
  CHECK(out["verified"] == true);
  CHECK(out["derivation"][0]["step"] == "recipe");
  CHECK(out["derivation"][0]["id"] == "EvenSmallA");
  CHECK(out["derivation"][1]["step"] == "lift");
  CHECK(out["derivation"][1]["lambda1"] == 25);
  CHECK(out.dump() == to_json(*witness(76, 300)).dump());
}

TEST_CASE("construction and errata records serialize") {
  auto built = odd_top(9, 2);
  REQUIRE(built.ok());
  json out = to_json(*built);
  CHECK(out["recipe"] == "OddTop");
  CHECK(out["partition"] == json::array({4, 3, 1, 1}));
  CHECK(out["achieved"] == 1);

  auto broken = apply_recipe(RecipeId::OddMinus1, 10, 3, 1);
  REQUIRE(broken.ok());
  CHECK(!broken->partition.has_value());
  json raw = to_json(*broken);
  CHECK(raw["partition"].is_null());
  CHECK(raw["raw"] == json::array({3, 4, 3}));
}

TEST_CASE("multiplicity specs serialize as pair arrays") {
  Partition p = Partition::parse(std::vector<i64>{5, 4, 1, 1}).value();
  CHECK(to_json(p.multiplicities()).dump() == "[[5,1],[4,1],[1,2]]");
  CHECK(to_json(p).dump() == "[5,4,1,1]");
}

TEST_CASE("coverage report serialization") {
  CoverageReport cov = coverage(9, 2, 2);
  json out = to_json(cov);
  CHECK(out["covered"] == 0);
  CHECK(out["missing"] == json::array({2}));
  CHECK(out["derivations"][0]["target"] == 2);
  CHECK(out["derivations"][0]["derivation"] == "miss");
}
