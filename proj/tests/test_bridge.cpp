#include "mutvis/bridge.hpp"

#include "doctest.h"
#include "mutvis/constructions.hpp"
#include "mutvis/rng.hpp"

using namespace mutvis;

namespace {

HVertex vx(std::initializer_list<int> coords) {
  HVertex v;
  for (int c : coords) v.push_back(c - 1);
  return v;
}

}  // namespace

TEST_CASE("vertex to transversal clique transcription") {
  HammingShape shape({4, 3, 2});
  const auto family = tmv_to_clique_family(
      shape, VertexSet::from_vertices(shape, {vx({2, 1, 1})}));
  CHECK(family.cliques.size() == 1);
  CHECK(*family.cliques.begin() == std::vector<int>{1, 0, 0});
  CHECK_THROWS_AS(
      tmv_to_clique_family(HammingShape({3, 3}), VertexSet{}),
      std::invalid_argument);
}

TEST_CASE("the optimal three-factor witness is the clique family image") {
  HammingShape shape({4, 4, 4});
  const auto witness = construct_three_factor(shape);
  const auto family = tmv_to_clique_family(shape, witness);
  CHECK(family.cliques.size() == 6);
  CHECK(is_valid_clique_family(family));
  const auto back = clique_family_to_tmv(family);
  CHECK(back.indices == witness.indices);
}

TEST_CASE("a distance-2 pair flags the family invalid") {
  HammingShape shape({2, 2, 2});
  const auto family = tmv_to_clique_family(
      shape, VertexSet::from_vertices(shape, {vx({1, 1, 1}), vx({2, 2, 1})}));
  CHECK_FALSE(is_valid_clique_family(family));
}

TEST_CASE("families validate like their vertex sets, exhaustive on 2,2,2") {
  HammingShape shape({2, 2, 2});
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    VertexSet x;
    for (int v = 0; v < 8; ++v) {
      if (mask & (1ull << v)) x.indices.push_back(v);
    }
    const auto family = tmv_to_clique_family(shape, x);
    CHECK(family.cliques.size() == x.size());
    CHECK(clique_family_to_tmv(family).indices == x.indices);
    CHECK(is_valid_clique_family(family) == is_tmv_hamming(shape, x));
  }
}

TEST_CASE("round trip on random subsets of 4,4,3") {
  HammingShape shape({4, 4, 3});
  SplitMix64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    VertexSet x;
    for (std::uint64_t v = 0; v < shape.vertex_count(); ++v) {
      if (rng.next() % 3 == 0) x.indices.push_back(v);
    }
    const auto family = tmv_to_clique_family(shape, x);
    CHECK(clique_family_to_tmv(family).indices == x.indices);
    CHECK(is_valid_clique_family(family) == is_tmv_hamming(shape, x));
  }
}

TEST_CASE("clique family edge cases") {
  HammingShape shape({5, 5, 5});
  CHECK(is_valid_clique_family(
      tmv_to_clique_family(shape, construct_three_factor(shape))));
  CHECK(is_valid_clique_family(CliqueFamily{shape, {}}));
  CHECK(is_valid_clique_family(CliqueFamily{shape, {{0, 1, 2}}}));
  // Non-transversal member is rejected.
  CHECK_THROWS(clique_family_to_tmv(CliqueFamily{shape, {{0, 1}}}));
  CHECK_THROWS(is_valid_clique_family(CliqueFamily{shape, {{0, 1, 9}}}));
  // Two cliques agreeing on exactly one class at r = 3.
  CHECK_FALSE(is_valid_clique_family(
      CliqueFamily{shape, {{0, 0, 0}, {1, 1, 0}}}));
}

TEST_CASE("extremal hypergraph values match the solver") {
  CHECK(ex_fr(HammingShape({4, 3, 2})).value == 5);
  CHECK(ex_fr(HammingShape({4, 4, 4})).value == 4 + 4 + 4 - 6);
  CHECK(ex_fr(HammingShape({5, 5, 5})).value == 3 * 5 - 6);
  CHECK(ex_fr(HammingShape({4, 3, 2})).value ==
        mut_exact(HammingShape({4, 3, 2})).value);
  CHECK_THROWS_AS(ex_fr(HammingShape({4, 4})), std::invalid_argument);
}
