#include "mutvis/constructions.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "mutvis/conflict.hpp"

using namespace mutvis;

namespace {

HVertex vx(std::initializer_list<int> coords) {
  HVertex v;
  for (int c : coords) v.push_back(c - 1);
  return v;
}

std::set<HVertex> as_set(const HammingShape& shape, const VertexSet& s) {
  const auto verts = s.to_vertices(shape);
  return {verts.begin(), verts.end()};
}

}  // namespace

TEST_CASE("three-factor value table") {
  CHECK(theorem1_value(4, 3, 2) == 5);
  CHECK(theorem1_value(5, 4, 3) == 7);
  CHECK(theorem1_value(4, 4, 4) == 6);
  CHECK(theorem1_value(2, 2, 2) == 2);
  CHECK(theorem1_value(1, 6, 4) == 6);  // K1 factor drops out
  CHECK(theorem1_value(2, 4, 3) == theorem1_value(4, 3, 2));  // sorted inside
  CHECK_THROWS_AS(theorem1_value(0, 2, 2), std::invalid_argument);
}

TEST_CASE("three-factor construction, explicit sets") {
  HammingShape s432({4, 3, 2});
  const auto y = construct_three_factor(s432);
  CHECK(as_set(s432, y) ==
        std::set<HVertex>{vx({2, 1, 1}), vx({3, 1, 1}), vx({4, 1, 1}),
                          vx({1, 2, 2}), vx({1, 3, 2})});

  HammingShape s444({4, 4, 4});
  const auto k = construct_three_factor(s444);
  CHECK(as_set(s444, k) ==
        std::set<HVertex>{vx({3, 1, 1}), vx({4, 1, 1}), vx({1, 3, 2}),
                          vx({1, 4, 2}), vx({2, 2, 3}), vx({2, 2, 4})});

  HammingShape s222({2, 2, 2});
  const auto d = construct_three_factor(s222);
  CHECK(as_set(s222, d) == std::set<HVertex>{vx({2, 1, 1}), vx({1, 2, 2})});

  CHECK_THROWS_AS(construct_three_factor(HammingShape({3, 2, 1})),
                  std::invalid_argument);
}

TEST_CASE("three-factor construction validity and size, sweep") {
  for (int n1 = 2; n1 <= 8; ++n1) {
    for (int n2 = 2; n2 <= n1; ++n2) {
      for (int n3 = 2; n3 <= n2; ++n3) {
        HammingShape shape({n1, n2, n3});
        const auto y = construct_three_factor(shape);
        CHECK(y.size() ==
              static_cast<std::size_t>(theorem1_value(n1, n2, n3)));
        CHECK(is_tmv_hamming(shape, y));
      }
    }
  }
}

TEST_CASE("three-factor construction is optimal where the solver reaches") {
  for (const auto& sizes : std::vector<std::vector<int>>{
           {2, 2, 2}, {3, 2, 2}, {3, 3, 3}, {4, 3, 2}, {5, 4, 3}, {5, 5, 5}}) {
    HammingShape shape(sizes);
    CHECK(construct_three_factor(shape).size() == mut_exact(shape).value);
  }
}

TEST_CASE("construction equivariance under factor permutation") {
  std::vector<int> sizes{5, 4, 3};
  HammingShape base(sizes);
  const auto base_set = as_set(base, construct_three_factor(base));
  std::sort(sizes.begin(), sizes.end());
  do {
    HammingShape permuted(sizes);
    // positions of each size in the permuted shape, matched to base order
    std::vector<int> where(3);
    std::vector<bool> used(3, false);
    for (int k = 0; k < 3; ++k) {
      for (int i = 0; i < 3; ++i) {
        if (!used[i] && sizes[i] == base.sizes()[k]) {
          where[k] = i;
          used[i] = true;
          break;
        }
      }
    }
    std::set<HVertex> mapped;
    for (const auto& v : base_set) {
      HVertex w(3);
      for (int k = 0; k < 3; ++k) w[where[k]] = v[k];
      mapped.insert(w);
    }
    CHECK(as_set(permuted, construct_three_factor(permuted)) == mapped);
  } while (std::next_permutation(sizes.begin(), sizes.end()));
}

TEST_CASE("two-factor layer construction") {
  HammingShape s32({3, 2});
  CHECK(as_set(s32, construct_two_factor(s32)) ==
        std::set<HVertex>{vx({1, 1}), vx({2, 1}), vx({3, 1})});
  HammingShape s11({1, 1});
  CHECK(as_set(s11, construct_two_factor(s11)) == std::set<HVertex>{vx({1, 1})});
  HammingShape s55({5, 5});
  const auto layer = construct_two_factor(s55);
  CHECK(layer.size() == 5);
  CHECK(is_tmv_hamming(s55, layer));
  CHECK(mut_exact(s55).value == 5);
}

TEST_CASE("general upper bound") {
  CHECK(upper_bound_general(HammingShape({4, 3, 2})) == Rational(9));
  CHECK(upper_bound_general(HammingShape({3, 3, 3, 3})) == Rational(36));
  CHECK(Rational(theorem1_value(4, 3, 2)) <=
        upper_bound_general(HammingShape({4, 3, 2})));
  CHECK_THROWS_AS(upper_bound_general(HammingShape({4, 4})),
                  std::invalid_argument);
}

TEST_CASE("balanced bounds") {
  CHECK(upper_bound_balanced(7, 3) == 21);
  CHECK(upper_bound_balanced(5, 4) == 9 * 25);
  CHECK(lower_bound_balanced(10, 3) == Rational(10, 6));
  CHECK(lower_bound_balanced(2, 3) == Rational(2, 6));
  CHECK(mut_exact(HammingShape({5, 5, 5})).value == 9);
  CHECK(9 <= upper_bound_balanced(5, 3));
  CHECK(lower_bound_balanced(4, 3) <= Rational(6));  // mut of (4,4,4)
  for (int s = 2; s <= 10; ++s) {
    for (int r = 3; r <= 5; ++r) {
      CHECK(lower_bound_balanced(s, r) <= Rational(upper_bound_balanced(s, r)));
    }
  }
}

TEST_CASE("bounds report fields") {
  const auto triple = compute_bounds(HammingShape({10, 10, 10}));
  CHECK(triple.theorem1.value() == 24);
  CHECK(triple.upper_general.value() == Rational(30));
  CHECK(triple.upper_balanced.value() == 30);
  CHECK(triple.lower_balanced.value() == Rational(10, 6));
  CHECK_FALSE(triple.two_factor.has_value());

  const auto pair = compute_bounds(HammingShape({6, 4}));
  CHECK(pair.two_factor.value() == 6);
  CHECK_FALSE(pair.theorem1.has_value());
  CHECK_FALSE(pair.upper_general.has_value());
}

TEST_CASE("expected bad pair formulas") {
  CHECK(expected_bad_pairs_bound(2, 3) == Rational(1, 12));
  CHECK(expected_bad_pairs_simplified(10, 3) == Rational(10, 6));
  for (int s = 2; s <= 12; ++s) {
    for (int r = 3; r <= 5; ++r) {
      // exact <= (1/2) E(|S|) = the simplified bound
      CHECK(expected_bad_pairs_bound(s, r) <=
            expected_bad_pairs_simplified(s, r));
    }
  }
}

TEST_CASE("randomized construction always yields a valid set") {
  for (int s = 2; s <= 6; ++s) {
    for (int r : {3, 4}) {
      for (std::uint64_t seed : {1ull, 7ull, 99ull, 12345ull}) {
        const auto report = random_tmv(s, r, seed);
        CHECK(is_tmv_hamming(HammingShape(std::vector<int>(r, s)),
                             report.result));
        CHECK(report.surviving <= report.sampled);
        CHECK(report.surviving + report.bad_pairs >= report.sampled);
        CHECK(report.probability ==
              Rational(2, static_cast<long long>(r) * (r - 1) * s * s));
      }
    }
  }
  CHECK_THROWS_AS(random_tmv(5, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_tmv(1, 3, 1), std::invalid_argument);
}

TEST_CASE("randomized construction is reproducible bit for bit") {
  const auto a = random_tmv(10, 3, 777);
  const auto b = random_tmv(10, 3, 777);
  CHECK(a.sampled == b.sampled);
  CHECK(a.bad_pairs == b.bad_pairs);
  CHECK(a.surviving == b.surviving);
  CHECK(a.result.indices == b.result.indices);
  CHECK(a.expected_sampled == Rational(2 * 10, 6));
}

TEST_CASE("exploratory sampler on unbalanced shapes") {
  HammingShape shape({4, 3, 2});
  const auto report = random_tmv_general(shape, 0.05, 3);
  CHECK(is_tmv_hamming(shape, report.result));
  CHECK_THROWS_AS(random_tmv_general(shape, 1.5, 3), std::invalid_argument);
}
