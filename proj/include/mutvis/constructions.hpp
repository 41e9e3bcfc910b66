#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mutvis/rational.hpp"
#include "mutvis/shape.hpp"
#include "mutvis/visibility.hpp"

namespace mutvis {

// Exact value for three factors: N-4 / N-5 / N-6 by the smallest factor,
// n1 when the smallest factor is 1. Inputs are sorted internally.
long long theorem1_value(int n1, int n2, int n3);

// Explicit optimal witness for three factors, permuted back to the
// caller's factor order. Requires every factor >= 2.
VertexSet construct_three_factor(const HammingShape& shape);

// One full layer of the larger factor; pairwise distance 1.
VertexSet construct_two_factor(const HammingShape& shape);

// (6/r!) * N^(r-2), r >= 3.
Rational upper_bound_general(const HammingShape& shape);

// c'_r * s^(r-2) with c'_r = 3 * prod_{i=3..r} (i-1)^(i-3), r >= 3.
long long upper_bound_balanced(int s, int r);

// s^(r-2) / (r(r-1)), r >= 3.
Rational lower_bound_balanced(int s, int r);

struct BoundsReport {
  HammingShape shape;
  std::optional<long long> theorem1;       // r = 3 (after normalization)
  std::optional<long long> two_factor;     // r = 2
  std::optional<Rational> upper_general;   // r >= 3
  std::optional<long long> upper_balanced; // balanced, r >= 3
  std::optional<Rational> lower_balanced;  // balanced, r >= 3
};

BoundsReport compute_bounds(const HammingShape& shape);

struct RandomRunReport {
  int s = 0;
  int r = 0;
  std::uint64_t seed = 0;
  Rational probability;
  std::uint64_t sampled = 0;        // |S|
  std::uint64_t bad_pairs = 0;      // |B|
  std::uint64_t surviving = 0;      // |S*|
  Rational expected_sampled;        // s^r * p
  Rational expected_bad_bound;      // exact E(|B|)
  VertexSet result;
};

// Samples each vertex of the balanced product independently with
// p = 2 / (r(r-1)s^2), then removes one vertex from each bad
// (distance-2) pair: pairs are visited in lexicographic index order and
// the larger index is dropped when both endpoints are still present.
RandomRunReport random_tmv(int s, int r, std::uint64_t seed,
                           std::uint64_t vertex_cap = 10000000);

// Exploratory variant for arbitrary shapes and a caller-chosen p; no
// size guarantee applies.
RandomRunReport random_tmv_general(const HammingShape& shape, double p,
                                   std::uint64_t seed,
                                   std::uint64_t vertex_cap = 10000000);

// Exact C(r,2) * s^2(s-1)^2/2 * s^(r-2) * p^2.
Rational expected_bad_pairs_bound(int s, int r);

// The coarser bound (1/2) s^r p = s^(r-2)/(r(r-1)).
Rational expected_bad_pairs_simplified(int s, int r);

}  // namespace mutvis
