#include "mutvis/constructions.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "mutvis/rng.hpp"

namespace mutvis {

namespace {

long long checked_mul(long long a, long long b) {
  const __int128 p = static_cast<__int128>(a) * b;
  if (p > INT64_MAX || p < INT64_MIN) {
    throw std::overflow_error("integer overflow in bound formula");
  }
  return static_cast<long long>(p);
}

long long ipow(long long base, int exp) {
  long long result = 1;
  for (int i = 0; i < exp; ++i) result = checked_mul(result, base);
  return result;
}

std::array<int, 3> sorted_desc(int n1, int n2, int n3) {
  std::array<int, 3> s{n1, n2, n3};
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

}  // namespace

long long theorem1_value(int n1, int n2, int n3) {
  if (n1 < 1 || n2 < 1 || n3 < 1) {
    throw std::invalid_argument("factor sizes must be >= 1");
  }
  const auto s = sorted_desc(n1, n2, n3);
  const long long n = s[0] + s[1] + s[2];
  if (s[2] == 1) return s[0];  // K1 factor drops out
  if (s[2] == 2) return n - 4;
  if (s[2] == 3) return n - 5;
  return n - 6;
}

VertexSet construct_three_factor(const HammingShape& shape) {
  if (shape.rank() != 3) {
    throw std::invalid_argument("construction requires exactly three factors");
  }
  for (int n : shape.sizes()) {
    if (n < 2) {
      throw std::invalid_argument("construction requires every factor >= 2");
    }
  }
  // Sort factors descending, remembering where each sorted slot came
  // from, and emit in the caller's order at the end.
  std::array<int, 3> perm{0, 1, 2};
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    return shape.sizes()[a] > shape.sizes()[b];
  });
  const int m1 = shape.sizes()[perm[0]];
  const int m2 = shape.sizes()[perm[1]];
  const int m3 = shape.sizes()[perm[2]];

  std::vector<HVertex> sorted_frame;
  if (m3 <= 3) {
    // Two slanted layers at pairwise distance 1 or 3.
    for (int i = 1; i < m1; ++i) sorted_frame.push_back({i, 0, 0});
    for (int j = 1; j < m2; ++j) sorted_frame.push_back({0, j, 1});
  } else {
    // Image of the three base-edge clique classes.
    for (int j = 2; j < m1; ++j) sorted_frame.push_back({j, 0, 0});
    for (int j = 2; j < m2; ++j) sorted_frame.push_back({0, j, 1});
    for (int j = 2; j < m3; ++j) sorted_frame.push_back({1, 1, j});
  }

  std::vector<HVertex> vertices;
  vertices.reserve(sorted_frame.size());
  for (const auto& sv : sorted_frame) {
    HVertex v(3);
    for (int k = 0; k < 3; ++k) v[perm[k]] = sv[k];
    vertices.push_back(std::move(v));
  }
  return VertexSet::from_vertices(shape, vertices);
}

VertexSet construct_two_factor(const HammingShape& shape) {
  if (shape.rank() != 2) {
    throw std::invalid_argument("layer construction requires two factors");
  }
  const int n = shape.sizes()[0];
  const int m = shape.sizes()[1];
  std::vector<HVertex> vertices;
  if (n >= m) {
    for (int i = 0; i < n; ++i) vertices.push_back({i, 0});
  } else {
    for (int j = 0; j < m; ++j) vertices.push_back({0, j});
  }
  return VertexSet::from_vertices(shape, vertices);
}

Rational upper_bound_general(const HammingShape& shape) {
  const int r = shape.rank();
  if (r < 3) throw std::invalid_argument("bound requires r >= 3");
  long long factorial = 1;
  for (int i = 2; i <= r; ++i) factorial = checked_mul(factorial, i);
  return Rational(6, factorial) * Rational(ipow(shape.size_sum(), r - 2));
}

long long upper_bound_balanced(int s, int r) {
  if (r < 3) throw std::invalid_argument("bound requires r >= 3");
  if (s < 1) throw std::invalid_argument("s must be >= 1");
  long long constant = 3;
  for (int i = 3; i <= r; ++i) {
    constant = checked_mul(constant, ipow(i - 1, i - 3));
  }
  return checked_mul(constant, ipow(s, r - 2));
}

Rational lower_bound_balanced(int s, int r) {
  if (r < 3) throw std::invalid_argument("bound requires r >= 3");
  return Rational(ipow(s, r - 2)) / Rational(checked_mul(r, r - 1));
}

BoundsReport compute_bounds(const HammingShape& shape) {
  BoundsReport report{shape, {}, {}, {}, {}, {}};
  const int r = shape.rank();
  const auto& sizes = shape.sizes();
  if (r == 2) {
    report.two_factor = std::max(sizes[0], sizes[1]);
  } else if (r == 1) {
    report.two_factor = sizes[0];  // a complete graph: every subset works
  }
  if (r == 3) {
    report.theorem1 = theorem1_value(sizes[0], sizes[1], sizes[2]);
  }
  if (r >= 3) {
    report.upper_general = upper_bound_general(shape);
    const bool balanced =
        std::all_of(sizes.begin(), sizes.end(),
                    [&](int n) { return n == sizes[0]; });
    if (balanced) {
      report.upper_balanced = upper_bound_balanced(sizes[0], r);
      report.lower_balanced = lower_bound_balanced(sizes[0], r);
    }
  }
  return report;
}

namespace {

RandomRunReport run_sampling(const HammingShape& shape, std::uint64_t threshold,
                             std::uint64_t seed) {
  RandomRunReport report;
  report.seed = seed;
  SplitMix64 rng(seed);
  std::vector<std::uint64_t> sampled;
  const std::uint64_t n = shape.vertex_count();
  for (std::uint64_t i = 0; i < n; ++i) {
    if (rng.next() < threshold) sampled.push_back(i);
  }
  if (sampled.size() > 100000) {
    throw std::runtime_error("sample too large for pairwise deletion");
  }
  report.sampled = sampled.size();

  std::vector<HVertex> verts;
  verts.reserve(sampled.size());
  for (auto i : sampled) verts.push_back(shape.decode(i));

  // Bad pairs come out in lexicographic (min,max) order; delete the
  // larger endpoint when both are still present.
  std::vector<char> deleted(sampled.size(), 0);
  for (std::size_t a = 0; a < sampled.size(); ++a) {
    for (std::size_t b = a + 1; b < sampled.size(); ++b) {
      if (hamming_distance(shape, verts[a], verts[b]) == 2) {
        ++report.bad_pairs;
        if (!deleted[a] && !deleted[b]) deleted[b] = 1;
      }
    }
  }
  for (std::size_t a = 0; a < sampled.size(); ++a) {
    if (!deleted[a]) report.result.indices.push_back(sampled[a]);
  }
  report.surviving = report.result.indices.size();
  return report;
}

}  // namespace

RandomRunReport random_tmv(int s, int r, std::uint64_t seed,
                           std::uint64_t vertex_cap) {
  if (r < 3) throw std::invalid_argument("randomized construction needs r >= 3");
  if (s < 2) throw std::invalid_argument("randomized construction needs s >= 2");
  const HammingShape shape(std::vector<int>(r, s));
  if (shape.vertex_count() > vertex_cap) {
    throw std::invalid_argument("s^r exceeds the sampling cap");
  }
  const long long den =
      checked_mul(checked_mul(r, r - 1), checked_mul(s, s));
  // floor(2^65 / den): exact integer threshold for P(next() < t) = p.
  const auto threshold = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(1) << 65) /
      static_cast<unsigned __int128>(den));

  RandomRunReport report = run_sampling(shape, threshold, seed);
  report.s = s;
  report.r = r;
  report.probability = Rational(2, den);
  report.expected_sampled = Rational(ipow(s, r)) * report.probability;
  report.expected_bad_bound = expected_bad_pairs_bound(s, r);
  return report;
}

RandomRunReport random_tmv_general(const HammingShape& shape, double p,
                                   std::uint64_t seed,
                                   std::uint64_t vertex_cap) {
  if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0,1]");
  if (shape.vertex_count() > vertex_cap) {
    throw std::invalid_argument("shape exceeds the sampling cap");
  }
  const long double scale = 18446744073709551616.0L;  // 2^64
  const long double t = static_cast<long double>(p) * scale;
  const std::uint64_t threshold =
      t >= scale ? UINT64_MAX : static_cast<std::uint64_t>(t);

  RandomRunReport report = run_sampling(shape, threshold, seed);
  report.s = shape.sizes()[0];
  report.r = shape.rank();
  report.probability =
      Rational(static_cast<long long>(p * 1000000000.0 + 0.5), 1000000000LL);
  report.expected_sampled =
      Rational(static_cast<long long>(shape.vertex_count())) *
      report.probability;
  report.expected_bad_bound = Rational(0);
  return report;
}

Rational expected_bad_pairs_bound(int s, int r) {
  if (r < 3) throw std::invalid_argument("bound requires r >= 3");
  const Rational p(2, checked_mul(checked_mul(r, r - 1), checked_mul(s, s)));
  const Rational pairs_choose(checked_mul(r, r - 1), 2);
  const Rational placements(checked_mul(checked_mul(s, s),
                                        checked_mul(s - 1, s - 1)),
                            2);
  return pairs_choose * placements * Rational(ipow(s, r - 2)) * p * p;
}

Rational expected_bad_pairs_simplified(int s, int r) {
  if (r < 3) throw std::invalid_argument("bound requires r >= 3");
  return Rational(ipow(s, r - 2)) / Rational(checked_mul(r, r - 1));
}

}  // namespace mutvis
