#include "mutvis/visibility.hpp"

#include <queue>

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

int bfs_distance(const GeneralGraph& g, int x, int y) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  dist[x] = 0;
  q.push(x);
  while (!q.empty()) {
    int w = q.front();
    q.pop();
    for (int z : g.neighbors(w)) {
      if (dist[z] < 0) {
        dist[z] = dist[w] + 1;
        q.push(z);
      }
    }
  }
  return dist[y];
}

// Definition-level oracle: enumerate every simple path of length exactly
// d(x,y) by plain DFS and look for one whose internal vertices avoid X.
bool dfs_paths(const GeneralGraph& g, const std::vector<char>& in_x,
               std::vector<char>& on_path, int w, int y, int remaining) {
  if (w == y) return remaining == 0;
  if (remaining == 0) return false;
  for (int z : g.neighbors(w)) {
    if (on_path[z]) continue;
    if (z != y && in_x[z]) continue;
    on_path[z] = 1;
    const bool found = dfs_paths(g, in_x, on_path, z, y, remaining - 1);
    on_path[z] = 0;
    if (found) return true;
  }
  return false;
}

bool definition_x_visible(const GeneralGraph& g, const VertexSet& x_set,
                          int x, int y) {
  if (x == y) return true;
  std::vector<char> in_x(g.vertex_count(), 0);
  for (auto i : x_set.indices) in_x[i] = 1;
  std::vector<char> on_path(g.vertex_count(), 0);
  on_path[x] = 1;
  return dfs_paths(g, in_x, on_path, x, y, bfs_distance(g, x, y));
}

bool definition_total_mv(const GeneralGraph& g, const VertexSet& x_set) {
  for (int x = 0; x < g.vertex_count(); ++x) {
    for (int y = x + 1; y < g.vertex_count(); ++y) {
      if (!definition_x_visible(g, x_set, x, y)) return false;
    }
  }
  return true;
}

GeneralGraph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return GeneralGraph(n, edges);
}

VertexSet set_of(std::initializer_list<std::uint64_t> ids) {
  VertexSet s;
  s.indices = ids;
  return s;
}

}  // namespace

TEST_CASE("x-visibility base cases") {
  const GeneralGraph path(3, {{0, 1}, {1, 2}});
  CHECK(is_x_visible(path, set_of({0, 1, 2}), 1, 1));
  CHECK(is_x_visible(path, set_of({0, 1, 2}), 0, 1));  // adjacent
  CHECK_FALSE(is_x_visible(path, set_of({1}), 0, 2));  // unique path blocked
  CHECK_THROWS(is_x_visible(path, set_of({1}), 0, 5));
}

TEST_CASE("diametral pair of a 4-cycle blocks the other one") {
  const auto c4 = cycle(4);  // K2 x K2
  CHECK_FALSE(is_x_visible(c4, set_of({0, 2}), 1, 3));
  CHECK(is_x_visible(c4, set_of({0}), 1, 3));
}

TEST_CASE("total mutual-visibility oracle") {
  HammingShape shape({2, 3, 4});
  const auto g = GeneralGraph::from_shape(shape);
  CHECK(is_total_mv_set(g, VertexSet{}));
  // The 5-vertex set drawn for K2 x K3 x K4.
  const auto fig = VertexSet::from_vertices(
      shape, {vx({1, 1, 1}), vx({1, 2, 1}), vx({2, 3, 4}), vx({2, 3, 3}),
              vx({2, 3, 2})});
  CHECK(fig.size() == 5);
  CHECK(is_total_mv_set(g, fig));
  CHECK(is_tmv_hamming(shape, fig));
  // A distance-2 pair is never allowed.
  const auto bad =
      VertexSet::from_vertices(shape, {vx({1, 1, 1}), vx({2, 2, 1})});
  CHECK_FALSE(is_total_mv_set(g, bad));
  CHECK_FALSE(is_tmv_hamming(shape, bad));
}

TEST_CASE("mutual-visibility checker agrees with path enumeration") {
  const auto c4 = cycle(4);
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    VertexSet x;
    for (int v = 0; v < 4; ++v) {
      if (mask & (1u << v)) x.indices.push_back(v);
    }
    bool def_mv = true;
    for (std::size_t a = 0; a < x.indices.size() && def_mv; ++a) {
      for (std::size_t b = a + 1; b < x.indices.size() && def_mv; ++b) {
        def_mv = definition_x_visible(c4, x, static_cast<int>(x.indices[a]),
                                      static_cast<int>(x.indices[b]));
      }
    }
    CHECK(is_mv_set(c4, x) == def_mv);
    CHECK(is_total_mv_set(c4, x) == definition_total_mv(c4, x));
  }
  CHECK(is_mv_set(c4, VertexSet{}));
  CHECK(is_mv_set(c4, set_of({2})));
}

TEST_CASE("total implies plain mutual visibility") {
  HammingShape shape({2, 2, 3});
  const auto g = GeneralGraph::from_shape(shape);
  const int n = static_cast<int>(shape.vertex_count());
  for (std::uint64_t mask = 0; mask < (1u << n); mask += 7) {
    VertexSet x;
    for (int v = 0; v < n; ++v) {
      if (mask & (1ull << v)) x.indices.push_back(v);
    }
    if (is_total_mv_set(g, x)) CHECK(is_mv_set(g, x));
  }
}

TEST_CASE("generic checker on cycles, no Hamming assumption") {
  CHECK(is_total_mv_set(cycle(4), set_of({0})));
  // On C5 a distance-2 pair has a unique geodesic through the middle.
  CHECK_FALSE(is_total_mv_set(cycle(5), set_of({0})));
  CHECK(definition_total_mv(cycle(4), set_of({0})));
  CHECK_FALSE(definition_total_mv(cycle(5), set_of({0})));
}

TEST_CASE("square suitability") {
  HammingShape shape({4, 3, 2});
  const auto sq = cartesian_square_through(shape, vx({1, 1, 1}), vx({1, 3, 2}));
  CHECK(is_square_suitable(shape, sq, VertexSet{}));
  // A diametral pair inside X breaks it.
  CHECK_FALSE(is_square_suitable(
      shape, sq, VertexSet::from_vertices(shape, {sq.u, sq.u2})));
  // An adjacent pair does not.
  CHECK(is_square_suitable(shape, sq,
                           VertexSet::from_vertices(shape, {sq.u, sq.u1})));
}

TEST_CASE("three-way equivalence, exhaustive on 2,2,2") {
  HammingShape shape({2, 2, 2});
  const auto g = GeneralGraph::from_shape(shape);
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    VertexSet x;
    for (int v = 0; v < 8; ++v) {
      if (mask & (1ull << v)) x.indices.push_back(v);
    }
    const bool generic = is_total_mv_set(g, x);
    CHECK(generic == is_tmv_hamming(shape, x));
    CHECK(generic == is_tmv_hamming_serial(shape, x));
    CHECK(generic == all_squares_suitable(shape, x));
  }
}

TEST_CASE("distance-2-freeness is hereditary") {
  HammingShape shape({3, 3, 2});
  const auto g = GeneralGraph::from_shape(shape);
  SplitMix64 rng(42);
  int tmv_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    VertexSet x;
    for (std::uint64_t v = 0; v < shape.vertex_count(); ++v) {
      if (rng.next() % 4 == 0) x.indices.push_back(v);
    }
    if (!is_tmv_hamming(shape, x) || x.indices.empty()) continue;
    ++tmv_seen;
    VertexSet sub = x;
    sub.indices.erase(sub.indices.begin() + (rng.next() % sub.indices.size()));
    CHECK(is_tmv_hamming(shape, sub));
    CHECK(is_total_mv_set(g, sub));
  }
  CHECK(tmv_seen > 0);
}
