#include "mutvis/visibility.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mutvis {

VertexSet VertexSet::from_vertices(const HammingShape& shape,
                                   const std::vector<HVertex>& vertices) {
  VertexSet s;
  s.indices.reserve(vertices.size());
  for (const auto& v : vertices) s.indices.push_back(shape.encode(v));
  std::sort(s.indices.begin(), s.indices.end());
  s.indices.erase(std::unique(s.indices.begin(), s.indices.end()),
                  s.indices.end());
  return s;
}

std::vector<HVertex> VertexSet::to_vertices(const HammingShape& shape) const {
  std::vector<HVertex> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(shape.decode(i));
  return out;
}

bool VertexSet::contains(std::uint64_t i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

namespace {

std::vector<int> bfs_distances(const GeneralGraph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

std::vector<char> membership_mask(const GeneralGraph& g,
                                  const VertexSet& x_set) {
  std::vector<char> in_x(g.vertex_count(), 0);
  for (auto i : x_set.indices) {
    if (i >= static_cast<std::uint64_t>(g.vertex_count())) {
      throw std::invalid_argument("set member outside the graph");
    }
    in_x[i] = 1;
  }
  return in_x;
}

// Geodesic-DAG reachability: from x, follow only edges that advance the
// BFS layer toward y and stay on some shortest x,y-path, skipping
// internal vertices in X.
bool x_visible_impl(const GeneralGraph& g, const std::vector<char>& in_x,
                    const std::vector<int>& dist_x,
                    const std::vector<int>& dist_y, int x, int y) {
  const int total = dist_x[y];
  if (total <= 1) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<int> q;
  q.push(x);
  seen[x] = 1;
  while (!q.empty()) {
    const int w = q.front();
    q.pop();
    for (int z : g.neighbors(w)) {
      if (seen[z]) continue;
      if (dist_x[z] != dist_x[w] + 1) continue;
      if (dist_x[z] + dist_y[z] != total) continue;
      if (z == y) return true;
      if (in_x[z]) continue;
      seen[z] = 1;
      q.push(z);
    }
  }
  return false;
}

}  // namespace

bool is_x_visible(const GeneralGraph& g, const std::vector<char>& in_x, int x,
                  int y) {
  if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count()) {
    throw std::invalid_argument("vertex id out of range");
  }
  if (x == y) return true;
  const auto dist_x = bfs_distances(g, x);
  const auto dist_y = bfs_distances(g, y);
  return x_visible_impl(g, in_x, dist_x, dist_y, x, y);
}

bool is_x_visible(const GeneralGraph& g, const VertexSet& x_set, int x,
                  int y) {
  return is_x_visible(g, membership_mask(g, x_set), x, y);
}

bool is_total_mv_set(const GeneralGraph& g, const VertexSet& x_set) {
  const auto in_x = membership_mask(g, x_set);
  const int n = g.vertex_count();
  std::vector<std::vector<int>> dist(n);
  for (int v = 0; v < n; ++v) dist[v] = bfs_distances(g, v);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (!x_visible_impl(g, in_x, dist[x], dist[y], x, y)) return false;
    }
  }
  return true;
}

bool is_mv_set(const GeneralGraph& g, const VertexSet& x_set) {
  const auto in_x = membership_mask(g, x_set);
  const auto& members = x_set.indices;
  for (std::size_t a = 0; a < members.size(); ++a) {
    const int x = static_cast<int>(members[a]);
    const auto dist_x = bfs_distances(g, x);
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const int y = static_cast<int>(members[b]);
      const auto dist_y = bfs_distances(g, y);
      if (!x_visible_impl(g, in_x, dist_x, dist_y, x, y)) return false;
    }
  }
  return true;
}

bool is_tmv_hamming_serial(const HammingShape& shape, const VertexSet& x_set) {
  const auto members = x_set.to_vertices(shape);
  const std::size_t n = members.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (hamming_distance(shape, members[a], members[b]) == 2) return false;
    }
  }
  return true;
}

bool is_tmv_hamming(const HammingShape& shape, const VertexSet& x_set,
                    int threads) {
  const auto members = x_set.to_vertices(shape);
  const auto n = static_cast<std::int64_t>(members.size());
  bool ok = true;
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : ok)
#endif
  for (std::int64_t a = 0; a < n; ++a) {
    bool row_ok = true;
    for (std::int64_t b = a + 1; b < n; ++b) {
      int d = 0;
      for (int i = 0; i < shape.rank(); ++i) {
        if (members[a][i] != members[b][i] && ++d > 2) break;
      }
      if (d == 2) {
        row_ok = false;
        break;
      }
    }
    ok = ok && row_ok;
  }
  return ok;
}

bool is_square_suitable(const HammingShape& shape, const CartesianSquare& sq,
                        const VertexSet& x_set) {
  const auto has = [&](const HVertex& v) {
    return x_set.contains(shape.encode(v));
  };
  if (has(sq.u) && has(sq.u2)) return false;
  if (has(sq.u1) && has(sq.u3)) return false;
  return true;
}

bool all_squares_suitable(const HammingShape& shape, const VertexSet& x_set) {
  // A square not touching X is trivially suitable, so enumerating the
  // squares through each member suffices.
  const int r = shape.rank();
  const auto& sizes = shape.sizes();
  for (auto idx : x_set.indices) {
    const HVertex x = shape.decode(idx);
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        for (int a = 0; a < sizes[i]; ++a) {
          if (a == x[i]) continue;
          for (int b = 0; b < sizes[j]; ++b) {
            if (b == x[j]) continue;
            HVertex opposite = x;
            opposite[i] = a;
            opposite[j] = b;
            const auto sq = cartesian_square_through(shape, x, opposite);
            if (!is_square_suitable(shape, sq, x_set)) return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace mutvis
