#include "mutvis/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace mutvis {

GeneralGraph::GeneralGraph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  adj_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    edge_count_ += static_cast<long long>(nbrs.size());
  }
  edge_count_ /= 2;

  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int y : adj_[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        q.push(y);
      }
    }
  }
  if (reached != n) {
    throw std::invalid_argument("graph must be connected");
  }
}

GeneralGraph GeneralGraph::from_shape(const HammingShape& shape,
                                      std::uint64_t max_vertices) {
  const std::uint64_t v_count = shape.vertex_count();
  if (v_count > max_vertices) {
    throw std::invalid_argument("shape too large to materialize");
  }
  const int n = static_cast<int>(v_count);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    const HVertex u = shape.decode(static_cast<std::uint64_t>(i));
    for (int j = i + 1; j < n; ++j) {
      const HVertex w = shape.decode(static_cast<std::uint64_t>(j));
      if (hamming_distance(shape, u, w) == 1) edges.emplace_back(i, j);
    }
  }
  return GeneralGraph(n, edges);
}

}  // namespace mutvis
