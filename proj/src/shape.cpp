#include "mutvis/shape.hpp"

#include <algorithm>
#include <queue>

namespace mutvis {

namespace {

constexpr std::uint64_t kMaxVertexCount = 1ull << 62;

}  // namespace

HammingShape::HammingShape(std::vector<int> factor_sizes)
    : sizes_(std::move(factor_sizes)) {
  if (sizes_.empty()) {
    throw std::invalid_argument("shape needs at least one factor");
  }
  for (int n : sizes_) {
    if (n < 1) {
      throw std::invalid_argument("factor sizes must be >= 1");
    }
    size_sum_ += n;
    if (vertex_count_ > kMaxVertexCount / static_cast<std::uint64_t>(n)) {
      throw std::overflow_error("vertex count overflow");
    }
    vertex_count_ *= static_cast<std::uint64_t>(n);
  }
}

HammingShape HammingShape::normalized() const {
  std::vector<int> kept;
  for (int n : sizes_) {
    if (n > 1) kept.push_back(n);
  }
  if (kept.empty()) kept.push_back(1);
  return HammingShape(kept);
}

void HammingShape::check_vertex(const HVertex& v) const {
  if (static_cast<int>(v.size()) != rank()) {
    throw std::invalid_argument("vertex dimension does not match shape");
  }
  for (int i = 0; i < rank(); ++i) {
    if (v[i] < 0 || v[i] >= sizes_[i]) {
      throw std::out_of_range("vertex coordinate out of range");
    }
  }
}

std::uint64_t HammingShape::encode(const HVertex& v) const {
  check_vertex(v);
  std::uint64_t index = 0;
  std::uint64_t radix = 1;
  for (int i = 0; i < rank(); ++i) {
    index += radix * static_cast<std::uint64_t>(v[i]);
    radix *= static_cast<std::uint64_t>(sizes_[i]);
  }
  return index;
}

HVertex HammingShape::decode(std::uint64_t index) const {
  if (index >= vertex_count_) {
    throw std::out_of_range("vertex index out of range");
  }
  HVertex v(sizes_.size());
  for (int i = 0; i < rank(); ++i) {
    const auto n = static_cast<std::uint64_t>(sizes_[i]);
    v[i] = static_cast<int>(index % n);
    index /= n;
  }
  return v;
}

int hamming_distance(const HammingShape& shape, const HVertex& u,
                     const HVertex& v) {
  shape.check_vertex(u);
  shape.check_vertex(v);
  int d = 0;
  for (int i = 0; i < shape.rank(); ++i) {
    if (u[i] != v[i]) ++d;
  }
  return d;
}

std::vector<HVertex> interval(const HammingShape& shape, const HVertex& u,
                              const HVertex& v) {
  shape.check_vertex(u);
  shape.check_vertex(v);
  std::vector<int> diff;
  for (int i = 0; i < shape.rank(); ++i) {
    if (u[i] != v[i]) diff.push_back(i);
  }
  const int t = static_cast<int>(diff.size());
  std::vector<HVertex> result;
  result.reserve(std::size_t{1} << t);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
    HVertex w = u;
    for (int k = 0; k < t; ++k) {
      if (mask & (std::uint64_t{1} << k)) w[diff[k]] = v[diff[k]];
    }
    result.push_back(std::move(w));
  }
  return result;
}

bool interval_is_hypercube(const HammingShape& shape, const HVertex& u,
                           const HVertex& v) {
  const int t = hamming_distance(shape, u, v);
  const auto members = interval(shape, u, v);
  const std::size_t expect = std::size_t{1} << t;
  if (members.size() != expect) return false;

  // Induced adjacency: distance 1 between interval members.
  const int n = static_cast<int>(members.size());
  std::vector<std::vector<int>> adj(n);
  long long edges = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (hamming_distance(shape, members[i], members[j]) == 1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++edges;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(adj[i].size()) != t) return false;
  }
  if (edges != static_cast<long long>(t) * (n / 2)) return false;

  // Connectivity by BFS.
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        q.push(y);
      }
    }
  }
  return reached == n;
}

CartesianSquare cartesian_square_through(const HammingShape& shape,
                                         const HVertex& u, const HVertex& v) {
  if (hamming_distance(shape, u, v) != 2) {
    throw std::invalid_argument("cartesian square requires a distance-2 pair");
  }
  std::vector<int> diff;
  for (int i = 0; i < shape.rank(); ++i) {
    if (u[i] != v[i]) diff.push_back(i);
  }
  CartesianSquare sq;
  sq.pos_i = diff[0];
  sq.pos_j = diff[1];
  sq.u = u;
  sq.u1 = u;
  sq.u1[sq.pos_j] = v[sq.pos_j];
  sq.u2 = v;
  sq.u3 = u;
  sq.u3[sq.pos_i] = v[sq.pos_i];
  return sq;
}

}  // namespace mutvis
