#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mutvis {

// A vertex of a Hamming graph: one coordinate per factor, 0-based
// internally. All file formats and CLI output are 1-based.
using HVertex = std::vector<int>;

// Factor sizes (n_1,...,n_r) of the product K_{n1} x ... x K_{nr}.
// Immutable after construction.
class HammingShape {
 public:
  explicit HammingShape(std::vector<int> factor_sizes);

  int rank() const { return static_cast<int>(sizes_.size()); }
  const std::vector<int>& sizes() const { return sizes_; }
  long long size_sum() const { return size_sum_; }          // N
  std::uint64_t vertex_count() const { return vertex_count_; }  // V

  // Drops size-1 factors (K1 is the product identity). A shape that is
  // all ones normalizes to the single-vertex shape (1).
  HammingShape normalized() const;

  void check_vertex(const HVertex& v) const;

  // Mixed-radix bijection onto [0, V-1]; factor 1 is the least
  // significant digit.
  std::uint64_t encode(const HVertex& v) const;
  HVertex decode(std::uint64_t index) const;

  bool operator==(const HammingShape& o) const { return sizes_ == o.sizes_; }

 private:
  std::vector<int> sizes_;
  long long size_sum_ = 0;
  std::uint64_t vertex_count_ = 1;
};

// Number of coordinates where u and v differ; this is the shortest-path
// distance in the product of complete graphs.
int hamming_distance(const HammingShape& shape, const HVertex& u,
                     const HVertex& v);

// All vertices on shortest u,v-paths: every coordinate equals the one of
// u or of v. Size is 2^d(u,v).
std::vector<HVertex> interval(const HammingShape& shape, const HVertex& u,
                              const HVertex& v);

// Checks that the interval induces the hypercube Q_t, t = d(u,v):
// 2^t vertices, t-regular, connected, t*2^(t-1) edges.
bool interval_is_hypercube(const HammingShape& shape, const HVertex& u,
                           const HVertex& v);

// A 4-cycle not contained in one layer: four vertices agreeing everywhere
// except at coordinate positions i < j. Diametral pairs are (u, u2) and
// (u1, u3), both at distance 2.
struct CartesianSquare {
  HVertex u, u1, u2, u3;
  int pos_i = 0;
  int pos_j = 0;
};

// The unique Cartesian square having (u, v) as a diametral pair.
// Requires d(u,v) = 2.
CartesianSquare cartesian_square_through(const HammingShape& shape,
                                         const HVertex& u, const HVertex& v);

}  // namespace mutvis
