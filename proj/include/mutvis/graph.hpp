#pragma once

#include <cstdint>
#include <vector>

#include "mutvis/shape.hpp"

namespace mutvis {

// Plain adjacency-list graph used by the definition-level visibility
// oracle. Must be connected; loaders reject anything else.
class GeneralGraph {
 public:
  GeneralGraph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  long long edge_count() const { return edge_count_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

  // Materializes a Hamming graph: adjacency = differ in exactly one
  // coordinate, vertex ids = mixed-radix indices.
  static GeneralGraph from_shape(const HammingShape& shape,
                                 std::uint64_t max_vertices = 5000);

 private:
  std::vector<std::vector<int>> adj_;
  long long edge_count_ = 0;
};

}  // namespace mutvis
