#pragma once

#include <cstdint>
#include <vector>

#include "mutvis/graph.hpp"
#include "mutvis/shape.hpp"

namespace mutvis {

// A subset of vertices, kept as sorted unique mixed-radix indices.
struct VertexSet {
  std::vector<std::uint64_t> indices;

  static VertexSet from_vertices(const HammingShape& shape,
                                 const std::vector<HVertex>& vertices);
  std::vector<HVertex> to_vertices(const HammingShape& shape) const;
  std::size_t size() const { return indices.size(); }
  bool contains(std::uint64_t i) const;
};

// True iff some shortest x,y-path has all internal vertices outside X.
// Walks the BFS-layer DAG from x toward y, pruning internal vertices
// that lie in X (endpoints are exempt).
bool is_x_visible(const GeneralGraph& g, const std::vector<char>& in_x, int x,
                  int y);
bool is_x_visible(const GeneralGraph& g, const VertexSet& x_set, int x, int y);

// Definition-level checkers on arbitrary connected graphs. These are the
// oracles; the production path for Hamming graphs is is_tmv_hamming.
bool is_total_mv_set(const GeneralGraph& g, const VertexSet& x_set);
bool is_mv_set(const GeneralGraph& g, const VertexSet& x_set);

// Distance-2 characterization: X is a total mutual-visibility set of a
// Hamming graph iff no two members are at Hamming distance exactly 2.
bool is_tmv_hamming(const HammingShape& shape, const VertexSet& x_set,
                    int threads = 0);
bool is_tmv_hamming_serial(const HammingShape& shape, const VertexSet& x_set);

// A Cartesian square is X-suitable iff X contains neither diametral pair.
bool is_square_suitable(const HammingShape& shape, const CartesianSquare& sq,
                        const VertexSet& x_set);

// Every Cartesian square of the product is X-suitable. Checked by
// enumerating the squares that touch X, so it stays independent of the
// distance-2 shortcut.
bool all_squares_suitable(const HammingShape& shape, const VertexSet& x_set);

}  // namespace mutvis
