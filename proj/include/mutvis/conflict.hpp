#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mutvis/shape.hpp"
#include "mutvis/visibility.hpp"

namespace mutvis {

// Graph on the Hamming vertices with edges exactly at distance 2.
// Independent sets are exactly the total mutual-visibility sets, so
// mu_t = alpha of this graph.
class ConflictGraph {
 public:
  ConflictGraph(HammingShape shape, int vertex_count);

  const HammingShape& shape() const { return shape_; }
  int vertex_count() const { return v_; }
  long long edge_count() const;
  int degree(int v) const;
  bool adjacent(int a, int b) const {
    return (row(a)[b >> 6] >> (b & 63)) & 1;
  }
  const std::uint64_t* row(int v) const { return adj_.data() + v * words_; }
  int words() const { return words_; }

  void add_edge(int a, int b);

 private:
  HammingShape shape_;
  int v_;
  int words_;
  std::vector<std::uint64_t> adj_;
};

inline constexpr std::uint64_t kDefaultVertexCap = 5000;

ConflictGraph build_conflict_graph(const HammingShape& shape,
                                   std::uint64_t cap = kDefaultVertexCap,
                                   int threads = 0);
// Reference row-by-row builder kept for testing the parallel one.
ConflictGraph build_conflict_graph_serial(const HammingShape& shape,
                                          std::uint64_t cap = kDefaultVertexCap);

// Closed form (prod n_k) * sum_{i<j} (n_i - 1)(n_j - 1) / 2, with checked
// 128-bit arithmetic.
std::uint64_t conflict_edge_count(const HammingShape& shape);

// Counts distance-2 pairs by direct scan over all vertex pairs; the
// independent oracle for conflict_edge_count.
std::uint64_t conflict_pair_count_scan(const HammingShape& shape,
                                       int threads = 0);
std::uint64_t conflict_pair_count_scan_serial(const HammingShape& shape);

struct SolveOptions {
  double timeout_seconds = 0;  // 0 = unlimited
  int threads = 1;
};

struct SolveCertificate {
  std::uint64_t value = 0;
  VertexSet witness;
  std::uint64_t nodes = 0;
  double millis = 0;
  bool optimal = true;
  std::string method;
};

// Exact maximum independent set via branch and bound with a greedy
// clique-cover bound. Deterministic: fixed branching order, and the
// returned witness is the lexicographically smallest optimum by sorted
// index sequence. On timeout the best incumbent is returned with
// optimal = false.
SolveCertificate max_independent_set(const ConflictGraph& g,
                                     const SolveOptions& opts = {});

SolveCertificate mut_exact(const HammingShape& shape,
                           const SolveOptions& opts = {},
                           std::uint64_t cap = kDefaultVertexCap);

// Subset-enumeration oracle; V <= 20.
std::uint64_t brute_force_mut(const HammingShape& shape);

std::string export_dimacs(const ConflictGraph& g, bool complement);

}  // namespace mutvis
