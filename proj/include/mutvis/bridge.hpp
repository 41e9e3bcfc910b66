#pragma once

#include <set>
#include <vector>

#include "mutvis/conflict.hpp"
#include "mutvis/shape.hpp"
#include "mutvis/visibility.hpp"

namespace mutvis {

// A vertex u_{i,j} of the complete multipartite graph K_{n1,...,nr}:
// element j of partite class i (0-based internally).
struct MultipartiteVertex {
  int class_index = 0;
  int element = 0;
};

// A family of transversal r-cliques of K_{n1,...,nr}. Each clique is
// canonicalized as its element index per class, so families are plain
// sets and duplicates collapse.
struct CliqueFamily {
  HammingShape shape;
  std::set<std::vector<int>> cliques;
};

// One transversal clique per set member: coordinate j becomes the
// class-j element. Requires r >= 3.
CliqueFamily tmv_to_clique_family(const HammingShape& shape,
                                  const VertexSet& x_set);

// Inverse transcription; round-trips with tmv_to_clique_family.
VertexSet clique_family_to_tmv(const CliqueFamily& family);

// True iff all members are transversal and no two agree on exactly r-2
// classes (the forbidden two-edge intersection pattern).
bool is_valid_clique_family(const CliqueFamily& family);

// The maximum number of transversal cliques with no (r-2)-intersection:
// identical to mut_exact by the bijection, exposed under its
// extremal-hypergraph reading.
SolveCertificate ex_fr(const HammingShape& shape, const SolveOptions& opts = {},
                       std::uint64_t cap = kDefaultVertexCap);

}  // namespace mutvis
