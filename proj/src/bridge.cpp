#include "mutvis/bridge.hpp"

#include <stdexcept>

namespace mutvis {

namespace {

void check_rank(const HammingShape& shape) {
  if (shape.rank() < 3) {
    throw std::invalid_argument("clique-family view requires r >= 3");
  }
}

void check_clique(const HammingShape& shape, const std::vector<int>& clique) {
  if (static_cast<int>(clique.size()) != shape.rank()) {
    throw std::invalid_argument("clique is not transversal");
  }
  for (int i = 0; i < shape.rank(); ++i) {
    if (clique[i] < 0 || clique[i] >= shape.sizes()[i]) {
      throw std::out_of_range("clique element out of class range");
    }
  }
}

}  // namespace

CliqueFamily tmv_to_clique_family(const HammingShape& shape,
                                  const VertexSet& x_set) {
  check_rank(shape);
  CliqueFamily family{shape, {}};
  for (const auto& v : x_set.to_vertices(shape)) {
    family.cliques.insert(v);
  }
  return family;
}

VertexSet clique_family_to_tmv(const CliqueFamily& family) {
  check_rank(family.shape);
  std::vector<HVertex> vertices;
  for (const auto& clique : family.cliques) {
    check_clique(family.shape, clique);
    vertices.push_back(clique);
  }
  return VertexSet::from_vertices(family.shape, vertices);
}

bool is_valid_clique_family(const CliqueFamily& family) {
  check_rank(family.shape);
  const int r = family.shape.rank();
  std::vector<const std::vector<int>*> members;
  for (const auto& clique : family.cliques) {
    check_clique(family.shape, clique);
    members.push_back(&clique);
  }
  // Transversal cliques meet each class once, so the intersection size
  // of two members is the number of classes where they agree.
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      int agree = 0;
      for (int i = 0; i < r; ++i) {
        if ((*members[a])[i] == (*members[b])[i]) ++agree;
      }
      if (agree == r - 2) return false;
    }
  }
  return true;
}

SolveCertificate ex_fr(const HammingShape& shape, const SolveOptions& opts,
                       std::uint64_t cap) {
  check_rank(shape);
  return mut_exact(shape, opts, cap);
}

}  // namespace mutvis
