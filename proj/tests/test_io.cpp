#include "mutvis/io.hpp"

#include <sstream>

#include "doctest.h"
#include "mutvis/constructions.hpp"
#include "mutvis/rng.hpp"

using namespace mutvis;

TEST_CASE("shape and vertex literals") {
  const auto shape = parse_shape("4,3,2");
  CHECK(shape.sizes() == std::vector<int>{4, 3, 2});
  CHECK(format_shape(shape) == "4,3,2");
  const auto v = parse_vertex("(2,1,1)", shape);
  CHECK(v == HVertex{1, 0, 0});
  CHECK(format_vertex(v) == "(2,1,1)");
  CHECK_THROWS(parse_shape("4,,2"));
  CHECK_THROWS(parse_shape("abc"));
  CHECK_THROWS(parse_vertex("2,1,1", shape));
  CHECK_THROWS(parse_vertex("(5,1,1)", shape));  // out of range
}

TEST_CASE("set documents round-trip") {
  HammingShape shape({2, 3, 4});
  SplitMix64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    VertexSet x;
    for (std::uint64_t v = 0; v < shape.vertex_count(); ++v) {
      if (rng.next() % 3 == 0) x.indices.push_back(v);
    }
    const auto text = format_set_document(shape, x);
    std::istringstream in(text);
    const auto doc = parse_set_document(in);
    CHECK(doc.shape.sizes() == shape.sizes());
    CHECK(doc.set.indices == x.indices);
  }
  std::istringstream missing("vertex (1,1,1)\n");
  CHECK_THROWS(parse_set_document(missing));
}

TEST_CASE("family documents round-trip") {
  HammingShape shape({4, 4, 3});
  const auto family =
      tmv_to_clique_family(shape, construct_three_factor(shape));
  const auto text = format_family_document(family);
  std::istringstream in(text);
  const auto parsed = parse_family_document(in);
  CHECK(parsed.shape.sizes() == shape.sizes());
  CHECK(parsed.cliques == family.cliques);
  std::istringstream bad("shape 3,3,3\nclique 1,2\n");
  CHECK_THROWS(parse_family_document(bad));
}

TEST_CASE("edge lists load 1-based and reject disconnected input") {
  std::istringstream ok("3 2\n1 2\n2 3\n");
  const auto g = parse_edge_list(ok);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  std::istringstream disconnected("4 1\n1 2\n");
  CHECK_THROWS(parse_edge_list(disconnected));
  std::istringstream truncated("3 2\n1 2\n");
  CHECK_THROWS(parse_edge_list(truncated));
}

TEST_CASE("certificates round-trip") {
  HammingShape shape({4, 3, 2});
  const auto cert = mut_exact(shape);
  const auto text = format_certificate(shape, cert);
  std::istringstream in(text);
  const auto parsed = parse_certificate(in);
  CHECK(parsed.shape.sizes() == shape.sizes());
  CHECK(parsed.cert.value == cert.value);
  CHECK(parsed.cert.optimal == cert.optimal);
  CHECK(parsed.cert.witness.indices == cert.witness.indices);
  CHECK(parsed.cert.nodes == cert.nodes);
}
