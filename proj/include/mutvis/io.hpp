#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mutvis/bridge.hpp"
#include "mutvis/conflict.hpp"
#include "mutvis/graph.hpp"
#include "mutvis/shape.hpp"
#include "mutvis/visibility.hpp"

namespace mutvis {

// Shape literal: comma-separated sizes, e.g. "4,3,2".
HammingShape parse_shape(const std::string& text);
std::string format_shape(const HammingShape& shape);

// Vertex literal: parenthesized 1-based tuple, e.g. "(2,1,1)".
HVertex parse_vertex(const std::string& text, const HammingShape& shape);
std::string format_vertex(const HVertex& v);

// Vertex-set document:
//   shape 2,3,4
//   vertex (1,1,1)
//   vertex (2,3,2)
struct SetDocument {
  HammingShape shape;
  VertexSet set;
};
SetDocument parse_set_document(std::istream& in);
std::string format_set_document(const HammingShape& shape,
                                const VertexSet& set);

// Clique-family document:
//   shape 4,4,4
//   clique 3,1,1
// where each clique lists one 1-based element per class, position = class.
CliqueFamily parse_family_document(std::istream& in);
std::string format_family_document(const CliqueFamily& family);

// Edge list: header "n m", then one 1-based "u v" line per edge.
GeneralGraph parse_edge_list(std::istream& in);

// Certificate document with fixed key order:
//   shape / value / optimal / witness / nodes / millis
std::string format_certificate(const HammingShape& shape,
                               const SolveCertificate& cert);
struct CertificateDocument {
  HammingShape shape;
  SolveCertificate cert;
};
CertificateDocument parse_certificate(std::istream& in);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace mutvis
