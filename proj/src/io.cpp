#include "mutvis/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mutvis {

namespace {

std::vector<int> parse_int_list(const std::string& text, char sep) {
  std::vector<int> values;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    std::size_t pos = 0;
    const int value = std::stoi(item, &pos);
    if (pos != item.size()) {
      throw std::invalid_argument("malformed integer list: " + text);
    }
    values.push_back(value);
  }
  if (values.empty()) {
    throw std::invalid_argument("empty integer list");
  }
  return values;
}

std::string strip(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

HammingShape parse_shape(const std::string& text) {
  return HammingShape(parse_int_list(strip(text), ','));
}

std::string format_shape(const HammingShape& shape) {
  std::string out;
  for (int n : shape.sizes()) {
    if (!out.empty()) out += ',';
    out += std::to_string(n);
  }
  return out;
}

HVertex parse_vertex(const std::string& text, const HammingShape& shape) {
  const std::string s = strip(text);
  if (s.size() < 3 || s.front() != '(' || s.back() != ')') {
    throw std::invalid_argument("vertex literal must look like (1,2,3)");
  }
  auto coords = parse_int_list(s.substr(1, s.size() - 2), ',');
  for (auto& c : coords) c -= 1;  // external 1-based, internal 0-based
  shape.check_vertex(coords);
  return coords;
}

std::string format_vertex(const HVertex& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i] + 1);
  }
  out += ')';
  return out;
}

SetDocument parse_set_document(std::istream& in) {
  std::string line;
  std::vector<std::string> vertex_literals;
  std::string shape_literal;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::string rest;
    std::getline(ls, rest);
    if (key == "shape") {
      shape_literal = strip(rest);
    } else if (key == "vertex") {
      vertex_literals.push_back(strip(rest));
    } else {
      throw std::invalid_argument("unknown key in set document: " + key);
    }
  }
  if (shape_literal.empty()) {
    throw std::invalid_argument("set document is missing a shape line");
  }
  HammingShape shape = parse_shape(shape_literal);
  std::vector<HVertex> vertices;
  for (const auto& lit : vertex_literals) {
    vertices.push_back(parse_vertex(lit, shape));
  }
  return SetDocument{shape, VertexSet::from_vertices(shape, vertices)};
}

std::string format_set_document(const HammingShape& shape,
                                const VertexSet& set) {
  std::string out = "shape " + format_shape(shape) + "\n";
  for (const auto& v : set.to_vertices(shape)) {
    out += "vertex " + format_vertex(v) + "\n";
  }
  return out;
}

CliqueFamily parse_family_document(std::istream& in) {
  std::string line;
  std::string shape_literal;
  std::vector<std::vector<int>> cliques;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::string rest;
    std::getline(ls, rest);
    if (key == "shape") {
      shape_literal = strip(rest);
    } else if (key == "clique") {
      auto elements = parse_int_list(strip(rest), ',');
      for (auto& e : elements) e -= 1;
      cliques.push_back(std::move(elements));
    } else {
      throw std::invalid_argument("unknown key in family document: " + key);
    }
  }
  if (shape_literal.empty()) {
    throw std::invalid_argument("family document is missing a shape line");
  }
  CliqueFamily family{parse_shape(shape_literal), {}};
  for (auto& c : cliques) {
    if (static_cast<int>(c.size()) != family.shape.rank()) {
      throw std::invalid_argument("clique arity does not match shape");
    }
    family.cliques.insert(std::move(c));
  }
  return family;
}

std::string format_family_document(const CliqueFamily& family) {
  std::string out = "shape " + format_shape(family.shape) + "\n";
  for (const auto& clique : family.cliques) {
    out += "clique ";
    for (std::size_t i = 0; i < clique.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(clique[i] + 1);
    }
    out += '\n';
  }
  return out;
}

GeneralGraph parse_edge_list(std::istream& in) {
  int n = 0;
  long long m = 0;
  if (!(in >> n >> m)) {
    throw std::invalid_argument("edge list needs an 'n m' header");
  }
  std::vector<std::pair<int, int>> edges;
  for (long long k = 0; k < m; ++k) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw std::invalid_argument("edge list ended early");
    }
    edges.emplace_back(u - 1, v - 1);
  }
  return GeneralGraph(n, edges);
}

std::string format_certificate(const HammingShape& shape,
                               const SolveCertificate& cert) {
  std::ostringstream out;
  out << "shape " << format_shape(shape) << '\n';
  out << "value " << cert.value << '\n';
  out << "optimal " << (cert.optimal ? "true" : "false") << '\n';
  out << "witness";
  for (const auto& v : cert.witness.to_vertices(shape)) {
    out << ' ' << format_vertex(v);
  }
  out << '\n';
  out << "nodes " << cert.nodes << '\n';
  out << "millis " << static_cast<long long>(cert.millis) << '\n';
  out << "method " << cert.method << '\n';
  return out.str();
}

CertificateDocument parse_certificate(std::istream& in) {
  std::string line;
  std::string shape_literal;
  SolveCertificate cert;
  std::vector<std::string> witness_literals;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "shape") {
      ls >> shape_literal;
    } else if (key == "value") {
      ls >> cert.value;
    } else if (key == "optimal") {
      std::string flag;
      ls >> flag;
      cert.optimal = (flag == "true");
    } else if (key == "witness") {
      std::string tuple;
      while (ls >> tuple) witness_literals.push_back(tuple);
    } else if (key == "nodes") {
      ls >> cert.nodes;
    } else if (key == "millis") {
      ls >> cert.millis;
    } else if (key == "method") {
      ls >> cert.method;
    } else {
      throw std::invalid_argument("unknown key in certificate: " + key);
    }
  }
  if (shape_literal.empty()) {
    throw std::invalid_argument("certificate is missing a shape line");
  }
  HammingShape shape = parse_shape(shape_literal);
  std::vector<HVertex> vertices;
  for (const auto& lit : witness_literals) {
    vertices.push_back(parse_vertex(lit, shape));
  }
  cert.witness = VertexSet::from_vertices(shape, vertices);
  return CertificateDocument{shape, cert};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace mutvis
