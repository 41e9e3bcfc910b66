// mutvis: total mutual-visibility toolkit for products of complete graphs.
//
// Exit codes: 0 success, 1 invalid input, 2 verification failure,
// 3 timeout without a proven optimum.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mutvis/bridge.hpp"
#include "mutvis/conflict.hpp"
#include "mutvis/constructions.hpp"
#include "mutvis/graph.hpp"
#include "mutvis/io.hpp"
#include "mutvis/visibility.hpp"

using namespace mutvis;

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// Normalized-rank constructions re-expanded to the caller's shape: the
// dropped K1 coordinates are constant.
VertexSet construct_for(const HammingShape& shape) {
  const auto norm = shape.normalized();
  VertexSet norm_set;
  if (norm.rank() == 1) {
    for (std::uint64_t i = 0; i < norm.vertex_count(); ++i) {
      norm_set.indices.push_back(i);  // a complete graph: everything works
    }
  } else if (norm.rank() == 2) {
    norm_set = construct_two_factor(norm);
  } else if (norm.rank() == 3) {
    norm_set = construct_three_factor(norm);
  } else {
    throw std::invalid_argument(
        "no exact construction is known for more than three factors >= 2;"
        " see the random subcommand");
  }
  if (norm.sizes() == shape.sizes()) return norm_set;
  std::vector<HVertex> expanded;
  for (const auto& nv : norm_set.to_vertices(norm)) {
    HVertex v(shape.rank(), 0);
    int k = 0;
    for (int i = 0; i < shape.rank(); ++i) {
      if (shape.sizes()[i] > 1) v[i] = nv[k++];
    }
    expanded.push_back(std::move(v));
  }
  return VertexSet::from_vertices(shape, expanded);
}

int run_solve(const std::string& shape_text, const std::string& method,
              int threads, double timeout, const std::string& out_path) {
  const auto shape = parse_shape(shape_text);
  SolveCertificate cert;
  if (method == "brute") {
    const auto t0 = std::chrono::steady_clock::now();
    cert.value = brute_force_mut(shape);
    cert.method = "brute";
    cert.millis = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  } else {
    SolveOptions opts;
    opts.threads = threads;
    opts.timeout_seconds = timeout;
    cert = mut_exact(shape, opts);
  }
  emit(format_certificate(shape, cert), out_path);
  return cert.optimal ? 0 : 3;
}

int run_verify(const std::string& shape_text, const std::string& graph_path,
               const std::string& set_path, const std::string& ids,
               std::string method, const std::string& out_path) {
  std::ostringstream doc;
  bool verdict = true;
  if (!graph_path.empty()) {
    std::ifstream gin(graph_path);
    if (!gin) throw std::runtime_error("cannot open " + graph_path);
    const auto g = parse_edge_list(gin);
    VertexSet x;
    if (!ids.empty()) {
      std::istringstream is(ids);
      std::string tok;
      while (std::getline(is, tok, ',')) {
        x.indices.push_back(std::stoull(tok) - 1);
      }
    }
    if (method.empty() || method == "generic") {
      verdict = is_total_mv_set(g, x);
    } else {
      throw std::invalid_argument(
          "edge-list graphs support only the generic method");
    }
    doc << "graph " << graph_path << '\n';
    doc << "set_size " << x.size() << '\n';
    doc << "method generic\n";
    doc << "verdict " << bool_str(verdict) << '\n';
  } else {
    std::ifstream sin(set_path);
    if (!sin) throw std::runtime_error("cannot open " + set_path);
    const auto setdoc = parse_set_document(sin);
    HammingShape shape =
        shape_text.empty() ? setdoc.shape : parse_shape(shape_text);
    if (!shape_text.empty() && shape.sizes() != setdoc.shape.sizes()) {
      throw std::invalid_argument("--shape disagrees with the set file");
    }
    if (method.empty()) method = "distance2";
    doc << "shape " << format_shape(shape) << '\n';
    doc << "set_size " << setdoc.set.size() << '\n';
    doc << "method " << method << '\n';
    if (method == "distance2") {
      verdict = is_tmv_hamming(shape, setdoc.set);
      doc << "verdict " << bool_str(verdict) << '\n';
    } else if (method == "generic") {
      verdict = is_total_mv_set(GeneralGraph::from_shape(shape), setdoc.set);
      doc << "verdict " << bool_str(verdict) << '\n';
    } else if (method == "both") {
      const bool fast = is_tmv_hamming(shape, setdoc.set);
      const bool generic =
          is_total_mv_set(GeneralGraph::from_shape(shape), setdoc.set);
      verdict = fast && generic;
      doc << "verdict_distance2 " << bool_str(fast) << '\n';
      doc << "verdict_generic " << bool_str(generic) << '\n';
      doc << "agreement " << bool_str(fast == generic) << '\n';
      doc << "verdict " << bool_str(verdict) << '\n';
    } else {
      throw std::invalid_argument("unknown verify method: " + method);
    }
  }
  emit(doc.str(), out_path);
  return verdict ? 0 : 2;
}

int run_construct(const std::string& shape_text, const std::string& out_path) {
  const auto shape = parse_shape(shape_text);
  const auto witness = construct_for(shape);
  const bool valid = is_tmv_hamming(shape, witness);
  std::ostringstream doc;
  // comments keep the output a parseable set document
  doc << "# normalized_shape " << format_shape(shape.normalized()) << '\n';
  doc << "# size " << witness.size() << '\n';
  doc << "# valid " << bool_str(valid) << '\n';
  doc << format_set_document(shape, witness);
  emit(doc.str(), out_path);
  return valid ? 0 : 2;
}

int run_random(int s, int r, std::uint64_t seed, bool seed_given, int trials,
               bool advanced, const std::string& shape_text, double p,
               const std::string& out_path) {
  if (!seed_given) {
    seed = std::random_device{}();
  }
  std::ostringstream doc;
  if (advanced) {
    if (shape_text.empty()) {
      throw std::invalid_argument("--advanced requires --shape and --p");
    }
    const auto shape = parse_shape(shape_text);
    doc << "# shape " << format_shape(shape) << '\n';
    doc << "# p " << p << '\n';
    doc << "# seed " << seed << '\n';
    doc << "# trials " << trials << '\n';
    for (int t = 0; t < trials; ++t) {
      const auto rep = random_tmv_general(shape, p, seed + t);
      doc << "# trial " << (t + 1) << " seed " << rep.seed << " sampled "
          << rep.sampled << " bad " << rep.bad_pairs << " surviving "
          << rep.surviving << '\n';
    }
    emit(doc.str(), out_path);
    return 0;
  }
  doc << "# s " << s << '\n';
  doc << "# r " << r << '\n';
  const auto probe = random_tmv(s, r, seed);
  doc << "# p " << probe.probability.str() << '\n';
  doc << "# expected_sampled " << probe.expected_sampled.str() << '\n';
  doc << "# expected_bad_bound " << probe.expected_bad_bound.str() << '\n';
  doc << "# seed " << seed << '\n';
  doc << "# trials " << trials << '\n';
  std::uint64_t min_s = UINT64_MAX, max_s = 0;
  double sum_s = 0, sum_b = 0;
  const HammingShape shape(std::vector<int>(r, s));
  std::string best_doc;
  std::uint64_t best = 0;
  for (int t = 0; t < trials; ++t) {
    const auto rep = random_tmv(s, r, seed + t);
    doc << "# trial " << (t + 1) << " seed " << rep.seed << " sampled "
        << rep.sampled << " bad " << rep.bad_pairs << " surviving "
        << rep.surviving << '\n';
    min_s = std::min(min_s, rep.surviving);
    max_s = std::max(max_s, rep.surviving);
    sum_s += static_cast<double>(rep.surviving);
    sum_b += static_cast<double>(rep.bad_pairs);
    if (rep.surviving >= best) {
      best = rep.surviving;
      best_doc = format_set_document(shape, rep.result);
    }
  }
  doc << "# mean_surviving " << (sum_s / trials) << '\n';
  doc << "# min_surviving " << min_s << '\n';
  doc << "# max_surviving " << max_s << '\n';
  doc << "# mean_bad " << (sum_b / trials) << '\n';
  doc << best_doc;
  emit(doc.str(), out_path);
  return 0;
}

int run_bounds(const std::string& shape_text, const std::string& out_path) {
  const auto shape = parse_shape(shape_text);
  const auto report = compute_bounds(shape);
  std::ostringstream doc;
  doc << "shape " << format_shape(shape) << '\n';
  doc << "normalized_shape " << format_shape(shape.normalized()) << '\n';
  doc << "r " << shape.rank() << '\n';
  doc << "N " << shape.size_sum() << '\n';
  if (report.two_factor) doc << "two_factor_value " << *report.two_factor << '\n';
  if (report.theorem1) doc << "theorem1_value " << *report.theorem1 << '\n';
  if (report.upper_general) {
    doc << "upper_general " << report.upper_general->str() << '\n';
  }
  if (report.upper_balanced) {
    doc << "upper_balanced " << *report.upper_balanced << '\n';
  }
  if (report.lower_balanced) {
    doc << "lower_balanced " << report.lower_balanced->str() << '\n';
  }
  emit(doc.str(), out_path);
  return 0;
}

int run_export(const std::string& shape_text, bool complement,
               const std::string& out_path) {
  const auto shape = parse_shape(shape_text);
  const auto g = build_conflict_graph(shape);
  emit(export_dimacs(g, complement), out_path);
  return 0;
}

int run_bridge_to(const std::string& set_path, const std::string& out_path) {
  std::ifstream in(set_path);
  if (!in) throw std::runtime_error("cannot open " + set_path);
  const auto setdoc = parse_set_document(in);
  const auto family = tmv_to_clique_family(setdoc.shape, setdoc.set);
  std::ostringstream doc;
  doc << "# valid " << bool_str(is_valid_clique_family(family)) << '\n';
  doc << format_family_document(family);
  emit(doc.str(), out_path);
  return 0;
}

int run_bridge_from(const std::string& family_path,
                    const std::string& out_path) {
  std::ifstream in(family_path);
  if (!in) throw std::runtime_error("cannot open " + family_path);
  const auto family = parse_family_document(in);
  const auto set = clique_family_to_tmv(family);
  std::ostringstream doc;
  doc << "# valid " << bool_str(is_tmv_hamming(family.shape, set)) << '\n';
  doc << format_set_document(family.shape, set);
  emit(doc.str(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"total mutual-visibility toolkit for Hamming graphs"};
  app.require_subcommand(1);

  std::string shape_text, set_path, family_path, graph_path, out_path, ids;
  std::string solve_method = "bb", verify_method;
  int threads = 0;
  double timeout = 0;
  int s = 0, r = 0, trials = 1;
  std::uint64_t seed = 0;
  bool complement = false, advanced = false;
  double p = 0;

  auto* solve = app.add_subcommand("solve", "exact value with certificate");
  solve->add_option("--shape", shape_text)->required();
  solve->add_option("--method", solve_method)
      ->check(CLI::IsMember({"bb", "brute"}));
  solve->add_option("--threads", threads);
  solve->add_option("--timeout", timeout);
  solve->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "check a claimed set");
  verify->add_option("--shape", shape_text);
  verify->add_option("--graph", graph_path);
  verify->add_option("--set", set_path);
  verify->add_option("--ids", ids);
  verify->add_option("--method", verify_method)
      ->check(CLI::IsMember({"distance2", "generic", "both"}));
  verify->add_option("--out", out_path);

  auto* construct = app.add_subcommand("construct", "emit an optimal witness");
  construct->add_option("--shape", shape_text)->required();
  construct->add_option("--out", out_path);

  auto* random = app.add_subcommand("random", "randomized construction");
  random->add_option("--s", s);
  random->add_option("--r", r);
  auto* seed_opt = random->add_option("--seed", seed);
  random->add_option("--trials", trials)->check(CLI::PositiveNumber);
  random->add_flag("--advanced", advanced);
  random->add_option("--shape", shape_text);
  random->add_option("--p", p);
  random->add_option("--out", out_path);

  auto* bounds = app.add_subcommand("bounds", "closed-form bounds");
  bounds->add_option("--shape", shape_text)->required();
  bounds->add_option("--out", out_path);

  auto* exp = app.add_subcommand("export", "conflict graph as DIMACS");
  exp->add_option("--shape", shape_text)->required();
  exp->add_flag("--complement", complement);
  exp->add_option("--out", out_path);

  auto* bridge = app.add_subcommand("bridge", "clique-family view");
  auto* to_cliques = bridge->add_subcommand("to-cliques");
  to_cliques->add_option("--set", set_path)->required();
  to_cliques->add_option("--out", out_path);
  auto* from_cliques = bridge->add_subcommand("from-cliques");
  from_cliques->add_option("--family", family_path)->required();
  from_cliques->add_option("--out", out_path);
  bridge->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 1 : 0;
  }

  try {
    if (solve->parsed()) {
      return run_solve(shape_text, solve_method, threads, timeout, out_path);
    }
    if (verify->parsed()) {
      if (graph_path.empty() && set_path.empty()) {
        throw std::invalid_argument("verify needs --set or --graph");
      }
      return run_verify(shape_text, graph_path, set_path, ids, verify_method,
                        out_path);
    }
    if (construct->parsed()) return run_construct(shape_text, out_path);
    if (random->parsed()) {
      return run_random(s, r, seed, seed_opt->count() > 0, trials, advanced,
                        shape_text, p, out_path);
    }
    if (bounds->parsed()) return run_bounds(shape_text, out_path);
    if (exp->parsed()) return run_export(shape_text, complement, out_path);
    if (to_cliques->parsed()) return run_bridge_to(set_path, out_path);
    if (from_cliques->parsed()) return run_bridge_from(family_path, out_path);
  } catch (const std::exception& e) {
    std::cout << "error " << e.what() << '\n';
    return 1;
  }
  return 1;
}
