#include "mutvis/conflict.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mutvis {

ConflictGraph::ConflictGraph(HammingShape shape, int vertex_count)
    : shape_(std::move(shape)),
      v_(vertex_count),
      words_((vertex_count + 63) / 64),
      adj_(static_cast<std::size_t>(vertex_count) * words_, 0) {}

void ConflictGraph::add_edge(int a, int b) {
  adj_[static_cast<std::size_t>(a) * words_ + (b >> 6)] |= 1ull << (b & 63);
  adj_[static_cast<std::size_t>(b) * words_ + (a >> 6)] |= 1ull << (a & 63);
}

int ConflictGraph::degree(int v) const {
  int d = 0;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

long long ConflictGraph::edge_count() const {
  long long total = 0;
  for (int v = 0; v < v_; ++v) total += degree(v);
  return total / 2;
}

namespace {

int distance2_check(const HVertex& u, const HVertex& v, int r) {
  int d = 0;
  for (int i = 0; i < r; ++i) {
    if (u[i] != v[i] && ++d > 2) return d;
  }
  return d;
}

std::vector<HVertex> decode_all(const HammingShape& shape, int n) {
  std::vector<HVertex> verts;
  verts.reserve(n);
  for (int i = 0; i < n; ++i) verts.push_back(shape.decode(i));
  return verts;
}

int checked_vertex_count(const HammingShape& shape, std::uint64_t cap) {
  if (shape.vertex_count() > cap) {
    throw std::invalid_argument("shape exceeds the conflict-graph vertex cap");
  }
  return static_cast<int>(shape.vertex_count());
}

}  // namespace

ConflictGraph build_conflict_graph_serial(const HammingShape& shape,
                                          std::uint64_t cap) {
  const int n = checked_vertex_count(shape, cap);
  ConflictGraph g(shape, n);
  const auto verts = decode_all(shape, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (distance2_check(verts[i], verts[j], shape.rank()) == 2) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

ConflictGraph build_conflict_graph(const HammingShape& shape,
                                   std::uint64_t cap, int threads) {
  const int n = checked_vertex_count(shape, cap);
  ConflictGraph g(shape, n);
  const auto verts = decode_all(shape, n);
  const int r = shape.rank();
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel for schedule(dynamic, 32)
#endif
  for (int i = 0; i < n; ++i) {
    // Each thread owns whole rows, so no write conflicts.
    auto* row = const_cast<std::uint64_t*>(g.row(i));
    for (int j = 0; j < n; ++j) {
      if (j != i && distance2_check(verts[i], verts[j], r) == 2) {
        row[j >> 6] |= 1ull << (j & 63);
      }
    }
  }
  return g;
}

std::uint64_t conflict_edge_count(const HammingShape& shape) {
  unsigned __int128 deg = 0;
  const auto& sizes = shape.sizes();
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (std::size_t j = i + 1; j < sizes.size(); ++j) {
      deg += static_cast<unsigned __int128>(sizes[i] - 1) *
             static_cast<unsigned __int128>(sizes[j] - 1);
    }
  }
  const unsigned __int128 total = static_cast<unsigned __int128>(
                                      shape.vertex_count()) * deg / 2;
  if (total > UINT64_MAX) throw std::overflow_error("edge count overflow");
  return static_cast<std::uint64_t>(total);
}

std::uint64_t conflict_pair_count_scan_serial(const HammingShape& shape) {
  const auto n = static_cast<std::int64_t>(shape.vertex_count());
  const auto verts = decode_all(shape, static_cast<int>(n));
  std::uint64_t count = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      if (distance2_check(verts[i], verts[j], shape.rank()) == 2) ++count;
    }
  }
  return count;
}

std::uint64_t conflict_pair_count_scan(const HammingShape& shape,
                                       int threads) {
  const auto n = static_cast<std::int64_t>(shape.vertex_count());
  const auto verts = decode_all(shape, static_cast<int>(n));
  const int r = shape.rank();
  std::uint64_t count = 0;
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : count)
#endif
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      if (distance2_check(verts[i], verts[j], r) == 2) ++count;
    }
  }
  return count;
}

namespace {

using Clock = std::chrono::steady_clock;
using Bits = std::vector<std::uint64_t>;

class MisSolver {
 public:
  MisSolver(const ConflictGraph& g, const SolveOptions& opts)
      : g_(g), v_(g.vertex_count()), words_(g.words()) {
    if (opts.timeout_seconds > 0) {
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(
                                         opts.timeout_seconds));
      has_deadline_ = true;
    }
    // Branching order: degree descending, index ascending on ties.
    order_.resize(v_);
    for (int i = 0; i < v_; ++i) order_[i] = i;
    std::vector<int> deg(v_);
    for (int i = 0; i < v_; ++i) deg[i] = g.degree(i);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      if (deg[a] != deg[b]) return deg[a] > deg[b];
      return a < b;
    });
  }

  SolveCertificate solve() {
    Bits all(words_, 0);
    for (int i = 0; i < v_; ++i) all[i >> 6] |= 1ull << (i & 63);
    best_ = 0;
    branch(all, 0);

    SolveCertificate cert;
    cert.nodes = nodes_;
    cert.optimal = !timed_out_;
    cert.value = best_;
    std::vector<int> witness = best_set_;
    if (cert.optimal && best_ > 0) {
      auto lex = lex_smallest_witness(all);
      if (!timed_out_ || !lex.empty()) witness = lex;
    }
    std::sort(witness.begin(), witness.end());
    for (int w : witness) {
      cert.witness.indices.push_back(static_cast<std::uint64_t>(w));
    }
    return cert;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool expired() {
    if (!has_deadline_) return false;
    if (timed_out_) return true;
    if ((nodes_ & 1023) == 0 && Clock::now() >= deadline_) timed_out_ = true;
    return timed_out_;
  }

  bool test(const Bits& s, int v) const {
    return (s[v >> 6] >> (v & 63)) & 1;
  }
  static void clear(Bits& s, int v) { s[v >> 6] &= ~(1ull << (v & 63)); }

  int popcount(const Bits& s) const {
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(s[w]);
    return c;
  }

  // Greedy partition of the candidate set into cliques of the conflict
  // graph; the number of parts bounds any independent set inside it.
  int clique_cover_bound(const Bits& cand) const {
    Bits uncovered = cand;
    int cliques = 0;
    for (int oi = 0; oi < v_; ++oi) {
      const int u = order_[oi];
      if (!test(uncovered, u)) continue;
      ++cliques;
      clear(uncovered, u);
      Bits common(words_);
      const std::uint64_t* ru = g_.row(u);
      for (int w = 0; w < words_; ++w) common[w] = uncovered[w] & ru[w];
      // Extend the clique greedily inside the remaining candidates.
      for (int oj = oi + 1; oj < v_; ++oj) {
        const int z = order_[oj];
        if (!test(common, z)) continue;
        clear(uncovered, z);
        const std::uint64_t* rz = g_.row(z);
        for (int w = 0; w < words_; ++w) common[w] &= rz[w];
      }
    }
    return cliques;
  }

  void branch(const Bits& cand, int size) {
    ++nodes_;
    if (expired()) return;
    int pick = -1;
    for (int oi = 0; oi < v_; ++oi) {
      if (test(cand, order_[oi])) {
        pick = order_[oi];
        break;
      }
    }
    if (pick < 0) {
      if (size > static_cast<int>(best_)) {
        best_ = static_cast<std::uint64_t>(size);
        best_set_ = current_;
      }
      return;
    }
    if (size + clique_cover_bound(cand) <= static_cast<int>(best_)) return;

    Bits included = cand;
    clear(included, pick);
    const std::uint64_t* rp = g_.row(pick);
    for (int w = 0; w < words_; ++w) included[w] &= ~rp[w];
    current_.push_back(pick);
    branch(included, size + 1);
    current_.pop_back();

    Bits excluded = cand;
    clear(excluded, pick);
    branch(excluded, size);
  }

  // Decision search: does cand contain an independent set of size need?
  bool exists(const Bits& cand, int need) {
    if (need <= 0) return true;
    ++nodes_;
    if (expired()) return false;
    int pick = -1;
    for (int oi = 0; oi < v_; ++oi) {
      if (test(cand, order_[oi])) {
        pick = order_[oi];
        break;
      }
    }
    if (pick < 0) return false;
    if (clique_cover_bound(cand) < need) return false;

    Bits included = cand;
    clear(included, pick);
    const std::uint64_t* rp = g_.row(pick);
    for (int w = 0; w < words_; ++w) included[w] &= ~rp[w];
    if (exists(included, need - 1)) return true;

    Bits excluded = cand;
    clear(excluded, pick);
    return exists(excluded, need);
  }

  // Rebuilds the optimum greedily so the reported witness is the
  // lexicographically smallest by sorted index sequence.
  std::vector<int> lex_smallest_witness(const Bits& all) {
    std::vector<int> chosen;
    Bits cand = all;
    int remaining = static_cast<int>(best_);
    int start = 0;
    while (remaining > 0) {
      bool advanced = false;
      for (int v = start; v < v_; ++v) {
        if (!test(cand, v)) continue;
        Bits next = cand;
        const std::uint64_t* rv = g_.row(v);
        for (int w = 0; w < words_; ++w) next[w] &= ~rv[w];
        // Later members must have larger indices.
        for (int w = 0; w <= (v >> 6); ++w) {
          next[w] &= (w == (v >> 6)) ? ~((2ull << (v & 63)) - 1) : 0ull;
        }
        if (exists(next, remaining - 1)) {
          chosen.push_back(v);
          cand = next;
          start = v + 1;
          --remaining;
          advanced = true;
          break;
        }
        if (timed_out_) return {};
      }
      if (!advanced) return {};  // only reachable on timeout
    }
    return chosen;
  }

  const ConflictGraph& g_;
  int v_;
  int words_;
  std::vector<int> order_;
  std::uint64_t nodes_ = 0;
  std::uint64_t best_ = 0;
  std::vector<int> best_set_;
  std::vector<int> current_;
  Clock::time_point deadline_{};
  bool has_deadline_ = false;
  bool timed_out_ = false;
};

}  // namespace

SolveCertificate max_independent_set(const ConflictGraph& g,
                                     const SolveOptions& opts) {
  const auto start = Clock::now();
  MisSolver solver(g, opts);
  SolveCertificate cert = solver.solve();
  cert.method = "bb";
  cert.millis = std::chrono::duration<double, std::milli>(Clock::now() - start)
                    .count();
  return cert;
}

SolveCertificate mut_exact(const HammingShape& shape, const SolveOptions& opts,
                           std::uint64_t cap) {
  const auto g = build_conflict_graph(shape, cap, opts.threads);
  return max_independent_set(g, opts);
}

std::uint64_t brute_force_mut(const HammingShape& shape) {
  if (shape.vertex_count() > 20) {
    throw std::invalid_argument("brute force is capped at 20 vertices");
  }
  const int n = static_cast<int>(shape.vertex_count());
  const auto verts = decode_all(shape, n);
  std::vector<std::uint32_t> conflict(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i && distance2_check(verts[i], verts[j], shape.rank()) == 2) {
        conflict[i] |= 1u << j;
      }
    }
  }
  std::uint64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    std::uint32_t m = mask;
    while (m) {
      const int v = std::countr_zero(m);
      if (conflict[v] & mask) {
        ok = false;
        break;
      }
      m &= m - 1;
    }
    if (ok) {
      const auto size = static_cast<std::uint64_t>(std::popcount(mask));
      if (size > best) best = size;
    }
  }
  return best;
}

std::string export_dimacs(const ConflictGraph& g, bool complement) {
  const int n = g.vertex_count();
  std::ostringstream out;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j) != complement) edges.emplace_back(i, j);
    }
  }
  out << "p edge " << n << ' ' << edges.size() << '\n';
  for (auto [i, j] : edges) {
    out << "e " << (i + 1) << ' ' << (j + 1) << '\n';
  }
  return out.str();
}

}  // namespace mutvis
