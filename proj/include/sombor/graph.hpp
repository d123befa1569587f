#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sombor/error.hpp"

namespace sombor {

using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;
inline constexpr int kChemicalMaxDegree = 4;

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1, stored as adjacency bitmasks.
///
/// Instances are immutable; the with_* members return modified copies. The
/// Δ ≤ 4 "chemical" restriction is not part of the type, callers check
/// is_chemical() where they need it.
class MolGraph {
 public:
  MolGraph() = default;

  /// Builds from an edge list, rejecting self-loops, duplicates and out-of-range endpoints.
  static MolGraph from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0 || n > kMaxVertices) {
      throw Error(Errc::SizeLimitExceeded, "vertex count " + std::to_string(n) + " outside [0, " +
                                               std::to_string(kMaxVertices) + "]");
    }
    MolGraph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), 0);
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
        throw Error(Errc::VertexOutOfRange,
                    "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " with n=" + std::to_string(n));
      }
      if (e.u == e.v) throw Error(Errc::SelfLoop, "vertex " + std::to_string(e.u));
      if (g.adjacent(e.u, e.v)) {
        throw Error(Errc::DuplicateEdge, std::to_string(e.u) + "-" + std::to_string(e.v));
      }
      g.link(e.u, e.v);
    }
    return g;
  }

  /// Trusted construction from symmetric masks (used by the enumerator hot path).
  static MolGraph from_masks(int n, const VertexMask* rows) {
    MolGraph g;
    g.n_ = n;
    g.adj_.assign(rows, rows + n);
    int twice = 0;
    for (int v = 0; v < n; ++v) twice += std::popcount(g.adj_[v]);
    g.m_ = twice / 2;
    return g;
  }

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return m_; }

  int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }
  VertexMask neighbor_mask(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  const std::vector<VertexMask>& masks() const noexcept { return adj_; }

  bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (VertexMask m = neighbor_mask(v); m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  /// Edges as (u < v) pairs in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
      VertexMask higher = adj_[static_cast<std::size_t>(u)] & ~((VertexMask{2} << u) - 1);
      for (; higher != 0; higher &= higher - 1) out.push_back({u, std::countr_zero(higher)});
    }
    return out;
  }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  bool is_chemical() const { return max_degree() <= kChemicalMaxDegree; }

  bool is_connected() const {
    if (n_ <= 1) return true;
    VertexMask seen = 1, frontier = 1;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f != 0; f &= f - 1) next |= adj_[std::countr_zero(f)];
      frontier = next & ~seen;
      seen |= next;
    }
    return std::popcount(seen) == n_;
  }

  /// Copy with the given edges removed then the given edges added.
  MolGraph with_edges_changed(const std::vector<Edge>& removed, const std::vector<Edge>& added) const {
    MolGraph g = *this;
    for (const Edge& e : removed) {
      if (!g.adjacent(e.u, e.v)) {
        throw Error(Errc::PreconditionViolated,
                    "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not present");
      }
      g.unlink(e.u, e.v);
    }
    for (const Edge& e : added) {
      if (e.u == e.v) throw Error(Errc::SelfLoop, "vertex " + std::to_string(e.u));
      if (g.adjacent(e.u, e.v)) {
        throw Error(Errc::DuplicateEdge, std::to_string(e.u) + "-" + std::to_string(e.v));
      }
      g.link(e.u, e.v);
    }
    return g;
  }

  MolGraph with_edge(int u, int v) const { return with_edges_changed({}, {{u, v}}); }

  /// Copy with vertices renumbered: vertex v becomes perm[v].
  MolGraph relabeled(const std::vector<int>& perm) const {
    std::vector<Edge> es;
    for (const Edge& e : edges()) es.push_back({perm[e.u], perm[e.v]});
    return from_edges(n_, es);
  }

  friend bool operator==(const MolGraph& a, const MolGraph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  void link(int u, int v) {
    adj_[static_cast<std::size_t>(u)] |= VertexMask{1} << v;
    adj_[static_cast<std::size_t>(v)] |= VertexMask{1} << u;
    ++m_;
  }
  void unlink(int u, int v) {
    adj_[static_cast<std::size_t>(u)] &= ~(VertexMask{1} << v);
    adj_[static_cast<std::size_t>(v)] &= ~(VertexMask{1} << u);
    --m_;
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexMask> adj_;
};

struct ParseOptions {
  bool require_chemical = false;
  bool require_connected = false;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<long long> parse_ints(std::string_view line, int line_no) {
  std::istringstream in{std::string(line)};
  std::vector<long long> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) {
      throw Error(Errc::MalformedInput, "line " + std::to_string(line_no) + ": not an integer: '" + tok + "'");
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace detail

/// Parses the ".graph" edge-list format: a "n m" header, then m "u v" lines.
/// Lines starting with '#' and blank lines are ignored.
inline MolGraph parse_graph(std::string_view text, const ParseOptions& opts = {}) {
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto nums = detail::parse_ints(line, line_no);
    if (nums.size() != 2) {
      throw Error(Errc::MalformedInput, "line " + std::to_string(line_no) + ": expected two integers");
    }
    if (n < 0) {
      n = nums[0];
      m = nums[1];
      if (n < 1 || m < 0) throw Error(Errc::MalformedInput, "header must be 'n m' with n >= 1, m >= 0");
      if (n > kMaxVertices) {
        throw Error(Errc::SizeLimitExceeded, "n=" + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
      }
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw Error(Errc::MalformedInput, "line " + std::to_string(line_no) + ": more than m=" + std::to_string(m) +
                                            " edge lines");
    }
    auto u = nums[0], v = nums[1];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(Errc::VertexOutOfRange, "line " + std::to_string(line_no) + ": " + std::to_string(u) + " " +
                                              std::to_string(v) + " with n=" + std::to_string(n));
    }
    if (u > v) std::swap(u, v);
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  if (n < 0) throw Error(Errc::MalformedInput, "missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw Error(Errc::MalformedInput,
                "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  MolGraph g = MolGraph::from_edges(static_cast<int>(n), edges);
  if (g.vertex_count() >= 2) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) == 0) throw Error(Errc::Disconnected, "isolated vertex " + std::to_string(v));
    }
  }
  if (opts.require_chemical && !g.is_chemical()) {
    throw Error(Errc::MaxDegreeExceeded, "maximum degree " + std::to_string(g.max_degree()) + " > 4");
  }
  if (opts.require_connected && !g.is_connected()) throw Error(Errc::Disconnected, "graph is not connected");
  return g;
}

inline std::string write_graph(const MolGraph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

struct DegreeDistribution {
  int n1 = 0;
  int n2 = 0;
  int n3 = 0;
  int n4 = 0;

  int count(int degree) const {
    switch (degree) {
      case 1: return n1;
      case 2: return n2;
      case 3: return n3;
      case 4: return n4;
      default: return 0;
    }
  }
  int total() const { return n1 + n2 + n3 + n4; }
  int degree_sum() const { return n1 + 2 * n2 + 3 * n3 + 4 * n4; }

  friend bool operator==(const DegreeDistribution&, const DegreeDistribution&) = default;
};

/// Counts vertices of degree 1..4; throws MaxDegreeExceeded on any larger degree.
inline DegreeDistribution degree_distribution(const MolGraph& g) {
  DegreeDistribution dd;
  for (int v = 0; v < g.vertex_count(); ++v) {
    switch (g.degree(v)) {
      case 0: break;
      case 1: ++dd.n1; break;
      case 2: ++dd.n2; break;
      case 3: ++dd.n3; break;
      case 4: ++dd.n4; break;
      default: throw Error(Errc::MaxDegreeExceeded, "vertex " + std::to_string(v) + " has degree > 4");
    }
  }
  return dd;
}

/// The ten counts m(i,j), 1 <= i <= j <= 4, of edges joining a degree-i and a degree-j vertex.
class EdgeTypeVector {
 public:
  static constexpr int kSlots = 10;

  /// Slot index of the unordered degree pair {i, j}.
  static constexpr int slot(int i, int j) {
    if (i > j) std::swap(i, j);
    // rows start at 0, 4, 7, 9 for i = 1..4
    constexpr std::array<int, 5> row_start{0, 0, 4, 7, 9};
    return row_start[static_cast<std::size_t>(i)] + (j - i);
  }

  /// Degree pair stored in a slot, inverse of slot().
  static constexpr std::pair<int, int> pair_of(int s) {
    constexpr std::array<std::pair<int, int>, kSlots> pairs{
        {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4}, {4, 4}}};
    return pairs[static_cast<std::size_t>(s)];
  }

  int at(int i, int j) const { return counts_[static_cast<std::size_t>(slot(i, j))]; }
  void set(int i, int j, int count) { counts_[static_cast<std::size_t>(slot(i, j))] = count; }
  void add(int i, int j, int delta = 1) { counts_[static_cast<std::size_t>(slot(i, j))] += delta; }

  const std::array<int, kSlots>& counts() const noexcept { return counts_; }

  int total() const {
    int s = 0;
    for (int c : counts_) s += c;
    return s;
  }

  /// Σ over edges of the number of endpoints with degree k, i.e. k·n_k on any realizing graph.
  int endpoint_count(int k) const {
    int s = 0;
    for (int j = 1; j <= 4; ++j) s += (j == k ? 2 : 1) * at(k, j);
    return s;
  }

  friend bool operator==(const EdgeTypeVector&, const EdgeTypeVector&) = default;
  friend auto operator<=>(const EdgeTypeVector&, const EdgeTypeVector&) = default;

 private:
  std::array<int, kSlots> counts_{};
};

inline EdgeTypeVector edge_type_vector(const MolGraph& g) {
  if (!g.is_chemical()) {
    throw Error(Errc::MaxDegreeExceeded, "maximum degree " + std::to_string(g.max_degree()) + " > 4");
  }
  EdgeTypeVector v;
  for (const Edge& e : g.edges()) v.add(g.degree(e.u), g.degree(e.v));
  return v;
}

/// |E| - n + 1 for a connected graph.
inline int cyclomatic_number(const MolGraph& g) {
  if (!g.is_connected()) throw Error(Errc::Disconnected, "cyclomatic number needs a connected graph");
  return g.edge_count() - g.vertex_count() + 1;
}

// Small constructors used throughout tests and the CLI.

inline MolGraph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return MolGraph::from_edges(n, es);
}

inline MolGraph cycle_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  es.push_back({0, n - 1});
  return MolGraph::from_edges(n, es);
}

inline MolGraph star_graph(int leaves) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
  return MolGraph::from_edges(leaves + 1, es);
}

inline MolGraph complete_graph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back({u, v});
  return MolGraph::from_edges(n, es);
}

}  // namespace sombor
