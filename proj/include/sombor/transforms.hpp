#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

/// The four index-decreasing moves. Each one detaches a path and re-attaches it
/// further out, lowering the degree of a branching vertex.
enum class Lemma { T1, T2, T3, T4 };

inline constexpr Lemma kAllLemmas[] = {Lemma::T1, Lemma::T2, Lemma::T3, Lemma::T4};

inline std::string_view lemma_name(Lemma l) {
  switch (l) {
    case Lemma::T1: return "T1";
    case Lemma::T2: return "T2";
    case Lemma::T3: return "T3";
    case Lemma::T4: return "T4";
  }
  return "?";
}

inline std::optional<Lemma> parse_lemma(std::string_view s) {
  for (Lemma l : kAllLemmas)
    if (lemma_name(l) == s) return l;
  return std::nullopt;
}

/// Where a transformation applies in a host graph.
///
/// T1 uses u1..u4 and the path P (stored in p2, v1 = p2.front()).
/// T2..T4 use x, y (T2, T4), the moved path p1 = u1..uk and the receiving path p2 = v1..vl.
/// Base degrees are degrees in the graph with the paths removed.
struct TransformSite {
  Lemma lemma = Lemma::T1;
  int u1 = -1, u2 = -1, u3 = -1, u4 = -1;
  int x = -1, y = -1;
  std::vector<int> p1;
  std::vector<int> p2;
  int t = 0;              // base degree of x (T2..T4); degree of u3 (T1)
  int y_base_degree = 0;  // T2, T4
  std::vector<int> neighbor_base_degrees;  // d_i of the base neighbours of x (T3, T4)

  int k() const { return static_cast<int>(p1.size()); }
  int l() const { return static_cast<int>(p2.size()); }

  /// Anchor ids in the order accepted by make_site().
  std::vector<int> anchors() const {
    switch (lemma) {
      case Lemma::T1: return {u1, u2, u3, u4, p2.front()};
      case Lemma::T2: return {x, y, p1.front(), p2.front()};
      case Lemma::T3: return {x, p1.front(), p2.front()};
      case Lemma::T4: return {x, y, p1.front(), p2.front()};
    }
    return {};
  }

  friend bool operator==(const TransformSite&, const TransformSite&) = default;
};

namespace detail {

// Vertices first, first+1, ... of a path hanging off `anchor` through `first`:
// every vertex has degree 2 except the last, which is a leaf.
inline std::optional<std::vector<int>> pendant_path(const MolGraph& g, int anchor, int first) {
  if (!g.adjacent(anchor, first)) return std::nullopt;
  std::vector<int> path;
  int prev = anchor, cur = first;
  while (true) {
    path.push_back(cur);
    const int d = g.degree(cur);
    if (d == 1) return path;
    if (d != 2) return std::nullopt;
    int next = -1;
    for (int w : g.neighbors(cur))
      if (w != prev) next = w;
    if (next == anchor || std::find(path.begin(), path.end(), next) != path.end()) return std::nullopt;
    prev = cur;
    cur = next;
  }
}

// Degree-2 run starting at `first` away from `x`; returns the run and the vertex it ends on.
inline std::optional<std::pair<std::vector<int>, int>> degree_two_run(const MolGraph& g, int x, int first) {
  if (!g.adjacent(x, first) || g.degree(first) != 2) return std::nullopt;
  std::vector<int> run;
  int prev = x, cur = first;
  while (g.degree(cur) == 2) {
    run.push_back(cur);
    int next = -1;
    for (int w : g.neighbors(cur))
      if (w != prev) next = w;
    if (next == x || std::find(run.begin(), run.end(), next) != run.end()) return std::nullopt;
    prev = cur;
    cur = next;
  }
  return std::make_pair(run, cur);
}

// True when removing `cut` separates a from b.
inline bool separated_without(const MolGraph& g, int a, int b, const std::vector<int>& cut) {
  VertexMask removed = 0;
  for (int v : cut) removed |= VertexMask{1} << v;
  VertexMask seen = VertexMask{1} << a, frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) next |= g.neighbor_mask(std::countr_zero(f));
    next &= ~removed;
    frontier = next & ~seen;
    seen |= next;
  }
  return ((seen >> b) & 1U) == 0;
}

inline bool valid_vertex(const MolGraph& g, int v) { return v >= 0 && v < g.vertex_count(); }

inline std::vector<int> base_neighbor_degrees(const MolGraph& g, int x, std::initializer_list<int> excluded) {
  std::vector<int> out;
  for (int z : g.neighbors(x)) {
    if (std::find(excluded.begin(), excluded.end(), z) != excluded.end()) continue;
    out.push_back(g.degree(z));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::optional<TransformSite> site_t1(const MolGraph& g, int u1, int u2, int u3, int u4, int v1) {
  for (int v : {u1, u2, u3, u4, v1})
    if (!valid_vertex(g, v)) return std::nullopt;
  if (g.degree(u1) != 2 || !g.adjacent(u1, u2) || !g.adjacent(u1, v1) || u2 == v1) return std::nullopt;
  if (g.degree(u2) != 2) return std::nullopt;
  const int d3 = g.degree(u3);
  if (d3 != 3 && d3 != 4) return std::nullopt;
  if (g.degree(u4) != 1 || !g.adjacent(u3, u4)) return std::nullopt;
  auto path = pendant_path(g, u1, v1);
  if (!path) return std::nullopt;
  TransformSite s;
  s.lemma = Lemma::T1;
  s.u1 = u1;
  s.u2 = u2;
  s.u3 = u3;
  s.u4 = u4;
  s.p2 = std::move(*path);
  s.t = d3;
  return s;
}

inline std::optional<TransformSite> site_t2(const MolGraph& g, int x, int y, int u1, int v1) {
  for (int v : {x, y, u1, v1})
    if (!valid_vertex(g, v)) return std::nullopt;
  if (u1 == v1 || x == y) return std::nullopt;
  const int t = g.degree(x) - 2;
  if (t != 1 && t != 2) return std::nullopt;
  auto tail = pendant_path(g, x, v1);
  if (!tail) return std::nullopt;
  auto bridge = degree_two_run(g, x, u1);
  if (!bridge || bridge->second != y) return std::nullopt;
  const int yb = g.degree(y) - 1;
  if (yb != 2 && yb != 3) return std::nullopt;
  if (!separated_without(g, x, y, bridge->first)) return std::nullopt;
  TransformSite s;
  s.lemma = Lemma::T2;
  s.x = x;
  s.y = y;
  s.p1 = std::move(bridge->first);
  s.p2 = std::move(*tail);
  s.t = t;
  s.y_base_degree = yb;
  return s;
}

inline std::optional<TransformSite> site_t3(const MolGraph& g, int x, int u1, int v1) {
  for (int v : {x, u1, v1})
    if (!valid_vertex(g, v)) return std::nullopt;
  if (u1 == v1) return std::nullopt;
  const int t = g.degree(x) - 2;
  if (t != 1 && t != 2) return std::nullopt;
  auto p1 = pendant_path(g, x, u1);
  auto p2 = pendant_path(g, x, v1);
  if (!p1 || !p2) return std::nullopt;
  TransformSite s;
  s.lemma = Lemma::T3;
  s.x = x;
  s.p1 = std::move(*p1);
  s.p2 = std::move(*p2);
  s.t = t;
  s.neighbor_base_degrees = base_neighbor_degrees(g, x, {u1, v1});
  return s;
}

inline std::optional<TransformSite> site_t4(const MolGraph& g, int x, int y, int u1, int v1) {
  for (int v : {x, y, u1, v1})
    if (!valid_vertex(g, v)) return std::nullopt;
  if (x == y) return std::nullopt;
  const int t = g.degree(x) - 1;
  const int yb = g.degree(y) - 1;
  if ((t != 2 && t != 3) || (yb != 2 && yb != 3)) return std::nullopt;
  auto p1 = pendant_path(g, x, u1);
  auto p2 = pendant_path(g, y, v1);
  if (!p1 || !p2) return std::nullopt;
  TransformSite s;
  s.lemma = Lemma::T4;
  s.x = x;
  s.y = y;
  s.p1 = std::move(*p1);
  s.p2 = std::move(*p2);
  s.t = t;
  s.y_base_degree = yb;
  s.neighbor_base_degrees = base_neighbor_degrees(g, x, {u1});
  return s;
}

}  // namespace detail

/// Builds and validates a site from anchor ids:
/// T1 {u1, u2, u3, u4, v1}; T2 {x, y, u1, v1}; T3 {x, u1, v1}; T4 {x, y, u1, v1}.
inline TransformSite make_site(const MolGraph& g, Lemma lemma, const std::vector<int>& anchors) {
  const std::size_t want = lemma == Lemma::T1 ? 5 : lemma == Lemma::T3 ? 3 : 4;
  if (anchors.size() != want) {
    throw Error(Errc::PreconditionViolated, std::string(lemma_name(lemma)) + " takes " + std::to_string(want) +
                                                " anchor vertices, got " + std::to_string(anchors.size()));
  }
  std::optional<TransformSite> s;
  switch (lemma) {
    case Lemma::T1: s = detail::site_t1(g, anchors[0], anchors[1], anchors[2], anchors[3], anchors[4]); break;
    case Lemma::T2: s = detail::site_t2(g, anchors[0], anchors[1], anchors[2], anchors[3]); break;
    case Lemma::T3: s = detail::site_t3(g, anchors[0], anchors[1], anchors[2]); break;
    case Lemma::T4: s = detail::site_t4(g, anchors[0], anchors[1], anchors[2], anchors[3]); break;
  }
  if (!s) throw Error(Errc::PreconditionViolated, std::string(lemma_name(lemma)) + " configuration not present");
  return *s;
}

/// Every site of the given lemma, in ascending anchor order.
inline std::vector<TransformSite> find_sites(const MolGraph& g, Lemma lemma) {
  std::vector<TransformSite> out;
  const int n = g.vertex_count();
  auto keep = [&](std::optional<TransformSite> s) {
    if (s) out.push_back(std::move(*s));
  };
  switch (lemma) {
    case Lemma::T1:
      for (int u1 = 0; u1 < n; ++u1) {
        if (g.degree(u1) != 2) continue;
        for (int u2 : g.neighbors(u1))
          for (int v1 : g.neighbors(u1)) {
            if (u2 == v1) continue;
            for (int u3 = 0; u3 < n; ++u3) {
              if (g.degree(u3) < 3) continue;
              for (int u4 : g.neighbors(u3)) keep(detail::site_t1(g, u1, u2, u3, u4, v1));
            }
          }
      }
      break;
    case Lemma::T2:
      for (int x = 0; x < n; ++x) {
        if (g.degree(x) < 3) continue;
        for (int u1 : g.neighbors(x)) {
          auto run = detail::degree_two_run(g, x, u1);
          if (!run) continue;
          for (int v1 : g.neighbors(x)) keep(detail::site_t2(g, x, run->second, u1, v1));
        }
      }
      break;
    case Lemma::T3:
      for (int x = 0; x < n; ++x) {
        if (g.degree(x) < 3) continue;
        for (int u1 : g.neighbors(x))
          for (int v1 : g.neighbors(x)) keep(detail::site_t3(g, x, u1, v1));
      }
      break;
    case Lemma::T4:
      for (int x = 0; x < n; ++x) {
        if (g.degree(x) < 3) continue;
        for (int y = 0; y < n; ++y) {
          if (y == x || g.degree(y) < 3) continue;
          for (int u1 : g.neighbors(x))
            for (int v1 : g.neighbors(y)) keep(detail::site_t4(g, x, y, u1, v1));
        }
      }
      break;
  }
  return out;
}

namespace detail {

inline void require_site(const MolGraph& g, const TransformSite& s, Lemma expected) {
  if (s.lemma != expected) {
    throw Error(Errc::PreconditionViolated,
                "site is for " + std::string(lemma_name(s.lemma)) + ", not " + std::string(lemma_name(expected)));
  }
  if (s.p2.empty() || (expected != Lemma::T1 && s.p1.empty())) {
    throw Error(Errc::PreconditionViolated, "site has empty paths");
  }
  const TransformSite fresh = make_site(g, expected, s.anchors());
  if (!(fresh == s)) throw Error(Errc::PreconditionViolated, "site does not describe this graph");
}

}  // namespace detail

/// Moves the path P from u1 onto the pendant vertex u4: G − u1v1 + u4v1.
inline MolGraph apply_T1(const MolGraph& g, const TransformSite& s) {
  detail::require_site(g, s, Lemma::T1);
  return g.with_edges_changed({{s.u1, s.p2.front()}}, {{s.u4, s.p2.front()}});
}

/// Short-circuits x to y and hangs the bridge path off the end of P2: G − {u1x, uk y} + {xy, u1 vl}.
inline MolGraph apply_T2(const MolGraph& g, const TransformSite& s) {
  detail::require_site(g, s, Lemma::T2);
  return g.with_edges_changed({{s.p1.front(), s.x}, {s.p1.back(), s.y}}, {{s.x, s.y}, {s.p1.front(), s.p2.back()}});
}

/// Concatenates P1 onto the far end of P2: G − u1x + u1 vl.
inline MolGraph apply_T3(const MolGraph& g, const TransformSite& s) {
  detail::require_site(g, s, Lemma::T3);
  return g.with_edges_changed({{s.p1.front(), s.x}}, {{s.p1.front(), s.p2.back()}});
}

/// Moves P1 from x to the free end of P2 at y: G − u1x + u1 vl.
inline MolGraph apply_T4(const MolGraph& g, const TransformSite& s) {
  detail::require_site(g, s, Lemma::T4);
  return g.with_edges_changed({{s.p1.front(), s.x}}, {{s.p1.front(), s.p2.back()}});
}

inline MolGraph apply_transform(const MolGraph& g, const TransformSite& s) {
  switch (s.lemma) {
    case Lemma::T1: return apply_T1(g, s);
    case Lemma::T2: return apply_T2(g, s);
    case Lemma::T3: return apply_T3(g, s);
    case Lemma::T4: return apply_T4(g, s);
  }
  throw Error(Errc::PreconditionViolated, "unknown lemma");
}

}  // namespace sombor
