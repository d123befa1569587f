#pragma once

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "sombor/graph.hpp"

namespace sombor {

enum class IndexKind { SO, SO_red, M1, M2, F, Randic, SCI, SDD };

inline constexpr std::array<IndexKind, 8> kAllIndexKinds{IndexKind::SO, IndexKind::SO_red, IndexKind::M1,
                                                        IndexKind::M2, IndexKind::F,      IndexKind::Randic,
                                                        IndexKind::SCI, IndexKind::SDD};

inline constexpr std::array<IndexKind, 6> kComparisonKinds{IndexKind::M1,     IndexKind::M2,  IndexKind::F,
                                                          IndexKind::Randic, IndexKind::SCI, IndexKind::SDD};

inline std::string_view index_name(IndexKind k) {
  switch (k) {
    case IndexKind::SO: return "so";
    case IndexKind::SO_red: return "so_red";
    case IndexKind::M1: return "m1";
    case IndexKind::M2: return "m2";
    case IndexKind::F: return "f";
    case IndexKind::Randic: return "randic";
    case IndexKind::SCI: return "sci";
    case IndexKind::SDD: return "sdd";
  }
  return "?";
}

inline std::optional<IndexKind> parse_index_kind(std::string_view s) {
  for (IndexKind k : kAllIndexKinds)
    if (index_name(k) == s) return k;
  return std::nullopt;
}

struct IndexValue {
  double value = 0.0;
  IndexKind kind = IndexKind::SO;
};

/// Contribution of one edge whose endpoints have degrees (a, b).
///
/// Vertex-additive indices are split over incident edges: M1 = Σ_v d² = Σ_uv (d_u + d_v),
/// F = Σ_v d³ = Σ_uv (d_u² + d_v²).
inline double edge_weight(IndexKind kind, int a, int b) {
  const double x = a, y = b;
  switch (kind) {
    case IndexKind::SO: return std::sqrt(x * x + y * y);
    case IndexKind::SO_red: return std::sqrt((x - 1) * (x - 1) + (y - 1) * (y - 1));
    case IndexKind::M1: return x + y;
    case IndexKind::M2: return x * y;
    case IndexKind::F: return x * x + y * y;
    case IndexKind::Randic: return 1.0 / std::sqrt(x * y);
    case IndexKind::SCI: return 1.0 / std::sqrt(x + y);
    case IndexKind::SDD: return x / y + y / x;
  }
  return 0.0;
}

inline double edge_additive_index(const MolGraph& g, IndexKind kind) {
  double s = 0.0;
  for (const Edge& e : g.edges()) s += edge_weight(kind, g.degree(e.u), g.degree(e.v));
  return s;
}

inline IndexValue sombor_index(const MolGraph& g) { return {edge_additive_index(g, IndexKind::SO), IndexKind::SO}; }

inline IndexValue reduced_sombor_index(const MolGraph& g) {
  return {edge_additive_index(g, IndexKind::SO_red), IndexKind::SO_red};
}

/// Evaluates any index from edge-type counts: Σ m(i,j)·w(i,j).
inline IndexValue index_from_edge_vector(const EdgeTypeVector& v, IndexKind kind) {
  double s = 0.0;
  for (int slot = 0; slot < EdgeTypeVector::kSlots; ++slot) {
    const int count = v.counts()[static_cast<std::size_t>(slot)];
    if (count == 0) continue;
    const auto [i, j] = EdgeTypeVector::pair_of(slot);
    s += count * edge_weight(kind, i, j);
  }
  return {s, kind};
}

/// Direct definitions (vertex sums where the index is defined over vertices).
inline std::map<IndexKind, IndexValue> comparison_indices(const MolGraph& g) {
  double m1 = 0, f = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const double d = g.degree(v);
    m1 += d * d;
    f += d * d * d;
  }
  std::map<IndexKind, IndexValue> out;
  out[IndexKind::M1] = {m1, IndexKind::M1};
  out[IndexKind::F] = {f, IndexKind::F};
  for (IndexKind k : {IndexKind::M2, IndexKind::Randic, IndexKind::SCI, IndexKind::SDD}) {
    out[k] = {edge_additive_index(g, k), k};
  }
  return out;
}

inline IndexValue compute_index(const MolGraph& g, IndexKind kind) {
  switch (kind) {
    case IndexKind::SO: return sombor_index(g);
    case IndexKind::SO_red: return reduced_sombor_index(g);
    default: return comparison_indices(g).at(kind);
  }
}

}  // namespace sombor
