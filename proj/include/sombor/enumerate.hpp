#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "sombor/canonical.hpp"
#include "sombor/graph.hpp"
#include "sombor/indices.hpp"

namespace sombor {

/// Largest n accepted by enumerate() for cyclomatic number c = 0..3.
inline constexpr std::array<int, 4> kEnumerationLimit{18, 13, 12, 11};
inline constexpr int kNaiveOracleLimit = 9;

/// All pairwise non-isomorphic connected chemical graphs with n vertices and cyclomatic number c.
///
/// Members are held as canonical codes in ascending order; graph(i) rebuilds the
/// canonical representative on demand so large populations stay compact.
struct GraphPopulation {
  int n = 0;
  int c = 0;
  std::vector<CanonicalCode> codes;

  std::size_t size() const noexcept { return codes.size(); }
  MolGraph graph(std::size_t i) const { return graph_from_code(codes[i]); }

  std::vector<MolGraph> graphs() const {
    std::vector<MolGraph> out;
    out.reserve(codes.size());
    for (const auto& c : codes) out.push_back(graph_from_code(c));
    return out;
  }

  /// Streams members in canonical-code order without materializing them all.
  void for_each(const std::function<void(std::size_t, const MolGraph&)>& fn) const {
    for (std::size_t i = 0; i < codes.size(); ++i) fn(i, graph_from_code(codes[i]));
  }
};

namespace detail {

using CodeSet = std::unordered_set<CanonicalCode, CanonicalCodeHash>;

inline std::vector<CanonicalCode> sorted_codes(CodeSet&& set) {
  std::vector<CanonicalCode> out;
  out.reserve(set.size());
  for (auto it = set.begin(); it != set.end();) out.push_back(std::move(set.extract(it++).value()));
  std::sort(out.begin(), out.end());
  return out;
}

// Trees on n vertices with Δ ≤ 4, grown one leaf at a time from K1; duplicates
// across parents are merged through the canonical code.
inline std::vector<CanonicalCode> chemical_trees(int n) {
  std::array<VertexMask, kMaxVertices> rows{};
  std::vector<CanonicalCode> level{canonical_code(1, rows.data())};
  for (int size = 2; size <= n; ++size) {
    CodeSet next;
    for (const auto& code : level) {
      const MolGraph parent = graph_from_code(code);
      const int p = size - 1;
      for (int v = 0; v < p; ++v) {
        if (parent.degree(v) >= kChemicalMaxDegree) continue;
        std::copy(parent.masks().begin(), parent.masks().end(), rows.begin());
        rows[static_cast<std::size_t>(v)] |= VertexMask{1} << p;
        rows[static_cast<std::size_t>(p)] = VertexMask{1} << v;
        next.insert(canonical_code(size, rows.data()));
      }
    }
    level = sorted_codes(std::move(next));
  }
  return level;
}

// Adds one chord between two non-adjacent vertices of degree ≤ 3 to every member.
inline std::vector<CanonicalCode> add_one_chord(const std::vector<CanonicalCode>& base, int n) {
  std::array<VertexMask, kMaxVertices> rows{};
  CodeSet next;
  for (const auto& code : base) {
    const MolGraph g = graph_from_code(code);
    for (int u = 0; u < n; ++u) {
      if (g.degree(u) >= kChemicalMaxDegree) continue;
      for (int v = u + 1; v < n; ++v) {
        if (g.degree(v) >= kChemicalMaxDegree || g.adjacent(u, v)) continue;
        std::copy(g.masks().begin(), g.masks().end(), rows.begin());
        rows[static_cast<std::size_t>(u)] |= VertexMask{1} << v;
        rows[static_cast<std::size_t>(v)] |= VertexMask{1} << u;
        next.insert(canonical_code(n, rows.data()));
      }
    }
  }
  return sorted_codes(std::move(next));
}

inline void check_class(int n, int c) {
  if (c < 0) throw Error(Errc::InfeasibleClass, "cyclomatic number must be non-negative");
  if (c > 3) throw Error(Errc::SizeLimitExceeded, "cyclomatic number above 3 is not supported");
  if (n < 1) throw Error(Errc::InfeasibleClass, "n must be at least 1");
  const long long edges = n - 1 + c;
  if (edges > static_cast<long long>(n) * (n - 1) / 2 || edges > 2LL * n) {
    throw Error(Errc::InfeasibleClass, "no simple chemical graph has n=" + std::to_string(n) +
                                           " and cyclomatic number " + std::to_string(c));
  }
}

}  // namespace detail

inline GraphPopulation enumerate(int n, int c) {
  detail::check_class(n, c);
  if (n > kEnumerationLimit[static_cast<std::size_t>(c)]) {
    throw Error(Errc::SizeLimitExceeded, "enumeration with c=" + std::to_string(c) + " is limited to n <= " +
                                             std::to_string(kEnumerationLimit[static_cast<std::size_t>(c)]));
  }
  GraphPopulation pop{n, c, detail::chemical_trees(n)};
  for (int level = 1; level <= c; ++level) pop.codes = detail::add_one_chord(pop.codes, n);
  if (pop.codes.empty()) throw Error(Errc::InfeasibleClass, "empty class");
  return pop;
}

/// Brute force over labeled edge subsets; only the degree bound and isolated
/// vertices prune the search. Independent of the leaf/chord generator.
inline GraphPopulation enumerate_naive_oracle(int n, int c) {
  detail::check_class(n, c);
  if (n > kNaiveOracleLimit) {
    throw Error(Errc::SizeLimitExceeded, "naive oracle is limited to n <= " + std::to_string(kNaiveOracleLimit));
  }
  const int m = n - 1 + c;
  std::vector<Edge> pairs;
  std::vector<int> last_pair_of(static_cast<std::size_t>(n), -1);  // index of the last pair touching u as its smaller end
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i) last_pair_of[static_cast<std::size_t>(pairs[static_cast<std::size_t>(i)].u)] = i;

  std::array<VertexMask, kMaxVertices> rows{};
  std::array<int, kMaxVertices> deg{};
  detail::CodeSet found;
  const int total = static_cast<int>(pairs.size());

  std::function<void(int, int)> choose = [&](int next, int chosen) {
    if (chosen == m) {
      const MolGraph g = MolGraph::from_masks(n, rows.data());
      if (g.is_connected()) found.insert(canonical_code(n, rows.data()));
      return;
    }
    if (total - next < m - chosen) return;
    const Edge e = pairs[static_cast<std::size_t>(next)];
    const bool closes_u = last_pair_of[static_cast<std::size_t>(e.u)] == next;
    // take the pair
    if (deg[static_cast<std::size_t>(e.u)] < kChemicalMaxDegree && deg[static_cast<std::size_t>(e.v)] < kChemicalMaxDegree) {
      rows[static_cast<std::size_t>(e.u)] |= VertexMask{1} << e.v;
      rows[static_cast<std::size_t>(e.v)] |= VertexMask{1} << e.u;
      ++deg[static_cast<std::size_t>(e.u)];
      ++deg[static_cast<std::size_t>(e.v)];
      choose(next + 1, chosen + 1);
      --deg[static_cast<std::size_t>(e.u)];
      --deg[static_cast<std::size_t>(e.v)];
      rows[static_cast<std::size_t>(e.u)] &= ~(VertexMask{1} << e.v);
      rows[static_cast<std::size_t>(e.v)] &= ~(VertexMask{1} << e.u);
    }
    // skip the pair; once every pair of u is decided an isolated u can never connect
    if (!(closes_u && deg[static_cast<std::size_t>(e.u)] == 0 && n > 1)) choose(next + 1, chosen);
  };
  if (n == 1) {
    found.insert(canonical_code(1, rows.data()));
  } else {
    choose(0, 0);
  }
  GraphPopulation pop{n, c, detail::sorted_codes(std::move(found))};
  if (pop.codes.empty()) throw Error(Errc::InfeasibleClass, "empty class");
  return pop;
}

struct RankGroup {
  double value = 0.0;
  std::vector<std::size_t> members;  // indices into the ranked population
};

/// Ascending value groups of a population under one index.
struct RankedOrdering {
  IndexKind kind = IndexKind::SO;
  double tolerance = 1e-9;
  std::vector<RankGroup> groups;

  std::size_t member_count() const {
    std::size_t s = 0;
    for (const auto& g : groups) s += g.members.size();
    return s;
  }
};

inline constexpr double kRankTolerance = 1e-9;

inline RankedOrdering rank_values(const std::vector<double>& values, IndexKind kind,
                                  double tolerance = kRankTolerance) {
  std::vector<std::size_t> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  RankedOrdering out{kind, tolerance, {}};
  for (std::size_t idx : order) {
    if (out.groups.empty() || values[idx] - out.groups.back().value > tolerance) {
      out.groups.push_back({values[idx], {}});
    }
    out.groups.back().members.push_back(idx);
  }
  // within a group, canonical-code (population) order
  for (auto& g : out.groups) std::sort(g.members.begin(), g.members.end());
  return out;
}

inline RankedOrdering rank_by_index(const GraphPopulation& pop, IndexKind kind, double tolerance = kRankTolerance) {
  std::vector<double> values(pop.size());
  pop.for_each([&](std::size_t i, const MolGraph& g) { values[i] = edge_additive_index(g, kind); });
  return rank_values(values, kind, tolerance);
}

}  // namespace sombor
