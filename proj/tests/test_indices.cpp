#include <gtest/gtest.h>

#include <cmath>

#include "sombor/indices.hpp"

using namespace sombor;

namespace {
const double r2 = std::sqrt(2.0), r5 = std::sqrt(5.0), r10 = std::sqrt(10.0), r13 = std::sqrt(13.0);
constexpr double kTight = 1e-9;
}  // namespace

TEST(Sombor, Cycle) {
  for (int n = 3; n <= 12; ++n) EXPECT_NEAR(sombor_index(cycle_graph(n)).value, 2 * r2 * n, kTight);
}

TEST(Sombor, SingleEdge) {
  const MolGraph k2 = path_graph(2);
  EXPECT_NEAR(sombor_index(k2).value, r2, kTight);
  EXPECT_NEAR(reduced_sombor_index(k2).value, 0.0, kTight);
}

TEST(Sombor, PathConstant) {
  for (int n = 9; n <= 20; ++n) EXPECT_NEAR(sombor_index(path_graph(n)).value, 2 * r2 * n - 4.013145419, 1e-6);
}

TEST(ReducedSombor, OctaneEnds) {
  EXPECT_NEAR(reduced_sombor_index(path_graph(8)).value, 9.0710, 5e-4);
  // two adjacent degree-4 vertices with three pendants each
  const MolGraph tmb = MolGraph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}});
  EXPECT_NEAR(reduced_sombor_index(tmb).value, 22.2426, 5e-4);
}

TEST(EdgeVector, PhiAndOmega) {
  for (int n = 13; n <= 20; ++n) {
    EdgeTypeVector phi;
    phi.set(1, 2, 4);
    phi.set(2, 4, 4);
    phi.set(2, 2, n - 9);
    EXPECT_NEAR(index_from_edge_vector(phi, IndexKind::SO).value, 2 * r2 * n + 12 * r5 - 18 * r2, kTight);
    EdgeTypeVector omega;
    omega.set(1, 2, 5);
    omega.set(2, 3, 5);
    omega.set(3, 3, 2);
    omega.set(2, 2, n - 13);
    EXPECT_NEAR(index_from_edge_vector(omega, IndexKind::SO_red).value, r2 * n + 5 + 5 * r5 - 9 * r2, kTight);
    EXPECT_NEAR(index_from_edge_vector(omega, IndexKind::SO).value, 2 * r2 * n + 5 * r5 + 5 * r13 - 20 * r2, kTight);
  }
}

TEST(EdgeVector, ZeroVector) {
  for (IndexKind k : kAllIndexKinds) EXPECT_EQ(index_from_edge_vector(EdgeTypeVector{}, k).value, 0.0);
}

TEST(Comparison, SingleEdge) {
  const auto v = comparison_indices(path_graph(2));
  EXPECT_NEAR(v.at(IndexKind::M1).value, 2, kTight);
  EXPECT_NEAR(v.at(IndexKind::M2).value, 1, kTight);
  EXPECT_NEAR(v.at(IndexKind::F).value, 2, kTight);
  EXPECT_NEAR(v.at(IndexKind::Randic).value, 1, kTight);
  EXPECT_NEAR(v.at(IndexKind::SCI).value, 1 / r2, kTight);
  EXPECT_NEAR(v.at(IndexKind::SDD).value, 2, kTight);
}

TEST(Comparison, Cycle) {
  for (int n = 3; n <= 10; ++n) {
    const auto v = comparison_indices(cycle_graph(n));
    EXPECT_NEAR(v.at(IndexKind::M1).value, 4 * n, kTight);
    EXPECT_NEAR(v.at(IndexKind::M2).value, 4 * n, kTight);
    EXPECT_NEAR(v.at(IndexKind::Randic).value, n / 2.0, kTight);
    EXPECT_NEAR(v.at(IndexKind::SDD).value, 2 * n, kTight);
    EXPECT_NEAR(v.at(IndexKind::F).value, 8 * n, kTight);
  }
}

TEST(Comparison, P4) {
  const auto v = comparison_indices(path_graph(4));
  EXPECT_NEAR(v.at(IndexKind::M1).value, 10, kTight);
  EXPECT_NEAR(v.at(IndexKind::M2).value, 8, kTight);
}

TEST(Comparison, VertexSumsMatchEdgeSplit) {
  const MolGraph g = MolGraph::from_edges(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}, {4, 5}});
  for (IndexKind k : {IndexKind::M1, IndexKind::F})
    EXPECT_NEAR(comparison_indices(g).at(k).value, edge_additive_index(g, k), kTight);
}

TEST(Names, RoundTrip) {
  for (IndexKind k : kAllIndexKinds) EXPECT_EQ(parse_index_kind(index_name(k)), k);
  EXPECT_FALSE(parse_index_kind("mn").has_value());
}

TEST(Sombor, DominatesReduced) {
  const std::vector<MolGraph> gs{path_graph(2), path_graph(7), star_graph(4), cycle_graph(5), complete_graph(5)};
  for (const auto& g : gs) EXPECT_GT(sombor_index(g).value, reduced_sombor_index(g).value);
}
