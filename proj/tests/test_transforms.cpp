#include <gtest/gtest.h>

#include <cmath>

#include "sombor/enumerate.hpp"
#include "sombor/transforms.hpp"

using namespace sombor;

namespace {

const double r2 = std::sqrt(2.0), r5 = std::sqrt(5.0), r10 = std::sqrt(10.0), r13 = std::sqrt(13.0),
             r17 = std::sqrt(17.0), r20 = std::sqrt(20.0);

double so_delta(const MolGraph& before, const MolGraph& after) {
  return sombor_index(after).value - sombor_index(before).value;
}

double red_delta(const MolGraph& before, const MolGraph& after) {
  return reduced_sombor_index(after).value - reduced_sombor_index(before).value;
}

Errc site_error(const MolGraph& g, Lemma l, const std::vector<int>& anchors) {
  try {
    make_site(g, l, anchors);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "site accepted";
  return Errc::UnknownName;
}

// v1 - u1 - u2 - u3, with leaves u4 and w on u3 (plus w2 when deg(u3) = 4)
MolGraph t1_host(int deg_u3) {
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}};
  if (deg_u3 == 4) e.push_back({3, 6});
  return MolGraph::from_edges(deg_u3 == 4 ? 7 : 6, e);
}

}  // namespace

TEST(T1, DegreeThree) {
  const MolGraph g = t1_host(3);
  const auto s = make_site(g, Lemma::T1, {1, 2, 3, 4, 0});
  const MolGraph h = apply_T1(g, s);
  EXPECT_TRUE(h.adjacent(4, 0));
  EXPECT_FALSE(h.adjacent(1, 0));
  EXPECT_NEAR(so_delta(g, h), r5 + r13 - 2 * r2 - r10, 1e-9);
  EXPECT_LT(red_delta(g, h), -1e-9);
}

TEST(T1, DegreeFour) {
  const MolGraph g = t1_host(4);
  const MolGraph h = apply_T1(g, make_site(g, Lemma::T1, {1, 2, 3, 4, 0}));
  EXPECT_NEAR(so_delta(g, h), r5 + r20 - 2 * r2 - r17, 1e-9);
  EXPECT_NEAR(so_delta(g, h), -0.243329, 1e-6);
  EXPECT_LT(red_delta(g, h), -1e-9);
}

TEST(T1, Preconditions) {
  const MolGraph g = t1_host(3);
  EXPECT_EQ(site_error(g, Lemma::T1, {1, 2, 3, 5, 4}), Errc::PreconditionViolated);  // v1 not on u1
  EXPECT_EQ(site_error(g, Lemma::T1, {0, 1, 2, 3, 4}), Errc::PreconditionViolated);
  EXPECT_EQ(site_error(g, Lemma::T1, {1, 2, 3}), Errc::PreconditionViolated);
  EXPECT_EQ(site_error(g, Lemma::T1, {1, 2, 3, 4, 9}), Errc::PreconditionViolated);
}

TEST(T2, CaseOneUnitPath) {
  // a - x - v1, x - u1 - y, y - b, y - c
  const MolGraph g = MolGraph::from_edges(7, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}, {4, 6}});
  const auto s = make_site(g, Lemma::T2, {1, 4, 3, 2});
  EXPECT_EQ(s.t, 1);
  EXPECT_EQ(s.y_base_degree, 2);
  const MolGraph h = apply_T2(g, s);
  EXPECT_TRUE(h.adjacent(1, 4));
  EXPECT_TRUE(h.adjacent(3, 2));
  EXPECT_NEAR(so_delta(g, h), r5 + 3 * r2 - r10 - r13, 1e-9);
  EXPECT_LT(red_delta(g, h), -1e-9);
  EXPECT_TRUE(h.is_connected());
}

TEST(T3, ClawBecomesPath) {
  const MolGraph g = star_graph(3);
  const auto sites = find_sites(g, Lemma::T3);
  ASSERT_FALSE(sites.empty());
  const MolGraph h = apply_T3(g, sites.front());
  EXPECT_EQ(canonical_code(h), canonical_code(path_graph(4)));
  EXPECT_NEAR(sombor_index(g).value, 3 * r10, 1e-9);
  EXPECT_NEAR(sombor_index(h).value, 2 * r5 + 2 * r2, 1e-9);
  EXPECT_NEAR(sombor_index(h).value, 7.3006, 1e-4);
}

TEST(T4, TriangleWithTwoPendantPaths) {
  // triangle 0 1 2, path 0-3-4 and path 1-5-6
  const MolGraph g = MolGraph::from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {1, 5}, {5, 6}});
  const auto s = make_site(g, Lemma::T4, {0, 1, 3, 5});
  const MolGraph h = apply_T4(g, s);
  const MolGraph want = MolGraph::from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {1, 5}, {5, 6}, {3, 6}, {3, 4}});
  EXPECT_EQ(h, want);
  EXPECT_LT(so_delta(g, h), -1e-9);
  EXPECT_LT(red_delta(g, h), -1e-9);
  // both sides evaluated from the definition
  // before: one (3,3), four (3,2), two (2,1); after: three (3,2), three (2,2), one (2,1)
  EXPECT_NEAR(sombor_index(g).value, 3 * r2 + 4 * r13 + 2 * r5, 1e-9);
  EXPECT_NEAR(sombor_index(h).value, 3 * r13 + 6 * r2 + r5, 1e-9);
}

TEST(FindSites, NoneOnPathsAndCycles) {
  for (int n = 2; n <= 12; ++n)
    for (Lemma l : kAllLemmas) EXPECT_TRUE(find_sites(path_graph(n), l).empty()) << n;
  for (int n = 3; n <= 12; ++n)
    for (Lemma l : kAllLemmas) EXPECT_TRUE(find_sites(cycle_graph(n), l).empty()) << n;
}

TEST(FindSites, SoundAndConservative) {
  for (int c = 0; c <= 3; ++c)
    for (int n = 4; n <= 9; ++n) {
      GraphPopulation pop;
      try {
        pop = enumerate(n, c);
      } catch (const Error&) {
        continue;
      }
      pop.for_each([&](std::size_t, const MolGraph& g) {
        for (Lemma l : kAllLemmas)
          for (const auto& s : find_sites(g, l)) {
            ASSERT_EQ(make_site(g, l, s.anchors()), s);
            const MolGraph h = apply_transform(g, s);
            ASSERT_EQ(h.vertex_count(), g.vertex_count());
            ASSERT_EQ(h.edge_count(), g.edge_count());
            ASSERT_TRUE(h.is_connected());
            ASSERT_TRUE(h.is_chemical());
            ASSERT_LT(so_delta(g, h), -1e-9);
            ASSERT_LT(red_delta(g, h), -1e-9);
          }
      });
    }
}

TEST(FindSites, CaseBounds) {
  // worst difference per lemma case, against the proof bounds
  double t2_case1 = -1e9, t2_case2 = -1e9, t3_t1 = -1e9, t3_t2 = -1e9, t4_t2 = -1e9, t4_t3 = -1e9;
  for (int c = 0; c <= 3; ++c)
    for (int n = 5; n <= 10; ++n) {
      GraphPopulation pop;
      try {
        pop = enumerate(n, c);
      } catch (const Error&) {
        continue;
      }
      pop.for_each([&](std::size_t, const MolGraph& g) {
        for (Lemma l : {Lemma::T2, Lemma::T3, Lemma::T4})
          for (const auto& s : find_sites(g, l)) {
            const double d = so_delta(g, apply_transform(g, s));
            if (l == Lemma::T2 && s.t == 1 && s.y_base_degree == 2 && s.l() == 1) t2_case1 = std::max(t2_case1, d);
            if (l == Lemma::T2 && s.t == 2 && s.y_base_degree == 3 && s.l() >= 2) t2_case2 = std::max(t2_case2, d);
            if (l == Lemma::T3 && s.t == 1 && s.k() == 1 && s.l() >= 2) t3_t1 = std::max(t3_t1, d);
            if (l == Lemma::T3 && s.t == 2 && s.k() >= 2 && s.l() >= 2) t3_t2 = std::max(t3_t2, d);
            if (l == Lemma::T4 && s.t == 2 && s.k() == 1 && s.l() >= 2) t4_t2 = std::max(t4_t2, d);
            if (l == Lemma::T4 && s.t == 3 && s.k() >= 2 && s.l() >= 2) t4_t3 = std::max(t4_t3, d);
          }
      });
    }
  EXPECT_NEAR(t2_case1, r5 + 3 * r2 - r10 - r13, 1e-9);
  EXPECT_NEAR(t2_case2, 2 * r2 + 4 * r2 - r20 - r20, 1e-9);
  EXPECT_LT(t3_t1, 2 * r2 - r10);
  EXPECT_LT(t3_t2, r13 + 4 * r2 - 5 * r5);
  EXPECT_LT(t4_t2, 2 * r2 - r10);
  EXPECT_LT(t4_t3, 4 * r2 - r5 - r20);
}

TEST(Lemma, Names) {
  for (Lemma l : kAllLemmas) EXPECT_EQ(parse_lemma(lemma_name(l)), l);
  EXPECT_FALSE(parse_lemma("T5").has_value());
}
