#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "sombor/enumerate.hpp"

using namespace sombor;

namespace {

Errc enum_error(int n, int c) {
  try {
    enumerate(n, c);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for n=" << n << " c=" << c;
  return Errc::UnknownName;
}

}  // namespace

TEST(Enumerate, ChemicalTreeCounts) {
  // OEIS A000602 (alkane carbon skeletons)
  const std::vector<std::size_t> want{1, 1, 1, 2, 3, 5, 9, 18, 35, 75, 159, 355, 802, 1858};
  for (int n = 1; n <= 14; ++n) EXPECT_EQ(enumerate(n, 0).size(), want[static_cast<std::size_t>(n - 1)]) << n;
}

TEST(Enumerate, SmallClasses) {
  const auto trees4 = enumerate(4, 0);
  ASSERT_EQ(trees4.size(), 2U);
  std::vector<CanonicalCode> want{canonical_code(path_graph(4)), canonical_code(star_graph(3))};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(trees4.codes, want);

  const auto uni3 = enumerate(3, 1);
  ASSERT_EQ(uni3.size(), 1U);
  EXPECT_EQ(uni3.codes[0], canonical_code(cycle_graph(3)));

  const auto uni4 = enumerate(4, 1);
  ASSERT_EQ(uni4.size(), 2U);
  EXPECT_EQ(enumerate(4, 3).size(), 1U);  // K4
}

TEST(Enumerate, Errors) {
  EXPECT_EQ(enum_error(2, 1), Errc::InfeasibleClass);
  EXPECT_EQ(enum_error(3, 2), Errc::InfeasibleClass);
  EXPECT_EQ(enum_error(0, 0), Errc::InfeasibleClass);
  EXPECT_EQ(enum_error(5, -1), Errc::InfeasibleClass);
  EXPECT_EQ(enum_error(19, 0), Errc::SizeLimitExceeded);
  EXPECT_EQ(enum_error(14, 1), Errc::SizeLimitExceeded);
  EXPECT_EQ(enum_error(13, 2), Errc::SizeLimitExceeded);
  EXPECT_EQ(enum_error(12, 3), Errc::SizeLimitExceeded);
  EXPECT_EQ(enum_error(8, 4), Errc::SizeLimitExceeded);
  EXPECT_THROW(enumerate_naive_oracle(10, 0), Error);
}

TEST(Enumerate, MembersAreValid) {
  for (int c = 0; c <= 3; ++c) {
    const int n = 9;
    enumerate(n, c).for_each([&](std::size_t, const MolGraph& g) {
      ASSERT_EQ(g.vertex_count(), n);
      ASSERT_EQ(g.edge_count(), n - 1 + c);
      ASSERT_TRUE(g.is_connected());
      ASSERT_TRUE(g.is_chemical());
    });
  }
}

TEST(Enumerate, DeterministicSortedOrder) {
  const auto a = enumerate(10, 1);
  const auto b = enumerate(10, 1);
  EXPECT_EQ(a.codes, b.codes);
  EXPECT_TRUE(std::is_sorted(a.codes.begin(), a.codes.end()));
  EXPECT_TRUE(std::adjacent_find(a.codes.begin(), a.codes.end()) == a.codes.end());
}

TEST(NaiveOracle, SmallCases) {
  EXPECT_EQ(enumerate_naive_oracle(5, 0).codes, enumerate(5, 0).codes);
  EXPECT_EQ(enumerate_naive_oracle(5, 0).size(), 3U);
  EXPECT_EQ(enumerate_naive_oracle(4, 1).size(), 2U);
  EXPECT_EQ(enumerate_naive_oracle(1, 0).size(), 1U);
}

TEST(NaiveOracle, AgreesUpToSeven) {
  for (int n = 1; n <= 7; ++n)
    for (int c = 0; c <= 3; ++c) {
      GraphPopulation fast;
      try {
        fast = enumerate(n, c);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::InfeasibleClass);
        EXPECT_THROW(enumerate_naive_oracle(n, c), Error);
        continue;
      }
      EXPECT_EQ(enumerate_naive_oracle(n, c).codes, fast.codes) << "n=" << n << " c=" << c;
    }
}

TEST(Rank, TotalAndSorted) {
  const auto pop = enumerate(10, 2);
  for (IndexKind k : {IndexKind::SO, IndexKind::SO_red, IndexKind::Randic}) {
    const auto r = rank_by_index(pop, k);
    EXPECT_EQ(r.member_count(), pop.size());
    for (std::size_t i = 1; i < r.groups.size(); ++i) EXPECT_GT(r.groups[i].value - r.groups[i - 1].value, r.tolerance);
    for (const auto& g : r.groups) EXPECT_TRUE(std::is_sorted(g.members.begin(), g.members.end()));
  }
}

TEST(Rank, FirstGroups) {
  const auto trees = enumerate(13, 0);
  const auto r = rank_by_index(trees, IndexKind::SO);
  ASSERT_EQ(r.groups.front().members.size(), 1U);
  EXPECT_EQ(trees.codes[r.groups.front().members[0]], canonical_code(path_graph(13)));

  const auto uni = enumerate(8, 1);
  const auto u = rank_by_index(uni, IndexKind::SO);
  ASSERT_EQ(u.groups.front().members.size(), 1U);
  EXPECT_EQ(uni.codes[u.groups.front().members[0]], canonical_code(cycle_graph(8)));
}

TEST(Rank, OctaneValues) {
  const auto r = rank_by_index(enumerate(8, 0), IndexKind::SO_red);
  EXPECT_EQ(r.groups.size(), 16U);
  std::map<long, std::size_t> sizes;
  for (const auto& g : r.groups) sizes[static_cast<long>(g.value * 1e4)] = g.members.size();
  EXPECT_EQ(sizes.at(113005), 2U);
  EXPECT_EQ(sizes.at(133005), 2U);
  EXPECT_NEAR(r.groups.front().value, 9.0710, 5e-4);
  EXPECT_NEAR(r.groups.back().value, 22.2426, 5e-4);
}

TEST(Rank, SameEdgeVectorSameGroup) {
  const auto pop = enumerate(10, 1);
  const auto graphs = pop.graphs();
  for (IndexKind k : kAllIndexKinds) {
    const auto r = rank_by_index(pop, k);
    std::vector<std::size_t> group_of(pop.size());
    for (std::size_t gi = 0; gi < r.groups.size(); ++gi)
      for (auto m : r.groups[gi].members) group_of[m] = gi;
    std::map<std::array<int, 10>, std::size_t> seen;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const auto key = edge_type_vector(graphs[i]).counts();
      auto [it, fresh] = seen.emplace(key, group_of[i]);
      if (!fresh) EXPECT_EQ(it->second, group_of[i]);
    }
  }
}

TEST(Rank, ToleranceControlsGrouping) {
  const std::vector<double> v{1.0, 1.0 + 1e-12, 1.5, 1.5 + 1e-6, 3.0};
  EXPECT_EQ(rank_values(v, IndexKind::SO).groups.size(), 4U);
  EXPECT_EQ(rank_values(v, IndexKind::SO, 1e-5).groups.size(), 3U);
  const auto r = rank_values({2.0, 1.0, 2.0}, IndexKind::SO);
  ASSERT_EQ(r.groups.size(), 2U);
  EXPECT_EQ(r.groups[0].members, (std::vector<std::size_t>{1}));
  EXPECT_EQ(r.groups[1].members, (std::vector<std::size_t>{0, 2}));
}
