#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "degen/rootsys.hpp"
#include "oracles.hpp"

using namespace degen;

namespace {

std::vector<RootSystemId> small_systems(int max_rank = 5) {
  std::vector<RootSystemId> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = min_rank(f); n <= max_rank + (f == Family::D ? 1 : 0); ++n)
      out.push_back({f, n});
  return out;
}

} // namespace

TEST(RootSystem, MatchesTextbookRootSets) {
  for (auto id : small_systems()) {
    RootSystem rs(id);
    std::set<Coords> mine;
    for (const auto& r : rs.positive())
      mine.insert(r.coords);
    EXPECT_EQ(mine, oracle::positive_roots(id.family, id.rank)) << id.str();
    EXPECT_EQ(static_cast<std::size_t>(rs.size()), mine.size());
  }
}

TEST(RootSystem, PositiveRootCounts) {
  for (auto id : small_systems()) {
    RootSystem rs(id);
    int n = id.rank;
    int expected = 0;
    switch (id.family) {
    case Family::A: expected = n * (n + 1) / 2; break;
    case Family::B:
    case Family::C: expected = n * n; break;
    case Family::D: expected = n * (n - 1); break;
    }
    EXPECT_EQ(rs.size(), expected) << id.str();
  }
  EXPECT_EQ(build_root_system(Family::A, 2).size(), 3);
  EXPECT_EQ(build_root_system(Family::B, 3).size(), 9);
}

TEST(RootSystem, RankBelowMinimumIsRejected) {
  EXPECT_THROW(build_root_system(Family::D, 3), InvalidRank);
  EXPECT_THROW(build_root_system(Family::B, 1), InvalidRank);
  EXPECT_THROW(build_root_system(Family::A, 0), InvalidRank);
  EXPECT_NO_THROW(build_root_system(Family::C, 2));
}

TEST(RootSystem, SimpleRootsComeFirst) {
  for (auto id : small_systems()) {
    RootSystem rs(id);
    for (int i = 1; i <= id.rank; ++i) {
      EXPECT_EQ(rs.height(rs.simple_index(i)), 1);
      EXPECT_EQ(rs.label(i - 1), Label::straight(i, i)) << id.str();
    }
  }
  RootSystem d4({Family::D, 4});
  EXPECT_EQ(d4.simple(4), (Coords{0, 0, 1, 1}));
  RootSystem c3({Family::C, 3});
  EXPECT_EQ(c3.simple(3), (Coords{0, 0, 2}));
}

TEST(RootSystem, CoefficientsAreNonnegativeIntegers) {
  for (auto id : small_systems()) {
    RootSystem rs(id);
    for (int k = 0; k < rs.size(); ++k) {
      auto coef = rs.simple_coefficients(rs.coords(k));
      for (int c : coef)
        EXPECT_GE(c, 0);
      EXPECT_EQ(rs.from_simple_coefficients(coef), rs.coords(k));
      EXPECT_EQ(std::accumulate(coef.begin(), coef.end(), 0), rs.height(k));
    }
  }
}

TEST(RootSystem, LabelRoundTrip) {
  for (auto id : small_systems()) {
    RootSystem rs(id);
    for (int k = 0; k < rs.size(); ++k) {
      EXPECT_EQ(rs.index_of(rs.label(k)), k);
      EXPECT_EQ(parse_label(rs.label(k).str()), rs.label(k));
    }
  }
}

TEST(RootSystem, LabelConventions) {
  RootSystem b3({Family::B, 3});
  EXPECT_EQ(*b3.label_coords(Label::barred(1, 2)), (Coords{1, 1, 0}));
  EXPECT_EQ(*b3.label_coords(Label::straight(2, 3)), (Coords{0, 1, 0}));
  EXPECT_FALSE(b3.label_coords(Label::barred(2, 2)));
  RootSystem c3({Family::C, 3});
  EXPECT_EQ(c3.index_of(Label::barred(1, 3)), c3.index_of(Label::straight(1, 3)));
  EXPECT_EQ(*c3.label_coords(Label::barred(2, 2)), (Coords{0, 2, 0}));
  RootSystem d5({Family::D, 5});
  EXPECT_EQ(*d5.label_coords(Label::straight(5, 5)), (Coords{0, 0, 0, 1, 1}));
  EXPECT_EQ(*d5.label_coords(Label::straight(3, 5)), (Coords{0, 0, 1, 0, 1}));
  EXPECT_FALSE(d5.label_coords(Label::straight(4, 5)));
  EXPECT_FALSE(d5.label_coords(Label::barred(1, 5)));
  EXPECT_THROW(parse_label("x"), DomainError);
}

TEST(RootSystem, FundamentalWeightsAreDualToSimpleCoroots) {
  for (auto id : small_systems()) {
    RootSystem rs(id);
    auto m = rs.fundamental_pairing_matrix();
    for (int k = 0; k < id.rank; ++k)
      for (int i = 0; i < id.rank; ++i)
        EXPECT_EQ(m[k][i], k == i ? 1 : 0) << id.str();
  }
}

TEST(RootSystem, CartanMatrices) {
  auto b2 = build_root_system(Family::B, 2).cartan_matrix();
  EXPECT_EQ(b2, (std::vector<std::vector<int>>{{2, -1}, {-2, 2}}));
  auto c2 = build_root_system(Family::C, 2).cartan_matrix();
  EXPECT_EQ(c2, (std::vector<std::vector<int>>{{2, -2}, {-1, 2}}));
  auto d4 = build_root_system(Family::D, 4).cartan_matrix();
  EXPECT_EQ(d4[1][3], -1);
  EXPECT_EQ(d4[2][3], 0);
}

TEST(TryAdd, Examples) {
  RootSystem a2({Family::A, 2});
  auto s = try_add(a2, a2.simple(1), a2.simple(2));
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, (Coords{1, 0, -1}));
  EXPECT_FALSE(try_add(a2, *s, a2.simple(1)));
  RootSystem b2({Family::B, 2});
  auto t = try_add(b2, b2.simple(1), b2.simple(2));
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, (Coords{1, 0}));
  EXPECT_THROW(try_add(b2, Coords{1, 1}, Coords{0, 5}), DomainError);
}

TEST(TryAdd, CommutativeAndMatchesCoordinates) {
  for (auto id : small_systems(4)) {
    RootSystem rs(id);
    auto roots = oracle::positive_roots(id.family, id.rank);
    for (int a = 0; a < rs.size(); ++a)
      for (int b = 0; b < rs.size(); ++b) {
        auto x = try_add(rs, a, b), y = try_add(rs, b, a);
        EXPECT_EQ(x, y);
        bool expect = roots.count(rs.coords(a) + rs.coords(b)) > 0;
        EXPECT_EQ(x.has_value(), expect);
      }
  }
}

TEST(AlphaChain, Examples) {
  RootSystem a2({Family::A, 2});
  auto c = alpha_chain(a2, a2.simple(1), a2.simple(2));
  EXPECT_EQ(c.q, 1);
  EXPECT_EQ(c.r, 0);
  RootSystem b2({Family::B, 2});
  c = alpha_chain(b2, b2.simple(2), b2.simple(1));
  EXPECT_EQ(c.q, 2);
  EXPECT_EQ(c.r, 0);
  c = alpha_chain(b2, b2.simple(2), Coords{1, 0});
  EXPECT_EQ(c.q, 1);
  EXPECT_EQ(c.r, 1);
  EXPECT_THROW(alpha_chain(b2, b2.simple(2), -b2.simple(2)), DomainError);
}

TEST(AlphaChain, ChainRelationHoldsEverywhere) {
  for (auto id : small_systems()) {
    RootSystem rs(id);
    auto roots = oracle::all_roots(id.family, id.rank);
    for (const auto& a : roots)
      for (const auto& b : roots) {
        if (a == b || a == -b)
          continue;
        auto c = alpha_chain(rs, a, b);
        EXPECT_EQ(c.r - c.q, rs.pairing(b, a));
      }
  }
}

TEST(RootData, Examples) {
  RootSystem a2({Family::A, 2});
  auto d = root_data(a2, Coords{1, 0, -1});
  EXPECT_EQ(d.height, 2);
  EXPECT_EQ(d.support, (std::vector<int>{1, 2}));
  RootSystem b3({Family::B, 3});
  EXPECT_EQ(root_data(b3, Coords{1, 1, 0}).height, 5);
  EXPECT_EQ(root_data(b3, Coords{1, 1, 0}).length2, 4);
  EXPECT_EQ(root_data(b3, Coords{0, 0, 1}).length2, 2);
  RootSystem c2({Family::C, 2});
  auto l = root_data(c2, Coords{2, 0});
  EXPECT_EQ(l.length2, 4);
  EXPECT_EQ(root_data(c2, Coords{1, -1}).length2, 2);
  EXPECT_EQ(l.coroot, (RationalVector{1, 0}));
  EXPECT_THROW(root_data(c2, Coords{1, 1, 1}), NotAPositiveRoot);
  EXPECT_THROW(root_data(c2, Coords{-2, 0}), NotAPositiveRoot);
}

TEST(RootData, CorootPairingMatchesFormula) {
  for (auto id : small_systems(4)) {
    RootSystem rs(id);
    for (int a = 0; a < rs.size(); ++a) {
      auto d = root_data(rs, rs.coords(a));
      for (int b = 0; b < rs.size(); ++b) {
        Rational s = 0;
        for (int x = 0; x < rs.dim(); ++x)
          s += d.coroot[x] * rs.coords(b)[x];
        EXPECT_EQ(s, rs.pairing(rs.coords(b), rs.coords(a)));
      }
    }
  }
}
