#include <gtest/gtest.h>

#include <random>

#include "degen/cones.hpp"
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

int count(const ConeSpec& c, Relation r) {
  int k = 0;
  for (const auto& x : c.constraints)
    k += x.relation == r;
  return k;
}

// d_β = ht(β) - #{c : {c, c+1} ⊆ supp β}
DegreeVector type_a_closed_form(const RootSystem& rs, const CutSet& cuts) {
  DegreeVector d;
  for (int k = 0; k < rs.size(); ++k) {
    auto supp = root_data(rs, rs.coords(k)).support;
    int drop = 0;
    for (int c : cuts.cuts)
      if (std::count(supp.begin(), supp.end(), c) && std::count(supp.begin(), supp.end(), c + 1))
        ++drop;
    d.push_back(rs.height(k) - drop);
  }
  return d;
}

} // namespace

TEST(AbelianisationCone, CountsMatchSummablePairs) {
  for (auto id : small_systems()) {
    RootSystem rs(id);
    auto roots = oracle::positive_roots(id.family, id.rank);
    int pairs = 0;
    for (auto a = roots.begin(); a != roots.end(); ++a)
      for (auto b = std::next(a); b != roots.end(); ++b)
        pairs += roots.count(*a + *b) > 0;
    auto cone = abelianisation_cone(rs);
    EXPECT_EQ(static_cast<int>(cone.constraints.size()), pairs) << id.str();
    EXPECT_EQ(count(cone, Relation::Ge), pairs);
  }
  EXPECT_EQ(abelianisation_cone(build_root_system(Family::A, 2)).constraints.size(), 1u);
  EXPECT_EQ(abelianisation_cone(build_root_system(Family::A, 3)).constraints.size(), 4u);
  EXPECT_EQ(abelianisation_cone(build_root_system(Family::B, 2)).constraints.size(), 2u);
}

TEST(DynkinCone, SmallExamples) {
  RootSystem a2({Family::A, 2});
  auto c = dynkin_cone(a2, {{1}});
  ASSERT_EQ(c.constraints.size(), 1u);
  EXPECT_EQ(c.constraints[0].relation, Relation::Ge);
  EXPECT_EQ(c.constraints[0].tag, ConstraintTag::PA);

  RootSystem a3({Family::A, 3});
  auto e = dynkin_cone(a3, {});
  EXPECT_EQ(count(e, Relation::Ge), 0);
  int dos = 0;
  for (const auto& k : e.constraints)
    if (k.tag == ConstraintTag::DO) {
      ++dos;
      // d(1,2) + d(2,3) = d(1,3) + d(2,2)
      EXPECT_EQ(k.coef[a3.index_of(Label::straight(1, 2))], 1);
      EXPECT_EQ(k.coef[a3.index_of(Label::straight(2, 3))], 1);
      EXPECT_EQ(k.coef[a3.index_of(Label::straight(1, 3))], -1);
      EXPECT_EQ(k.coef[a3.index_of(Label::straight(2, 2))], -1);
    }
  EXPECT_EQ(dos, 1);
  EXPECT_EQ(static_cast<int>(e.constraints.size()), 5);

  RootSystem b2({Family::B, 2});
  auto b = dynkin_cone(b2, {{1}});
  ASSERT_EQ(count(b, Relation::Ge), 1);
  for (const auto& k : b.constraints)
    if (k.relation == Relation::Ge) {
      EXPECT_EQ(*k.triple, (std::array<int, 3>{0, 1, 2}));
    }
}

TEST(DynkinCone, CutRangeIsChecked) {
  EXPECT_THROW(dynkin_cone(build_root_system(Family::A, 3), {{3}}), InvalidCutSet);
  EXPECT_THROW(dynkin_cone(build_root_system(Family::D, 5), {{3}}), InvalidCutSet);
  EXPECT_THROW(dynkin_cone(build_root_system(Family::B, 4), {{2, 1}}), InvalidCutSet);
  EXPECT_NO_THROW(dynkin_cone(build_root_system(Family::D, 5), {{2}}));
}

TEST(DynkinCone, EveryCutProducesInequalities) {
  for (auto id : small_systems()) {
    RootSystem rs(id);
    for (const auto& cuts : all_cutsets(rs)) {
      auto cone = dynkin_cone(rs, cuts);
      if (cuts.cuts.empty())
        EXPECT_EQ(count(cone, Relation::Ge), 0);
      else
        EXPECT_GT(count(cone, Relation::Ge), 0) << id.str() << cuts.str();
    }
  }
}

TEST(Membership, Examples) {
  RootSystem a2({Family::A, 2});
  auto d = abelianisation_cone(a2);
  EXPECT_TRUE(membership(d, {2, 2, 2}, MembershipMode::Closure));
  EXPECT_TRUE(membership(d, {2, 2, 2}, MembershipMode::Relint));
  auto f = dynkin_cone(a2, {{1}});
  EXPECT_TRUE(membership(f, {1, 1, 2}, MembershipMode::Closure));
  EXPECT_FALSE(membership(f, {1, 1, 2}, MembershipMode::Relint));
  EXPECT_TRUE(membership(f, {1, 1, 1}, MembershipMode::Relint));
  EXPECT_FALSE(membership(f, {1, 1, 3}, MembershipMode::Closure));
  EXPECT_THROW(membership(f, {1, 1}, MembershipMode::Closure), DomainError);
}

TEST(Membership, ImpliedEqualityIsNotRequiredStrict) {
  // x >= 0 together with -x >= 0 forces x = 0; a point with x = 0 is relint.
  ConeSpec c;
  c.labels = {"x", "y"};
  Constraint a{{1, 0}, Relation::Ge, ConstraintTag::Base, {}};
  Constraint b{{-1, 0}, Relation::Ge, ConstraintTag::Base, {}};
  Constraint y{{0, 1}, Relation::Ge, ConstraintTag::Base, {}};
  c.constraints = {a, b, y};
  EXPECT_TRUE(membership(c, {0, 1}, MembershipMode::Relint));
  EXPECT_FALSE(membership(c, {0, 0}, MembershipMode::Relint));
  auto fa = analyze_face(c);
  EXPECT_EQ(fa.implied, (std::vector<bool>{true, true, false}));
}

TEST(Membership, HeightPointLiesInEveryDynkinCone) {
  for (auto id : small_systems()) {
    RootSystem rs(id);
    auto h = height_vector(rs);
    EXPECT_TRUE(membership(abelianisation_cone(rs), h, MembershipMode::Closure));
    for (const auto& cuts : all_cutsets(rs))
      EXPECT_TRUE(membership(dynkin_cone(rs, cuts), h, MembershipMode::Closure)) << id.str() << cuts.str();
  }
}

TEST(RelintPoint, PassesRelintMembership) {
  for (auto id : small_systems(4)) {
    RootSystem rs(id);
    for (const auto& cuts : all_cutsets(rs)) {
      auto cone = dynkin_cone(rs, cuts);
      auto d = relint_point(cone, rs);
      EXPECT_TRUE(membership(cone, d, MembershipMode::Relint)) << id.str() << cuts.str();
      for (const auto& x : d) {
        EXPECT_TRUE(is_integer(x));
        EXPECT_GE(x, 1);
      }
      // every PA inequality is strict at a relint point of a Dynkin cone
      for (const auto& k : cone.constraints)
        if (k.tag == ConstraintTag::PA) {
          EXPECT_GT(k.value(d), 0) << id.str() << cuts.str();
        }
    }
  }
}

TEST(RelintPoint, TypeAClosedFormAgrees) {
  for (int n = 1; n <= 5; ++n) {
    RootSystem rs({Family::A, n});
    for (const auto& cuts : all_cutsets(rs)) {
      auto cone = dynkin_cone(rs, cuts);
      auto d = type_a_closed_form(rs, cuts);
      EXPECT_TRUE(membership(cone, d, MembershipMode::Relint)) << n << cuts.str();
      EXPECT_TRUE(membership(cone, relint_point(cone, rs), MembershipMode::Relint));
    }
  }
}

TEST(FacetWitness, ViolatesExactlyItsOwnConstraint) {
  for (auto id : small_systems()) {
    RootSystem rs(id);
    auto cone = abelianisation_cone(rs);
    for (std::size_t k = 0; k < cone.constraints.size(); ++k) {
      auto [a, b, s] = *cone.constraints[k].triple;
      auto d = facet_witness(rs, a, b, s);
      for (std::size_t j = 0; j < cone.constraints.size(); ++j)
        EXPECT_EQ(cone.constraints[j].satisfied(d), j != k);
    }
  }
  RootSystem a2({Family::A, 2});
  EXPECT_EQ(facet_witness(a2, 0, 1, 2), (DegreeVector{1, 1, 3}));
  EXPECT_THROW(facet_witness(a2, 0, 2, 1), DomainError);
}

TEST(DynkinCone, ContainedInAbelianisationCone) {
  std::mt19937_64 rng(2024);
  for (auto id : small_systems(4)) {
    RootSystem rs(id);
    auto big = abelianisation_cone(rs);
    for (const auto& cuts : all_cutsets(rs)) {
      auto cone = dynkin_cone(rs, cuts);
      for (int k = 0; k < 5; ++k) {
        auto d = random_cone_point(cone, rs, rng);
        ASSERT_TRUE(membership(cone, d, MembershipMode::Relint)) << id.str() << cuts.str();
        EXPECT_TRUE(membership(big, d, MembershipMode::Closure));
        for (const auto& x : d)
          EXPECT_GT(x, 0);
      }
    }
  }
}

TEST(ConeJson, ListsLabelsAndRationalCoefficients) {
  RootSystem a2({Family::A, 2});
  auto j = cone_to_json(dynkin_cone(a2, {{1}}));
  EXPECT_EQ(j["roots"], nlohmann::json({"1,1", "2,2", "1,2"}));
  EXPECT_EQ(j["constraints"][0]["relation"], ">=");
  EXPECT_EQ(j["constraints"][0]["terms"][2]["coef"], nlohmann::json({-1, 1}));
}
