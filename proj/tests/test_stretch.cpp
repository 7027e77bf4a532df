#include <gtest/gtest.h>

#include "degen/stretch.hpp"
#include "oracles.hpp"

using namespace degen;

namespace {

std::vector<RootSystemId> systems(int max_rank = 5) {
  std::vector<RootSystemId> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = min_rank(f); n <= max_rank + (f == Family::D ? 1 : 0); ++n)
      out.push_back({f, n});
  return out;
}

// ψ from the simple-root expansion: for β = Σ k_i α_i with support ending at ℓ,
// ψ(β) = Σ_{i<ℓ} k_i (α̃_σ(i) + … + α̃_σ(i+1)-1) + k_ℓ α̃_σ(ℓ).
Coords psi_by_simple_roots(const StretchMap& m, const RootSystem& rs, const RootSystem& big, const Coords& beta) {
  auto k = rs.simple_coefficients(beta);
  int last = 0;
  for (int i = 1; i <= m.n; ++i)
    if (k[i - 1] != 0)
      last = i;
  std::vector<int> out(m.big_rank(), 0);
  for (int i = 1; i < last; ++i)
    for (int x = m.sigma[i]; x < m.sigma[i + 1]; ++x)
      out[x - 1] += k[i - 1];
  out[m.sigma[last] - 1] += k[last - 1];
  return big.from_simple_coefficients(out);
}

std::vector<std::vector<int>> weight_grid(int n, int bound) {
  std::vector<std::vector<int>> out{{}};
  for (int k = 0; k < n; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out)
      for (int v = 0; v <= bound; ++v) {
        auto x = w;
        x.push_back(v);
        next.push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

} // namespace

TEST(Stretch, SigmaSkipsExactlyTheShiftedCuts) {
  for (auto id : systems(6)) {
    RootSystem rs(id);
    for (const auto& c : all_cutsets(rs)) {
      auto m = make_stretch(rs, c);
      std::set<int> image;
      for (int j = 1; j <= m.n; ++j) {
        if (j > 1) {
          EXPECT_LT(m.sigma[j - 1], m.sigma[j]);
        }
        image.insert(m.sigma[j]);
      }
      std::set<int> complement;
      for (int x = 1; x <= m.big_rank(); ++x)
        if (!image.count(x))
          complement.insert(x);
      EXPECT_EQ(complement, std::set<int>(m.missing.begin(), m.missing.end()));
      if (id.family == Family::D) {
        EXPECT_EQ(m.sigma[m.n - 2], m.big_rank() - 2);
        EXPECT_EQ(m.sigma[m.n - 1], m.big_rank() - 1);
        EXPECT_EQ(m.sigma[m.n], m.big_rank());
      }
    }
  }
}

TEST(Stretch, A2CutOneExamples) {
  RootSystem rs({Family::A, 2});
  auto m = make_stretch(rs, make_cutset(rs, {1}));
  EXPECT_EQ(m.sigma[1], 1);
  EXPECT_EQ(m.sigma[2], 3);
  EXPECT_EQ(m.missing, std::vector<int>{2});
  RootSystem big = stretched_system(m);
  EXPECT_EQ(big.rank(), 3);
  auto a2 = rs.index_of(Label::straight(2, 2));
  auto a12 = rs.index_of(Label::straight(1, 2));
  EXPECT_EQ(big.label(psi_root(m, rs, big, a2)), Label::straight(3, 3));
  EXPECT_EQ(big.label(psi_root(m, rs, big, a12)), Label::straight(1, 3));

  std::set<Coords> expected{*big.label_coords(Label::straight(1, 1)), *big.label_coords(Label::straight(3, 3)),
                            *big.label_coords(Label::straight(1, 3))};
  EXPECT_EQ(image_set(m, rs), expected);
  EXPECT_TRUE(closure_and_convexity_check(m, rs).ok);

  EXPECT_EQ(psi_weight(m, {1, 1}), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(psi_weight(m, {0, 0}), (std::vector<int>{0, 0, 0}));

  auto exps = ideal_exponents(m, rs, big, {1, 0});
  EXPECT_EQ(exps.at(psi_root(m, rs, big, rs.index_of(Label::straight(1, 1)))), 2);
  EXPECT_EQ(exps.at(psi_root(m, rs, big, a2)), 1);
  EXPECT_EQ(exps.at(psi_root(m, rs, big, a12)), 2);

  Coords w2 = big.weight2(psi_weight(m, {1, 0}));
  EXPECT_EQ(big.pairing2(w2, big.coords(psi_root(m, rs, big, a12))), 1);
  EXPECT_EQ(rs.pairing2(rs.weight2({1, 0}), rs.coords(a12)), 1);
}

TEST(Stretch, B3CutOneExamples) {
  RootSystem rs({Family::B, 3});
  auto m = make_stretch(rs, make_cutset(rs, {1}));
  RootSystem big = stretched_system(m);
  EXPECT_EQ(psi_coords(m, Coords{1, 1, 0}), (Coords{1, 0, 1, 0}));

  // ε2 + ε3 in B4 sits over the skipped node 2 = σ(2) - 1
  auto r = pi_section(m, rs, big, Coords{0, 1, 1, 0});
  EXPECT_EQ(r.kind, PiResult::Kind::TwoShortB);
  EXPECT_EQ(r.i, 2);
  EXPECT_EQ(r.value, (Coords{0, 2, 0}));
  EXPECT_EQ(r.value, scaled(*rs.label_coords(Label::straight(2, 3)), 2));
}

TEST(Stretch, B2CutOneImageHasFourRoots) {
  RootSystem rs({Family::B, 2});
  auto m = make_stretch(rs, make_cutset(rs, {1}));
  EXPECT_EQ(m.big_rank(), 3);
  EXPECT_EQ(image_set(m, rs).size(), 4u);
}

TEST(Stretch, EmptyCutIsIdentity) {
  for (auto id : systems()) {
    RootSystem rs(id);
    auto m = make_stretch(rs, CutSet{});
    std::set<Coords> all;
    for (const auto& r : rs.positive()) {
      EXPECT_EQ(psi_coords(m, r.coords), r.coords);
      all.insert(r.coords);
    }
    EXPECT_EQ(image_set(m, rs), all);
    RootSystem big = stretched_system(m);
    auto img = image_indices(m, rs, big);
    for (int b = 0; b < big.size(); ++b)
      EXPECT_TRUE(detail::s_set(big, img, b).empty());
  }
}

TEST(Stretch, EpsilonFormMatchesSimpleRootForm) {
  for (auto id : systems()) {
    RootSystem rs(id);
    for (const auto& c : all_cutsets(rs)) {
      auto m = make_stretch(rs, c);
      RootSystem big = stretched_system(m);
      for (const auto& r : rs.positive())
        EXPECT_EQ(psi_coords(m, r.coords), psi_by_simple_roots(m, rs, big, r.coords))
            << id.str() << " " << c.str() << " " << r.label.str();
    }
  }
}

TEST(Stretch, ExhaustiveStructuralProperties) {
  for (auto id : systems()) {
    RootSystem rs(id);
    for (const auto& c : all_cutsets(rs)) {
      auto m = make_stretch(rs, c);
      RootSystem big = stretched_system(m);
      auto img = image_indices(m, rs, big);
      ASSERT_EQ(std::set<int>(img.begin(), img.end()).size(), img.size());
      for (int k = 0; k < rs.size(); ++k) {
        EXPECT_EQ(big.norm2(big.coords(img[k])), rs.norm2(rs.coords(k)));
        auto p = pi_section(m, rs, big, big.coords(img[k]));
        EXPECT_EQ(p.kind, PiResult::Kind::Root);
        EXPECT_EQ(p.root, k);
      }
      auto rep = closure_and_convexity_check(m, rs);
      EXPECT_TRUE(rep.ok) << id.str() << " " << c.str() << " " << (rep.counterexamples.empty() ? "" : rep.counterexamples[0]);
    }
  }
}

TEST(Stretch, PiClassificationByFamily) {
  for (auto id : systems()) {
    RootSystem rs(id);
    for (const auto& c : all_cutsets(rs)) {
      auto m = make_stretch(rs, c);
      RootSystem big = stretched_system(m);
      for (int b = 0; b < big.size(); ++b) {
        auto p = pi_section(m, rs, big, big.coords(b));
        switch (p.kind) {
        case PiResult::Kind::Root:
          break;
        case PiResult::Kind::Zero:
          // only the inserted simple roots vanish
          EXPECT_EQ(big.height(b), 1);
          EXPECT_FALSE(m.in_image(b + 1));
          break;
        case PiResult::Kind::TwoShortB:
          ASSERT_EQ(id.family, Family::B);
          EXPECT_EQ(p.value, scaled(*rs.label_coords(Label::straight(p.i, m.n)), 2));
          break;
        case PiResult::Kind::SumPairD:
          ASSERT_EQ(id.family, Family::D);
          EXPECT_EQ(p.value, *rs.label_coords(Label::straight(p.i, m.n - 2)) +
                                 *rs.label_coords(Label::barred(p.i, m.n - 1)));
          break;
        }
        if (id.family == Family::A || id.family == Family::C) {
          EXPECT_TRUE(p.kind == PiResult::Kind::Root || p.kind == PiResult::Kind::Zero);
        }
      }
    }
  }
}

TEST(Stretch, PsiPairingIdentities) {
  for (auto id : systems(4)) {
    RootSystem rs(id);
    int bound = id.rank <= 3 ? 3 : 1;
    for (const auto& c : all_cutsets(rs)) {
      auto m = make_stretch(rs, c);
      RootSystem big = stretched_system(m);
      auto img = image_indices(m, rs, big);
      for (const auto& lambda : weight_grid(m.n, bound)) {
        auto big_lambda = psi_weight(m, lambda);
        Coords w2 = big.weight2(big_lambda);
        Coords v2 = rs.weight2(lambda);
        for (int k = 0; k < rs.size(); ++k)
          EXPECT_EQ(big.pairing2(w2, big.coords(img[k])), rs.pairing2(v2, rs.coords(k)));
        for (int x : m.missing)
          EXPECT_EQ(big.pairing2(w2, big.simple(x)), 0);
        auto exps = ideal_exponents(m, rs, big, lambda);
        for (int k = 0; k < rs.size(); ++k)
          EXPECT_EQ(exps.at(img[k]), rs.pairing2(v2, rs.coords(k)) + 1);
      }
    }
  }
}

TEST(Stretch, PsiWeightIsAdditive) {
  RootSystem rs({Family::C, 3});
  for (const auto& c : all_cutsets(rs)) {
    auto m = make_stretch(rs, c);
    for (const auto& a : weight_grid(3, 2))
      for (const auto& b : weight_grid(3, 1)) {
        std::vector<int> s(3);
        for (int k = 0; k < 3; ++k)
          s[k] = a[k] + b[k];
        auto pa = psi_weight(m, a), pb = psi_weight(m, b), ps = psi_weight(m, s);
        for (int k = 0; k < m.big_rank(); ++k)
          EXPECT_EQ(ps[k], pa[k] + pb[k]);
      }
  }
}

TEST(Stretch, NonDominantWeightRejected) {
  RootSystem rs({Family::A, 2});
  auto m = make_stretch(rs, make_cutset(rs, {1}));
  EXPECT_THROW(psi_weight(m, {1, -1}), DomainError);
  EXPECT_THROW(psi_weight(m, {1}), DomainError);
}

TEST(Stretch, FaultInjectionBreaksClosure) {
  RootSystem rs({Family::A, 3});
  auto m = make_stretch(rs, make_cutset(rs, {1}));
  RootSystem big = stretched_system(m);
  auto img = image_indices(m, rs, big);
  ASSERT_TRUE(check_closure_convexity(rs, big, img).ok);
  // send ψ(α_{1,2}) to a root that is not the sum of the images
  int k = rs.index_of(Label::straight(1, 2));
  img[k] = big.index_of(Label::straight(1, 2));
  auto rep = check_closure_convexity(rs, big, img);
  EXPECT_FALSE(rep.ok);
  bool closure_reported = false;
  for (const auto& s : rep.counterexamples)
    closure_reported |= s.rfind("closure", 0) == 0;
  EXPECT_TRUE(closure_reported);
}

TEST(Stretch, SSetAvoidsImage) {
  RootSystem rs({Family::B, 3});
  for (const auto& c : all_cutsets(rs)) {
    auto m = make_stretch(rs, c);
    RootSystem big = stretched_system(m);
    auto img = image_indices(m, rs, big);
    for (int b : img)
      for (int a : detail::s_set(big, img, b))
        EXPECT_EQ(std::count(img.begin(), img.end(), a), 0);
  }
  RootSystem a2({Family::A, 2});
  auto m = make_stretch(a2, make_cutset(a2, {1}));
  RootSystem big = stretched_system(m);
  auto img = image_indices(m, a2, big);
  // α̃_{1,3} - α̃_{1,2} = α̃_3 and α̃_{1,3} - α̃_{2,3} = α̃_1
  auto s = detail::s_set(big, img, big.index_of(Label::straight(1, 3)));
  EXPECT_EQ(s, (std::set<int>{big.index_of(Label::straight(1, 2)), big.index_of(Label::straight(2, 3))}));
}
