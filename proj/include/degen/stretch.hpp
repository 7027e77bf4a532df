#ifndef DEGEN_STRETCH_HPP
#define DEGEN_STRETCH_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cones.hpp"
#include "errors.hpp"
#include "rootsys.hpp"

namespace degen {

// Node relabeling σ: [n] → [n+t] that skips c_k + k for every cut c_k.
struct StretchMap {
  Family family = Family::A;
  int n = 0;
  CutSet cuts;
  int t = 0;
  std::vector<int> sigma;   // sigma[j] for j = 1..n; sigma[0] = 0
  std::vector<int> missing; // c_k + k

  int big_rank() const { return n + t; }
  int operator()(int j) const { return sigma.at(j); }

  bool in_image(int m) const {
    for (int x : missing)
      if (x == m)
        return false;
    return m >= 1 && m <= n + t;
  }

  // j with σ(j) = m, or 0
  int preimage(int m) const {
    for (int j = 1; j <= n; ++j)
      if (sigma[j] == m)
        return j;
    return 0;
  }
};

inline StretchMap make_stretch(const RootSystem& rs, const CutSet& cuts) {
  make_cutset(rs, cuts.cuts);
  StretchMap m;
  m.family = rs.family();
  m.n = rs.rank();
  m.cuts = cuts;
  m.t = cuts.size();
  m.sigma.assign(m.n + 1, 0);
  for (int j = 1; j <= m.n; ++j) {
    int below = 0;
    for (int c : cuts.cuts)
      below += c < j;
    m.sigma[j] = j + below;
  }
  for (int k = 1; k <= m.t; ++k)
    m.missing.push_back(cuts.cuts[k - 1] + k);
  return m;
}

inline RootSystem stretched_system(const StretchMap& m) { return RootSystem({m.family, m.big_rank()}); }

// ψ on ε-coordinates: positive entries at i move to σ(i), a negative entry
// at j+1 moves to σ(j)+1.
inline Coords psi_coords(const StretchMap& m, const Coords& beta) {
  int big_dim = m.family == Family::A ? m.big_rank() + 1 : m.big_rank();
  Coords out(big_dim, 0);
  for (int k = 1; k <= static_cast<int>(beta.size()); ++k) {
    int v = beta[k - 1];
    if (v > 0)
      out[m.sigma[k] - 1] += v;
    else if (v < 0)
      out[m.sigma[k - 1] + 1 - 1] += v;
  }
  return out;
}

inline int psi_root(const StretchMap& m, const RootSystem& rs, const RootSystem& big, int idx) {
  (void)rs;
  auto f = big.find(psi_coords(m, rs.coords(idx)));
  if (!f)
    throw InvariantViolation("ψ of " + rs.label(idx).str() + " is not a positive root");
  return *f;
}

// ψ(β) for every β ∈ Φ⁺, as indices into the stretched system.
inline std::vector<int> image_indices(const StretchMap& m, const RootSystem& rs, const RootSystem& big) {
  std::vector<int> out;
  std::set<int> seen;
  for (int k = 0; k < rs.size(); ++k) {
    int x = psi_root(m, rs, big, k);
    if (!seen.insert(x).second)
      throw InvariantViolation("ψ is not injective");
    out.push_back(x);
  }
  return out;
}

inline std::set<Coords> image_set(const StretchMap& m, const RootSystem& rs) {
  std::set<Coords> out;
  for (const auto& r : rs.positive())
    out.insert(psi_coords(m, r.coords));
  return out;
}

struct StretchReport {
  bool ok = true;
  std::vector<std::string> counterexamples;
};

// (a) ψβ1 + ψβ2 ∈ Φ̃⁺ implies β1 + β2 ∈ Φ⁺ and ψβ1 + ψβ2 = ψ(β1+β2);
// (b) no two roots outside the image sum into the image.
inline StretchReport check_closure_convexity(const RootSystem& rs, const RootSystem& big,
                                             const std::vector<int>& image) {
  StretchReport r;
  auto fail = [&](std::string s) {
    r.ok = false;
    if (r.counterexamples.size() < 20)
      r.counterexamples.push_back(std::move(s));
  };
  std::vector<int> preimage(big.size(), -1);
  for (int k = 0; k < rs.size(); ++k)
    preimage[image[k]] = k;
  for (int a = 0; a < rs.size(); ++a)
    for (int b = 0; b < rs.size(); ++b) {
      auto s = try_add(big, image[a], image[b]);
      if (!s)
        continue;
      auto small = try_add(rs, a, b);
      if (!small)
        fail("closure: " + rs.label(a).str() + " + " + rs.label(b).str() + " is not a root but its image sum is");
      else if (image[*small] != *s)
        fail("closure: image of " + rs.label(*small).str() + " differs from the image sum");
    }
  for (int a = 0; a < big.size(); ++a) {
    if (preimage[a] >= 0)
      continue;
    for (int b = a; b < big.size(); ++b) {
      if (preimage[b] >= 0)
        continue;
      auto s = try_add(big, a, b);
      if (s && preimage[*s] >= 0)
        fail("convexity: " + big.label(a).str() + " + " + big.label(b).str() + " lands in the image");
    }
  }
  return r;
}

inline StretchReport closure_and_convexity_check(const StretchMap& m, const RootSystem& rs) {
  RootSystem big = stretched_system(m);
  return check_closure_convexity(rs, big, image_indices(m, rs, big));
}

struct PiResult {
  enum class Kind { Root, TwoShortB, SumPairD, Zero };
  Kind kind = Kind::Root;
  Coords value;  // π(β̃) in ε-coordinates of the small system
  int root = -1; // index when kind == Root
  int i = 0;     // for TwoShortB / SumPairD
};

inline const char* pi_kind_name(PiResult::Kind k) {
  switch (k) {
  case PiResult::Kind::Root: return "root";
  case PiResult::Kind::TwoShortB: return "two-short-B";
  case PiResult::Kind::SumPairD: return "sum-pair-D";
  case PiResult::Kind::Zero: return "zero";
  }
  return "?";
}

// π(Σ c_k α̃_k) = Σ c_σ(k) α_k, classified.
inline PiResult pi_section(const StretchMap& m, const RootSystem& rs, const RootSystem& big, const Coords& beta) {
  if (!big.is_positive_root(beta))
    throw NotAPositiveRoot("π expects a positive root of the stretched system");
  auto coef = big.simple_coefficients(beta);
  std::vector<int> small(m.n);
  for (int k = 1; k <= m.n; ++k)
    small[k - 1] = coef[m.sigma[k] - 1];
  PiResult r;
  r.value = rs.from_simple_coefficients(small);
  if (is_zero(r.value)) {
    r.kind = PiResult::Kind::Zero;
    return r;
  }
  if (auto f = rs.find(r.value)) {
    r.kind = PiResult::Kind::Root;
    r.root = *f;
    return r;
  }
  // β̃ = ε_{σ(i)-1} + ε_{σ(i)} with σ(i)-1 skipped by σ; π(β̃) = 2ε_i
  int pos = 0, count = 0;
  for (int x = 0; x < static_cast<int>(beta.size()); ++x)
    if (beta[x] != 0) {
      ++count;
      pos = x + 1;
    }
  int i = m.preimage(pos);
  bool pattern = count == 2 && beta[pos - 2] == 1 && beta[pos - 1] == 1 && i > 0 && m.sigma[i] - 1 != m.sigma[i - 1];
  Coords two(rs.dim(), 0);
  if (i > 0)
    two[i - 1] = 2;
  if (pattern && r.value == two) {
    if (m.family == Family::B) {
      r.kind = PiResult::Kind::TwoShortB;
      r.i = i;
      return r;
    }
    if (m.family == Family::D) {
      r.kind = PiResult::Kind::SumPairD;
      r.i = i;
      return r;
    }
  }
  throw InvariantViolation("π(β̃) falls in none of the expected cases");
}

// Ψ(λ) = Σ λ_j ϖ̃_σ(j), in fundamental-weight coordinates of rank n+t.
inline std::vector<int> psi_weight(const StretchMap& m, const std::vector<int>& lambda) {
  if (static_cast<int>(lambda.size()) != m.n)
    throw DomainError("weight has " + std::to_string(lambda.size()) + " coordinates, expected " + std::to_string(m.n));
  std::vector<int> out(m.big_rank(), 0);
  for (int j = 1; j <= m.n; ++j) {
    if (lambda[j - 1] < 0)
      throw DomainError("weight is not dominant");
    out[m.sigma[j] - 1] = lambda[j - 1];
  }
  return out;
}

// β̃ ↦ ⟨Ψ(λ), β̃^∨⟩ + 1 over the image of ψ, keyed by stretched root index.
inline std::map<int, int> ideal_exponents(const StretchMap& m, const RootSystem& rs, const RootSystem& big,
                                          const std::vector<int>& lambda) {
  Coords w2 = big.weight2(psi_weight(m, lambda));
  std::map<int, int> out;
  for (int x : image_indices(m, rs, big))
    out[x] = static_cast<int>(big.pairing2(w2, big.coords(x))) + 1;
  return out;
}

namespace detail {

// S_β̃: roots α̃ outside the image with kβ̃ - α̃ in the image for some k >= 1.
inline std::set<int> s_set(const RootSystem& big, const std::vector<int>& image, int beta) {
  std::set<int> img(image.begin(), image.end());
  std::set<int> out;
  for (int a = 0; a < big.size(); ++a) {
    if (img.count(a))
      continue;
    for (int k = 1; k <= 3; ++k) {
      auto f = big.find(scaled(big.coords(beta), k) - big.coords(a));
      if (f && img.count(*f)) {
        out.insert(a);
        break;
      }
    }
  }
  return out;
}

} // namespace detail

} // namespace degen

#endif
