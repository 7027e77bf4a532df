#ifndef DEGEN_CONES_HPP
#define DEGEN_CONES_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "lp.hpp"
#include "rational.hpp"
#include "rootsys.hpp"

namespace degen {

// A degree vector d: Φ⁺ → Q, indexed like rs.positive().
using DegreeVector = RationalVector;

struct CutSet {
  std::vector<int> cuts;

  int size() const { return static_cast<int>(cuts.size()); }
  bool contains(int j) const { return std::find(cuts.begin(), cuts.end(), j) != cuts.end(); }
  friend bool operator==(const CutSet&, const CutSet&) = default;

  std::string str() const {
    std::string s = "{";
    for (std::size_t k = 0; k < cuts.size(); ++k)
      s += (k ? "," : "") + std::to_string(cuts[k]);
    return s + "}";
  }
};

// largest allowed cut: n-1 for A/B/C, n-3 for D
inline int max_cut(const RootSystem& rs) {
  return rs.family() == Family::D ? rs.rank() - 3 : rs.rank() - 1;
}

inline CutSet make_cutset(const RootSystem& rs, std::vector<int> cuts) {
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    if (cuts[k] < 1 || cuts[k] > max_cut(rs))
      throw InvalidCutSet("cut " + std::to_string(cuts[k]) + " is outside [1," + std::to_string(max_cut(rs)) +
                          "] for " + rs.id().str());
    if (k > 0 && cuts[k] <= cuts[k - 1])
      throw InvalidCutSet("cuts must be strictly increasing");
  }
  return CutSet{std::move(cuts)};
}

// every valid cut set, ordered by bitmask
inline std::vector<CutSet> all_cutsets(const RootSystem& rs) {
  std::vector<CutSet> out;
  int m = std::max(max_cut(rs), 0);
  for (long mask = 0; mask < (1L << m); ++mask) {
    CutSet c;
    for (int k = 0; k < m; ++k)
      if (mask & (1L << k))
        c.cuts.push_back(k + 1);
    out.push_back(c);
  }
  return out;
}

enum class Relation { Ge, Eq };
enum class ConstraintTag { PA, DO, Base, OtherEquality };

inline const char* tag_name(ConstraintTag t) {
  switch (t) {
  case ConstraintTag::PA: return "PA";
  case ConstraintTag::DO: return "DO";
  case ConstraintTag::Base: return "base";
  case ConstraintTag::OtherEquality: return "other-equality";
  }
  return "?";
}

// Σ coef_β d_β (>= or =) 0
struct Constraint {
  RationalVector coef;
  Relation relation = Relation::Ge;
  ConstraintTag tag = ConstraintTag::Base;
  // for constraints coming from a summable pair: (β1, β2, β1+β2)
  std::optional<std::array<int, 3>> triple;

  Rational value(const DegreeVector& d) const { return dot(coef, d); }
  bool satisfied(const DegreeVector& d) const {
    int s = sgn(value(d));
    return relation == Relation::Eq ? s == 0 : s >= 0;
  }
};

struct ConeSpec {
  RootSystemId id;
  CutSet cuts;
  bool dynkin = false;
  std::vector<std::string> labels; // root labels in index order
  std::vector<Constraint> constraints;

  int dimension() const { return static_cast<int>(labels.size()); }
};

namespace detail {

inline Constraint pair_constraint(int p, int a, int b, int s, Relation rel, ConstraintTag tag) {
  Constraint c;
  c.coef.assign(p, 0);
  c.coef[a] += 1;
  c.coef[b] += 1;
  c.coef[s] -= 1;
  c.relation = rel;
  c.tag = tag;
  c.triple = std::array<int, 3>{std::min(a, b), std::max(a, b), s};
  return c;
}

inline ConeSpec empty_cone(const RootSystem& rs) {
  ConeSpec c;
  c.id = rs.id();
  c.labels = label_strings(rs);
  return c;
}

} // namespace detail

// One constraint d_β1 + d_β2 >= d_{β1+β2} per unordered summable pair.
inline ConeSpec abelianisation_cone(const RootSystem& rs) {
  ConeSpec cone = detail::empty_cone(rs);
  for (int a = 0; a < rs.size(); ++a)
    for (int b = a + 1; b < rs.size(); ++b)
      if (auto s = try_add(rs, a, b))
        cone.constraints.push_back(detail::pair_constraint(rs.size(), a, b, *s, Relation::Ge, ConstraintTag::Base));
  return cone;
}

namespace detail {

using LabelPair = std::pair<Label, Label>;

// The partial-abelianisation patterns for cut j, as (summand, summand, sum)
// label triples. Invalid labels are dropped by the caller.
inline std::vector<std::array<Label, 3>> pa_patterns(const RootSystem& rs, int j) {
  using L = Label;
  const int n = rs.rank();
  std::vector<std::array<Label, 3>> out;
  auto add = [&](L a, L b, L s) { out.push_back({rs.normalize(a), rs.normalize(b), rs.normalize(s)}); };
  switch (rs.family()) {
  case Family::A:
    for (int i = 1; i <= j; ++i)
      for (int l = j + 1; l <= n; ++l)
        add(L::straight(i, j), L::straight(j + 1, l), L::straight(i, l));
    break;
  case Family::B:
  case Family::D: {
    // j < ℓ < bar(j+1) in the order 1 < ... < n < bar(n or n-1) < ... < bar(2)
    int top_bar = rs.family() == Family::B ? n : n - 1;
    for (int i = 1; i <= j; ++i) {
      for (int l = j + 1; l <= n; ++l)
        add(L::straight(i, j), L::straight(j + 1, l), L::straight(i, l));
      for (int k = top_bar; k >= j + 2; --k)
        add(L::straight(i, j), L::barred(j + 1, k), L::barred(i, k));
    }
    for (int i = 1; i <= n; ++i)
      for (int k = i + 1; k < j + 1; ++k)
        add(L::straight(i, j), L::barred(k, j + 1), L::barred(i, k));
    for (int k = 1; k <= n; ++k)
      for (int i = k + 1; i < j + 1; ++i)
        add(L::straight(i, j), L::barred(k, j + 1), L::barred(k, i));
    break;
  }
  case Family::C:
    // j+1 <= ℓ <= bar(j+1) in the order 1 < ... < n < bar(n-1) < ... < bar(1)
    for (int i = 1; i <= j; ++i) {
      for (int l = j + 1; l <= n; ++l)
        add(L::straight(i, j), L::straight(j + 1, l), L::straight(i, l));
      for (int k = n - 1; k >= j + 1; --k)
        add(L::straight(i, j), L::barred(j + 1, k), L::barred(i, k));
    }
    for (int i = 1; i <= j + 1; ++i)
      for (int l = i; l <= j + 1; ++l)
        add(L::straight(i, j), L::barred(l, j + 1), L::barred(i, l));
    for (int l = 1; l <= j + 1; ++l)
      for (int i = l; i <= j + 1; ++i)
        add(L::straight(i, j), L::barred(l, j + 1), L::barred(l, i));
    break;
  }
  return out;
}

// (DO) equalities as pairs of label pairs with equal sums.
inline std::vector<std::pair<LabelPair, LabelPair>> do_patterns(const RootSystem& rs) {
  using L = Label;
  const int n = rs.rank();
  std::vector<std::pair<LabelPair, LabelPair>> out;
  auto add = [&](L a, L b, L c, L d) {
    out.push_back({{rs.normalize(a), rs.normalize(b)}, {rs.normalize(c), rs.normalize(d)}});
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          add(L::straight(i, k), L::straight(j, l), L::straight(i, l), L::straight(j, k));
  if (rs.family() == Family::A)
    return out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j; k <= n; ++k)
        for (int l = j; l <= n; ++l)
          add(L::barred(i, k), L::straight(j, l), L::straight(i, l), L::barred(j, k));
  int top = rs.family() == Family::B ? n : rs.family() == Family::C ? n - 1 : n - 2;
  for (int i = 1; i <= top; ++i)
    for (int j = i + 1; j <= top; ++j)
      for (int k = j + 1; k <= top; ++k)
        for (int l = k + 1; l <= top; ++l) {
          add(L::barred(i, j), L::barred(k, l), L::barred(i, k), L::barred(j, l));
          add(L::barred(i, k), L::barred(j, l), L::barred(i, l), L::barred(j, k));
        }
  return out;
}

} // namespace detail

inline ConeSpec dynkin_cone(const RootSystem& rs, const CutSet& cuts) {
  make_cutset(rs, cuts.cuts);
  ConeSpec cone = detail::empty_cone(rs);
  cone.cuts = cuts;
  cone.dynkin = true;
  const int p = rs.size();

  std::set<std::array<int, 3>> pa;
  for (int j : cuts.cuts)
    for (const auto& pat : detail::pa_patterns(rs, j)) {
      auto a = rs.find_label(pat[0]), b = rs.find_label(pat[1]), s = rs.find_label(pat[2]);
      if (!a || !b || !s)
        continue;
      if (rs.coords(*a) + rs.coords(*b) != rs.coords(*s))
        throw InvariantViolation("partial-abelianisation pattern " + pat[0].str() + " + " + pat[1].str() +
                                 " does not sum to " + pat[2].str());
      pa.insert({std::min(*a, *b), std::max(*a, *b), *s});
    }
  for (int a = 0; a < p; ++a)
    for (int b = a + 1; b < p; ++b)
      if (auto s = try_add(rs, a, b)) {
        bool keep = pa.count({a, b, *s}) > 0;
        cone.constraints.push_back(detail::pair_constraint(p, a, b, *s, keep ? Relation::Ge : Relation::Eq,
                                                           keep ? ConstraintTag::PA : ConstraintTag::OtherEquality));
      }

  std::set<RationalVector> seen;
  for (const auto& [lhs, rhs] : detail::do_patterns(rs)) {
    auto a = rs.find_label(lhs.first), b = rs.find_label(lhs.second);
    auto c = rs.find_label(rhs.first), e = rs.find_label(rhs.second);
    if (!a || !b || !c || !e)
      continue;
    if (rs.coords(*a) + rs.coords(*b) != rs.coords(*c) + rs.coords(*e))
      throw InvariantViolation("differential-operator pattern with unequal sums");
    Constraint k;
    k.coef.assign(p, 0);
    k.coef[*a] += 1;
    k.coef[*b] += 1;
    k.coef[*c] -= 1;
    k.coef[*e] -= 1;
    if (std::all_of(k.coef.begin(), k.coef.end(), [](const Rational& x) { return sgn(x) == 0; }))
      continue;
    RationalVector neg = k.coef;
    for (auto& x : neg)
      x = -x;
    if (seen.count(k.coef) || seen.count(neg))
      continue;
    seen.insert(k.coef);
    k.relation = Relation::Eq;
    k.tag = ConstraintTag::DO;
    cone.constraints.push_back(std::move(k));
  }
  return cone;
}

inline void check_dimension(const ConeSpec& c, const DegreeVector& d) {
  if (static_cast<int>(d.size()) != c.dimension())
    throw DomainError("degree vector has " + std::to_string(d.size()) + " entries, cone expects " +
                      std::to_string(c.dimension()));
}

// Which inequalities hold with equality on the whole cone.
struct FaceAnalysis {
  RationalMatrix basis;          // spans the solution space of the equalities
  std::vector<int> inequalities; // indices of Ge constraints
  std::vector<bool> implied;     // per entry of inequalities
  RationalVector relint_y;       // coordinates (in basis) of a relint point
};

namespace detail {

inline RationalVector restrict_row(const RationalVector& coef, const RationalMatrix& basis) {
  RationalVector g(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    g[k] = dot(coef, basis[k]);
  return g;
}

} // namespace detail

inline FaceAnalysis analyze_face(const ConeSpec& cone) {
  const int p = cone.dimension();
  FaceAnalysis fa;
  RationalMatrix eqs;
  for (std::size_t i = 0; i < cone.constraints.size(); ++i) {
    if (cone.constraints[i].relation == Relation::Eq)
      eqs.push_back(cone.constraints[i].coef);
    else
      fa.inequalities.push_back(static_cast<int>(i));
  }
  fa.basis = nullspace(eqs, p);
  const int k = static_cast<int>(fa.basis.size());
  RationalMatrix rows;
  for (int idx : fa.inequalities)
    rows.push_back(detail::restrict_row(cone.constraints[idx].coef, fa.basis));
  const int m = static_cast<int>(rows.size());
  fa.implied.assign(m, false);
  fa.relint_y.assign(k, 0);
  std::vector<int> candidates;
  for (int i = 0; i < m; ++i) {
    if (std::all_of(rows[i].begin(), rows[i].end(), [](const Rational& x) { return sgn(x) == 0; }))
      fa.implied[i] = true;
    else
      candidates.push_back(i);
  }
  if (candidates.empty())
    return fa;

  RationalMatrix g;
  RationalVector h;
  // maximize s subject to rows_i y >= s, s <= 1
  {
    g.clear();
    h.clear();
    for (int i : candidates) {
      RationalVector r(k + 1);
      for (int x = 0; x < k; ++x)
        r[x] = -rows[i][x];
      r[k] = 1;
      g.push_back(r);
      h.push_back(0);
    }
    RationalVector cap(k + 1, 0);
    cap[k] = 1;
    g.push_back(cap);
    h.push_back(1);
    RationalVector obj(k + 1, 0);
    obj[k] = 1;
    auto res = maximize(obj, g, h);
    if (res.status != LpResult::Status::Optimal)
      throw LpError("slack maximization is unbounded");
    if (sgn(res.value) > 0) {
      fa.relint_y.assign(res.x.begin(), res.x.begin() + k);
      return fa;
    }
  }

  // Some inequality is tight on the whole cone: test each one, reusing the
  // witnesses to mark others strict.
  std::vector<int> state(m, 0); // 0 unknown, 1 strict somewhere, 2 implied
  for (int i = 0; i < m; ++i)
    if (fa.implied[i])
      state[i] = 2;
  RationalVector sum(k, 0);
  for (int i : candidates) {
    if (state[i] != 0)
      continue;
    g.clear();
    h.clear();
    for (int j : candidates) {
      RationalVector r(k);
      for (int x = 0; x < k; ++x)
        r[x] = -rows[j][x];
      g.push_back(r);
      h.push_back(0);
    }
    g.push_back(rows[i]);
    h.push_back(1);
    auto res = maximize(rows[i], g, h);
    if (res.status != LpResult::Status::Optimal)
      throw LpError("bounded slack LP reported unbounded");
    if (sgn(res.value) == 0) {
      state[i] = 2;
      continue;
    }
    for (int x = 0; x < k; ++x)
      sum[x] += res.x[x];
    for (int j : candidates)
      if (sgn(dot(rows[j], res.x)) > 0)
        state[j] = 1;
  }
  for (int i = 0; i < m; ++i)
    fa.implied[i] = state[i] == 2;
  fa.relint_y = sum;
  return fa;
}

enum class MembershipMode { Closure, Relint };

inline bool membership(const ConeSpec& cone, const DegreeVector& d, MembershipMode mode) {
  check_dimension(cone, d);
  for (const auto& c : cone.constraints)
    if (!c.satisfied(d))
      return false;
  if (mode == MembershipMode::Closure)
    return true;
  bool any_tight = false;
  for (const auto& c : cone.constraints)
    if (c.relation == Relation::Ge && sgn(c.value(d)) == 0)
      any_tight = true;
  if (!any_tight)
    return true;
  FaceAnalysis fa = analyze_face(cone);
  for (std::size_t k = 0; k < fa.inequalities.size(); ++k)
    if (!fa.implied[k] && sgn(cone.constraints[fa.inequalities[k]].value(d)) == 0)
      return false;
  return true;
}

inline DegreeVector height_vector(const RootSystem& rs) {
  DegreeVector d;
  for (int k = 0; k < rs.size(); ++k)
    d.push_back(Rational(rs.height(k)));
  return d;
}

namespace detail {

inline void make_primitive_integral(DegreeVector& d) {
  mpz_class l = 1, g = 0;
  for (const auto& x : d)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  for (auto& x : d) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g > 1)
    for (auto& x : d)
      x /= g;
}

} // namespace detail

// A point of the relative interior with positive integer coordinates when
// the height point lies in the cone (it does for every Dynkin cone).
inline DegreeVector relint_point(const ConeSpec& cone, const RootSystem& rs) {
  const int p = cone.dimension();
  FaceAnalysis fa = analyze_face(cone);
  DegreeVector d(p, 0);
  for (std::size_t k = 0; k < fa.basis.size(); ++k)
    for (int x = 0; x < p; ++x)
      if (sgn(fa.relint_y[k]) != 0)
        d[x] += fa.relint_y[k] * fa.basis[k][x];
  for (std::size_t k = 0; k < fa.inequalities.size(); ++k)
    if (!fa.implied[k] && sgn(cone.constraints[fa.inequalities[k]].value(d)) <= 0)
      throw LpError("cone has an empty relative interior");
  DegreeVector h = height_vector(rs);
  if (membership(cone, h, MembershipMode::Closure)) {
    // shift by a multiple of the height point until every entry is >= 1
    Rational shift = 0;
    for (int x = 0; x < p; ++x) {
      Rational need = (1 - d[x]) / h[x];
      if (need > shift)
        shift = need;
    }
    mpz_class m = shift.get_num() / shift.get_den() + 1;
    if (sgn(shift) > 0)
      for (int x = 0; x < p; ++x)
        d[x] += Rational(m) * h[x];
    if (std::all_of(d.begin(), d.end(), [](const Rational& x) { return sgn(x) == 0; }))
      d = h;
  }
  detail::make_primitive_integral(d);
  return d;
}

// 2 - e_α - e_β + e_γ: violates only the constraint of the triple.
inline DegreeVector facet_witness(const RootSystem& rs, int a, int b, int s) {
  if (a < 0 || b < 0 || s < 0 || a >= rs.size() || b >= rs.size() || s >= rs.size() ||
      rs.coords(a) + rs.coords(b) != rs.coords(s))
    throw DomainError("facet_witness needs α + β = γ in Φ⁺");
  DegreeVector d(rs.size(), 2);
  d[a] -= 1;
  d[b] -= 1;
  d[s] += 1;
  return d;
}

// A random point of the relative interior with positive entries: move from
// a relint point along a random direction of the equality subspace, by a
// random fraction of the largest feasible step.
inline DegreeVector random_cone_point(const ConeSpec& cone, const RootSystem& rs, std::mt19937_64& rng) {
  DegreeVector base = relint_point(cone, rs);
  FaceAnalysis fa = analyze_face(cone);
  const int p = cone.dimension();
  std::uniform_int_distribution<int> coef(-5, 5);
  DegreeVector dir(p, 0);
  for (const auto& b : fa.basis) {
    int c = coef(rng);
    for (int x = 0; x < p; ++x)
      dir[x] += c * b[x];
  }
  Rational step = -1;
  for (std::size_t k = 0; k < fa.inequalities.size(); ++k) {
    const auto& con = cone.constraints[fa.inequalities[k]];
    Rational v = con.value(dir);
    if (sgn(v) < 0) {
      Rational lim = -con.value(base) / v;
      if (step < 0 || lim < step)
        step = lim;
    }
  }
  for (int x = 0; x < p; ++x)
    if (sgn(dir[x]) < 0) {
      Rational lim = -base[x] / dir[x];
      if (step < 0 || lim < step)
        step = lim;
    }
  if (step < 0)
    step = 1;
  std::uniform_int_distribution<int> frac(1, 9);
  step *= Rational(frac(rng), 10);
  DegreeVector d(p);
  for (int x = 0; x < p; ++x)
    d[x] = base[x] + step * dir[x];
  return d;
}

inline nlohmann::json cone_to_json(const ConeSpec& c) {
  nlohmann::json j;
  j["family"] = std::string(1, family_char(c.id.family));
  j["rank"] = c.id.rank;
  j["dynkin"] = c.dynkin;
  j["cuts"] = c.cuts.cuts;
  j["roots"] = c.labels;
  auto& arr = j["constraints"] = nlohmann::json::array();
  for (const auto& k : c.constraints) {
    nlohmann::json e;
    e["relation"] = k.relation == Relation::Ge ? ">=" : "=";
    e["tag"] = tag_name(k.tag);
    auto& terms = e["terms"] = nlohmann::json::array();
    for (int x = 0; x < c.dimension(); ++x)
      if (sgn(k.coef[x]) != 0)
        terms.push_back({{"root", c.labels[x]}, {"coef", rational_to_json(k.coef[x])}});
    arr.push_back(std::move(e));
  }
  return j;
}

} // namespace degen

#endif
