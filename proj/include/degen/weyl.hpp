#ifndef DEGEN_WEYL_HPP
#define DEGEN_WEYL_HPP

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cones.hpp"
#include "errors.hpp"
#include "rootsys.hpp"
#include "stretch.hpp"

namespace degen {

using Word = std::vector<int>;

// Signed permutation of ε-indices: image[k-1] = ±m means ε_k ↦ ±ε_m.
// Type A uses plain permutations of [rank+1].
struct WeylElement {
  Family family = Family::A;
  int rank = 0;
  std::vector<int> image;

  int operator()(int k) const { return k > 0 ? image.at(k - 1) : -image.at(-k - 1); }

  Coords act(const Coords& c) const {
    Coords out(c.size(), 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      int m = image[k];
      out[std::abs(m) - 1] += m > 0 ? c[k] : -c[k];
    }
    return out;
  }

  bool is_identity() const {
    for (std::size_t k = 0; k < image.size(); ++k)
      if (image[k] != static_cast<int>(k) + 1)
        return false;
    return true;
  }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

inline WeylElement identity_element(const RootSystem& rs) {
  WeylElement w{rs.family(), rs.rank(), std::vector<int>(rs.dim())};
  for (int k = 0; k < rs.dim(); ++k)
    w.image[k] = k + 1;
  return w;
}

inline WeylElement simple_reflection(const RootSystem& rs, int i) {
  const int n = rs.rank();
  if (i < 1 || i > n)
    throw DomainError("simple reflection index " + std::to_string(i) + " outside [1," + std::to_string(n) + "]");
  WeylElement s = identity_element(rs);
  if (rs.family() == Family::A || i < n) {
    std::swap(s.image[i - 1], s.image[i]);
  } else if (rs.family() == Family::D) {
    s.image[n - 2] = -n;
    s.image[n - 1] = -(n - 1);
  } else {
    s.image[n - 1] = -n;
  }
  return s;
}

// (a ∘ b)(ε_k) = a(b(ε_k))
inline WeylElement compose(const WeylElement& a, const WeylElement& b) {
  WeylElement out = b;
  for (auto& m : out.image)
    m = a(m);
  return out;
}

inline WeylElement inverse(const WeylElement& w) {
  WeylElement out = w;
  for (std::size_t k = 0; k < w.image.size(); ++k) {
    int m = w.image[k];
    out.image[std::abs(m) - 1] = m > 0 ? static_cast<int>(k) + 1 : -static_cast<int>(k) - 1;
  }
  return out;
}

inline bool is_negative(const Coords& c) {
  for (int x : c)
    if (x != 0)
      return x < 0;
  return false;
}

// Φ⁺_w = {β > 0 : w(β) < 0}, by direct action.
inline std::set<int> inversions_by_action(const RootSystem& rs, const WeylElement& w) {
  std::set<int> out;
  for (int k = 0; k < rs.size(); ++k)
    if (is_negative(w.act(rs.coords(k))))
      out.insert(k);
  return out;
}

// {α_{i_r}, s_{i_r}(α_{i_{r-1}}), …, s_{i_r}⋯s_{i_2}(α_{i_1})} for a reduced word.
inline std::set<int> inversions_by_word(const RootSystem& rs, const Word& word) {
  std::set<int> out;
  WeylElement prefix = identity_element(rs);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    Coords r = prefix.act(rs.simple(*it));
    auto f = rs.find(r);
    if (!f)
      throw InvariantViolation("word is not reduced: a telescoped root is negative");
    out.insert(*f);
    prefix = compose(prefix, simple_reflection(rs, *it));
  }
  return out;
}

struct WordResult {
  WeylElement element;
  bool reduced = false;
};

// w = s_{i_1} ⋯ s_{i_r}
inline WordResult word_to_element(const RootSystem& rs, const Word& word) {
  WeylElement w = identity_element(rs);
  for (int i : word)
    w = compose(w, simple_reflection(rs, i));
  return {w, static_cast<int>(word.size()) == static_cast<int>(inversions_by_action(rs, w).size())};
}

inline int length(const RootSystem& rs, const WeylElement& w) {
  return static_cast<int>(inversions_by_action(rs, w).size());
}

// Reduced word by peeling right descents.
inline Word reduced_word(const RootSystem& rs, WeylElement w) {
  Word out;
  for (;;) {
    int descent = 0;
    for (int i = 1; i <= rs.rank() && !descent; ++i)
      if (is_negative(w.act(rs.simple(i))))
        descent = i;
    if (!descent)
      break;
    out.push_back(descent);
    w = compose(w, simple_reflection(rs, descent));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// Inversion set computed two ways; a disagreement is a bug.
inline std::set<int> inversion_set(const RootSystem& rs, const WeylElement& w) {
  auto direct = inversions_by_action(rs, w);
  auto telescoped = inversions_by_word(rs, reduced_word(rs, w));
  if (direct != telescoped)
    throw InvariantViolation("inversion set by action and by reduced word disagree");
  return direct;
}

namespace detail {

inline void append_run(Word& w, int from, int to) {
  for (int k = from; k <= to; ++k)
    w.push_back(k);
}

// v_{t+1} ⋯ v_1 for cuts c and top = c_{t+1}, with
// v_k = ∏_{m = c_k+k-1 down to c_{k-1}+k} (s_k ⋯ s_m)
inline Word type_a_factors(const std::vector<int>& cuts, int top) {
  std::vector<int> c{0};
  c.insert(c.end(), cuts.begin(), cuts.end());
  c.push_back(top);
  const int t = static_cast<int>(cuts.size());
  Word out;
  for (int k = t + 1; k >= 1; --k)
    for (int m = c[k] + k - 1; m >= c[k - 1] + k; --m)
      append_run(out, k, m);
  return out;
}

// s_{n+t} (s_{n+t-1} s_{n+t}) ⋯ (s_{t+1} ⋯ s_{n+t})
inline Word bc_prefix(int n, int t) {
  Word out;
  for (int k = 1; k <= n; ++k)
    append_run(out, n + t - k + 1, n + t);
  return out;
}

// G_{n-1} ⋯ G_1 with G_p = (s_{t+p} ⋯ s_{n+t-2}) s_X, X = n+t (p odd) or n+t-1 (p even)
inline Word d_prefix(int n, int t) {
  Word out;
  for (int p = n - 1; p >= 1; --p) {
    append_run(out, t + p, n + t - 2);
    out.push_back(p % 2 ? n + t : n + t - 1);
  }
  return out;
}

// longest element of the type A Levi on s_{t+1} … s_{top+t}
inline Word type_a_levi_longest(int top, int t) {
  Word out;
  for (int m = top + t; m >= t + 1; --m)
    append_run(out, t + 1, m);
  return out;
}

} // namespace detail

// w_c as a word in the stretched system, from the reduced decompositions.
inline Word build_wc(const RootSystem& rs, const CutSet& cuts) {
  make_cutset(rs, cuts.cuts);
  const int n = rs.rank();
  const int t = cuts.size();
  switch (rs.family()) {
  case Family::A:
    return detail::type_a_factors(cuts.cuts, n);
  case Family::B:
  case Family::C: {
    Word w = detail::bc_prefix(n, t);
    auto tail = detail::type_a_factors(cuts.cuts, n - 1);
    w.insert(w.end(), tail.begin(), tail.end());
    return w;
  }
  case Family::D: {
    Word w = detail::d_prefix(n, t);
    auto tail = detail::type_a_factors(cuts.cuts, n - 1);
    w.insert(w.end(), tail.begin(), tail.end());
    return w;
  }
  }
  return {};
}

// Longest element of the Levi on s_{t+1} … s_{n+t}, in the per-type form.
inline Word levi_longest_word(const RootSystem& rs, int t) {
  const int n = rs.rank();
  Word w;
  switch (rs.family()) {
  case Family::A:
    return detail::type_a_levi_longest(n, t);
  case Family::B:
  case Family::C:
    w = detail::bc_prefix(n, t);
    break;
  case Family::D:
    w = detail::d_prefix(n, t);
    break;
  }
  auto tail = detail::type_a_levi_longest(n - 1, t);
  w.insert(w.end(), tail.begin(), tail.end());
  return w;
}

// w_{0,t} F_t ⋯ F_1 with F_k = (s_{k+1} ⋯ s_{c_k+k})(s_k ⋯ s_{c_k+k-1}); not reduced in general.
inline Word wc_definition_word(const RootSystem& rs, const CutSet& cuts) {
  make_cutset(rs, cuts.cuts);
  Word w = levi_longest_word(rs, cuts.size());
  for (int k = cuts.size(); k >= 1; --k) {
    int c = cuts.cuts[k - 1];
    detail::append_run(w, k + 1, c + k);
    detail::append_run(w, k, c + k - 1);
  }
  return w;
}

// Sorting key for signed column indices in the order 1 < … < N < 0 < -N < … < -1.
inline int column_order_key(int x, int big_rank) {
  if (x > 0)
    return x;
  if (x == 0)
    return big_rank + 1;
  return 2 * big_rank + 2 + x;
}

inline void sort_columns(std::vector<int>& cols, int big_rank) {
  std::sort(cols.begin(), cols.end(),
            [&](int a, int b) { return column_order_key(a, big_rank) < column_order_key(b, big_rank); });
}

inline void check_fundamental_index(const RootSystem& rs, int i) {
  int top = rs.family() == Family::A ? rs.rank() : rs.rank() - 1;
  if (i < 1 || i > top)
    throw DomainError("fundamental index " + std::to_string(i) + " outside [1," + std::to_string(top) + "]");
}

// w_c({1, …, σ(i)}) by direct action.
inline std::vector<int> extremal_columns(const RootSystem& rs, const CutSet& cuts, int i) {
  check_fundamental_index(rs, i);
  auto m = make_stretch(rs, cuts);
  RootSystem big = stretched_system(m);
  auto w = word_to_element(big, build_wc(rs, cuts)).element;
  std::vector<int> out;
  for (int k = 1; k <= m.sigma[i]; ++k)
    out.push_back(w(k));
  sort_columns(out, big.rank());
  return out;
}

// Closed-form column sets: A {1..ℓ-i} ∪ {n+2+ℓ-2i .. n+1+ℓ-i};
// B, D {1..ℓ-i} ∪ {-(2t+i+1-ℓ) .. -(2t+2i-ℓ)}, with ℓ = σ(i).
inline std::vector<int> extremal_columns_closed_form(const RootSystem& rs, const CutSet& cuts, int i) {
  check_fundamental_index(rs, i);
  if (rs.family() == Family::C)
    throw DomainError("no closed form for type C extremal columns");
  auto m = make_stretch(rs, cuts);
  const int n = rs.rank(), t = m.t, l = m.sigma[i];
  std::vector<int> out;
  for (int k = 1; k <= l - i; ++k)
    out.push_back(k);
  if (rs.family() == Family::A) {
    for (int k = n + 2 + l - 2 * i; k <= n + 1 + l - i; ++k)
      out.push_back(k);
  } else {
    for (int k = 2 * t + i + 1 - l; k <= 2 * t + 2 * i - l; ++k)
      out.push_back(-k);
  }
  sort_columns(out, m.big_rank());
  return out;
}

// Type A: w_c(σ(j)) = σ(j)+n-2j+2 when σ(j-1) = σ(j)-1; otherwise
// w_c(σ(j)-1) = σ(j)-j and w_c(σ(j)) = σ(j)+n-j+1.
inline std::map<int, int> type_a_wc_closed_form(const RootSystem& rs, const CutSet& cuts) {
  if (rs.family() != Family::A)
    throw DomainError("closed form for w_c is stated for type A only");
  auto m = make_stretch(rs, cuts);
  const int n = rs.rank();
  std::map<int, int> out;
  for (int j = 1; j <= n; ++j) {
    int l = m.sigma[j];
    if (l == m.sigma[j - 1] + 1) {
      out[l] = l + n - 2 * j + 2;
    } else {
      out[l - 1] = l - j;
      out[l] = l + n - j + 1;
    }
  }
  return out;
}

struct WeylGroupReport {
  bool ok = true;
  Word word;
  int length = 0;
  int expected_length = 0;
  bool reduced = false;
  std::set<Coords> inversions;
  std::set<Coords> image;
  std::vector<std::string> problems;
};

// Φ̃⁺_{w_c} = Φ̃⁺_c and ℓ(w_c) = |Φ⁺|.
inline WeylGroupReport verify_prop_weylgroup(const RootSystem& rs, const CutSet& cuts) {
  WeylGroupReport r;
  auto m = make_stretch(rs, cuts);
  RootSystem big = stretched_system(m);
  r.word = build_wc(rs, cuts);
  auto res = word_to_element(big, r.word);
  r.reduced = res.reduced;
  auto inv = inversion_set(big, res.element);
  r.length = static_cast<int>(inv.size());
  r.expected_length = rs.size();
  for (int k : inv)
    r.inversions.insert(big.coords(k));
  r.image = image_set(m, rs);
  if (!r.reduced) {
    r.ok = false;
    r.problems.push_back("word of length " + std::to_string(r.word.size()) + " is not reduced");
  }
  if (r.length != r.expected_length) {
    r.ok = false;
    r.problems.push_back("length " + std::to_string(r.length) + ", expected " + std::to_string(r.expected_length));
  }
  if (r.inversions != r.image) {
    r.ok = false;
    r.problems.push_back("inversion set differs from the image of ψ");
  }
  return r;
}

} // namespace degen

#endif
