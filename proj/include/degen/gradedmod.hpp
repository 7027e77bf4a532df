#ifndef DEGEN_GRADEDMOD_HPP
#define DEGEN_GRADEDMOD_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "chevalley.hpp"
#include "cones.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "rootsys.hpp"
#include "stretch.hpp"
#include "weyl.hpp"

namespace degen {

// Λ^k of the vector representation. Basis vectors are k-subsets of
// positions, stored as bitmasks and listed lexicographically in the order
// 1 < … < n (< 0) < -n < … < -1.
class WedgeModule {
public:
  WedgeModule(const RootSystem& rs, int k) : rs_(rs), k_(k), cb_(build_chevalley_basis(rs)) {
    const int dim = cb_.rep.dim();
    if (dim > 31)
      throw DomainError("vector representation too large for the wedge basis");
    std::vector<int> pick(k);
    for (int j = 0; j < k; ++j)
      pick[j] = j;
    for (;;) {
      std::uint32_t m = 0;
      for (int x : pick)
        m |= 1u << x;
      index_.emplace(m, static_cast<int>(basis_.size()));
      basis_.push_back(m);
      int j = k - 1;
      while (j >= 0 && pick[j] == dim - k + j)
        --j;
      if (j < 0)
        break;
      ++pick[j];
      for (int r = j + 1; r < k; ++r)
        pick[r] = pick[r - 1] + 1;
    }
  }

  const RootSystem& root_system() const { return rs_; }
  const ChevalleyBasis& chevalley() const { return cb_; }
  int k() const { return k_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  std::uint32_t mask(int idx) const { return basis_.at(idx); }

  int index_of(std::uint32_t mask) const {
    auto it = index_.find(mask);
    if (it == index_.end())
      throw DomainError("not a basis vector of this wedge power");
    return it->second;
  }

  // basis vector e_{s_1} ∧ … ∧ e_{s_k} for signed labels
  int index_of_labels(const std::vector<int>& labels) const {
    std::uint32_t m = 0;
    for (int s : labels)
      m |= 1u << cb_.rep.position(s);
    return index_of(m);
  }

  int highest_weight_vector() const { return 0; }

  Coords weight(int idx) const {
    Coords w(rs_.dim(), 0);
    for (int p = 0; p < cb_.rep.dim(); ++p)
      if (basis_[idx] >> p & 1)
        w = w + cb_.rep.weight(p, rs_.dim());
    return w;
  }

  // Applies a matrix on the vector representation as a derivation.
  SparseVector apply(const SparseMatrix& x, const SparseVector& v) const {
    SparseVector out;
    for (const auto& [idx, coef] : v) {
      std::uint32_t m = basis_[idx];
      for (const auto& e : x) {
        if (!(m >> e.col & 1))
          continue;
        if (e.row == e.col) {
          add(out, idx, coef * e.val);
          continue;
        }
        if (m >> e.row & 1)
          continue;
        // move e_col to the slot of e_row; sign from the vectors in between
        int lo = std::min(e.row, e.col), hi = std::max(e.row, e.col);
        std::uint32_t between = m & ~(1u << e.col) & (((1u << hi) - 1) & ~((1u << (lo + 1)) - 1));
        long sign = std::popcount(between) % 2 ? -1 : 1;
        add(out, index_.at((m & ~(1u << e.col)) | (1u << e.row)), coef * (sign * e.val));
      }
    }
    return out;
  }

  // e_β (raising) and f_β (lowering) for a positive root index
  SparseVector raise(int root, const SparseVector& v) const { return apply(cb_.matrices[root], v); }
  SparseVector lower(int root, const SparseVector& v) const { return apply(cb_.matrices[root + rs_.size()], v); }

  SparseMatrix lift(const SparseMatrix& x) const {
    std::map<std::pair<int, int>, long> acc;
    for (int c = 0; c < dim(); ++c)
      for (const auto& [r, v] : apply(x, SparseVector{{c, Rational(1)}}))
        acc[{r, c}] += v.get_num().get_si();
    return normalize_matrix(acc);
  }

private:
  static void add(SparseVector& out, int idx, const Rational& v) {
    auto [it, fresh] = out.emplace(idx, v);
    if (!fresh) {
      it->second += v;
      if (sgn(it->second) == 0)
        out.erase(it);
    }
  }

  RootSystem rs_;
  int k_;
  ChevalleyBasis cb_;
  std::vector<std::uint32_t> basis_;
  std::unordered_map<std::uint32_t, int> index_;
};

// Highest non-spin fundamental index per family.
inline int max_wedge_index(const RootSystem& rs) {
  switch (rs.family()) {
  case Family::A: return rs.rank();
  case Family::B: return rs.rank() - 1;
  case Family::D: return rs.rank() - 2;
  case Family::C: return 0;
  }
  return 0;
}

inline WedgeModule build_wedge_module(const RootSystem& rs, int k) {
  if (rs.family() == Family::C)
    throw UnsupportedWeight("type C fundamental modules are not realized as wedge powers");
  if (k < 1 || k > rs.rank())
    throw DomainError("fundamental index " + std::to_string(k) + " outside [1," + std::to_string(rs.rank()) + "]");
  if (k > max_wedge_index(rs))
    throw UnsupportedWeight("fundamental weight " + std::to_string(k) + " of " + rs.id().str() + " is a spin weight");
  return WedgeModule(rs, k);
}

// Graded dimensions of the associated graded of V(ϖ_k) for the degree
// filtration F_m = span{f_{β_1} ⋯ f_{β_ℓ} v : Σ d_{β_i} <= m}. Vectors are
// visited in increasing degree and kept only when they enlarge the span.
inline std::map<Rational, int> filtration_dims(const WedgeModule& m, const DegreeVector& d) {
  const RootSystem& rs = m.root_system();
  if (static_cast<int>(d.size()) != rs.size())
    throw DomainError("degree vector has " + std::to_string(d.size()) + " entries, expected " +
                      std::to_string(rs.size()));
  for (const auto& x : d)
    if (sgn(x) < 0)
      throw DomainError("degree vector has a negative entry");
  if (!membership(abelianisation_cone(rs), d, MembershipMode::Closure))
    throw ConeMembershipError("degree vector is not in the cone of partial abelianisations");

  struct Item {
    Rational degree;
    long order;
    SparseVector v;
  };
  auto later = [](const Item& a, const Item& b) {
    if (a.degree != b.degree)
      return a.degree > b.degree;
    return a.order > b.order;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(later)> queue(later);
  long order = 0;
  queue.push({0, order++, SparseVector{{m.highest_weight_vector(), Rational(1)}}});
  SparseEchelon span;
  std::map<Rational, int> dims;
  while (!queue.empty() && span.dim() < m.dim()) {
    Item it = queue.top();
    queue.pop();
    if (!span.insert(it.v))
      continue;
    ++dims[it.degree];
    for (int b = 0; b < rs.size(); ++b) {
      auto next = m.lower(b, it.v);
      if (!next.empty())
        queue.push({it.degree + d[b], order++, std::move(next)});
    }
  }
  return dims;
}

struct SpanResult {
  int dim = 0;
  bool prefix_kept = true; // every produced basis vector contains e_1 ∧ … ∧ e_{σ(i)-i}
  std::vector<int> start_columns;
};

// dim U(ñ₊)·v_{w_c(ϖ_σ(i))} inside Λ^{σ(i)} of the stretched vector representation.
inline SpanResult demazure_span_dim(const RootSystem& rs, const CutSet& cuts, int i) {
  if (rs.family() == Family::C)
    throw UnsupportedWeight("type C is not realized through wedge powers");
  if (i < 1 || i > rs.rank())
    throw DomainError("fundamental index " + std::to_string(i) + " outside [1," + std::to_string(rs.rank()) + "]");
  if (i > max_wedge_index(rs))
    throw UnsupportedWeight("fundamental weight " + std::to_string(i) + " of " + rs.id().str() + " is a spin weight");
  auto sm = make_stretch(rs, cuts);
  RootSystem big = stretched_system(sm);
  WedgeModule module(big, sm.sigma[i]);
  SpanResult r;
  r.start_columns = extremal_columns(rs, cuts, i);
  std::uint32_t prefix = 0;
  for (int s = 1; s <= sm.sigma[i] - i; ++s)
    prefix |= 1u << module.chevalley().rep.position(s);

  SparseEchelon span;
  std::deque<SparseVector> todo{SparseVector{{module.index_of_labels(r.start_columns), Rational(1)}}};
  while (!todo.empty()) {
    SparseVector v = std::move(todo.front());
    todo.pop_front();
    if (!span.insert(v))
      continue;
    for (const auto& [idx, c] : v)
      if ((module.mask(idx) & prefix) != prefix)
        r.prefix_kept = false;
    for (int b = 0; b < big.size(); ++b) {
      auto next = module.raise(b, v);
      if (!next.empty())
        todo.push_back(std::move(next));
    }
  }
  r.dim = span.dim();
  return r;
}

} // namespace degen

#endif
