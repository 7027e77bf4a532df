#ifndef DEGEN_POLYTOPES_HPP
#define DEGEN_POLYTOPES_HPP

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "errors.hpp"
#include "rootsys.hpp"
#include "weyl.hpp"

namespace degen {

// ---- root poset: α ≻ β iff α - β ∈ Φ⁺

inline bool poset_greater(const RootSystem& rs, int a, int b) { return rs.is_positive_root(rs.coords(a) - rs.coords(b)); }

struct TransitivityReport {
  bool transitive = true;
  long violations = 0;                 // triples a ≻ b ≻ c with a ⊁ c
  std::optional<std::array<int, 3>> example;
  bool closure_is_containment = false; // type A: closure equals interval containment
};

inline TransitivityReport poset_transitivity(const RootSystem& rs) {
  TransitivityReport r;
  const int p = rs.size();
  std::vector<std::vector<char>> gt(p, std::vector<char>(p, 0));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      gt[a][b] = poset_greater(rs, a, b);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      if (gt[a][b])
        for (int c = 0; c < p; ++c)
          if (gt[b][c] && !gt[a][c]) {
            r.transitive = false;
            ++r.violations;
            if (!r.example)
              r.example = std::array<int, 3>{a, b, c};
          }
  if (rs.family() == Family::A) {
    auto closure = gt;
    for (int k = 0; k < p; ++k)
      for (int a = 0; a < p; ++a)
        if (closure[a][k])
          for (int b = 0; b < p; ++b)
            if (closure[k][b])
              closure[a][b] = 1;
    r.closure_is_containment = true;
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        Label la = rs.label(a), lb = rs.label(b);
        bool contains = a != b && la.i <= lb.i && lb.j <= la.j;
        if (static_cast<bool>(closure[a][b]) != contains)
          r.closure_is_containment = false;
      }
  }
  return r;
}

// ---- join and meet of type A roots

struct JoinMeet {
  std::optional<int> join; // present when the union of supports is consecutive
  std::optional<int> meet; // present when the supports intersect
};

inline JoinMeet join_meet(const RootSystem& rs, int a, int b) {
  if (rs.family() != Family::A)
    throw DomainError("join and meet are defined for type A only");
  Label x = rs.label(a), y = rs.label(b);
  JoinMeet out;
  if (std::max(x.i, y.i) <= std::min(x.j, y.j) + 1)
    out.join = rs.index_of(Label::straight(std::min(x.i, y.i), std::max(x.j, y.j)));
  if (std::max(x.i, y.i) <= std::min(x.j, y.j))
    out.meet = rs.index_of(Label::straight(std::max(x.i, y.i), std::min(x.j, y.j)));
  return out;
}

inline bool is_triangular_set(const RootSystem& rs, const std::set<int>& roots) {
  for (int a : roots)
    for (int b : roots) {
      auto jm = join_meet(rs, a, b);
      if (jm.join && !roots.count(*jm.join))
        return false;
      if (jm.meet && !roots.count(*jm.meet))
        return false;
    }
  return true;
}

// W(C_N) → W(A_{2N-1}): ε_k ↦ k, -ε_k ↦ 2N+1-k; sends s_i to t_i t_{2N-i} (i < N) and s_N to t_N.
inline WeylElement embed_c_in_a(const WeylElement& w) {
  if (w.family != Family::C)
    throw DomainError("embedding expects a type C element");
  const int n = w.rank;
  WeylElement out{Family::A, 2 * n - 1, std::vector<int>(2 * n)};
  for (int k = 1; k <= n; ++k) {
    int m = w(k);
    int pos = m > 0 ? m : 2 * n + 1 + m;
    out.image[k - 1] = pos;
    out.image[2 * n - k] = 2 * n + 1 - pos;
  }
  return out;
}

inline bool is_triangular(const RootSystem& rs, const WeylElement& w) {
  if (rs.family() == Family::A)
    return is_triangular_set(rs, inversion_set(rs, w));
  if (rs.family() == Family::C) {
    RootSystem a({Family::A, 2 * rs.rank() - 1});
    return is_triangular_set(a, inversion_set(a, embed_c_in_a(w)));
  }
  throw DomainError("triangular elements are defined for types A and C only");
}

// ---- marked chain polytopes (FFLV) for types A and C
//
// Positive roots sit on a grid of cells (p, q). Type A: 1 <= p <= q <= n with
// (p, q) = α_{p,q}. Type C: 1 <= p <= q <= 2n-p, columns ordered
// 1 < … < n < n-1̄ < … < 1̄, so q > n stands for α_{p, (2n-q)̄}.
// A path moves from a cell to (p+1, q) or (p, q+1). For each start (i, i)
// the path sums are bounded at the terminals:
//   A: (j, j), j >= i, by λ_i + … + λ_j;
//   C: (j, j), j >= i, by λ_i + … + λ_j, and (j, 2n-j), j >= i, by λ_i + … + λ_n.

struct PolytopeGrid {
  struct Cell {
    int p = 0, q = 0;
    int root = -1;
  };
  Family family = Family::A;
  int n = 0;
  std::vector<Cell> cells; // row-major, so predecessors come first
  std::vector<std::vector<int>> index; // (p, q) → cell or -1

  int at(int p, int q) const {
    if (p < 1 || q < 1 || p >= static_cast<int>(index.size()) || q >= static_cast<int>(index[p].size()))
      return -1;
    return index[p][q];
  }
  int width() const { return family == Family::A ? n : 2 * n - 1; }
};

inline PolytopeGrid polytope_grid(const RootSystem& rs) {
  if (rs.family() != Family::A && rs.family() != Family::C)
    throw DomainError("marked chain polytopes are implemented for types A and C only");
  PolytopeGrid g;
  g.family = rs.family();
  g.n = rs.rank();
  const int n = g.n;
  g.index.assign(n + 2, std::vector<int>(g.width() + 2, -1));
  for (int p = 1; p <= n; ++p) {
    int last = g.family == Family::A ? n : 2 * n - p;
    for (int q = p; q <= last; ++q) {
      Label l = q <= n ? Label::straight(p, q) : Label::barred(p, 2 * n - q);
      g.index[p][q] = static_cast<int>(g.cells.size());
      g.cells.push_back({p, q, rs.index_of(l)});
    }
  }
  return g;
}

struct Terminal {
  int cell = 0;
  long bound = 0;
};

inline std::vector<Terminal> terminals(const PolytopeGrid& g, const std::vector<int>& lambda, int start) {
  auto partial = [&](int from, int to) {
    long s = 0;
    for (int k = from; k <= to; ++k)
      s += lambda[k - 1];
    return s;
  };
  std::vector<Terminal> out;
  for (int j = start; j <= g.n; ++j)
    out.push_back({g.at(j, j), partial(start, j)});
  if (g.family == Family::C)
    for (int j = start; j < g.n; ++j)
      out.push_back({g.at(j, 2 * g.n - j), partial(start, g.n)});
  return out;
}

inline bool cell_reaches(const PolytopeGrid& g, int from, int to) {
  const auto& a = g.cells[from];
  const auto& b = g.cells[to];
  return a.p <= b.p && a.q <= b.q;
}

struct ChainInequality {
  std::vector<int> roots; // indices of the positive roots on the path
  long bound = 0;
};

// Every path inequality, by explicit enumeration; exponential, meant for small ranks.
inline std::vector<ChainInequality> marked_chain_inequalities(const RootSystem& rs, const std::vector<int>& lambda) {
  if (static_cast<int>(lambda.size()) != rs.rank())
    throw DomainError("weight has the wrong number of coordinates");
  auto g = polytope_grid(rs);
  std::vector<ChainInequality> out;
  for (int i = 1; i <= g.n; ++i)
    for (const auto& t : terminals(g, lambda, i)) {
      std::vector<int> path;
      auto walk = [&](auto&& self, int c) -> void {
        path.push_back(g.cells[c].root);
        if (c == t.cell) {
          out.push_back({path, t.bound});
        } else {
          for (int next : {g.at(g.cells[c].p + 1, g.cells[c].q), g.at(g.cells[c].p, g.cells[c].q + 1)})
            if (next >= 0 && cell_reaches(g, next, t.cell))
              self(self, next);
        }
        path.pop_back();
      };
      walk(walk, g.at(i, i));
    }
  return out;
}

namespace detail {

struct CountEntry {
  int start = 0;    // row in the path-sum table
  int pred_a = -1;  // (p-1, q) when reachable from the start
  int pred_b = -1;  // (p, q-1) when reachable from the start
  long limit = 0;   // smallest terminal bound reachable from this cell
};

class LatticeCounter {
public:
  LatticeCounter(const PolytopeGrid& g, const std::vector<int>& lambda) : k_(static_cast<int>(g.cells.size())) {
    entries_.resize(k_);
    sums_.assign(static_cast<std::size_t>(g.n) * k_, 0);
    for (int i = 1; i <= g.n; ++i) {
      auto terms = terminals(g, lambda, i);
      int origin = g.at(i, i);
      for (int c = 0; c < k_; ++c) {
        if (!cell_reaches(g, origin, c))
          continue;
        long limit = LONG_MAX;
        for (const auto& t : terms)
          if (cell_reaches(g, c, t.cell))
            limit = std::min(limit, t.bound);
        if (limit == LONG_MAX)
          continue;
        CountEntry e{i - 1, -1, -1, limit};
        int a = g.at(g.cells[c].p - 1, g.cells[c].q), b = g.at(g.cells[c].p, g.cells[c].q - 1);
        if (a >= 0 && cell_reaches(g, origin, a))
          e.pred_a = a;
        if (b >= 0 && cell_reaches(g, origin, b))
          e.pred_b = b;
        entries_[c].push_back(e);
      }
    }
  }

  std::uint64_t count() { return k_ == 0 ? 1 : descend(0); }

private:
  long& sum(int start, int cell) { return sums_[static_cast<std::size_t>(start) * k_ + cell]; }

  std::uint64_t descend(int c) {
    long ub = LONG_MAX;
    auto& es = entries_[c];
    long* base = &scratch(c, es.size());
    for (std::size_t k = 0; k < es.size(); ++k) {
      const auto& e = es[k];
      long m = 0;
      if (e.pred_a >= 0)
        m = std::max(m, sum(e.start, e.pred_a));
      if (e.pred_b >= 0)
        m = std::max(m, sum(e.start, e.pred_b));
      base[k] = m;
      ub = std::min(ub, e.limit - m);
    }
    if (ub < 0)
      return 0;
    if (ub == LONG_MAX)
      throw InvariantViolation("unbounded cell in marked chain polytope");
    if (c == k_ - 1)
      return static_cast<std::uint64_t>(ub + 1);
    std::uint64_t total = 0;
    for (long x = 0; x <= ub; ++x) {
      for (std::size_t k = 0; k < es.size(); ++k)
        sum(es[k].start, c) = base[k] + x;
      total += descend(c + 1);
    }
    return total;
  }

  long& scratch(int c, std::size_t need) {
    if (scratch_.size() <= static_cast<std::size_t>(c))
      scratch_.resize(c + 1);
    if (scratch_[c].size() < need)
      scratch_[c].resize(need);
    return scratch_[c][0];
  }

  int k_;
  std::vector<std::vector<CountEntry>> entries_;
  std::vector<long> sums_;
  std::vector<std::vector<long>> scratch_;
};

} // namespace detail

inline std::uint64_t lattice_point_count(const RootSystem& rs, const std::vector<int>& lambda) {
  auto g = polytope_grid(rs);
  if (static_cast<int>(lambda.size()) != rs.rank())
    throw DomainError("weight has " + std::to_string(lambda.size()) + " coordinates, expected " +
                      std::to_string(rs.rank()));
  for (int x : lambda)
    if (x < 0)
      throw DomainError("weight is not dominant");
  detail::LatticeCounter counter(g, lambda);
  return counter.count();
}

inline nlohmann::json polytope_to_json(const RootSystem& rs, const std::vector<int>& lambda) {
  nlohmann::json ineqs = nlohmann::json::array();
  for (const auto& c : marked_chain_inequalities(rs, lambda)) {
    nlohmann::json roots = nlohmann::json::array();
    for (int r : c.roots)
      roots.push_back(rs.label(r).str());
    ineqs.push_back({{"chain", roots}, {"bound", c.bound}});
  }
  return {{"system", rs.id().str()}, {"lambda", lambda}, {"inequalities", ineqs}};
}

} // namespace degen

#endif
