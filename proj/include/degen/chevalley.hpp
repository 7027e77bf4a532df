#ifndef DEGEN_CHEVALLEY_HPP
#define DEGEN_CHEVALLEY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "rootsys.hpp"

namespace degen {

struct MatrixEntry {
  int row = 0;
  int col = 0;
  long val = 0;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

// Sparse integer matrix, entries sorted by (row, col) with no zeros.
using SparseMatrix = std::vector<MatrixEntry>;

inline SparseMatrix normalize_matrix(const std::map<std::pair<int, int>, long>& acc) {
  SparseMatrix out;
  for (const auto& [rc, v] : acc)
    if (v != 0)
      out.push_back({rc.first, rc.second, v});
  return out;
}

inline SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  std::map<std::pair<int, int>, long> acc;
  for (const auto& x : a)
    for (const auto& y : b)
      if (x.col == y.row)
        acc[{x.row, y.col}] += x.val * y.val;
  return normalize_matrix(acc);
}

inline SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) {
  std::map<std::pair<int, int>, long> acc;
  for (const auto& x : a)
    for (const auto& y : b) {
      if (x.col == y.row)
        acc[{x.row, y.col}] += x.val * y.val;
      if (y.col == x.row)
        acc[{y.row, x.col}] -= x.val * y.val;
    }
  return normalize_matrix(acc);
}

// The defining (vector) representation: sl_{n+1} on C^{n+1}, so_{2n+1}
// on C^{2n+1}, sp_{2n} and so_{2n} on C^{2n}. Basis vectors carry signed
// labels 1..n, 0 (type B only), -n..-1 and are stored in that order.
class VectorRepresentation {
public:
  explicit VectorRepresentation(const RootSystem& rs) : family_(rs.family()), n_(rs.rank()) {
    switch (family_) {
    case Family::A: dim_ = n_ + 1; break;
    case Family::B: dim_ = 2 * n_ + 1; break;
    default: dim_ = 2 * n_; break;
    }
  }

  int dim() const { return dim_; }
  Family family() const { return family_; }

  // position of basis vector e_s
  int position(int s) const {
    if (family_ == Family::A)
      return s - 1;
    if (s > 0)
      return s - 1;
    if (family_ == Family::B) {
      if (s == 0)
        return n_;
      return 2 * n_ + 1 + s;
    }
    return 2 * n_ + s;
  }

  int label_at(int pos) const {
    if (family_ == Family::A || pos < n_)
      return pos + 1;
    if (family_ == Family::B) {
      if (pos == n_)
        return 0;
      return pos - 2 * n_ - 1;
    }
    return pos - 2 * n_;
  }

  // weight of e_s in ε-coordinates of the root system
  Coords weight(int pos, int eps_dim) const {
    Coords w(eps_dim, 0);
    int s = label_at(pos);
    if (s > 0)
      w[s - 1] = 1;
    else if (s < 0)
      w[-s - 1] = -1;
    return w;
  }

  // Root vector E_β for any root β (positive or negative).
  SparseMatrix root_matrix(const Coords& beta) const {
    std::vector<std::pair<int, int>> nz;
    for (int k = 0; k < static_cast<int>(beta.size()); ++k)
      if (beta[k] != 0)
        nz.push_back({k + 1, beta[k]});
    std::map<std::pair<int, int>, long> acc;
    auto put = [&](int r, int c, long v) { acc[{position(r), position(c)}] += v; };
    if (family_ == Family::A) {
      int a = nz[0].second > 0 ? nz[0].first : nz[1].first;
      int b = nz[0].second > 0 ? nz[1].first : nz[0].first;
      put(a, b, 1);
      return normalize_matrix(acc);
    }
    const bool symplectic = family_ == Family::C;
    if (nz.size() == 1) {
      int a = nz[0].first, v = nz[0].second;
      if (v == 2) {
        put(a, -a, 1);
      } else if (v == -2) {
        put(-a, a, 1);
      } else if (v == 1) {
        put(a, 0, 2);
        put(0, -a, -1);
      } else {
        put(0, a, 1);
        put(-a, 0, -2);
      }
      return normalize_matrix(acc);
    }
    auto [a, va] = nz[0];
    auto [b, vb] = nz[1];
    if (va == 1 && vb == -1) {
      put(a, b, 1);
      put(-b, -a, -1);
    } else if (va == -1 && vb == 1) {
      put(b, a, 1);
      put(-a, -b, -1);
    } else if (va == 1) {
      put(a, -b, 1);
      put(b, -a, symplectic ? 1 : -1);
    } else {
      put(-b, a, 1);
      put(-a, b, symplectic ? 1 : -1);
    }
    return normalize_matrix(acc);
  }

private:
  Family family_;
  int n_;
  int dim_ = 0;
};

// Structure constants N_{α,β} of the Chevalley basis {E_γ} realized in the
// vector representation. Roots of Φ are indexed 0..P-1 for Φ⁺ (same order as
// the root system) and P..2P-1 for their negatives.
class StructureTable {
public:
  StructureTable() = default;
  StructureTable(int positive_count) : p_(positive_count), n_(4 * positive_count * positive_count, 0) {}

  int positive_count() const { return p_; }
  int index_count() const { return 2 * p_; }
  static int negative(int p, int positive_count) { return p + positive_count; }

  int get(int a, int b) const { return n_[a * 2 * p_ + b]; }
  void set(int a, int b, int v) { n_[a * 2 * p_ + b] = v; }

  // coefficient of f_{α+β} in [f_α, f_β] with f_γ = E_{-γ}
  int lowering(int a, int b) const { return get(a + p_, b + p_); }
  void set_lowering(int a, int b, int v) { set(a + p_, b + p_, v); }

  // coefficient of e_{α+β} in [e_α, e_β]
  int raising(int a, int b) const { return get(a, b); }

private:
  int p_ = 0;
  std::vector<int> n_;
};

inline Coords signed_root(const RootSystem& rs, int idx) {
  int p = rs.size();
  return idx < p ? rs.coords(idx) : -rs.coords(idx - p);
}

inline std::optional<int> signed_index(const RootSystem& rs, const Coords& c) {
  if (auto f = rs.find(c))
    return *f;
  if (auto f = rs.find(-c))
    return *f + rs.size();
  return std::nullopt;
}

struct ChevalleyBasis {
  VectorRepresentation rep;
  std::vector<SparseMatrix> matrices; // indexed like StructureTable
  StructureTable table;
};

// Writes c as N·e and returns N, or nullopt if c is not a multiple of e.
inline std::optional<long> matrix_ratio(const SparseMatrix& c, const SparseMatrix& e) {
  if (c.size() != e.size() || e.empty())
    return std::nullopt;
  long ratio = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].row != e[k].row || c[k].col != e[k].col)
      return std::nullopt;
    if (c[k].val % e[k].val != 0)
      return std::nullopt;
    long r = c[k].val / e[k].val;
    if (k == 0)
      ratio = r;
    else if (r != ratio)
      return std::nullopt;
  }
  return ratio;
}

inline ChevalleyBasis build_chevalley_basis(const RootSystem& rs) {
  ChevalleyBasis cb{VectorRepresentation(rs), {}, StructureTable(rs.size())};
  const int total = 2 * rs.size();
  for (int k = 0; k < total; ++k)
    cb.matrices.push_back(cb.rep.root_matrix(signed_root(rs, k)));
  for (int a = 0; a < total; ++a)
    for (int b = 0; b < total; ++b) {
      auto sum = signed_index(rs, signed_root(rs, a) + signed_root(rs, b));
      if (!sum)
        continue;
      SparseMatrix c = commutator(cb.matrices[a], cb.matrices[b]);
      auto ratio = matrix_ratio(c, cb.matrices[*sum]);
      if (!ratio || *ratio == 0)
        throw InvariantViolation("bracket of root vectors is not a nonzero multiple of the sum root vector");
      cb.table.set(a, b, static_cast<int>(*ratio));
    }
  return cb;
}

inline StructureTable build_chevalley(const RootSystem& rs) { return build_chevalley_basis(rs).table; }

inline long eval_diagonal(const SparseMatrix& h, const RootSystem& rs, const VectorRepresentation& rep,
                          const Coords& alpha) {
  // α(H) for a diagonal H: read off ε_k(H) from the entry at e_k
  long s = 0;
  for (const auto& e : h) {
    if (e.row != e.col)
      continue;
    int lab = rep.label_at(e.row);
    if (lab > 0)
      s += e.val * alpha[lab - 1];
  }
  (void)rs;
  return s;
}

// Associated graded of n₋ for a degree vector d: [f_α, f_β] survives iff
// d_α + d_β = d_{α+β}.
class GradedLieAlgebra {
public:
  GradedLieAlgebra(RootSystem rs, StructureTable table, RationalVector d)
      : rs_(std::move(rs)), table_(std::move(table)), d_(std::move(d)) {
    const int p = rs_.size();
    if (static_cast<int>(d_.size()) != p)
      throw DomainError("degree vector has " + std::to_string(d_.size()) + " entries, expected " +
                        std::to_string(p));
    sum_.assign(p * p, -1);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        if (auto s = try_add(rs_, a, b)) {
          if (d_[a] + d_[b] < d_[*s])
            throw ConeMembershipError("degree vector violates d(" + rs_.label(a).str() + ") + d(" +
                                      rs_.label(b).str() + ") >= d(" + rs_.label(*s).str() + ")");
          sum_[a * p + b] = *s;
        }
  }

  const RootSystem& root_system() const { return rs_; }
  const StructureTable& table() const { return table_; }
  StructureTable& mutable_table() { return table_; }
  const RationalVector& degrees() const { return d_; }

  struct Term {
    int coefficient = 0;
    int root = 0;
  };

  std::optional<Term> bracket(int a, int b) const {
    const int p = rs_.size();
    int s = sum_[a * p + b];
    if (s < 0 || d_[a] + d_[b] != d_[s])
      return std::nullopt;
    return Term{table_.lowering(a, b), s};
  }

private:
  RootSystem rs_;
  StructureTable table_;
  RationalVector d_;
  std::vector<int> sum_;
};

inline std::optional<GradedLieAlgebra::Term> graded_bracket(const GradedLieAlgebra& g, const Coords& alpha,
                                                            const Coords& beta) {
  const auto& rs = g.root_system();
  auto a = rs.find(alpha), b = rs.find(beta);
  if (!a || !b)
    throw NotAPositiveRoot("graded_bracket expects positive roots");
  return g.bracket(*a, *b);
}

struct JacobiViolation {
  int x, y, z;
  long value;
};

inline std::vector<JacobiViolation> jacobi_violations(const GradedLieAlgebra& g) {
  std::vector<JacobiViolation> out;
  const int p = g.root_system().size();
  auto nested = [&](int x, int y, int z) -> std::pair<long, int> {
    // [x,[y,z]]
    auto yz = g.bracket(y, z);
    if (!yz)
      return {0, -1};
    auto t = g.bracket(x, yz->root);
    if (!t)
      return {0, -1};
    return {static_cast<long>(yz->coefficient) * t->coefficient, t->root};
  };
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y)
      for (int z = 0; z < p; ++z) {
        auto [c1, r1] = nested(x, y, z);
        auto [c2, r2] = nested(y, z, x);
        auto [c3, r3] = nested(z, x, y);
        int target = std::max(r1, std::max(r2, r3));
        if (target < 0)
          continue;
        long total = 0;
        if (r1 == target) total += c1;
        if (r2 == target) total += c2;
        if (r3 == target) total += c3;
        if ((r1 >= 0 && r1 != target) || (r2 >= 0 && r2 != target) || (r3 >= 0 && r3 != target))
          throw InvariantViolation("Jacobi terms land on different roots");
        if (total != 0)
          out.push_back({x, y, z, total});
      }
  return out;
}

inline bool jacobi_check(const GradedLieAlgebra& g) { return jacobi_violations(g).empty(); }

// Height point: d_β = ht(β).
inline RationalVector height_point(const RootSystem& rs) {
  RationalVector d;
  for (int k = 0; k < rs.size(); ++k)
    d.push_back(Rational(rs.height(k)));
  return d;
}

} // namespace degen

#endif
