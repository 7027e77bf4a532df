#ifndef DEGEN_LINALG_HPP
#define DEGEN_LINALG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace degen {

using RationalMatrix = std::vector<RationalVector>;

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (sgn(a[k]) != 0 && sgn(b[k]) != 0)
      s += a[k] * b[k];
  return s;
}

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> rref(RationalMatrix& m, int cols) {
  std::vector<int> pivots;
  int row = 0;
  const int rows = static_cast<int>(m.size());
  for (int col = 0; col < cols && row < rows; ++col) {
    int sel = -1;
    for (int r = row; r < rows; ++r)
      if (sgn(m[r][col]) != 0) {
        sel = r;
        break;
      }
    if (sel < 0)
      continue;
    std::swap(m[row], m[sel]);
    Rational inv = 1 / m[row][col];
    for (int c = col; c < cols; ++c)
      m[row][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || sgn(m[r][col]) == 0)
        continue;
      Rational f = m[r][col];
      for (int c = col; c < cols; ++c)
        if (sgn(m[row][c]) != 0)
          m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int matrix_rank(RationalMatrix m, int cols) { return static_cast<int>(rref(m, cols).size()); }

// Basis of {x : m x = 0}.
inline RationalMatrix nullspace(RationalMatrix m, int cols) {
  auto pivots = rref(m, cols);
  std::vector<int> pivot_row(cols, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    pivot_row[pivots[r]] = static_cast<int>(r);
  RationalMatrix basis;
  for (int free = 0; free < cols; ++free) {
    if (pivot_row[free] >= 0)
      continue;
    RationalVector v(cols, 0);
    v[free] = 1;
    for (int c = 0; c < cols; ++c)
      if (pivot_row[c] >= 0)
        v[c] = -m[pivot_row[c]][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

using SparseVector = std::map<int, Rational>;

inline void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  for (const auto& [k, v] : x) {
    auto it = y.find(k);
    if (it == y.end()) {
      y.emplace(k, a * v);
    } else {
      it->second += a * v;
      if (sgn(it->second) == 0)
        y.erase(it);
    }
  }
}

// Incremental row echelon basis over Q for sparse vectors. Each stored
// vector has its smallest index as pivot, normalized to 1.
class SparseEchelon {
public:
  // Reduces v against the basis; true if it was independent (and is kept).
  bool insert(SparseVector v) {
    reduce(v);
    if (v.empty())
      return false;
    Rational inv = 1 / v.begin()->second;
    for (auto& [k, x] : v)
      x *= inv;
    int p = v.begin()->first;
    basis_.emplace(p, std::move(v));
    return true;
  }

  bool contains(SparseVector v) const {
    reduce(v);
    return v.empty();
  }

  int dim() const { return static_cast<int>(basis_.size()); }

private:
  void reduce(SparseVector& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto b = basis_.find(it->first);
      if (b == basis_.end()) {
        ++it;
        continue;
      }
      int key = it->first;
      Rational f = -it->second;
      axpy(v, f, b->second);
      it = v.upper_bound(key);
    }
  }

  std::map<int, SparseVector> basis_;
};

// Solves a linear system over GF(2). Each equation lists the variables with
// coefficient 1 (repeats cancel) and a right-hand side bit.
struct Gf2Equation {
  std::vector<int> vars;
  int rhs = 0;
};

inline std::optional<std::vector<int>> solve_gf2(int nvars, const std::vector<Gf2Equation>& eqs) {
  const int words = (nvars + 64) / 64; // last bit column holds the rhs
  const int rhs_bit = nvars;
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& e : eqs) {
    std::vector<std::uint64_t> r(words, 0);
    for (int v : e.vars)
      r[v / 64] ^= std::uint64_t(1) << (v % 64);
    if (e.rhs & 1)
      r[rhs_bit / 64] ^= std::uint64_t(1) << (rhs_bit % 64);
    rows.push_back(std::move(r));
  }
  auto bit = [](const std::vector<std::uint64_t>& r, int k) { return (r[k / 64] >> (k % 64)) & 1; };
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (int col = 0; col < nvars && row < rows.size(); ++col) {
    std::size_t sel = rows.size();
    for (std::size_t r = row; r < rows.size(); ++r)
      if (bit(rows[r], col)) {
        sel = r;
        break;
      }
    if (sel == rows.size())
      continue;
    std::swap(rows[row], rows[sel]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != row && bit(rows[r], col))
        for (int w = 0; w < words; ++w)
          rows[r][w] ^= rows[row][w];
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows.size(); ++r)
    if (bit(rows[r], rhs_bit))
      return std::nullopt;
  std::vector<int> x(nvars, 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    x[pivot_col[r]] = static_cast<int>(bit(rows[r], rhs_bit));
  return x;
}

} // namespace degen

#endif
