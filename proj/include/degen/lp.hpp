#ifndef DEGEN_LP_HPP
#define DEGEN_LP_HPP

#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace degen {

struct LpResult {
  enum class Status { Optimal, Unbounded };
  Status status = Status::Optimal;
  Rational value;
  RationalVector x;
};

// Exact dense simplex with Bland's rule.
//   maximize c·y  subject to  G y <= h,  y free.
// Requires h >= 0 so the origin is a feasible starting vertex.
inline LpResult maximize(const RationalVector& c, const RationalMatrix& g, const RationalVector& h) {
  const int k = static_cast<int>(c.size());
  const int m = static_cast<int>(g.size());
  for (const auto& x : h)
    if (sgn(x) < 0)
      throw LpError("right-hand side must be nonnegative");
  // columns: y+ (k), y- (k), slack (m), rhs
  const int cols = 2 * k + m;
  RationalMatrix t(m, RationalVector(cols + 1, 0));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(g[i].size()) != k)
      throw LpError("constraint row has the wrong length");
    for (int j = 0; j < k; ++j) {
      t[i][j] = g[i][j];
      t[i][k + j] = -g[i][j];
    }
    t[i][2 * k + i] = 1;
    t[i][cols] = h[i];
    basis[i] = 2 * k + i;
  }
  RationalVector obj(cols + 1, 0); // reduced costs, negated objective
  for (int j = 0; j < k; ++j) {
    obj[j] = -c[j];
    obj[k + j] = c[j];
  }

  for (;;) {
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (sgn(obj[j]) < 0) {
        enter = j;
        break;
      }
    if (enter < 0)
      break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0)
        continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0)
      return {LpResult::Status::Unbounded, 0, {}};
    Rational inv = 1 / t[leave][enter];
    for (int j = 0; j <= cols; ++j)
      if (sgn(t[leave][j]) != 0)
        t[leave][j] *= inv;
    std::vector<int> nz;
    for (int j = 0; j <= cols; ++j)
      if (sgn(t[leave][j]) != 0)
        nz.push_back(j);
    for (int i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0)
        continue;
      Rational f = t[i][enter];
      for (int j : nz)
        t[i][j] -= f * t[leave][j];
    }
    if (sgn(obj[enter]) != 0) {
      Rational f = obj[enter];
      for (int j : nz)
        obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  LpResult r;
  r.value = obj[cols];
  r.x.assign(k, 0);
  for (int i = 0; i < m; ++i) {
    int b = basis[i];
    if (b < k)
      r.x[b] += t[i][cols];
    else if (b < 2 * k)
      r.x[b - k] -= t[i][cols];
  }
  return r;
}

} // namespace degen

#endif
