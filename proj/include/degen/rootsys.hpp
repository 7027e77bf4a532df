#ifndef DEGEN_ROOTSYS_HPP
#define DEGEN_ROOTSYS_HPP

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace degen {

enum class Family { A, B, C, D };

inline char family_char(Family f) { return "ABCD"[static_cast<int>(f)]; }

inline Family parse_family(const std::string& s) {
  if (s.size() == 1) {
    switch (s[0]) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    }
  }
  throw DomainError("unknown family '" + s + "'");
}

inline int min_rank(Family f) {
  switch (f) {
  case Family::A: return 1;
  case Family::B: return 2;
  case Family::C: return 2;
  case Family::D: return 4;
  }
  return 1;
}

struct RootSystemId {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const RootSystemId&, const RootSystemId&) = default;
  std::string str() const { return std::string(1, family_char(family)) + std::to_string(rank); }
};

// ε-coordinates. Length rank+1 for type A, rank otherwise.
using Coords = std::vector<int>;

inline Coords operator+(const Coords& a, const Coords& b) {
  Coords r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    r[k] = a[k] + b[k];
  return r;
}

inline Coords operator-(const Coords& a, const Coords& b) {
  Coords r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    r[k] = a[k] - b[k];
  return r;
}

inline Coords operator-(const Coords& a) {
  Coords r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    r[k] = -a[k];
  return r;
}

inline Coords scaled(const Coords& a, int s) {
  Coords r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    r[k] = s * a[k];
  return r;
}

inline long dot(const Coords& a, const Coords& b) {
  long s = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    s += static_cast<long>(a[k]) * b[k];
  return s;
}

inline bool is_zero(const Coords& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

// Root labels: Straight(i,j) is α_{i,j}, Barred(i,j) is α_{i,j̄}.
struct Label {
  enum class Kind { Straight, Barred };
  Kind kind = Kind::Straight;
  int i = 0;
  int j = 0;

  static Label straight(int i, int j) { return {Kind::Straight, i, j}; }
  static Label barred(int i, int j) { return {Kind::Barred, i, j}; }

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;

  // "1,2" or "1,2b"
  std::string str() const {
    return std::to_string(i) + "," + std::to_string(j) + (kind == Kind::Barred ? "b" : "");
  }
};

inline Label parse_label(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw DomainError("bad root label '" + s + "' (expected i,j or i,jb)");
  std::string tail = s.substr(comma + 1);
  bool barred = !tail.empty() && (tail.back() == 'b' || tail.back() == 'B');
  if (barred)
    tail.pop_back();
  try {
    std::size_t used = 0;
    int i = std::stoi(s.substr(0, comma), &used);
    if (used != comma)
      throw std::invalid_argument("");
    int j = std::stoi(tail, &used);
    if (used != tail.size())
      throw std::invalid_argument("");
    return barred ? Label::barred(i, j) : Label::straight(i, j);
  } catch (const std::logic_error&) {
    throw DomainError("bad root label '" + s + "'");
  }
}

struct Root {
  Coords coords;
  Label label;
};

// A classical root system in ε-coordinates. Positive roots are sorted by
// height and then by label, so index k < rank is the simple root α_{k+1}.
class RootSystem {
public:
  explicit RootSystem(RootSystemId id) : id_(id) {
    if (id.rank < min_rank(id.family))
      throw InvalidRank(std::string("rank ") + std::to_string(id.rank) + " is below the minimum " +
                        std::to_string(min_rank(id.family)) + " for type " + family_char(id.family));
    if (id.rank > 64)
      throw InvalidRank("rank above 64 is not supported");
    dim_ = id.family == Family::A ? id.rank + 1 : id.rank;
    build_coweights();
    build_weights();
    enumerate();
  }

  const RootSystemId& id() const { return id_; }
  Family family() const { return id_.family; }
  int rank() const { return id_.rank; }
  // number of ε-coordinates
  int dim() const { return dim_; }
  int size() const { return static_cast<int>(roots_.size()); }
  const std::vector<Root>& positive() const { return roots_; }
  const Root& root(int idx) const { return roots_.at(idx); }
  const Coords& coords(int idx) const { return roots_.at(idx).coords; }
  const Label& label(int idx) const { return roots_.at(idx).label; }
  // 1-based simple index
  const Coords& simple(int i) const { return roots_.at(i - 1).coords; }
  int simple_index(int i) const { return i - 1; }

  std::optional<int> find(const Coords& c) const {
    auto it = index_.find(c);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  int index_of(const Coords& c) const {
    auto f = find(c);
    if (!f)
      throw NotAPositiveRoot("not a positive root of " + id_.str());
    return *f;
  }

  bool is_root(const Coords& c) const {
    if (static_cast<int>(c.size()) != dim_)
      return false;
    return find(c).has_value() || find(-c).has_value();
  }

  bool is_positive_root(const Coords& c) const {
    return static_cast<int>(c.size()) == dim_ && find(c).has_value();
  }

  // Canonical form of a label: in type C, α_{i,n̄} is written α_{i,n}.
  Label normalize(Label l) const {
    if (id_.family == Family::C && l.kind == Label::Kind::Barred && l.j == id_.rank)
      return Label::straight(l.i, l.j);
    return l;
  }

  std::optional<Coords> label_coords(Label l) const {
    l = normalize(l);
    const int n = id_.rank;
    Coords c(dim_, 0);
    auto e = [&](int k, int v) { c[k - 1] += v; };
    if (l.kind == Label::Kind::Straight) {
      if (l.i < 1 || l.i > l.j || l.j > n)
        return std::nullopt;
      switch (id_.family) {
      case Family::A:
        e(l.i, 1), e(l.j + 1, -1);
        return c;
      case Family::B:
        e(l.i, 1);
        if (l.j < n)
          e(l.j + 1, -1);
        return c;
      case Family::C:
        if (l.j < n)
          e(l.i, 1), e(l.j + 1, -1);
        else if (l.i < n)
          e(l.i, 1), e(n, 1);
        else
          e(n, 2);
        return c;
      case Family::D:
        if (l.j < n)
          e(l.i, 1), e(l.j + 1, -1);
        else if (l.i <= n - 2)
          e(l.i, 1), e(n, 1);
        else if (l.i == n)
          e(n - 1, 1), e(n, 1);
        else
          return std::nullopt;
        return c;
      }
    } else {
      switch (id_.family) {
      case Family::A:
        return std::nullopt;
      case Family::B:
        if (l.i < 1 || l.i >= l.j || l.j > n)
          return std::nullopt;
        e(l.i, 1), e(l.j, 1);
        return c;
      case Family::C:
        if (l.i < 1 || l.i > l.j || l.j > n - 1)
          return std::nullopt;
        e(l.i, 1), e(l.j, 1);
        return c;
      case Family::D:
        if (l.i < 1 || l.i >= l.j || l.j > n - 1)
          return std::nullopt;
        e(l.i, 1), e(l.j, 1);
        return c;
      }
    }
    return std::nullopt;
  }

  std::optional<int> find_label(Label l) const {
    auto c = label_coords(l);
    if (!c)
      return std::nullopt;
    return find(*c);
  }

  int index_of(Label l) const {
    auto f = find_label(l);
    if (!f)
      throw DomainError("label " + l.str() + " is not valid in type " + id_.str());
    return *f;
  }

  // Scaled invariant form: A, D and C use the standard dot product,
  // B uses twice it, so that long roots have length² 4 in B and C.
  long inner(const Coords& a, const Coords& b) const {
    return id_.family == Family::B ? 2 * dot(a, b) : dot(a, b);
  }

  long norm2(const Coords& a) const { return inner(a, a); }

  // ⟨λ, β^∨⟩ for a weight given in doubled ε-coordinates.
  long pairing2(const Coords& weight2, const Coords& beta) const {
    long num = dot(weight2, beta);
    long den = dot(beta, beta);
    if (num % den != 0)
      throw InvariantViolation("non-integral pairing");
    return num / den;
  }

  // ⟨γ, β^∨⟩ for γ an element of the root lattice
  long pairing(const Coords& gamma, const Coords& beta) const {
    return pairing2(scaled(gamma, 2), beta);
  }

  // fundamental weight ϖ_k in doubled ε-coordinates
  const Coords& fundamental2(int k) const { return weights2_.at(k - 1); }

  // Weight Σ λ_k ϖ_k, doubled ε-coordinates.
  Coords weight2(const std::vector<int>& fund) const {
    if (static_cast<int>(fund.size()) != id_.rank)
      throw DomainError("weight has " + std::to_string(fund.size()) + " coordinates, expected " +
                        std::to_string(id_.rank));
    Coords w(dim_, 0);
    for (int k = 0; k < id_.rank; ++k)
      for (int x = 0; x < dim_; ++x)
        w[x] += fund[k] * weights2_[k][x];
    return w;
  }

  // fundamental-weight coordinates of a weight in doubled ε-coordinates
  std::vector<int> fundamental_coords(const Coords& weight2) const {
    std::vector<int> out(id_.rank);
    for (int i = 1; i <= id_.rank; ++i)
      out[i - 1] = static_cast<int>(pairing2(weight2, simple(i)));
    return out;
  }

  // Coefficients in the simple-root basis of any element of the root lattice.
  std::vector<int> simple_coefficients(const Coords& c) const {
    std::vector<int> out(id_.rank);
    for (int i = 0; i < id_.rank; ++i) {
      long v = dot(coweights2_[i], c);
      if (v % 2 != 0)
        throw DomainError("vector is not in the root lattice");
      out[i] = static_cast<int>(v / 2);
    }
    return out;
  }

  Coords from_simple_coefficients(const std::vector<int>& coef) const {
    Coords c(dim_, 0);
    for (int i = 0; i < id_.rank; ++i)
      for (int x = 0; x < dim_; ++x)
        c[x] += coef[i] * roots_[i].coords[x];
    return c;
  }

  int height(int idx) const { return heights_.at(idx); }

  bool is_long(int idx) const {
    long m = 0;
    for (const auto& r : roots_)
      m = std::max(m, norm2(r.coords));
    return norm2(coords(idx)) == m;
  }

  std::vector<std::vector<int>> cartan_matrix() const {
    std::vector<std::vector<int>> a(id_.rank, std::vector<int>(id_.rank));
    for (int i = 1; i <= id_.rank; ++i)
      for (int j = 1; j <= id_.rank; ++j)
        a[i - 1][j - 1] = static_cast<int>(pairing(simple(j), simple(i)));
    return a;
  }

  // matrix of ⟨ϖ_k, α_i^∨⟩
  std::vector<std::vector<int>> fundamental_pairing_matrix() const {
    std::vector<std::vector<int>> a(id_.rank, std::vector<int>(id_.rank));
    for (int k = 1; k <= id_.rank; ++k)
      for (int i = 1; i <= id_.rank; ++i)
        a[k - 1][i - 1] = static_cast<int>(pairing2(fundamental2(k), simple(i)));
    return a;
  }

  int max_height() const { return *std::max_element(heights_.begin(), heights_.end()); }

private:
  struct CoordsLess {
    bool operator()(const Coords& a, const Coords& b) const { return a < b; }
  };

  // Doubled fundamental coweights, dual to the simple roots under the
  // standard dot product: ⟨coweight_i, α_j⟩ = 2 δ_ij.
  void build_coweights() {
    const int n = id_.rank;
    coweights2_.assign(n, Coords(dim_, 0));
    for (int i = 1; i <= n; ++i) {
      Coords& w = coweights2_[i - 1];
      for (int k = 1; k <= i; ++k)
        w[k - 1] = 2;
    }
    if (id_.family == Family::C) {
      std::fill(coweights2_[n - 1].begin(), coweights2_[n - 1].end(), 1);
    } else if (id_.family == Family::D) {
      Coords a(dim_, 1);
      a[n - 1] = -1;
      coweights2_[n - 2] = a;
      coweights2_[n - 1] = Coords(dim_, 1);
    }
  }

  void build_weights() {
    const int n = id_.rank;
    weights2_.assign(n, Coords(dim_, 0));
    for (int k = 1; k <= n; ++k)
      for (int x = 1; x <= k; ++x)
        weights2_[k - 1][x - 1] = 2;
    if (id_.family == Family::B) {
      weights2_[n - 1] = Coords(dim_, 1);
    } else if (id_.family == Family::D) {
      Coords a(dim_, 1);
      a[n - 1] = -1;
      weights2_[n - 2] = a;
      weights2_[n - 1] = Coords(dim_, 1);
    }
  }

  void enumerate() {
    const int n = id_.rank;
    std::vector<Label> labels;
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        labels.push_back(Label::straight(i, j));
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        labels.push_back(Label::barred(i, j));
    std::vector<std::pair<int, Root>> found;
    for (const auto& l : labels) {
      if (normalize(l) != l)
        continue;
      auto c = label_coords(l);
      if (!c)
        continue;
      std::vector<int> coef = simple_coefficients(*c);
      int h = std::accumulate(coef.begin(), coef.end(), 0);
      found.push_back({h, Root{*c, l}});
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first)
        return a.first < b.first;
      return a.second.label < b.second.label;
    });
    for (auto& [h, r] : found) {
      index_.emplace(r.coords, static_cast<int>(roots_.size()));
      heights_.push_back(h);
      roots_.push_back(std::move(r));
    }
  }

  RootSystemId id_;
  int dim_ = 0;
  std::vector<Root> roots_;
  std::vector<int> heights_;
  std::map<Coords, int, CoordsLess> index_;
  std::vector<Coords> coweights2_;
  std::vector<Coords> weights2_;
};

inline RootSystem build_root_system(RootSystemId id) { return RootSystem(id); }

inline RootSystem build_root_system(Family f, int rank) { return RootSystem(RootSystemId{f, rank}); }

// β1 + β2 when it is a positive root.
inline std::optional<int> try_add(const RootSystem& rs, int b1, int b2) {
  return rs.find(rs.coords(b1) + rs.coords(b2));
}

inline std::optional<Coords> try_add(const RootSystem& rs, const Coords& b1, const Coords& b2) {
  if (!rs.is_positive_root(b1) || !rs.is_positive_root(b2))
    throw DomainError("try_add expects positive roots of " + rs.id().str());
  Coords s = b1 + b2;
  if (rs.is_positive_root(s))
    return s;
  return std::nullopt;
}

struct Chain {
  int q = 0;
  int r = 0;
};

// The α-chain through β: β - rα, ..., β + qα.
inline Chain alpha_chain(const RootSystem& rs, const Coords& alpha, const Coords& beta) {
  if (!rs.is_root(alpha) || !rs.is_root(beta))
    throw DomainError("alpha_chain expects roots of " + rs.id().str());
  if (alpha == beta || alpha == -beta)
    throw DomainError("alpha_chain needs α ≠ ±β");
  Chain c;
  Coords x = beta + alpha;
  while (rs.is_root(x)) {
    ++c.q;
    x = x + alpha;
  }
  x = beta - alpha;
  while (rs.is_root(x)) {
    ++c.r;
    x = x - alpha;
  }
  return c;
}

struct RootData {
  int height = 0;
  std::vector<int> support; // 1-based simple indices
  Rational length2;
  RationalVector coroot;
};

inline RootData root_data(const RootSystem& rs, const Coords& beta) {
  if (!rs.is_positive_root(beta))
    throw NotAPositiveRoot("root_data expects a positive root of " + rs.id().str());
  RootData d;
  auto coef = rs.simple_coefficients(beta);
  d.height = std::accumulate(coef.begin(), coef.end(), 0);
  for (int i = 1; i <= rs.rank(); ++i)
    if (rs.pairing2(rs.fundamental2(i), beta) != 0)
      d.support.push_back(i);
  long n2 = rs.norm2(beta);
  d.length2 = Rational(n2);
  // β^∨ = 2β/(β,β) as a vector in the same ε-frame
  for (int x : beta) {
    Rational q(2 * x * (rs.family() == Family::B ? 2 : 1), n2);
    q.canonicalize();
    d.coroot.push_back(q);
  }
  return d;
}

// Positive roots sorted by index, as label strings.
inline std::vector<std::string> label_strings(const RootSystem& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs.positive())
    out.push_back(r.label.str());
  return out;
}

} // namespace degen

#endif
