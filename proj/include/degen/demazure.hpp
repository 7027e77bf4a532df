#ifndef DEGEN_DEMAZURE_HPP
#define DEGEN_DEMAZURE_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rootsys.hpp"
#include "stretch.hpp"
#include "weyl.hpp"

namespace degen {

// Finite sum of e^μ over weights μ in doubled ε-coordinates. Multiplicities
// are signed so that Demazure operators are total on arbitrary input.
struct LaurentChar {
  std::map<Coords, long> terms;

  void add(const Coords& mu, long mult) {
    if (mult == 0)
      return;
    auto [it, fresh] = terms.emplace(mu, mult);
    if (!fresh) {
      it->second += mult;
      if (it->second == 0)
        terms.erase(it);
    }
  }

  long total() const {
    long s = 0;
    for (const auto& [mu, m] : terms)
      s += m;
    return s;
  }

  bool empty() const { return terms.empty(); }
  friend bool operator==(const LaurentChar&, const LaurentChar&) = default;
};

inline LaurentChar monomial(const Coords& mu) {
  LaurentChar c;
  c.add(mu, 1);
  return c;
}

// D_i e^μ = (e^μ - e^{s_i μ - α_i}) / (1 - e^{-α_i}); with m = ⟨μ, α_i^∨⟩:
// m >= 0: e^μ + e^{μ-α} + … + e^{μ-mα};  m = -1: 0;
// m <= -2: -(e^{μ+α} + … + e^{μ+(|m|-1)α}).
inline LaurentChar demazure_step(const RootSystem& rs, int i, const LaurentChar& chi) {
  const Coords alpha2 = scaled(rs.simple(i), 2);
  LaurentChar out;
  Coords cur;
  for (const auto& [mu, mult] : chi.terms) {
    long m = rs.pairing2(mu, rs.simple(i));
    cur = mu;
    if (m >= 0) {
      for (long k = 0; k <= m; ++k) {
        out.add(cur, mult);
        for (std::size_t j = 0; j < cur.size(); ++j)
          cur[j] -= alpha2[j];
      }
    } else {
      for (long k = 1; k <= -m - 1; ++k) {
        for (std::size_t j = 0; j < cur.size(); ++j)
          cur[j] += alpha2[j];
        out.add(cur, -mult);
      }
    }
  }
  return out;
}

inline void check_dominant(const std::vector<int>& lambda, int rank) {
  if (static_cast<int>(lambda.size()) != rank)
    throw DomainError("weight has " + std::to_string(lambda.size()) + " coordinates, expected " +
                      std::to_string(rank));
  for (int x : lambda)
    if (x < 0)
      throw DomainError("weight is not dominant");
}

// Shared memo of D_{i_k} ⋯ D_{i_r} e^λ keyed by word suffix; safe across
// threads. Stops storing once the total number of cached terms hits the budget.
class DemazureCache {
public:
  explicit DemazureCache(std::size_t max_entry_terms = 4096, std::size_t budget_terms = 1 << 20)
      : max_entry_terms_(max_entry_terms), budget_terms_(budget_terms) {}

  std::shared_ptr<const LaurentChar> find(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    return it == memo_.end() ? nullptr : it->second;
  }

  void store(const std::string& key, const LaurentChar& chi) {
    if (chi.terms.size() > max_entry_terms_)
      return;
    std::lock_guard<std::mutex> lock(mutex_);
    if (used_terms_ + chi.terms.size() > budget_terms_)
      return;
    if (memo_.emplace(key, std::make_shared<const LaurentChar>(chi)).second)
      used_terms_ += chi.terms.size();
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.size();
  }

private:
  std::size_t max_entry_terms_;
  std::size_t budget_terms_;
  std::size_t used_terms_ = 0;
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const LaurentChar>> memo_;
};

namespace detail {

inline std::string cache_key(const RootSystem& rs, const Coords& lambda2, const Word& word, std::size_t from) {
  std::string k = rs.id().str() + "|";
  for (int x : lambda2)
    k += std::to_string(x) + ",";
  k += "|";
  for (std::size_t j = from; j < word.size(); ++j)
    k += std::to_string(word[j]) + ",";
  return k;
}

} // namespace detail

// D_{i_1} ⋯ D_{i_r} e^λ for a reduced word.
inline LaurentChar demazure_character(const RootSystem& rs, const Word& word, const std::vector<int>& lambda,
                                      DemazureCache* cache = nullptr) {
  check_dominant(lambda, rs.rank());
  if (!word_to_element(rs, word).reduced)
    throw NotReduced("word is not reduced");
  Coords lambda2 = rs.weight2(lambda);
  LaurentChar chi = monomial(lambda2);
  std::size_t start = word.size();
  if (cache) {
    // longest cached suffix
    for (std::size_t from = 0; from < word.size(); ++from)
      if (auto hit = cache->find(detail::cache_key(rs, lambda2, word, from))) {
        chi = *hit;
        start = from;
        break;
      }
  }
  for (std::size_t j = start; j-- > 0;) {
    chi = demazure_step(rs, word[j], chi);
    if (cache)
      cache->store(detail::cache_key(rs, lambda2, word, j), chi);
  }
  return chi;
}

inline long demazure_dim(const RootSystem& rs, const Word& word, const std::vector<int>& lambda,
                         DemazureCache* cache = nullptr) {
  return demazure_character(rs, word, lambda, cache).total();
}

// ∏_{β>0} ⟨λ+ρ, β^∨⟩ / ⟨ρ, β^∨⟩
inline mpz_class weyl_dim(const RootSystem& rs, const std::vector<int>& lambda) {
  check_dominant(lambda, rs.rank());
  Coords lam2 = rs.weight2(lambda);
  Coords rho2 = rs.weight2(std::vector<int>(rs.rank(), 1));
  mpq_class prod = 1;
  for (int k = 0; k < rs.size(); ++k) {
    long num = rs.pairing2(lam2 + rho2, rs.coords(k));
    long den = rs.pairing2(rho2, rs.coords(k));
    prod *= mpq_class(num, den);
  }
  prod.canonicalize();
  if (prod.get_den() != 1)
    throw InvariantViolation("Weyl dimension is not an integer");
  return prod.get_num();
}

struct DimCase {
  std::vector<int> lambda;
  mpz_class expected; // dim V(λ)
  long computed = 0;  // dim of the Demazure module for Ψ(λ) and w_c
  bool pass() const { return expected == computed; }
};

struct DimReport {
  std::vector<DimCase> cases;
  bool ok() const {
    for (const auto& c : cases)
      if (!c.pass())
        return false;
    return true;
  }
};

inline DimCase dim_case(const RootSystem& rs, const StretchMap& m, const RootSystem& big, const Word& wc,
                        const std::vector<int>& lambda, DemazureCache* cache = nullptr) {
  DimCase c;
  c.lambda = lambda;
  c.expected = weyl_dim(rs, lambda);
  c.computed = demazure_dim(big, wc, psi_weight(m, lambda), cache);
  return c;
}

inline DimReport verify_dim_equalities(const RootSystem& rs, const CutSet& cuts,
                                       const std::vector<std::vector<int>>& grid, DemazureCache* cache = nullptr) {
  auto m = make_stretch(rs, cuts);
  RootSystem big = stretched_system(m);
  Word wc = build_wc(rs, cuts);
  DimReport r;
  for (const auto& lambda : grid)
    r.cases.push_back(dim_case(rs, m, big, wc, lambda, cache));
  return r;
}

inline std::vector<int> fundamental_weight(int rank, int k) {
  std::vector<int> w(rank, 0);
  w.at(k - 1) = 1;
  return w;
}

// all dominant weights with coordinates in [0, bound], lexicographic
inline std::vector<std::vector<int>> weight_grid(int rank, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(rank, 0);
  for (;;) {
    out.push_back(w);
    int k = rank - 1;
    while (k >= 0 && w[k] == bound)
      w[k--] = 0;
    if (k < 0)
      break;
    ++w[k];
  }
  return out;
}

} // namespace degen

#endif
