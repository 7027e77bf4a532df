#ifndef DEGEN_VERIFY_HPP
#define DEGEN_VERIFY_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "chevalley.hpp"
#include "cones.hpp"
#include "demazure.hpp"
#include "gradedmod.hpp"
#include "laiso.hpp"
#include "polytopes.hpp"
#include "report.hpp"
#include "stretch.hpp"
#include "weyl.hpp"

namespace degen {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"facets", "jacobi", "stretch", "weylgroup", "extremal",
                                              "laiso",  "dims",   "polytopes", "wedge"};
  return names;
}

struct SuiteOptions {
  int lambda_bound = 0;
  std::uint64_t seed = 0;
  bool timing = true;
  DemazureCache* cache = nullptr;
};

struct VerifyConfig {
  std::vector<Family> families{Family::A, Family::B, Family::C, Family::D};
  int max_rank = 3;
  int lambda_bound = 0;
  std::vector<std::string> suites = suite_names();
  std::uint64_t seed = 1;
  int jobs = 1;
  bool timestamp = true;
};

// Fundamental weights first, then the other nonzero weights with
// coordinates in [0, bound].
inline std::vector<std::vector<int>> weights_for(int rank, int bound) {
  std::vector<std::vector<int>> out;
  for (int k = 1; k <= rank; ++k)
    out.push_back(fundamental_weight(rank, k));
  for (const auto& w : weight_grid(rank, bound)) {
    int sum = 0;
    for (int x : w)
      sum += x;
    if (sum > 1)
      out.push_back(w);
  }
  return out;
}

namespace detail {

inline std::string join_ints(const std::vector<int>& v, const char* open = "(", const char* close = ")") {
  std::string s = open;
  for (std::size_t k = 0; k < v.size(); ++k)
    s += (k ? "," : "") + std::to_string(v[k]);
  return s + close;
}

inline std::string count_text(long bad, const std::string& what) {
  return std::to_string(bad) + " " + what;
}

class CaseSink {
public:
  CaseSink(std::string suite, const RootSystem& rs, const SuiteOptions& opt, std::vector<CaseRecord>& out)
      : suite_(std::move(suite)), rs_(rs), opt_(opt), out_(out) {}

  // f returns {expected, computed}; the case passes when they are equal
  void add(const std::string& cuts, const std::string& name,
           const std::function<std::pair<std::string, std::string>()>& f) {
    CaseRecord c;
    c.suite = suite_;
    c.family = std::string(1, family_char(rs_.family()));
    c.rank = rs_.rank();
    c.cuts = cuts;
    c.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
      auto [e, got] = f();
      c.expected = std::move(e);
      c.computed = std::move(got);
      c.pass = c.expected == c.computed;
    } catch (const std::exception& ex) {
      c.expected = c.expected.empty() ? "no error" : c.expected;
      c.computed = std::string("error: ") + ex.what();
      c.pass = false;
    }
    if (opt_.timing) {
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      c.runtime_ms = std::round(ms * 1000) / 1000;
    }
    out_.push_back(std::move(c));
  }

private:
  std::string suite_;
  const RootSystem& rs_;
  const SuiteOptions& opt_;
  std::vector<CaseRecord>& out_;
};

inline std::mt19937_64 case_rng(const SuiteOptions& opt, const RootSystem& rs, const std::string& tag) {
  std::vector<std::uint32_t> seeds{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                                   static_cast<std::uint32_t>(rs.family()), static_cast<std::uint32_t>(rs.rank())};
  for (char ch : tag)
    seeds.push_back(static_cast<unsigned char>(ch));
  std::seed_seq seq(seeds.begin(), seeds.end());
  return std::mt19937_64(seq);
}

inline std::string triple_name(const RootSystem& rs, int a, int b, int s) {
  return rs.label(a).str() + " + " + rs.label(b).str() + " = " + rs.label(s).str();
}

inline void suite_facets(CaseSink& sink, const RootSystem& rs, const SuiteOptions&) {
  auto cone = abelianisation_cone(rs);
  for (std::size_t k = 0; k < cone.constraints.size(); ++k) {
    auto [a, b, s] = *cone.constraints[k].triple;
    sink.add("-", "witness " + triple_name(rs, a, b, s), [&, a = a, b = b, s = s] {
      auto d = facet_witness(rs, a, b, s);
      std::string violated;
      for (const auto& c : cone.constraints)
        if (!c.satisfied(d)) {
          auto [x, y, z] = *c.triple;
          violated += (violated.empty() ? "" : "; ") + triple_name(rs, x, y, z);
        }
      return std::pair{"violates only " + triple_name(rs, a, b, s), "violates only " + violated};
    });
  }
}

inline std::string jacobi_text(const GradedLieAlgebra& g) {
  auto v = jacobi_violations(g);
  return v.empty() ? "jacobi holds" : count_text(static_cast<long>(v.size()), "jacobi violations");
}

inline void suite_jacobi(CaseSink& sink, const RootSystem& rs, const SuiteOptions&) {
  StructureTable table = build_chevalley(rs);
  sink.add("-", "height point", [&] {
    return std::pair{std::string("jacobi holds"), jacobi_text(GradedLieAlgebra(rs, table, height_point(rs)))};
  });
  sink.add("-", "strictly superadditive", [&] {
    GradedLieAlgebra g(rs, table, RationalVector(rs.size(), 1));
    long nonzero = 0;
    for (int a = 0; a < rs.size(); ++a)
      for (int b = 0; b < rs.size(); ++b)
        nonzero += g.bracket(a, b).has_value();
    return std::pair{std::string("0 nonzero brackets"), count_text(nonzero, "nonzero brackets")};
  });
  for (const auto& cuts : all_cutsets(rs))
    sink.add(cuts.str(), "relint point", [&] {
      auto cone = dynkin_cone(rs, cuts);
      auto d = relint_point(cone, rs);
      if (!membership(cone, d, MembershipMode::Relint))
        return std::pair{std::string("jacobi holds"), std::string("relint point rejected by membership")};
      return std::pair{std::string("jacobi holds"), jacobi_text(GradedLieAlgebra(rs, table, d))};
    });
}

inline void suite_stretch(CaseSink& sink, const RootSystem& rs, const SuiteOptions& opt) {
  const auto weights = weights_for(rs.rank(), opt.lambda_bound);
  for (const auto& cuts : all_cutsets(rs)) {
    auto m = make_stretch(rs, cuts);
    RootSystem big = stretched_system(m);
    auto img = image_indices(m, rs, big);
    const std::string zero = "0 mismatches";
    sink.add(cuts.str(), "root length", [&] {
      long bad = 0;
      for (int k = 0; k < rs.size(); ++k)
        bad += big.norm2(big.coords(img[k])) != rs.norm2(rs.coords(k));
      return std::pair{zero, count_text(bad, "mismatches")};
    });
    sink.add(cuts.str(), "pi after psi", [&] {
      long bad = 0;
      for (int k = 0; k < rs.size(); ++k) {
        auto p = pi_section(m, rs, big, big.coords(img[k]));
        bad += p.kind != PiResult::Kind::Root || p.root != k;
      }
      return std::pair{zero, count_text(bad, "mismatches")};
    });
    sink.add(cuts.str(), "closure and no-sum", [&] {
      auto r = closure_and_convexity_check(m, rs);
      return std::pair{std::string("closed and convex"),
                       r.ok ? std::string("closed and convex") : r.counterexamples.front()};
    });
    sink.add(cuts.str(), "pairing identities", [&] {
      long bad = 0;
      for (const auto& lambda : weights) {
        Coords w2 = big.weight2(psi_weight(m, lambda));
        Coords v2 = rs.weight2(lambda);
        for (int k = 0; k < rs.size(); ++k)
          bad += big.pairing2(w2, big.coords(img[k])) != rs.pairing2(v2, rs.coords(k));
        for (int x : m.missing)
          bad += big.pairing2(w2, big.simple(x)) != 0;
      }
      return std::pair{zero, count_text(bad, "mismatches")};
    });
  }
}

inline void suite_weylgroup(CaseSink& sink, const RootSystem& rs, const SuiteOptions&) {
  for (const auto& cuts : all_cutsets(rs)) {
    sink.add(cuts.str(), "inversions equal image", [&] {
      auto r = verify_prop_weylgroup(rs, cuts);
      std::string expected = "reduced, length " + std::to_string(r.expected_length) + ", inversions = image";
      std::string got = std::string(r.reduced ? "reduced" : "not reduced") + ", length " + std::to_string(r.length) +
                        ", inversions " + (r.inversions == r.image ? "=" : "!=") + " image";
      return std::pair{expected, got};
    });
    if (rs.family() == Family::A)
      sink.add(cuts.str(), "closed-form permutation", [&] {
        auto m = make_stretch(rs, cuts);
        auto w = word_to_element(stretched_system(m), build_wc(rs, cuts)).element;
        std::vector<int> expected, got;
        for (const auto& [k, v] : type_a_wc_closed_form(rs, cuts)) {
          expected.push_back(v);
          got.push_back(w(k));
        }
        return std::pair{join_ints(expected, "[", "]"), join_ints(got, "[", "]")};
      });
  }
}

inline void suite_extremal(CaseSink& sink, const RootSystem& rs, const SuiteOptions&) {
  if (rs.family() == Family::C)
    return;
  int top = rs.family() == Family::A ? rs.rank() : rs.rank() - 1;
  for (const auto& cuts : all_cutsets(rs))
    for (int i = 1; i <= top; ++i)
      sink.add(cuts.str(), "columns i=" + std::to_string(i), [&, i] {
        return std::pair{join_ints(extremal_columns_closed_form(rs, cuts, i), "{", "}"),
                         join_ints(extremal_columns(rs, cuts, i), "{", "}")};
      });
}

inline std::string iso_text(const IsoReport& r) {
  if (r.ok())
    return "pattern ok, magnitudes ok, rescaling exists";
  return r.problems.empty() ? std::string("not isomorphic") : r.problems.front();
}

inline void suite_laiso(CaseSink& sink, const RootSystem& rs, const SuiteOptions&) {
  for (const auto& cuts : all_cutsets(rs))
    sink.add(cuts.str(), "relint point", [&] {
      auto d = relint_point(dynkin_cone(rs, cuts), rs);
      return std::pair{std::string("pattern ok, magnitudes ok, rescaling exists"), iso_text(verify_laiso(rs, cuts, d))};
    });
}

inline void suite_dims(CaseSink& sink, const RootSystem& rs, const SuiteOptions& opt) {
  const auto weights = weights_for(rs.rank(), opt.lambda_bound);
  for (const auto& cuts : all_cutsets(rs)) {
    auto m = make_stretch(rs, cuts);
    RootSystem big = stretched_system(m);
    Word wc = build_wc(rs, cuts);
    for (const auto& lambda : weights)
      sink.add(cuts.str(), "lambda=" + join_ints(lambda), [&] {
        auto c = dim_case(rs, m, big, wc, lambda, opt.cache);
        return std::pair{c.expected.get_str(), std::to_string(c.computed)};
      });
  }
}

inline void suite_polytopes(CaseSink& sink, const RootSystem& rs, const SuiteOptions& opt) {
  if (rs.family() != Family::A && rs.family() != Family::C)
    return;
  for (const auto& lambda : weights_for(rs.rank(), opt.lambda_bound))
    sink.add("-", "count lambda=" + join_ints(lambda), [&] {
      return std::pair{weyl_dim(rs, lambda).get_str(), std::to_string(lattice_point_count(rs, lambda))};
    });
  for (const auto& cuts : all_cutsets(rs))
    sink.add(cuts.str(), "w_c triangular", [&] {
      RootSystem big({rs.family(), rs.rank() + cuts.size()});
      auto w = word_to_element(big, build_wc(rs, cuts)).element;
      return std::pair{std::string("true"), std::string(is_triangular(big, w) ? "true" : "false")};
    });
}

inline void suite_wedge(CaseSink& sink, const RootSystem& rs, const SuiteOptions& opt) {
  if (rs.family() == Family::C)
    return;
  const int top = max_wedge_index(rs);
  for (const auto& cuts : all_cutsets(rs)) {
    auto m = make_stretch(rs, cuts);
    RootSystem big = stretched_system(m);
    Word wc = build_wc(rs, cuts);
    for (int i = 1; i <= top; ++i)
      sink.add(cuts.str(), "span i=" + std::to_string(i), [&, i] {
        auto lambda = fundamental_weight(rs.rank(), i);
        std::string w = weyl_dim(rs, lambda).get_str();
        auto span = demazure_span_dim(rs, cuts, i);
        long chr = demazure_dim(big, wc, psi_weight(m, lambda), opt.cache);
        std::string got = "span " + std::to_string(span.dim) + ", character " + std::to_string(chr) +
                          (span.prefix_kept ? "" : ", prefix lost");
        return std::pair{"span " + w + ", character " + w, got};
      });
  }
  auto cone = abelianisation_cone(rs);
  std::vector<std::pair<std::string, DegreeVector>> points{{"height", height_vector(rs)},
                                                           {"relint", relint_point(cone, rs)}};
  auto rng = case_rng(opt, rs, "wedge");
  for (int r = 1; r <= 3; ++r)
    points.push_back({"random" + std::to_string(r), random_cone_point(cone, rs, rng)});
  for (int k = 1; k <= top; ++k) {
    auto module = build_wedge_module(rs, k);
    for (const auto& [name, d] : points)
      sink.add("-", "filtration k=" + std::to_string(k) + " d=" + name, [&, &d = d] {
        int total = 0;
        for (const auto& [deg, n] : filtration_dims(module, d))
          total += n;
        return std::pair{std::to_string(module.dim()), std::to_string(total)};
      });
  }
}

} // namespace detail

inline std::vector<CaseRecord> run_suite(const std::string& suite, const RootSystem& rs, const SuiteOptions& opt) {
  std::vector<CaseRecord> out;
  detail::CaseSink sink(suite, rs, opt, out);
  if (suite == "facets")
    detail::suite_facets(sink, rs, opt);
  else if (suite == "jacobi")
    detail::suite_jacobi(sink, rs, opt);
  else if (suite == "stretch")
    detail::suite_stretch(sink, rs, opt);
  else if (suite == "weylgroup")
    detail::suite_weylgroup(sink, rs, opt);
  else if (suite == "extremal")
    detail::suite_extremal(sink, rs, opt);
  else if (suite == "laiso")
    detail::suite_laiso(sink, rs, opt);
  else if (suite == "dims")
    detail::suite_dims(sink, rs, opt);
  else if (suite == "polytopes")
    detail::suite_polytopes(sink, rs, opt);
  else if (suite == "wedge")
    detail::suite_wedge(sink, rs, opt);
  else
    throw DomainError("unknown suite '" + suite + "'");
  return out;
}

struct SuiteTask {
  std::string suite;
  RootSystemId id;
};

// Runs tasks on `jobs` threads; results keep task order.
inline std::vector<CaseRecord> run_tasks(const std::vector<SuiteTask>& tasks, const SuiteOptions& opt, int jobs) {
  std::vector<std::vector<CaseRecord>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < tasks.size();) {
      RootSystem rs(tasks[k].id);
      slots[k] = run_suite(tasks[k].suite, rs, opt);
    }
  };
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j)
    pool.emplace_back(worker);
  worker();
  for (auto& t : pool)
    t.join();
  std::vector<CaseRecord> out;
  for (auto& s : slots)
    out.insert(out.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  return out;
}

inline void validate(const VerifyConfig& cfg) {
  if (cfg.families.empty())
    throw DomainError("no families selected");
  if (cfg.suites.empty())
    throw DomainError("no suites selected");
  for (const auto& s : cfg.suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw DomainError("unknown suite '" + s + "'");
  for (Family f : cfg.families)
    if (cfg.max_rank < min_rank(f))
      throw DomainError(std::string("max rank ") + std::to_string(cfg.max_rank) + " is below the minimum rank " +
                        std::to_string(min_rank(f)) + " of type " + family_char(f));
  if (cfg.lambda_bound < 0)
    throw DomainError("lambda bound must be nonnegative");
  if (cfg.jobs < 1)
    throw DomainError("jobs must be at least 1");
}

inline Report verify_suite(const VerifyConfig& cfg) {
  validate(cfg);
  std::vector<Family> families = cfg.families;
  std::sort(families.begin(), families.end());
  families.erase(std::unique(families.begin(), families.end()), families.end());
  std::vector<std::string> suites;
  for (const auto& s : suite_names())
    if (std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end())
      suites.push_back(s);

  std::vector<SuiteTask> tasks;
  for (const auto& s : suites)
    for (Family f : families)
      for (int n = min_rank(f); n <= cfg.max_rank; ++n)
        tasks.push_back({s, {f, n}});

  DemazureCache cache;
  SuiteOptions opt{cfg.lambda_bound, cfg.seed, cfg.timestamp, &cache};
  Report r;
  r.seed = cfg.seed;
  nlohmann::ordered_json fam = nlohmann::ordered_json::array();
  for (Family f : families)
    fam.push_back(std::string(1, family_char(f)));
  r.config["families"] = fam;
  r.config["max_rank"] = cfg.max_rank;
  r.config["lambda_bound"] = cfg.lambda_bound;
  r.config["suites"] = suites;
  r.cases = run_tasks(tasks, opt, cfg.jobs);
  return r;
}

} // namespace degen

#endif
