#ifndef DEGEN_CLI_HPP
#define DEGEN_CLI_HPP

#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "verify.hpp"

namespace degen {

namespace cli {

using ojson = nlohmann::ordered_json;

enum class Exit { Ok = 0, Failed = 1, Usage = 2 };

inline std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '[' && ch != ']' && ch != '(' && ch != ')') {
      cur += ch;
    }
  }
  if (!cur.empty() || !out.empty())
    out.push_back(cur);
  return out;
}

inline std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  for (const auto& x : split(s)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(x, &used);
    } catch (const std::logic_error&) {
      throw DomainError("not an integer list: '" + s + "'");
    }
    if (used != x.size())
      throw DomainError("not an integer list: '" + s + "'");
    out.push_back(v);
  }
  return out;
}

inline DegreeVector parse_degrees(const std::string& s) {
  DegreeVector d;
  for (const auto& x : split(s)) {
    try {
      d.push_back(parse_rational(x));
    } catch (const std::invalid_argument& e) {
      throw DomainError(e.what());
    }
  }
  return d;
}

inline std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline std::string degrees_text(const DegreeVector& d) {
  std::string s = "(";
  for (std::size_t k = 0; k < d.size(); ++k)
    s += (k ? "," : "") + to_string(d[k]);
  return s + ")";
}

inline ojson degrees_json(const DegreeVector& d) {
  ojson a = ojson::array();
  for (const auto& x : d)
    a.push_back(to_string(x));
  return a;
}

inline std::string columns_text(const std::vector<int>& v) { return detail::join_ints(v, "{", "}"); }

// Shared system options.
struct SystemArgs {
  std::string family;
  int rank = 0;
  std::string cuts;
  std::string format = "text";

  void attach(CLI::App* app, bool with_cuts) {
    app->add_option("--family", family, "root system type A, B, C or D")->required()->envname("DEGEN_FAMILY");
    app->add_option("--rank", rank, "rank")->required()->envname("DEGEN_RANK");
    if (with_cuts)
      app->add_option("--cuts", cuts, "cut set, e.g. 1,3")->envname("DEGEN_CUTS");
    app->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->envname("DEGEN_FORMAT");
  }

  RootSystem system() const { return RootSystem({parse_family(family), rank}); }
  CutSet cutset(const RootSystem& rs) const { return make_cutset(rs, cuts.empty() ? std::vector<int>{} : parse_ints(cuts)); }
  bool json() const { return format == "json"; }
};

inline void print_json(std::ostream& out, const ojson& j) { out << j.dump(2) << "\n"; }

inline int cmd_roots(const SystemArgs& a, std::ostream& out) {
  RootSystem rs = a.system();
  ojson arr = ojson::array();
  for (int k = 0; k < rs.size(); ++k) {
    if (a.json())
      arr.push_back({{"label", rs.label(k).str()}, {"coords", rs.coords(k)}, {"height", rs.height(k)}});
    else
      out << rs.label(k).str() << "  " << detail::join_ints(rs.coords(k)) << "  height " << rs.height(k) << "\n";
  }
  if (a.json())
    print_json(out, {{"system", rs.id().str()}, {"roots", arr}});
  return 0;
}

struct ConeArgs {
  SystemArgs sys;
  bool full = false;
  std::string d;
  bool relint = false;
  std::string alpha, beta;

  ConeSpec cone(const RootSystem& rs) const { return full ? abelianisation_cone(rs) : dynkin_cone(rs, sys.cutset(rs)); }
};

inline int cmd_cone_build(const ConeArgs& a, std::ostream& out) {
  RootSystem rs = a.sys.system();
  ConeSpec c = a.cone(rs);
  if (a.sys.json()) {
    print_json(out, ojson::parse(cone_to_json(c).dump()));
    return 0;
  }
  for (const auto& k : c.constraints) {
    std::string lhs;
    for (int x = 0; x < c.dimension(); ++x)
      if (sgn(k.coef[x]) != 0)
        lhs += std::string(lhs.empty() ? "" : " + ") + "(" + to_string(k.coef[x]) + ")d[" + c.labels[x] + "]";
    out << lhs << (k.relation == Relation::Ge ? " >= 0" : " = 0") << "  [" << tag_name(k.tag) << "]\n";
  }
  return 0;
}

inline int cmd_cone_member(const ConeArgs& a, std::ostream& out) {
  RootSystem rs = a.sys.system();
  ConeSpec c = a.cone(rs);
  bool in = membership(c, parse_degrees(a.d), a.relint ? MembershipMode::Relint : MembershipMode::Closure);
  if (a.sys.json())
    print_json(out, {{"member", in}, {"mode", a.relint ? "relint" : "closure"}});
  else
    out << (in ? "member" : "not a member") << "\n";
  return 0;
}

inline int cmd_cone_relint(const ConeArgs& a, std::ostream& out) {
  RootSystem rs = a.sys.system();
  auto d = relint_point(a.cone(rs), rs);
  if (a.sys.json())
    print_json(out, {{"labels", label_strings(rs)}, {"d", degrees_json(d)}});
  else
    out << degrees_text(d) << "\n";
  return 0;
}

inline int cmd_cone_witness(const ConeArgs& a, std::ostream& out) {
  RootSystem rs = a.sys.system();
  auto ca = rs.label_coords(parse_label(a.alpha));
  auto cb = rs.label_coords(parse_label(a.beta));
  if (!ca || !cb)
    throw DomainError("unknown root label for " + rs.id().str());
  int x = rs.index_of(*ca), y = rs.index_of(*cb);
  auto s = try_add(rs, x, y);
  if (!s)
    throw DomainError(a.alpha + " + " + a.beta + " is not a root");
  auto d = facet_witness(rs, x, y, *s);
  std::vector<std::string> violated;
  for (const auto& c : abelianisation_cone(rs).constraints)
    if (!c.satisfied(d)) {
      auto [p, q, r] = *c.triple;
      violated.push_back(detail::triple_name(rs, p, q, r));
    }
  if (a.sys.json()) {
    print_json(out, {{"labels", label_strings(rs)}, {"d", degrees_json(d)}, {"violated", violated}});
  } else {
    out << degrees_text(d) << "\n";
    for (const auto& v : violated)
      out << "violates " << v << "\n";
  }
  return 0;
}

struct StretchArgs {
  SystemArgs sys;
  std::string root;
  std::string weight;
};

inline int cmd_stretch_sigma(const StretchArgs& a, std::ostream& out) {
  RootSystem rs = a.sys.system();
  auto m = make_stretch(rs, a.sys.cutset(rs));
  std::vector<int> sigma(m.sigma.begin() + 1, m.sigma.end());
  if (a.sys.json())
    print_json(out, {{"sigma", sigma}, {"missing", m.missing}, {"stretched", stretched_system(m).id().str()}});
  else
    out << "sigma " << detail::join_ints(sigma, "[", "]") << "  missing " << detail::join_ints(m.missing, "[", "]")
        << "  stretched " << stretched_system(m).id().str() << "\n";
  return 0;
}

inline int root_by_label(const RootSystem& rs, const std::string& s) {
  auto c = rs.label_coords(parse_label(s));
  if (!c)
    throw DomainError("'" + s + "' is not a root label of " + rs.id().str());
  return rs.index_of(*c);
}

inline int cmd_stretch_psi(const StretchArgs& a, std::ostream& out) {
  RootSystem rs = a.sys.system();
  auto m = make_stretch(rs, a.sys.cutset(rs));
  RootSystem big = stretched_system(m);
  std::vector<int> which;
  if (a.root.empty())
    for (int k = 0; k < rs.size(); ++k)
      which.push_back(k);
  else
    which.push_back(root_by_label(rs, a.root));
  ojson arr = ojson::array();
  for (int k : which) {
    int img = psi_root(m, rs, big, k);
    if (a.sys.json())
      arr.push_back({{"root", rs.label(k).str()}, {"image", big.label(img).str()}, {"coords", big.coords(img)}});
    else
      out << rs.label(k).str() << " -> " << big.label(img).str() << "\n";
  }
  if (a.sys.json())
    print_json(out, arr);
  return 0;
}

inline int cmd_stretch_pi(const StretchArgs& a, std::ostream& out) {
  RootSystem rs = a.sys.system();
  auto m = make_stretch(rs, a.sys.cutset(rs));
  RootSystem big = stretched_system(m);
  std::vector<int> which;
  if (a.root.empty())
    for (int k = 0; k < big.size(); ++k)
      which.push_back(k);
  else
    which.push_back(root_by_label(big, a.root));
  ojson arr = ojson::array();
  for (int k : which) {
    auto p = pi_section(m, rs, big, big.coords(k));
    std::string value = p.kind == PiResult::Kind::Root ? rs.label(p.root).str() : detail::join_ints(p.value);
    if (a.sys.json())
      arr.push_back({{"root", big.label(k).str()}, {"kind", pi_kind_name(p.kind)}, {"value", value}});
    else
      out << big.label(k).str() << " -> " << value << "  (" << pi_kind_name(p.kind) << ")\n";
  }
  if (a.sys.json())
    print_json(out, arr);
  return 0;
}

inline int cmd_stretch_weight(const StretchArgs& a, std::ostream& out) {
  RootSystem rs = a.sys.system();
  auto m = make_stretch(rs, a.sys.cutset(rs));
  auto w = psi_weight(m, parse_ints(a.weight));
  if (a.sys.json())
    print_json(out, {{"weight", w}});
  else
    out << detail::join_ints(w) << "\n";
  return 0;
}

inline int cmd_wc(const SystemArgs& a, std::ostream& out) {
  RootSystem rs = a.system();
  CutSet cuts = a.cutset(rs);
  auto r = verify_prop_weylgroup(rs, cuts);
  auto m = make_stretch(rs, cuts);
  RootSystem big = stretched_system(m);
  std::vector<std::string> inv;
  for (const auto& c : r.inversions)
    inv.push_back(big.label(big.index_of(c)).str());
  ojson ext = ojson::object();
  if (rs.family() != Family::C) {
    int top = rs.family() == Family::A ? rs.rank() : rs.rank() - 1;
    for (int i = 1; i <= top; ++i)
      ext[std::to_string(i)] = extremal_columns(rs, cuts, i);
  }
  if (a.json()) {
    print_json(out, {{"system", big.id().str()},
                     {"word", r.word},
                     {"length", r.length},
                     {"reduced", r.reduced},
                     {"inversions", inv},
                     {"inversions_equal_image", r.inversions == r.image},
                     {"extremal", ext}});
    return 0;
  }
  out << "word " << detail::join_ints(r.word, "[", "]") << "  in " << big.id().str() << "\n";
  out << "length " << r.length << (r.reduced ? " (reduced)" : " (not reduced)") << "\n";
  out << inv.size() << " inversions:";
  for (const auto& s : inv)
    out << " " << s;
  out << "\n";
  for (const auto& [i, cols] : ext.items())
    out << "extremal i=" << i << " " << columns_text(cols.get<std::vector<int>>()) << "\n";
  return 0;
}

struct CharArgs {
  SystemArgs sys;
  std::string weight;
  std::string word;
  bool has_word = false;
};

inline int cmd_char(const CharArgs& a, std::ostream& out) {
  RootSystem rs = a.sys.system();
  auto lambda = parse_ints(a.weight);
  LaurentChar chi;
  std::string expected;
  RootSystemId where = rs.id();
  if (a.has_word) {
    chi = demazure_character(rs, a.word.empty() ? Word{} : parse_ints(a.word), lambda);
  } else {
    check_dominant(lambda, rs.rank());
    auto m = make_stretch(rs, a.sys.cutset(rs));
    RootSystem big = stretched_system(m);
    where = big.id();
    chi = demazure_character(big, build_wc(rs, a.sys.cutset(rs)), psi_weight(m, lambda));
    expected = weyl_dim(rs, lambda).get_str();
  }
  if (a.sys.json()) {
    ojson terms = ojson::array();
    for (const auto& [mu, mult] : chi.terms)
      terms.push_back({{"weight2", mu}, {"multiplicity", mult}});
    ojson j{{"system", where.str()}, {"dimension", chi.total()}};
    if (!expected.empty())
      j["weyl_dimension"] = expected;
    j["terms"] = terms;
    print_json(out, j);
  } else if (a.sys.format == "csv") {
    out << "weight2,multiplicity\n";
    for (const auto& [mu, mult] : chi.terms)
      out << "\"" << detail::join_ints(mu) << "\"," << mult << "\n";
  } else {
    out << "dimension " << chi.total();
    if (!expected.empty())
      out << "  (Weyl dimension " << expected << ")";
    out << "\n";
    for (const auto& [mu, mult] : chi.terms)
      out << detail::join_ints(mu) << " x" << mult << "\n";
  }
  return 0;
}

inline int cmd_polytope(const SystemArgs& a, const std::string& weight, bool inequalities, std::ostream& out) {
  RootSystem rs = a.system();
  auto lambda = parse_ints(weight);
  auto count = lattice_point_count(rs, lambda);
  if (a.json()) {
    ojson j{{"system", rs.id().str()}, {"lambda", lambda}, {"count", count}};
    if (inequalities)
      j["inequalities"] = ojson::parse(polytope_to_json(rs, lambda)["inequalities"].dump());
    print_json(out, j);
    return 0;
  }
  out << count << "\n";
  if (inequalities)
    for (const auto& c : marked_chain_inequalities(rs, lambda)) {
      std::string chain;
      for (int r : c.roots)
        chain += (chain.empty() ? "" : " + ") + std::string("x[") + rs.label(r).str() + "]";
      out << chain << " <= " << c.bound << "\n";
    }
  return 0;
}

inline int cmd_filtration(const SystemArgs& a, int k, const std::string& d, const std::string& point,
                          std::ostream& out) {
  RootSystem rs = a.system();
  auto module = build_wedge_module(rs, k);
  DegreeVector deg;
  if (!d.empty())
    deg = parse_degrees(d);
  else if (point == "height")
    deg = height_vector(rs);
  else if (point == "relint")
    deg = relint_point(abelianisation_cone(rs), rs);
  else
    throw DomainError("unknown point '" + point + "'");
  auto dims = filtration_dims(module, deg);
  if (a.json()) {
    ojson arr = ojson::array();
    for (const auto& [x, n] : dims)
      arr.push_back({{"degree", to_string(x)}, {"dimension", n}});
    print_json(out, {{"system", rs.id().str()}, {"k", k}, {"d", degrees_json(deg)}, {"graded", arr},
                     {"total", module.dim()}});
  } else {
    if (a.format == "csv")
      out << "degree,dimension\n";
    for (const auto& [x, n] : dims)
      out << to_string(x) << (a.format == "csv" ? "," : "  ") << n << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string suites = "all";
  std::string families = "A,B,C,D";
  int max_rank = 4;
  int lambda_bound = 0;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string output;
  std::string format = "json";
  bool no_timestamp = false;
};

inline VerifyConfig make_config(const VerifyArgs& a) {
  VerifyConfig cfg;
  cfg.families.clear();
  for (const auto& f : split(a.families))
    if (!f.empty())
      cfg.families.push_back(parse_family(f));
  cfg.suites.clear();
  for (const auto& s : split(a.suites)) {
    if (s == "all")
      cfg.suites = suite_names();
    else if (!s.empty() && std::find(cfg.suites.begin(), cfg.suites.end(), s) == cfg.suites.end())
      cfg.suites.push_back(s);
  }
  cfg.max_rank = a.max_rank;
  cfg.lambda_bound = a.lambda_bound;
  cfg.seed = a.seed;
  cfg.jobs = a.jobs;
  cfg.timestamp = !a.no_timestamp;
  return cfg;
}

inline int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyConfig cfg = make_config(a);
  Report r = verify_suite(cfg);
  if (cfg.timestamp)
    r.timestamp = utc_timestamp();
  std::string text = a.format == "csv" ? emit_csv(r) : a.format == "text" ? emit_text(r) : emit_json(r);
  if (a.output.empty()) {
    out << text;
  } else {
    std::ofstream f(a.output);
    if (!f || !(f << text) || !f.flush())
      throw std::ios_base::failure("cannot write report to '" + a.output + "'");
  }
  return r.failed() ? 1 : 0;
}

} // namespace cli

// Parses args (without the program name) and runs the subcommand.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli;
  CLI::App app{"Dynkin abelianisation toolkit", "degen"};
  app.require_subcommand(1);

  SystemArgs roots_args;
  auto* roots = app.add_subcommand("roots", "list positive roots");
  roots_args.attach(roots, false);

  auto* cone = app.add_subcommand("cone", "cones of degree vectors");
  cone->require_subcommand(1);
  ConeArgs cone_args;
  auto cone_common = [&](CLI::App* c) {
    cone_args.sys.attach(c, true);
    c->add_flag("--full", cone_args.full, "use the cone of all partial abelianisations instead of F^c");
  };
  auto* cone_build = cone->add_subcommand("build", "print the inequalities");
  cone_common(cone_build);
  auto* cone_member = cone->add_subcommand("member", "membership test");
  cone_common(cone_member);
  cone_member->add_option("--d", cone_args.d, "degree vector, e.g. 1,1,3/2")->required();
  cone_member->add_flag("--relint", cone_args.relint, "test the relative interior");
  auto* cone_relint = cone->add_subcommand("relint-point", "a point of the relative interior");
  cone_common(cone_relint);
  auto* cone_witness = cone->add_subcommand("witness", "facet witness for a summable pair");
  cone_witness->add_option("--alpha", cone_args.alpha, "root label i,j or i,jb")->required();
  cone_witness->add_option("--beta", cone_args.beta, "root label")->required();
  cone_args.sys.attach(cone_witness, false);

  auto* stretch = app.add_subcommand("stretch", "stretch maps");
  stretch->require_subcommand(1);
  StretchArgs st;
  auto* st_sigma = stretch->add_subcommand("sigma", "node relabelling");
  st.sys.attach(st_sigma, true);
  auto* st_psi = stretch->add_subcommand("psi", "root embedding");
  st.sys.attach(st_psi, true);
  st_psi->add_option("--root", st.root, "root label (default: all)");
  auto* st_pi = stretch->add_subcommand("pi", "section on stretched roots");
  st.sys.attach(st_pi, true);
  st_pi->add_option("--root", st.root, "stretched root label (default: all)");
  auto* st_weight = stretch->add_subcommand("Psi", "dominant weight embedding");
  st.sys.attach(st_weight, true);
  st_weight->add_option("--weight", st.weight, "fundamental-weight coordinates, e.g. 1,0")->required();

  SystemArgs wc_args;
  auto* wc = app.add_subcommand("wc", "the Weyl element w_c");
  wc_args.attach(wc, true);

  CharArgs char_args;
  auto* chr = app.add_subcommand("char", "Demazure character");
  char_args.sys.attach(chr, true);
  chr->add_option("--weight", char_args.weight, "dominant weight")->required();
  auto* word_opt = chr->add_option("--word", char_args.word, "reduced word; default w_c with the stretched weight");

  SystemArgs poly_args;
  std::string poly_weight;
  bool poly_ineq = false;
  auto* poly = app.add_subcommand("polytope", "marked chain polytope lattice points");
  poly_args.attach(poly, false);
  poly->add_option("--weight", poly_weight, "dominant weight")->required();
  poly->add_flag("--inequalities", poly_ineq, "also print the inequalities");

  SystemArgs filt_args;
  int filt_k = 1;
  std::string filt_d, filt_point = "height";
  auto* filt = app.add_subcommand("filtration", "graded dimensions of a fundamental module");
  filt_args.attach(filt, false);
  filt->add_option("--k", filt_k, "wedge power")->required();
  filt->add_option("--d", filt_d, "degree vector");
  filt->add_option("--point", filt_point, "height or relint when --d is absent");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", va.suites, "comma-separated suites or all")->envname("DEGEN_SUITE");
  verify->add_option("--families", va.families, "comma-separated families")->envname("DEGEN_FAMILIES");
  verify->add_option("--max-rank", va.max_rank, "largest rank")->envname("DEGEN_MAX_RANK");
  verify->add_option("--lambda-bound", va.lambda_bound, "weight coordinate bound (0: fundamentals only)")
      ->envname("DEGEN_LAMBDA_BOUND");
  verify->add_option("--seed", va.seed, "seed for random cone points")->envname("DEGEN_SEED");
  verify->add_option("--jobs", va.jobs, "worker threads")->envname("DEGEN_JOBS");
  verify->add_option("--output", va.output, "report path (default stdout)")->envname("DEGEN_OUTPUT");
  verify->add_option("--format", va.format, "json, csv or text")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->envname("DEGEN_FORMAT");
  verify->add_flag("--no-timestamp", va.no_timestamp, "omit the timestamp and runtimes")->envname("DEGEN_NO_TIMESTAMP");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    const CLI::App* where = &app;
    for (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front(); sub;
         sub = sub->get_subcommands().empty() ? nullptr : sub->get_subcommands().front())
      where = sub;
    err << "error: " << e.what() << "\n" << where->help();
    return static_cast<int>(Exit::Usage);
  }

  try {
    if (roots->parsed())
      return cmd_roots(roots_args, out);
    if (cone_build->parsed())
      return cmd_cone_build(cone_args, out);
    if (cone_member->parsed())
      return cmd_cone_member(cone_args, out);
    if (cone_relint->parsed())
      return cmd_cone_relint(cone_args, out);
    if (cone_witness->parsed())
      return cmd_cone_witness(cone_args, out);
    if (st_sigma->parsed())
      return cmd_stretch_sigma(st, out);
    if (st_psi->parsed())
      return cmd_stretch_psi(st, out);
    if (st_pi->parsed())
      return cmd_stretch_pi(st, out);
    if (st_weight->parsed())
      return cmd_stretch_weight(st, out);
    if (wc->parsed())
      return cmd_wc(wc_args, out);
    if (chr->parsed()) {
      char_args.has_word = word_opt->count() > 0;
      return cmd_char(char_args, out);
    }
    if (poly->parsed())
      return cmd_polytope(poly_args, poly_weight, poly_ineq, out);
    if (filt->parsed())
      return cmd_filtration(filt_args, filt_k, filt_d, filt_point, out);
    if (verify->parsed())
      return cmd_verify(va, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(Exit::Usage);
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(Exit::Usage);
  }
  err << app.help();
  return static_cast<int>(Exit::Usage);
}

} // namespace degen

#endif
