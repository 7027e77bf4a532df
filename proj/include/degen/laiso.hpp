#ifndef DEGEN_LAISO_HPP
#define DEGEN_LAISO_HPP

#include <cstdlib>
#include <string>
#include <vector>

#include "chevalley.hpp"
#include "cones.hpp"
#include "linalg.hpp"
#include "stretch.hpp"

namespace degen {

struct IsoReport {
  bool pattern_ok = true;
  bool magnitudes_ok = true;
  bool rescaling_exists = false;
  bool identity_rescaling = false; // every surviving constant already agrees in sign
  int surviving = 0;               // ordered pairs with a nonzero bracket
  std::vector<int> signs;          // t_β ∈ {+1,-1} per positive root when a rescaling exists
  std::vector<std::string> problems;

  bool ok() const { return pattern_ok && magnitudes_ok && rescaling_exists; }
};

// Compares the graded algebra n₋^d with the subalgebra of the stretched n₋
// spanned by f_ψ(β), β ∈ Φ⁺.
inline IsoReport compare_with_stretch(const GradedLieAlgebra& g, const StretchMap& m, const RootSystem& big,
                                      const StructureTable& big_table) {
  const RootSystem& rs = g.root_system();
  auto img = image_indices(m, rs, big);
  IsoReport r;
  auto note = [&](std::string s) {
    if (r.problems.size() < 20)
      r.problems.push_back(std::move(s));
  };
  std::vector<Gf2Equation> eqs;
  for (int a = 0; a < rs.size(); ++a)
    for (int b = 0; b < rs.size(); ++b) {
      auto small = g.bracket(a, b);
      auto sum = try_add(big, img[a], img[b]);
      if (small.has_value() != sum.has_value()) {
        r.pattern_ok = false;
        note("pattern: [" + rs.label(a).str() + ", " + rs.label(b).str() + "] is " + (small ? "nonzero" : "zero") +
             " but its image is " + (sum ? "nonzero" : "zero"));
        continue;
      }
      if (!small)
        continue;
      ++r.surviving;
      if (img[small->root] != *sum) {
        r.pattern_ok = false;
        note("pattern: bracket of " + rs.label(a).str() + ", " + rs.label(b).str() + " lands on a different root");
        continue;
      }
      int n_small = small->coefficient;
      int n_big = big_table.lowering(img[a], img[b]);
      if (std::abs(n_small) != std::abs(n_big)) {
        r.magnitudes_ok = false;
        note("magnitude: " + std::to_string(n_small) + " vs " + std::to_string(n_big) + " at " + rs.label(a).str() +
             ", " + rs.label(b).str());
        continue;
      }
      eqs.push_back({{a, b, small->root}, (n_small < 0) != (n_big < 0) ? 1 : 0});
    }
  r.identity_rescaling = true;
  for (const auto& e : eqs)
    if (e.rhs)
      r.identity_rescaling = false;
  if (auto x = solve_gf2(rs.size(), eqs)) {
    r.rescaling_exists = true;
    for (int v : *x)
      r.signs.push_back(v ? -1 : 1);
  } else {
    note("no sign rescaling matches the structure constants");
  }
  return r;
}

inline IsoReport verify_laiso(const RootSystem& rs, const CutSet& cuts, const DegreeVector& d) {
  auto cone = dynkin_cone(rs, cuts);
  if (!membership(cone, d, MembershipMode::Relint))
    throw PreconditionViolation("degree vector is not in the relative interior of F^" + cuts.str());
  GradedLieAlgebra g(rs, build_chevalley(rs), d);
  auto m = make_stretch(rs, cuts);
  RootSystem big = stretched_system(m);
  return compare_with_stretch(g, m, big, build_chevalley(big));
}

} // namespace degen

#endif
