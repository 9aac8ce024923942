#pragma once

#include <string>

#include "mcg/factorization.hpp"
#include "mcg/rewrite.hpp"
#include "mcg/surface.hpp"

namespace mcg {

struct FactorizationResult {
  SurfaceConfig config;
  Factorization factorization;
  GroupWord target;
  DerivationTrace trace;
  // Everything the trace cites, including derived lemmas and any witness
  // assumptions added for this result.
  RelationRegistry relations;
  Census census;
  std::string provenance;
};

// [t_a^k t_b^-k, f] = t_a^k t_b^-k t_c^k t_d^-k when f sends (a, b) to (d, c).
FactorizationResult lemma_commutator(const SurfaceConfig& cfg, const CurveExpr& a, const CurveExpr& b,
                                     const CurveExpr& c, const CurveExpr& d, const GroupWord& f, int k);

// t_delta^n as floor((|n|+3)/2) commutators on the genus-g surface; negative
// n gives the inverse factorization.
FactorizationResult boundary_twist_commutators(int n, int g);
// t_delta^k as exactly h commutators, 2-2h <= k <= 2h-2.
FactorizationResult range_commutators(int k, int h, int g);
// prod_i t_{delta_i}^i as h commutators on the surface with 4h-3 boundary
// components and genus 8h-8+l.
FactorizationResult disjoint_sections_word(int h, int l);
// t_delta^{2-2h} as h commutators times positive twists, the count growing with m.
FactorizationResult lefschetz_word(int g, int h, int m, int l = 2);

int cl_reference(int n);
struct Rational {
  long num = 0, den = 1;
  bool operator==(const Rational&) const = default;
};
Rational scl_reference();

// Boundary twist construction on one marked four-holed disk of a config;
// used by the sections surface where each piece carries its own names.
FactorizationResult boundary_twist_on(const SurfaceConfig& cfg, const DiskNames& names, int n);
// t_delta^{n-2} a1..an = x1..xn for the marked four-holed disk, derived from its two lanterns.
Relation four_hole_lantern(const SurfaceConfig& cfg, const DiskNames& names);

// Rewrites a window of positive twists into an equal positive word using
// only commutations and braid relations; throws if the target is not a
// left divisor reachable this way.
void positive_rewrite(TraceBuilder& b, std::size_t pos, const std::vector<std::string>& from,
                      const std::vector<std::string>& to);

}  // namespace mcg
