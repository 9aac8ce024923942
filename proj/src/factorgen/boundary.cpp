#include <cstdlib>

#include "mcg/factorgen.hpp"
#include "factorgen/common.hpp"

namespace mcg {

namespace {

GroupWord T(const std::string& c, int e = 1) { return GroupWord::twist(c, e); }
GroupWord F(const std::string& f, int e = 1) { return GroupWord::formal(f, e); }

}  // namespace

std::string four_hole_lantern_name(const DiskNames& n) { return "lantern-disk4(" + n.delta + ")"; }

Relation four_hole_lantern(const SurfaceConfig& cfg, const DiskNames& n) {
  auto reg = registry_for(cfg);
  CommutationContext ctx(cfg);
  auto xs = T(n.x1) * T(n.x2) * T(n.x3) * T(n.x4);
  auto lhs = T(n.delta, 2) * T(n.a1) * T(n.a2) * T(n.a3) * T(n.a4);
  TraceBuilder b(xs, reg, ctx);
  // x1 x2 -> y1^-1 delta a1 a2 y2, then x3 x4 -> delta y1 a3 a4 y2^-1
  if (!b.replace(lantern_name({{n.delta, n.a1, n.a2, n.y2}, {n.y1, n.x1, n.x2}}), T(n.x1) * T(n.x2)) ||
      !b.replace(lantern_name({{n.delta, n.y1, n.a3, n.a4}, {n.x3, n.x4, n.y2}}), T(n.x3) * T(n.x4)))
    throw Error("lanterns of the disk around " + n.delta + " do not apply");
  Relation r;
  r.name = four_hole_lantern_name(n);
  r.eq = {lhs, xs};
  r.kind = Relation::Kind::Derived;
  r.source = "lantern";
  r.args = {n.delta, n.a1, n.a2, n.a3, n.a4, n.x1, n.x2, n.x3, n.x4};
  r.proof = std::make_shared<DerivationTrace>(b.finish(lhs));
  return r;
}

Factorization boundary_twist_factors(const DiskNames& n, int power) {
  Factorization out;
  int N = std::abs(power);
  if (N == 0) return out;
  int k = N / 2;
  auto block = Factor::commutator(T(n.x1) * T(n.a2, -1), F(n.fC));
  // odd powers shift every block by one more x3
  int shift = N % 2;
  for (int i = 1; i <= k; ++i) {
    int e = i - 1 + shift;
    out.push(e ? Factor::conjugated(block, T(n.x3, e)) : block);
  }
  int top = k + shift;
  out.push(Factor::commutator(T(n.x3, top) * T(n.a4, -top), F(n.fK)));
  if (shift) out.push(Factor::commutator(F(n.fY), T(n.y1)));
  return power > 0 ? out : out.inverse();
}

void boundary_twist_tactic(TraceBuilder& b, const DiskNames& n, int power) {
  int N = std::abs(power), s = power > 0 ? 1 : -1;
  auto lantern4 = four_hole_lantern_name(n);
  auto x123 = T(n.x1) * T(n.x2) * T(n.x3);
  if (s < 0) x123 = x123.inverse();
  for (int i = 0; i < N / 2; ++i)
    if (!b.replace(lantern4, x123)) throw Error("four-hole lantern does not apply at block " + std::to_string(i + 1));
  if (N % 2) {
    auto tail = T(n.x3) * T(n.x4) * T(n.y2);
    if (!b.replace(lantern_name({{n.delta, n.y1, n.a3, n.a4}, {n.x3, n.x4, n.y2}}), s > 0 ? tail : tail.inverse()))
      throw Error("closing lantern does not apply");
  }
}

FactorizationResult boundary_twist_on(const SurfaceConfig& cfg, const DiskNames& n, int power) {
  FactorizationResult r;
  r.config = cfg;
  r.provenance = "boundary-twist";
  auto reg = registry_for(cfg);
  reg.add(four_hole_lantern(cfg, n));
  CommutationContext ctx(cfg);
  r.factorization = boundary_twist_factors(n, power);
  r.target = T(n.delta, power);
  TraceBuilder b(r.factorization.flatten(), reg, ctx);
  b.resolve_conjugations();
  b.rewrite_images();
  boundary_twist_tactic(b, n, power);
  finish_result(r, b, reg);
  return r;
}

FactorizationResult boundary_twist_commutators(int n, int g) {
  if (g < 2) throw Error("boundary twist factorization needs genus at least 2");
  return boundary_twist_on(surface_config(g), DiskNames{}, n);
}

FactorizationResult range_commutators(int k, int h, int g) {
  if (h < 1) throw Error("base genus must be at least 1");
  if (k < 2 - 2 * h || k > 2 * h - 2)
    throw Error("exponent " + std::to_string(k) + " lies outside the adjunction range [" + std::to_string(2 - 2 * h) +
                ", " + std::to_string(2 * h - 2) + "]");
  auto r = boundary_twist_commutators(k, g);
  pad_commutators(r.factorization, h);
  r.census = r.factorization.census();
  r.trace.start = r.factorization.flatten();
  r.provenance = "range";
  return r;
}

}  // namespace mcg
