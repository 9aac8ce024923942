#include <cstdlib>

#include "mcg/factorgen.hpp"
#include "mcg/repcheck.hpp"

namespace mcg {

namespace {

// Does g carry a onto d? Exact when pi1 tables exist, otherwise a homology
// check when g acts on homology; nullopt when nothing can be said.
std::optional<bool> sends(const SurfaceConfig& cfg, const GroupWord& g, const CurveExpr& a, const CurveExpr& d) {
  try {
    auto lhs = pi1_action(cfg, g * GroupWord::twist(a) * g.inverse());
    return lhs == pi1_action(cfg, GroupWord::twist(d));
  } catch (const BackendUnavailable&) {
  }
  try {
    auto img = h1_action(cfg, g) * curve_class(cfg, a);
    auto dv = curve_class(cfg, d);
    return img == dv || img == -dv;
  } catch (const Error&) {
  }
  return std::nullopt;
}

}  // namespace

FactorizationResult lemma_commutator(const SurfaceConfig& cfg, const CurveExpr& a, const CurveExpr& b,
                                     const CurveExpr& c, const CurveExpr& d, const GroupWord& f, int k) {
  FactorizationResult r;
  r.config = cfg;
  r.provenance = "commutator-lemma";
  auto reg = registry_for(cfg);
  CommutationContext ctx(cfg);
  if (k == 0) {
    r.trace = {GroupWord(), {}, GroupWord()};
    return r;
  }
  for (auto [from, to] : {std::pair{a, d}, std::pair{b, c}}) {
    auto s = sends(cfg, f, from, to);
    if (s && !*s) throw Error("witness " + f.str() + " does not send " + from.key() + " to " + to.key());
    // unverifiable witnesses become explicit assumptions
    auto name = image_witness_name(f, from.key());
    if (!reg.find(name)) {
      if (!from.is_base() || !to.is_base()) throw Error("witness assumptions need base curves");
      reg.add({name,
               {GroupWord::twist(CurveExpr::image(f, from)), GroupWord::twist(to)},
               Relation::Kind::Assumption,
               "witness",
               {f.str(), from.key(), to.key()},
               nullptr});
    }
  }
  auto u = GroupWord::twist(a, k) * GroupWord::twist(b, -k);
  r.factorization.push(Factor::commutator(u, f));
  r.target = u * GroupWord::twist(c, k) * GroupWord::twist(d, -k);

  TraceBuilder tb(r.factorization.flatten(), reg, ctx);
  bool formal_only = true;
  for (auto& l : f.letters()) formal_only = formal_only && !l.gen.is_twist();
  if (formal_only) {
    tb.resolve_conjugations();
  } else {
    Step s;
    s.kind = Step::Kind::Conjugation;
    s.pos = u.unit_length();
    s.conj_length = int(f.unit_length());
    s.span = int(2 * f.unit_length() + u.unit_length());
    tb.step(s);
  }
  tb.rewrite_images();
  r.trace = tb.finish(r.target);
  std::set<std::string> used;
  for (auto& s : r.trace.steps)
    if (s.kind == Step::Kind::Relation) used.insert(s.relation);
  r.relations = reg.closure(used);
  r.census = r.factorization.census();
  if (!equal_mod_commutation(tb.word(), r.target, ctx))
    throw Error("commutator lemma did not reach its target: " + tb.word().str());
  return r;
}

int cl_reference(int n) { return n == 0 ? 0 : (std::abs(n) + 3) / 2; }

Rational scl_reference() { return {1, 2}; }

}  // namespace mcg
