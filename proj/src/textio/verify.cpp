#include "mcg/repcheck.hpp"
#include "mcg/textio.hpp"

namespace mcg {

namespace {

VerifyOutcome failed(std::string why) {
  VerifyOutcome v;
  v.failure = std::move(why);
  return v;
}

std::optional<GroupWord> left_side(const Document& d) {
  if (d.factorization) return d.factorization->flatten();
  return d.word;
}

}  // namespace

VerifyOutcome verify_document(const Document& d, const SurfaceConfig& cfg, const std::string& backend) {
  if (backend == "h1" || backend == "pi1") {
    auto lhs = left_side(d);
    if (!lhs || !d.target) return failed("document needs a factorization or word and a target");
    auto rep = backend == "h1" ? h1_compare(cfg, *lhs, *d.target) : pi1_compare(cfg, *lhs, *d.target);
    if (!rep.equal) return failed(backend + " actions differ: " + rep.detail);
    VerifyOutcome v;
    v.ok = true;
    v.notes.push_back(backend + " actions agree");
    return v;
  }
  if (backend != "trace") throw Error("unknown backend " + backend);

  auto base = registry_for(cfg);
  RelationRegistry reg = base;
  VerifyOutcome v;
  for (auto& r : d.relations) {
    auto known = base.find(r.name);
    switch (r.kind) {
      case Relation::Kind::Instance:
        if (!known || known->kind != Relation::Kind::Instance || !(known->eq == r.eq))
          return failed("relation " + r.name + " is not an instance recorded on config " + cfg.name);
        break;
      case Relation::Kind::Assumption:
        if (!known || !(known->eq == r.eq)) {
          reg.add(r);
          v.notes.push_back("assumes " + r.name);
        }
        break;
      case Relation::Kind::Derived:
        if (!r.proof) return failed("derived relation " + r.name + " has no proof");
        reg.add(r);
        break;
    }
  }
  CommutationContext ctx(cfg);
  int derived = 0;
  for (auto& r : d.relations) {
    if (r.kind != Relation::Kind::Derived) continue;
    auto rep = check_relation(r.name, reg, ctx);
    if (!rep.ok) return failed("proof of " + r.name + ": " + rep.message);
    ++derived;
  }
  if (!d.trace) return failed("document has no trace");
  auto lhs = left_side(d);
  if (lhs && !(d.trace->start == *lhs)) return failed("trace does not start at the document's word");
  if (d.target && !(d.trace->end == *d.target)) return failed("trace does not end at the target");
  auto rep = check_trace(*d.trace, reg, ctx);
  if (!rep.ok) {
    if (rep.failed_step >= 0) return failed("step " + std::to_string(rep.failed_step) + ": " + rep.message);
    return failed(rep.message);
  }
  v.ok = true;
  v.notes.insert(v.notes.begin(), "trace replays in " + std::to_string(d.trace->steps.size()) + " steps, " +
                                      std::to_string(derived) + " derived relations rechecked");
  return v;
}

FibrationSpec fibration_spec(const Document& d) {
  if (!d.fibration) throw SemanticError("document has no fibration line");
  if (!d.factorization) throw SemanticError("document has no factorization");
  FibrationSpec s;
  s.fiber_genus = d.fibration->fiber_genus;
  s.base_genus = d.fibration->base_genus;
  s.boundary_power = d.fibration->boundary_power;
  s.relatively_minimal = d.fibration->relatively_minimal;
  s.monodromy = *d.factorization;
  if (d.target) {
    auto& l = d.target->letters();
    bool match = l.empty() ? s.boundary_power == 0
                           : l.size() == 1 && l[0].gen.is_twist() && l[0].exp == s.boundary_power;
    if (!match) throw SemanticError("target " + d.target->str() + " disagrees with boundary power " +
                                    std::to_string(s.boundary_power));
  }
  return s;
}

Document invariants_report(const Document& d) {
  auto s = fibration_spec(d);
  auto c = s.monodromy.census();
  Document r;
  r.kind = Document::Kind::Report;
  r.title = "invariants";
  r.config_ref = d.config_ref;
  r.provenance = d.provenance;
  auto put = [&](const std::string& k, auto v) {
    if constexpr (std::is_convertible_v<decltype(v), std::string>) r.fields.push_back({k, v});
    else r.fields.push_back({k, std::to_string(v)});
  };
  put("fiber_genus", s.fiber_genus);
  put("base_genus", s.base_genus);
  put("commutators", c.commutators);
  put("positive_twists", c.positive_twists);
  put("negative_twists", c.negative_twists);
  put("bundle", std::string(s.is_bundle() ? "yes" : "no"));
  put("boundary_power", s.boundary_power);
  put("self_intersection", section_self_intersection(s));
  put("euler_characteristic", euler_characteristic(s));
  put("adjunction", to_string(adjunction_check(s)));
  if (s.base_genus >= 1)
    put("indecomposability", to_string(indecomposability_check(s.base_genus, section_self_intersection(s))));
  if (s.fiber_genus == 1) put("genus1", to_string(genus1_constraint(s)));
  std::string probs;
  for (auto& p : s.problems()) probs += (probs.empty() ? "" : "; ") + p;
  put("problems", probs.empty() ? std::string("none") : probs);
  return r;
}

}  // namespace mcg
