#include "mcg/textio.hpp"

namespace mcg {

using nlohmann::json;

namespace {

const char* kind_name(Relation::Kind k) {
  switch (k) {
    case Relation::Kind::Instance: return "instance";
    case Relation::Kind::Assumption: return "assumption";
    case Relation::Kind::Derived: return "derived";
  }
  return "?";
}

// What a relation name instantiates, read off its prefix.
std::string step_provenance(const Step& s) {
  switch (s.kind) {
    case Step::Kind::Commute: return "disjoint commutation";
    case Step::Kind::Conjugation: return "conjugation of a twist";
    case Step::Kind::Relation: break;
  }
  auto& n = s.relation;
  auto starts = [&](const char* p) { return n.rfind(p, 0) == 0; };
  if (starts("lantern-disk4")) return "four-hole boundary lantern";
  if (starts("lantern-disk")) return "generalized lantern";
  if (starts("lantern")) return "lantern relation";
  if (starts("split-chain")) return "split chain lemma";
  if (starts("chain")) return "chain relation";
  if (starts("braid")) return "braid relation";
  if (starts("witness")) return "witness of a curve image";
  if (starts("genus1")) return "genus-1 relation";
  return "relation " + n;
}

}  // namespace

json to_json(const DerivationTrace& t) {
  json steps = json::array();
  for (auto& s : t.steps) {
    json j{{"kind", s.kind == Step::Kind::Commute ? "commute"
                    : s.kind == Step::Kind::Conjugation ? "conjugation"
                                                        : "relation"},
           {"pos", s.pos},
           {"provenance", step_provenance(s)}};
    if (s.kind != Step::Kind::Commute) j["forward"] = s.forward;
    if (s.kind == Step::Kind::Relation) {
      j["relation"] = s.relation;
      j["offset"] = s.offset;
      j["length"] = s.length;
    }
    if (s.kind == Step::Kind::Conjugation) {
      j["conj_length"] = s.conj_length;
      j["span"] = s.span;
    }
    steps.push_back(j);
  }
  return {{"start", t.start.str()}, {"end", t.end.str()}, {"steps", steps}};
}

json to_json(const Document& d) {
  json j{{"kind", to_string(d.kind)}};
  if (!d.title.empty()) j["title"] = d.title;
  if (!d.config_ref.empty()) j["config"] = d.config_ref;
  if (!d.provenance.empty()) j["provenance"] = d.provenance;
  if (d.fibration)
    j["fibration"] = {{"fiber_genus", d.fibration->fiber_genus},
                      {"base_genus", d.fibration->base_genus},
                      {"boundary_power", d.fibration->boundary_power},
                      {"relatively_minimal", d.fibration->relatively_minimal}};
  if (d.word) j["word"] = d.word->str();
  if (d.factorization) {
    auto c = d.factorization->census();
    j["factorization"] = d.factorization->str();
    j["census"] = {{"commutators", c.commutators},
                   {"positive_twists", c.positive_twists},
                   {"negative_twists", c.negative_twists}};
  }
  if (d.target) j["target"] = d.target->str();
  if (!d.fields.empty()) {
    json f = json::object();
    for (auto& [k, v] : d.fields) f[k] = v;
    j["fields"] = f;
  }
  if (!d.relations.empty()) {
    json rs = json::array();
    for (auto& r : d.relations) {
      json x{{"name", r.name},   {"kind", kind_name(r.kind)}, {"source", r.source},
             {"args", r.args},   {"lhs", r.eq.lhs.str()},     {"rhs", r.eq.rhs.str()}};
      if (r.proof) x["proof"] = to_json(*r.proof);
      rs.push_back(x);
    }
    j["relations"] = rs;
  }
  if (d.trace) j["trace"] = to_json(*d.trace);
  if (d.config) j["config_body"] = print_config(*d.config);
  return j;
}

}  // namespace mcg
