#include "factorgen/common.hpp"

namespace mcg {

void pad_commutators(Factorization& f, int count) {
  int have = f.census().commutators;
  if (have > count) throw Error("factorization already uses " + std::to_string(have) + " commutators");
  for (int i = have; i < count; ++i) f.push(Factor::commutator(GroupWord(), GroupWord()));
}

void finish_result(FactorizationResult& r, const TraceBuilder& b, const RelationRegistry& reg) {
  if (!equal_mod_commutation(b.word(), r.target, b.context()))
    throw Error(r.provenance + " construction stopped at " + b.word().str() + " instead of " + r.target.str());
  r.trace = b.finish(r.target);
  std::set<std::string> used;
  for (auto& s : r.trace.steps)
    if (s.kind == Step::Kind::Relation) used.insert(s.relation);
  r.relations = reg.closure(used);
  r.census = r.factorization.census();
}

}  // namespace mcg
