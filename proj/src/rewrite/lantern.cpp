#include "mcg/rewrite.hpp"

namespace mcg {

Derivation derive_generalized_lantern(int n) {
  auto cfg = holed_disk_config(n);
  auto reg = registry_for(cfg);
  CommutationContext ctx(cfg);
  auto idx = [](const char* p, int i) { return std::string(p) + std::to_string(i); };

  GroupWord xs, rhs = GroupWord::twist("delta", n - 2);
  for (int i = 1; i <= n; ++i) {
    xs *= GroupWord::twist(idx("x", i));
    rhs *= GroupWord::twist(idx("a", i));
  }
  TraceBuilder b(xs, reg, ctx);
  auto apply = [&](int j, int offset, int length) {
    auto& l = cfg.lanterns.at(j - 1);
    if (!b.relation_anywhere(lantern_name(l), false, offset, length))
      throw Error("lantern " + std::to_string(j) + " does not apply while deriving the " + std::to_string(n) +
                  "-holed lantern");
  };
  if (n == 3) {
    apply(1, 0, -1);
  } else {
    // each step trades x_{j+1} for a_{j+1}, leaving a nested curve behind
    for (int j = 1; j <= n - 3; ++j) apply(j, 1, 2);
    apply(n - 2, 0, 2);
  }
  return {{rhs, xs}, b.finish(rhs)};
}

Relation generalized_lantern_relation(int n) {
  auto d = derive_generalized_lantern(n);
  Relation r;
  r.name = "lantern-disk(" + std::to_string(n) + ")";
  r.eq = d.eq;
  r.kind = Relation::Kind::Derived;
  r.source = "lantern";
  r.args = {std::to_string(n)};
  r.proof = std::make_shared<DerivationTrace>(d.trace);
  return r;
}

}  // namespace mcg
