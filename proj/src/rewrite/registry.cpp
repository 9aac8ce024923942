#include <cstdlib>

#include "mcg/rewrite.hpp"

namespace mcg {

std::string lantern_name(const LanternRecord& l) {
  return "lantern(" + l.holes[0] + "," + l.holes[1] + "," + l.holes[2] + "," + l.holes[3] + ")";
}

std::string chain_name(const ChainRecord& c) {
  std::string s = "chain(";
  for (auto& x : c.chain) s += x + ",";
  return s + c.boundaries[0] + "," + c.boundaries[1] + ")";
}

std::string braid_name(const std::string& a, const std::string& b) { return "braid(" + a + "," + b + ")"; }

std::string witness_name(const std::string& f, const std::string& a, bool inverse) {
  return "witness(" + f + (inverse ? "^-1" : "") + ":" + a + ")";
}

std::string image_witness_name(const GroupWord& g, const std::string& a) {
  auto& l = g.letters();
  if (l.size() == 1 && !l[0].gen.is_twist() && std::abs(l[0].exp) == 1) return witness_name(l[0].gen.symbol, a, l[0].exp < 0);
  return "witness(" + g.str() + ":" + a + ")";
}

namespace {

// t_{f^-1(d)} = t_a from t_{f(a)} = t_d: unfold, apply the witness
// backwards inside the conjugate, fold again.
Relation inverse_witness(const std::string& f, const std::string& a, const std::string& d) {
  auto fw = GroupWord::formal(f);
  Relation r;
  r.name = witness_name(f, d, true);
  r.kind = Relation::Kind::Derived;
  r.source = "witness";
  r.args = {f, d, a};
  r.eq = {GroupWord::twist(CurveExpr::image(fw.inverse(), CurveExpr::base(d))), GroupWord::twist(a)};
  auto t = std::make_shared<DerivationTrace>();
  t->start = r.eq.lhs;
  t->end = r.eq.rhs;
  Step unfold;
  unfold.kind = Step::Kind::Conjugation;
  unfold.forward = false;
  unfold.pos = 0;
  unfold.span = 1;
  Step wit;
  wit.relation = witness_name(f, a);
  wit.forward = false;
  wit.pos = 1;
  Step fold = unfold;
  fold.pos = 1;
  t->steps = {unfold, wit, fold};
  r.proof = t;
  return r;
}

}  // namespace

RelationRegistry registry_for(const SurfaceConfig& cfg) {
  RelationRegistry reg;
  for (auto& l : cfg.lanterns) {
    std::vector<std::string> args(l.holes.begin(), l.holes.end());
    args.insert(args.end(), l.interiors.begin(), l.interiors.end());
    reg.add({lantern_name(l), instantiate_lantern(cfg, l.holes, l.interiors), Relation::Kind::Instance, "lantern", args,
             nullptr});
  }
  for (auto& c : cfg.chains) {
    auto args = c.chain;
    args.push_back(c.boundaries[0]);
    args.push_back(c.boundaries[1]);
    reg.add({chain_name(c), instantiate_chain(cfg, c.chain, c.boundaries), Relation::Kind::Instance, "chain", args,
             nullptr});
  }
  for (auto& [a, b] : cfg.once_pairs)
    reg.add({braid_name(a, b), instantiate_braid(cfg, a, b), Relation::Kind::Instance, "braid", {a, b}, nullptr});
  if (cfg.genus == 1 && cfg.boundary_count == 1) {
    try {
      reg.add({"genus1", instantiate_genus1(cfg), Relation::Kind::Instance, "genus1", {}, nullptr});
    } catch (const Error&) {
    }
  }
  for (auto& f : cfg.formals)
    for (auto& [a, d] : f.sends) {
      auto fw = GroupWord::formal(f.name);
      reg.add({witness_name(f.name, a),
               {GroupWord::twist(CurveExpr::image(fw, CurveExpr::base(a))), GroupWord::twist(d)},
               Relation::Kind::Assumption,
               "witness",
               {f.name, a, d},
               nullptr});
      if (!reg.find(witness_name(f.name, d, true))) reg.add(inverse_witness(f.name, a, d));
    }
  return reg;
}

}  // namespace mcg
