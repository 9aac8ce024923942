#include "factorgen/common.hpp"

namespace mcg {

namespace {

// [a,b] conjugated by g is [gag^-1, gbg^-1]; pads become [1, 1].
std::pair<GroupWord, GroupWord> plain_entries(const Factor& f) {
  if (f.kind == Factor::Kind::Commutator) return {f.u, f.v};
  if (f.kind == Factor::Kind::Conjugated) {
    auto [u, v] = plain_entries(*f.inner);
    return {f.conj * u * f.conj.inverse(), f.conj * v * f.conj.inverse()};
  }
  throw Error("sections merge expects commutators only");
}

}  // namespace

FactorizationResult disjoint_sections_word(int h, int l) {
  FactorizationResult r;
  r.config = sections_config(h, l);
  r.provenance = "disjoint-sections";
  auto& cfg = r.config;
  auto reg = registry_for(cfg);
  CommutationContext ctx(cfg);

  std::vector<std::vector<std::pair<GroupWord, GroupWord>>> pieces;
  GroupWord per_piece;
  for (int i = 2 - 2 * h; i <= 2 * h - 2; ++i) {
    if (i == 0) continue;
    auto n = DiskNames::with_suffix("." + section_tag(i));
    reg.add(four_hole_lantern(cfg, n));
    auto f = boundary_twist_factors(n, i);
    pad_commutators(f, h);
    per_piece *= f.flatten();
    std::vector<std::pair<GroupWord, GroupWord>> entries;
    for (auto& c : f.factors()) entries.push_back(plain_entries(c));
    pieces.push_back(entries);
    r.target *= GroupWord::twist(n.delta, i);
  }
  // entries of different pieces commute, so [a1,a2][b1,b2] = [a1 b1, a2 b2]
  for (int j = 0; j < h; ++j) {
    GroupWord u, v;
    for (auto& p : pieces) {
      u *= p[j].first;
      v *= p[j].second;
    }
    r.factorization.push(Factor::commutator(u, v));
  }

  TraceBuilder b(r.factorization.flatten(), reg, ctx);
  b.commute_to(per_piece);
  b.resolve_conjugations();
  b.rewrite_images();
  for (int i = 2 - 2 * h; i <= 2 * h - 2; ++i)
    if (i) boundary_twist_tactic(b, DiskNames::with_suffix("." + section_tag(i)), i);
  finish_result(r, b, reg);
  return r;
}

}  // namespace mcg
