#include "mcg/repcheck.hpp"

namespace mcg {

namespace {

const FreeAutomorphism& table_of(const SurfaceConfig& cfg, const Generator& g) {
  if (!cfg.has_pi1()) throw BackendUnavailable("backend unavailable: missing tables (config " + cfg.name + " has no pi1 tables)");
  if (g.is_twist()) {
    auto rec = cfg.curve(g.curve.base_name());
    if (!rec) throw Error("unknown curve " + g.curve.base_name());
    if (!rec->pi1) throw BackendUnavailable("backend unavailable: missing pi1 table for curve " + rec->name);
    return *rec->pi1;
  }
  auto rec = cfg.formal(g.symbol);
  if (!rec) throw Error("unknown formal symbol " + g.symbol);
  if (!rec->pi1) throw BackendUnavailable("backend unavailable: missing pi1 table for " + g.symbol);
  return *rec->pi1;
}

FreeAutomorphism letter_action(const SurfaceConfig& cfg, const Letter& l) {
  const auto& t = table_of(cfg, l.gen);
  FreeAutomorphism base = t.power(l.exp);
  if (l.gen.is_twist() && !l.gen.curve.is_base()) {
    // t_{g(c)} = g t_c g^-1
    auto g = pi1_action(cfg, l.gen.curve.map());
    return g.after(base).after(g.inverted());
  }
  return base;
}

}  // namespace

FreeAutomorphism pi1_action(const SurfaceConfig& cfg, const GroupWord& w) {
  if (!cfg.has_pi1()) throw BackendUnavailable("backend unavailable: missing tables (config " + cfg.name + " has no pi1 tables)");
  int frames = 0;
  for (auto& c : cfg.curves)
    if (c.pi1) frames = std::max(frames, int(c.pi1->framing.size()));
  FreeAutomorphism r = FreeAutomorphism::identity(cfg.pi1_rank(), frames);
  for (auto& l : w.letters()) r = r.after(letter_action(cfg, l));
  return r;
}

BackendReport pi1_compare(const SurfaceConfig& cfg, const GroupWord& lhs, const GroupWord& rhs) {
  auto a = pi1_action(cfg, lhs), b = pi1_action(cfg, rhs);
  if (a == b) return {true, "automorphisms agree on all free generators"};
  for (int i = 0; i < a.rank(); ++i)
    if (a.images[i] != b.images[i])
      return {false, "images of generator " + cfg.pi1_generators[i] + " differ: " +
                         free_word_str(a.images[i], cfg.pi1_generators) + " vs " +
                         free_word_str(b.images[i], cfg.pi1_generators)};
  return {false, "framings differ"};
}

bool pi1_sends(const SurfaceConfig& cfg, const std::string& f, const std::string& a, const std::string& b) {
  GroupWord lhs = GroupWord::formal(f) * GroupWord::twist(a) * GroupWord::formal(f, -1);
  return pi1_compare(cfg, lhs, GroupWord::twist(b)).equal;
}

}  // namespace mcg
