#include "factorgen/common.hpp"

namespace mcg {

namespace {

GroupWord T(const std::string& c, int e = 1) { return GroupWord::twist(c, e); }
GroupWord F(const std::string& f, int e = 1) { return GroupWord::formal(f, e); }

GroupWord product(const std::vector<std::string>& names) {
  GroupWord w;
  for (auto& n : names) w *= T(n);
  return w;
}

std::vector<std::string> repeat(const std::vector<std::string>& w, int times) {
  std::vector<std::string> out;
  for (int i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<std::string> chain_prefix(int from, int to, int g) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(chain_curve(i, g));
  return out;
}

// Ten twists about a1, r, b whose product is t_x2 t_a3 t_a1^-2.
std::vector<std::string> ten_twists(const DiskNames& n) {
  return {"r", n.a1, "b", "r", n.a1, "r", "b", n.a1, "r", "b"};
}

// c_k ... c_1 c_1 ... c_k
std::vector<std::string> loop_word(int k, int g) {
  std::vector<std::string> out;
  for (int i = k; i >= 1; --i) out.push_back(chain_curve(i, g));
  for (int i = 1; i <= k; ++i) out.push_back(chain_curve(i, g));
  return out;
}

// The 8g-6 twists left over when the chain of length 2g-3 is split off the
// chain of length 2g-1.
std::vector<std::string> remainder_twists(int g) { return concat(loop_word(2 * g - 1, g), loop_word(2 * g - 2, g)); }

std::string main_chain_name(int g) {
  return chain_name({chain_prefix(1, 2 * g - 1, g), {DiskNames{}.x1, DiskNames{}.a1}});
}
std::string short_chain_name(int g) {
  return chain_name({chain_prefix(1, 2 * g - 3, g), {DiskNames{}.a2, DiskNames{}.a3}});
}

// a1 T a1 = x2 a3 for the ten twists T, via braid moves and the chain of
// length three.
Relation ten_twist_lemma(const SurfaceConfig& cfg, const RelationRegistry& reg) {
  DiskNames n;
  CommutationContext ctx(cfg);
  auto start = concat(concat({n.a1}, ten_twists(n)), {n.a1});
  TraceBuilder b(product(start), reg, ctx);
  positive_rewrite(b, 0, start, repeat({n.a1, "r", "b"}, 4));
  b.relation(chain_name({{n.a1, "r", "b"}, {n.x2, n.a3}}), true, 0);
  Relation r;
  r.name = "split-chain(" + n.a1 + ",r,b)";
  r.eq = {product(start), T(n.x2) * T(n.a3)};
  r.kind = Relation::Kind::Derived;
  r.source = "chain";
  r.args = {n.a1, "r", "b"};
  r.proof = std::make_shared<DerivationTrace>(b.finish(r.eq.rhs));
  return r;
}

// T = t_x1 t_a1 t_a3^-1 t_a2^-1 for the remainder twists T: append the
// short chain relator, merge into the long chain by braid moves, apply it.
Relation remainder_lemma(const SurfaceConfig& cfg, const RelationRegistry& reg, int g) {
  DiskNames n;
  CommutationContext ctx(cfg);
  auto rem = remainder_twists(g);
  TraceBuilder b(product(rem), reg, ctx);
  b.relation(short_chain_name(g), false, rem.size(), 0, 0);
  auto shorter = repeat(chain_prefix(1, 2 * g - 3, g), 2 * g - 2);
  positive_rewrite(b, 0, concat(rem, shorter), repeat(chain_prefix(1, 2 * g - 1, g), 2 * g));
  b.relation(main_chain_name(g), true, 0);
  Relation r;
  r.name = "split-chain(" + chain_curve(1, g) + ".." + chain_curve(2 * g - 1, g) + ")";
  r.eq = {product(rem), T(n.x1) * T(n.a1) * T(n.a3, -1) * T(n.a2, -1)};
  r.kind = Relation::Kind::Derived;
  r.source = "chain";
  r.args = chain_prefix(1, 2 * g - 1, g);
  r.proof = std::make_shared<DerivationTrace>(b.finish(r.eq.rhs));
  return r;
}

FactorizationResult lefschetz_many(int g, int h, int m) {
  FactorizationResult r;
  r.config = surface_config(g);
  r.provenance = "lefschetz";
  auto& cfg = r.config;
  auto reg = registry_for(cfg);
  DiskNames n;
  reg.add(four_hole_lantern(cfg, n));
  auto t1 = ten_twist_lemma(cfg, reg);
  auto t2 = remainder_lemma(cfg, reg, g);
  reg.add(t1);
  reg.add(t2);
  CommutationContext ctx(cfg);

  int k = h - 1;
  // C_{h-1} = [a3^k x4^-k, fK^-1] = a3^k x4^-k a4^k x3^-k
  r.factorization.push(Factor::commutator(T(n.a3, k) * T(n.x4, -k), F(n.fK, -1)));
  // C = [a1 x2^-1, fC^-1] = a1 x2^-1 a2 x1^-1, conjugated by x3^i for i = k-1..1
  auto C = Factor::commutator(T(n.a1) * T(n.x2, -1), F(n.fC, -1));
  for (int i = k - 1; i >= 1; --i) r.factorization.push(Factor::conjugated(C, T(n.x3, i)));
  auto ten = product(ten_twists(n));
  auto big = Factor::commutator(T(n.a1, m + 1) * T(n.x2, -m - 1), F(n.fC, -1));
  r.factorization.push(m ? Factor::conjugated(big, ten.power(m)) : big);
  auto rem = remainder_twists(g);
  for (int i = 0; i < m; ++i)
    for (auto& c : ten_twists(n)) r.factorization.push(Factor::twist_power(c, 1));
  for (int i = 0; i < m; ++i)
    for (auto& c : rem) r.factorization.push(Factor::twist_power(c, 1));
  r.target = T(n.delta, 2 - 2 * h);

  TraceBuilder b(r.factorization.flatten(), reg, ctx);
  b.resolve_conjugations();
  b.rewrite_images();
  for (int i = 0; i < m; ++i)
    if (!b.replace(t1.name, ten)) throw Error("ten-twist block " + std::to_string(i + 1) + " not found");
  for (int i = 0; i < m; ++i)
    if (!b.replace(t2.name, product(rem))) throw Error("remainder block " + std::to_string(i + 1) + " not found");
  boundary_twist_tactic(b, n, 2 - 2 * h);
  finish_result(r, b, reg);
  return r;
}

FactorizationResult lefschetz_torus_base(int g, int m, int l) {
  if (l < 2 || l > g) throw Error("chain length parameter l must lie in [2, g]");
  FactorizationResult r;
  r.config = surface_config(g);
  r.provenance = "lefschetz";
  auto& cfg = r.config;
  auto reg = registry_for(cfg);
  CommutationContext ctx(cfg);
  auto L = std::to_string(l);
  std::string d1 = "d1.l" + L, d2 = "d2.l" + L, f = "fL.l" + L;
  auto c1 = chain_curve(1, g), top = chain_curve(2 * l - 1, g);
  // C(l) = [c1^m d1^-m, f] = c1^m d1^-m c_{2l-1}^m d2^-m
  r.factorization.push(Factor::commutator(T(c1, m) * T(d1, -m), F(f)));
  // T(l) = (c2..c_{2l-1}) (c1..c_{2l-1})^{2l-2} (c1..c_{2l-2})
  auto tl = concat(concat(chain_prefix(2, 2 * l - 1, g), repeat(chain_prefix(1, 2 * l - 1, g), 2 * l - 2)),
                   chain_prefix(1, 2 * l - 2, g));
  for (int i = 0; i < m; ++i)
    for (auto& c : tl) r.factorization.push(Factor::twist_power(c, 1));
  r.target = GroupWord();

  TraceBuilder b(r.factorization.flatten(), reg, ctx);
  b.resolve_conjugations();
  b.rewrite_images();
  auto chain = chain_name({chain_prefix(1, 2 * l - 1, g), {d1, d2}});
  for (int i = 0; i < m; ++i)
    if (!b.replace(chain, product(tl))) throw Error("chain block " + std::to_string(i + 1) + " not found");
  finish_result(r, b, reg);
  return r;
}

}  // namespace

FactorizationResult lefschetz_word(int g, int h, int m, int l) {
  if (g < 2) throw Error("Lefschetz construction needs fiber genus at least 2");
  if (h < 1) throw Error("Lefschetz construction needs base genus at least 1");
  if (m < 0) throw Error("twist multiplicity must be nonnegative");
  return h == 1 ? lefschetz_torus_base(g, m, l) : lefschetz_many(g, h, m);
}

}  // namespace mcg
