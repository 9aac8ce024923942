#include <random>
#include <set>

#include "doctest.h"
#include "mcg/repcheck.hpp"
#include "mcg/rewrite.hpp"

using namespace mcg;

namespace {
GroupWord T(const std::string& c, int e = 1) { return GroupWord::twist(c, e); }

using Units = std::vector<Letter>;

// Every word reachable by swapping adjacent commuting letters or deleting an
// adjacent inverse pair. Two words are equal in the trace group exactly when
// these sets meet.
std::set<std::string> closure(const Units& w, const CommutationContext& ctx) {
  auto key = [](const Units& u) { return GroupWord(u).str() + "#" + std::to_string(u.size()); };
  std::set<std::string> seen;
  std::vector<Units> todo{w};
  seen.insert(key(w));
  while (!todo.empty()) {
    auto u = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      Units v = u;
      if (u[i].gen == u[i + 1].gen && u[i].exp == -u[i + 1].exp) {
        v.erase(v.begin() + i, v.begin() + i + 2);
      } else if (ctx.independent(u[i].gen, u[i + 1].gen)) {
        std::swap(v[i], v[i + 1]);
      } else {
        continue;
      }
      if (seen.insert(key(v)).second) todo.push_back(v);
    }
  }
  return seen;
}

Units random_units(std::mt19937& rng, const std::vector<std::string>& curves, int len) {
  Units u;
  for (int i = 0; i < len; ++i)
    u.push_back({Generator::twist(CurveExpr::base(curves[rng() % curves.size()])), rng() % 2 ? 1 : -1});
  return u;
}

Units shuffle_commuting(Units u, std::mt19937& rng, const CommutationContext& ctx) {
  for (int k = 0; k < 40 && u.size() > 1; ++k) {
    std::size_t i = rng() % (u.size() - 1);
    if (ctx.independent(u[i].gen, u[i + 1].gen)) std::swap(u[i], u[i + 1]);
  }
  return u;
}

const std::vector<std::string> disk4_curves{"delta", "a1", "x1", "x2", "y1", "y2", "x3"};
}  // namespace

TEST_CASE("trace-group equality agrees with a brute-force closure") {
  auto cfg = holed_disk_config(4);
  CommutationContext ctx(cfg);
  std::mt19937 rng(7);
  int equal_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_units(rng, disk4_curves, int(rng() % 7));
    // half the time compare against a scrambled copy padded with a cancelling pair
    Units b;
    if (trial % 2) {
      b = shuffle_commuting(a, rng, ctx);
      auto p = random_units(rng, disk4_curves, 1);
      auto pos = b.empty() ? 0 : rng() % (b.size() + 1);
      b.insert(b.begin() + pos, {p[0], {p[0].gen, -p[0].exp}});
    } else {
      b = random_units(rng, disk4_curves, int(rng() % 7));
    }
    auto ca = closure(a, ctx), cb = closure(b, ctx);
    bool oracle = false;
    for (auto& s : ca)
      if (cb.count(s)) oracle = true;
    CAPTURE(GroupWord(a).str());
    CAPTURE(GroupWord(b).str());
    CHECK(equal_mod_commutation(GroupWord(a), GroupWord(b), ctx) == oracle);
    equal_seen += oracle;
  }
  CHECK(equal_seen > 100);
}

TEST_CASE("reduction reaches the shortest word of its class") {
  auto cfg = holed_disk_config(4);
  CommutationContext ctx(cfg);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_units(rng, disk4_curves, int(rng() % 8));
    std::size_t shortest = a.size();
    for (auto& s : closure(a, ctx)) shortest = std::min<std::size_t>(shortest, std::stoul(s.substr(s.find('#') + 1)));
    CHECK(raag_reduce(a, ctx).unit_length() == shortest);
  }
}

TEST_CASE("normal form is invariant under commuting swaps") {
  auto cfg = holed_disk_config(5);
  CommutationContext ctx(cfg);
  std::vector<std::string> curves{"delta", "a1", "a3", "x1", "x2", "x5", "y1", "y2", "a2"};
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_units(rng, curves, 10);
    auto b = shuffle_commuting(a, rng, ctx);
    CHECK(foata_normal_form(GroupWord(a), ctx) == foata_normal_form(GroupWord(b), ctx));
    CHECK(foata_normal_form(foata_normal_form(GroupWord(a), ctx), ctx) == foata_normal_form(GroupWord(a), ctx));
  }
}

TEST_CASE("a generator does not commute with itself or with an undeclared formal") {
  auto cfg = surface_config(2);
  CommutationContext ctx(cfg);
  auto x = Generator::twist(CurveExpr::base("x1"));
  CHECK_FALSE(ctx.independent(x, x));
  CHECK_FALSE(ctx.independent(x, Generator::formal("fC")));
  CHECK_THROWS_AS(foata_normal_form(T("nope"), ctx), Error);
}

TEST_CASE("relation segments match through commuting letters") {
  auto cfg = holed_disk_config(4);
  auto reg = registry_for(cfg);
  CommutationContext ctx(cfg);
  auto& l = cfg.lanterns[0];
  auto name = lantern_name(l);
  // y1 x1 x2 with delta wedged in: delta commutes with everything
  auto w = T(l.interiors[0]) * T("delta", 1) * T(l.interiors[1]) * T(l.interiors[2]);
  Step s;
  s.relation = name;
  s.forward = false;
  auto out = apply_step(w, s, reg, ctx);
  auto want = T("delta", 2) * T(l.holes[1]) * T(l.holes[2]) * T(l.holes[3]);
  CHECK(equal_mod_commutation(out, want, ctx));

  // x2 does not commute with x1, so x1 cannot be pulled across it
  auto blocked = T(l.interiors[0]) * T(l.interiors[2]) * T(l.interiors[1]);
  CHECK_THROWS_AS(apply_step(blocked, s, reg, ctx), MatchError);
  s.pos = 1;
  CHECK_THROWS_AS(apply_step(w, s, reg, ctx), MatchError);
}

TEST_CASE("a zero-length segment inserts a conjugate of the relator") {
  auto cfg = holed_disk_config(3);
  auto reg = registry_for(cfg);
  CommutationContext ctx(cfg);
  auto& r = reg.get(lantern_name(cfg.lanterns[0]));
  Step s;
  s.relation = r.name;
  s.length = 0;
  s.offset = 0;
  auto out = apply_step(T("x1"), s, reg, ctx);
  // inserted word is (L R^-1)^-1 = R L^-1
  CHECK(equal_mod_commutation(out, r.eq.rhs * r.eq.lhs.inverse() * T("x1"), ctx));
  CHECK(h1_compare(cfg, out, T("x1")).equal);
  CHECK(pi1_compare(cfg, out, T("x1")).equal);
}

TEST_CASE("generalized lantern derivations check for 3 to 8 holes") {
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    auto cfg = holed_disk_config(n);
    auto reg = registry_for(cfg);
    CommutationContext ctx(cfg);
    auto d = derive_generalized_lantern(n);
    auto rep = check_trace(d.trace, reg, ctx);
    INFO(rep.message);
    CHECK(rep.ok);
    CHECK(d.trace.steps.size() == std::size_t(n - 2));
    CHECK(pi1_compare(cfg, d.eq.lhs, d.eq.rhs).equal);

    reg.add(generalized_lantern_relation(n));
    CHECK(check_relation("lantern-disk(" + std::to_string(n) + ")", reg, ctx).ok);

    auto back = reverse_trace(d.trace, reg, ctx);
    auto brep = check_trace(back, reg, ctx);
    INFO(brep.message);
    CHECK(brep.ok);
    CHECK(equal_mod_commutation(back.end, d.trace.start, ctx));
    CHECK(equal_mod_commutation(back.start, d.trace.end, ctx));
  }
}

TEST_CASE("a corrupted step is reported by index") {
  auto cfg = holed_disk_config(6);
  auto reg = registry_for(cfg);
  CommutationContext ctx(cfg);
  auto d = derive_generalized_lantern(6);
  for (std::size_t i = 0; i < d.trace.steps.size(); ++i) {
    auto bad = d.trace;
    bad.steps[i].pos += 1;
    auto rep = check_trace(bad, reg, ctx);
    CHECK_FALSE(rep.ok);
    if (rep.failed_step >= 0) CHECK(rep.failed_step == int(i));
  }
  auto wrong_end = d.trace;
  wrong_end.end = wrong_end.end * T("a1");
  auto rep = check_trace(wrong_end, reg, ctx);
  CHECK_FALSE(rep.ok);
  CHECK(rep.failed_step == -1);

  auto missing = d.trace;
  missing.steps[0].relation = "lantern(nowhere)";
  rep = check_trace(missing, reg, ctx);
  CHECK(rep.failed_step == 0);
  CHECK(rep.message.find("unresolved") != std::string::npos);
}

TEST_CASE("inverse witnesses are derived from the assumptions") {
  auto cfg = surface_config(2);
  auto reg = registry_for(cfg);
  CommutationContext ctx(cfg);
  int derived = 0;
  for (auto& [name, r] : reg.all()) {
    if (r.kind != Relation::Kind::Derived) continue;
    ++derived;
    CAPTURE(name);
    auto rep = check_relation(name, reg, ctx);
    INFO(rep.message);
    CHECK(rep.ok);
    CHECK(h1_compare(cfg, r.eq.lhs, r.eq.rhs).equal);
  }
  CHECK(derived >= 4);
  CHECK(reg.find(witness_name("fC", "x1")));
  CHECK(reg.find(witness_name("fC", "a1", true)));
}

TEST_CASE("conjugations fold and unfold") {
  auto cfg = surface_config(2);
  auto reg = registry_for(cfg);
  CommutationContext ctx(cfg);
  auto f = GroupWord::formal("fC");
  TraceBuilder b(f * T("x1") * T("a2", -1) * f.inverse() * T("b"), reg, ctx);
  CHECK(b.resolve_conjugations() == 1);
  CHECK(b.rewrite_images() == 2);
  CHECK(b.word() == T("a1") * T("x2", -1) * T("b"));
  auto t = b.finish(T("a1") * T("x2", -1) * T("b"));
  CHECK(check_trace(t, reg, ctx).ok);
  auto back = reverse_trace(t, reg, ctx);
  CHECK(check_trace(back, reg, ctx).ok);
}
