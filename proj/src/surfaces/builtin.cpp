#include <charconv>
#include <regex>

#include "mcg/repcheck.hpp"
#include "mcg/surface.hpp"

namespace mcg {

DiskNames DiskNames::with_suffix(const std::string& s) {
  DiskNames n;
  for (auto* f : {&n.delta, &n.a1, &n.a2, &n.a3, &n.a4, &n.x1, &n.x2, &n.x3, &n.x4, &n.y1, &n.y2, &n.fC, &n.fK, &n.fY})
    *f += s;
  return n;
}

std::string chain_curve(int i, int g) {
  if (i == 2 * g - 1) return "b";
  if (i == 2 * g) return "r";
  return "c" + std::to_string(i);
}

namespace {

IntMatrix symplectic_form(int rank, int handles, int offset = 0) {
  IntMatrix f(rank, rank);
  for (int i = 0; i < handles; ++i) {
    int a = offset + 2 * i;
    f(a, a + 1) = 1;
    f(a + 1, a) = -1;
  }
  return f;
}

IntVec unit(int rank, int i, std::int64_t s = 1) {
  IntVec v(rank, 0);
  v[i] = s;
  return v;
}

// Classes of the four holes of the marked disk, oriented as its boundary;
// the remaining disk curves are sums of the holes they enclose.
struct HoleClasses {
  IntVec a1, a2, a3, a4;
};

void add_disk(SurfaceConfig& cfg, const DiskNames& n, const HoleClasses& h) {
  cfg.add_curve(n.a1, h.a1);
  cfg.add_curve(n.a2, h.a2);
  cfg.add_curve(n.a3, h.a3);
  cfg.add_curve(n.a4, h.a4);
  cfg.add_curve(n.x1, h.a2 + h.a3 + h.a4);
  cfg.add_curve(n.x2, h.a1 + h.a3 + h.a4);
  cfg.add_curve(n.x3, h.a1 + h.a2 + h.a4);
  cfg.add_curve(n.x4, h.a1 + h.a2 + h.a3);
  cfg.add_curve(n.y1, h.a1 + h.a2);
  cfg.add_curve(n.y2, h.a3 + h.a4);
  std::vector<std::string> holes{n.a1, n.a2, n.a3, n.a4};
  std::vector<std::string> inner{n.x1, n.x2, n.x3, n.x4, n.y1, n.y2};
  for (std::size_t i = 0; i < holes.size(); ++i) {
    cfg.declare_disjoint(n.delta, holes[i]);
    for (std::size_t j = i + 1; j < holes.size(); ++j) cfg.declare_disjoint(holes[i], holes[j]);
    for (auto& c : inner) cfg.declare_disjoint(holes[i], c);
  }
  for (auto& c : inner) cfg.declare_disjoint(n.delta, c);
  cfg.declare_disjoint(n.x1, n.y2);
  cfg.declare_disjoint(n.x2, n.y2);
  cfg.declare_disjoint(n.x3, n.y1);
  cfg.declare_disjoint(n.x4, n.y1);
  cfg.declare_disjoint(n.y1, n.y2);
  cfg.lanterns.push_back({{n.delta, n.a1, n.a2, n.y2}, {n.y1, n.x1, n.x2}});
  cfg.lanterns.push_back({{n.delta, n.y1, n.a3, n.a4}, {n.x3, n.x4, n.y2}});
}

void add_witnesses(SurfaceConfig& cfg, const DiskNames& n, std::optional<IntMatrix> mc,
                   std::optional<IntMatrix> mk, std::optional<IntMatrix> my) {
  auto& c = cfg.add_formal(n.fC);
  c.sends = {{n.x1, n.a1}, {n.a2, n.x2}};
  c.h1 = mc;
  auto& k = cfg.add_formal(n.fK);
  k.sends = {{n.x3, n.a3}, {n.a4, n.x4}};
  k.h1 = mk;
  auto& y = cfg.add_formal(n.fY);
  y.sends = {{n.y1, n.y2}};
  y.h1 = my;
}

}  // namespace

SurfaceConfig torus_config() {
  SurfaceConfig cfg;
  cfg.name = "torus";
  cfg.genus = 1;
  cfg.boundary_count = 1;
  cfg.boundary_names = {"delta"};
  cfg.pi1_generators = {"x", "y"};
  cfg.boundary_word = {1, 2, -1, -2};
  cfg.form = IntMatrix(2, 2);
  cfg.form(0, 1) = -1;
  cfg.form(1, 0) = 1;

  FreeAutomorphism ta = FreeAutomorphism::identity(2);
  ta.images[1] = {2, 1};
  ta.inverse_images[1] = {2, -1};
  FreeAutomorphism tb = FreeAutomorphism::identity(2);
  tb.images[0] = {1, -2};
  tb.inverse_images[0] = {1, 2};
  // The boundary twist conjugates every loop by the boundary word.
  FreeAutomorphism td = FreeAutomorphism::identity(2);
  auto bw = cfg.boundary_word;
  for (int i = 1; i <= 2; ++i) {
    td.images[i - 1] = concat(concat(inverse(bw), {i}), bw);
    td.inverse_images[i - 1] = concat(concat(bw, {i}), inverse(bw));
  }

  cfg.add_curve("a", {1, 0}).pi1 = ta;
  cfg.add_curve("b", {0, 1}).pi1 = tb;
  auto& d = cfg.add_curve("delta", {0, 0});
  d.pi1 = td;
  d.boundary_parallel = true;
  d.separating = true;
  cfg.declare_once("a", "b");
  cfg.declare_disjoint("delta", "a");
  cfg.declare_disjoint("delta", "b");

  auto& w = cfg.add_formal("w");
  w.pi1 = ta.after(tb).after(ta);
  w.h1 = w.pi1->abelianized();
  w.sends = {{"a", "b"}, {"b", "a"}};
  return cfg;
}

SurfaceConfig surface_config(int g) {
  if (g < 2) throw Error("the marked surface needs genus at least 2");
  SurfaceConfig cfg;
  cfg.name = "surface-g" + std::to_string(g);
  cfg.genus = g;
  cfg.boundary_count = 1;
  cfg.boundary_names = {"delta"};
  int rank = 2 * g;
  cfg.form = symplectic_form(rank, g);
  auto alpha = [&](int i, std::int64_t s = 1) { return unit(rank, 2 * (i - 1), s); };
  auto beta = [&](int i) { return unit(rank, 2 * (i - 1) + 1); };

  auto& d = cfg.add_curve("delta", IntVec(rank, 0));
  d.boundary_parallel = true;
  d.separating = true;

  for (int i = 1; i <= 2 * g; ++i) {
    IntVec v = i == 1 ? alpha(1) : i % 2 == 0 ? beta(i / 2) : alpha((i + 1) / 2) + alpha((i - 1) / 2, -1);
    cfg.add_curve(chain_curve(i, g), v);
  }
  for (int i = 1; i <= 2 * g; ++i)
    for (int j = i + 1; j <= 2 * g; ++j) {
      if (j == i + 1) cfg.declare_once(chain_curve(i, g), chain_curve(j, g));
      else cfg.declare_disjoint(chain_curve(i, g), chain_curve(j, g));
    }

  DiskNames n;
  add_disk(cfg, n, {alpha(g), alpha(g - 1), alpha(g - 1, -1), alpha(g, -1)});
  for (int i = 1; i <= 2 * g - 1; ++i) {
    cfg.declare_disjoint(n.a1, chain_curve(i, g));
    cfg.declare_disjoint(n.x1, chain_curve(i, g));
    if (i <= 2 * g - 3) {
      cfg.declare_disjoint(n.a2, chain_curve(i, g));
      cfg.declare_disjoint(n.a3, chain_curve(i, g));
    }
  }
  cfg.declare_once(n.a1, "r");
  for (auto& c : {"r", "b"}) {
    cfg.declare_disjoint(n.x2, c);
    cfg.declare_disjoint(n.a3, c);
  }

  std::vector<std::string> main_chain, short_chain;
  for (int i = 1; i <= 2 * g - 1; ++i) main_chain.push_back(chain_curve(i, g));
  for (int i = 1; i <= 2 * g - 3; ++i) short_chain.push_back(chain_curve(i, g));
  cfg.chains.push_back({main_chain, {n.x1, n.a1}});
  cfg.chains.push_back({short_chain, {n.a2, n.a3}});
  cfg.chains.push_back({{n.a1, "r", "b"}, {n.x2, n.a3}});

  add_witnesses(cfg, n, IntMatrix::identity(rank), IntMatrix::identity(rank), IntMatrix::identity(rank));

  // Chains c_1..c_{2l-1} for 2 <= l <= g with their two boundary curves, and
  // the witness swapping (c_1, d_1) to (d_2, c_{2l-1}).
  for (int l = 2; l <= g; ++l) {
    std::string d1 = "d1.l" + std::to_string(l), d2 = "d2.l" + std::to_string(l);
    cfg.add_curve(d1, alpha(l));
    cfg.add_curve(d2, alpha(l, -1));
    cfg.declare_disjoint(d1, d2);
    std::vector<std::string> ch;
    for (int i = 1; i <= 2 * l - 1; ++i) {
      ch.push_back(chain_curve(i, g));
      cfg.declare_disjoint(d1, chain_curve(i, g));
      cfg.declare_disjoint(d2, chain_curve(i, g));
    }
    cfg.chains.push_back({ch, {d1, d2}});

    IntMatrix m = IntMatrix::identity(rank);
    auto set_col = [&](int col, const IntVec& v) {
      for (int r = 0; r < rank; ++r) m(r, col) = v[r];
    };
    set_col(0, alpha(l));
    set_col(1, beta(l) + beta(l - 1));
    set_col(2 * (l - 1), alpha(l) + alpha(l - 1, -1));
    set_col(2 * (l - 1) + 1, -beta(l - 1));
    if (l > 2) {
      set_col(2 * (l - 2), alpha(1));
      set_col(2 * (l - 2) + 1, beta(1));
    }
    auto& f = cfg.add_formal("fL.l" + std::to_string(l));
    f.h1 = m;
    f.sends = {{chain_curve(1, g), d2}, {d1, chain_curve(2 * l - 1, g)}};
  }
  return cfg;
}

}  // namespace mcg
