#include <regex>

#include "mcg/surface.hpp"

namespace mcg {

std::string section_tag(int i) {
  if (i == 0) return "0";
  return (i < 0 ? "m" : "p") + std::to_string(std::abs(i));
}

// Genus 8h-8+l: one genus-2 piece Z_i for every nonzero i in [2-2h, 2h-2],
// each carrying the boundary delta.<i>, glued to a genus-l piece carrying
// delta.0. Homology basis: the handles of each Z_i, then the l handles,
// then the boundary classes e_i (i != 0).
SurfaceConfig sections_config(int h, int l) {
  if (h < 1 || l < 0) throw Error("sections surface needs h >= 1 and l >= 0");
  std::vector<int> idx;
  for (int i = 2 - 2 * h; i <= 2 * h - 2; ++i)
    if (i) idx.push_back(i);
  int pieces = int(idx.size());
  SurfaceConfig cfg;
  cfg.name = "sections-h" + std::to_string(h) + "-l" + std::to_string(l);
  cfg.genus = 2 * pieces + l;
  cfg.boundary_count = pieces + 1;
  int rank = cfg.pi1_rank();
  IntMatrix form(rank, rank);
  for (int k = 0; k < 2 * pieces + l; ++k) {
    form(2 * k, 2 * k + 1) = 1;
    form(2 * k + 1, 2 * k) = -1;
  }
  cfg.form = form;
  int eoff = 2 * (2 * pieces + l);

  auto vec = [&](std::initializer_list<std::pair<int, int>> terms) {
    IntVec v(rank, 0);
    for (auto [i, s] : terms) v[i] += s;
    return v;
  };

  IntVec outer(rank, 0);
  for (int p = 0; p < pieces; ++p) outer[eoff + p] = -1;

  std::vector<std::vector<std::string>> names(pieces);
  for (int p = 0; p < pieces; ++p) {
    int i = idx[p];
    auto n = DiskNames::with_suffix("." + section_tag(i));
    int A1 = 4 * p, A2 = 4 * p + 2, E = eoff + p;
    auto& d = cfg.add_curve(n.delta, vec({{E, 1}}));
    d.boundary_parallel = true;
    d.separating = true;
    cfg.boundary_names.push_back(n.delta);

    cfg.add_curve(n.a1, vec({{A2, 1}}));
    cfg.add_curve(n.a2, vec({{A1, 1}}));
    cfg.add_curve(n.a3, vec({{A1, -1}, {E, 1}}));
    cfg.add_curve(n.a4, vec({{A2, -1}}));
    cfg.add_curve(n.x1, vec({{E, 1}, {A2, -1}}));
    cfg.add_curve(n.x2, vec({{E, 1}, {A1, -1}}));
    cfg.add_curve(n.x3, vec({{A1, 1}}));
    cfg.add_curve(n.x4, vec({{A2, 1}, {E, 1}}));
    cfg.add_curve(n.y1, vec({{A1, 1}, {A2, 1}}));
    cfg.add_curve(n.y2, vec({{E, 1}, {A1, -1}, {A2, -1}}));

    std::vector<std::string> holes{n.a1, n.a2, n.a3, n.a4};
    std::vector<std::string> inner{n.x1, n.x2, n.x3, n.x4, n.y1, n.y2};
    for (std::size_t a = 0; a < holes.size(); ++a) {
      for (std::size_t b = a + 1; b < holes.size(); ++b) cfg.declare_disjoint(holes[a], holes[b]);
      for (auto& c : inner) cfg.declare_disjoint(holes[a], c);
    }
    cfg.declare_disjoint(n.x1, n.y2);
    cfg.declare_disjoint(n.x2, n.y2);
    cfg.declare_disjoint(n.x3, n.y1);
    cfg.declare_disjoint(n.x4, n.y1);
    cfg.declare_disjoint(n.y1, n.y2);
    cfg.lanterns.push_back({{n.delta, n.a1, n.a2, n.y2}, {n.y1, n.x1, n.x2}});
    cfg.lanterns.push_back({{n.delta, n.y1, n.a3, n.a4}, {n.x3, n.x4, n.y2}});

    // Witnesses move the handle classes by the boundary class of their piece.
    IntMatrix shift = IntMatrix::identity(rank);
    shift(E, A1) = -1;
    shift(E, A2) = 1;
    IntMatrix shift_y = IntMatrix::identity(rank);
    shift_y(E, A1) = -1;
    auto& fc = cfg.add_formal(n.fC);
    fc.sends = {{n.x1, n.a1}, {n.a2, n.x2}};
    fc.h1 = shift;
    auto& fk = cfg.add_formal(n.fK);
    fk.sends = {{n.x3, n.a3}, {n.a4, n.x4}};
    fk.h1 = shift;
    auto& fy = cfg.add_formal(n.fY);
    fy.sends = {{n.y1, n.y2}};
    fy.h1 = shift_y;

    names[p] = {n.delta, n.a1, n.a2, n.a3, n.a4, n.x1, n.x2, n.x3, n.x4, n.y1, n.y2, n.fC, n.fK, n.fY};
  }
  auto& d0 = cfg.add_curve("delta.0", outer);
  d0.boundary_parallel = true;
  d0.separating = true;
  cfg.boundary_names.insert(cfg.boundary_names.begin() + (pieces / 2), "delta.0");

  // Supports of different pieces are disjoint; witnesses fix every boundary.
  for (int p = 0; p < pieces; ++p)
    for (int q = p + 1; q < pieces; ++q)
      for (auto& a : names[p])
        for (auto& b : names[q]) cfg.declare_disjoint(a, b);
  for (auto& f : cfg.formals)
    for (auto& b : cfg.boundary_names) cfg.declare_disjoint(f.name, b);
  return cfg;
}

SurfaceConfig builtin_config(const std::string& name) {
  std::smatch m;
  if (name == "torus") return torus_config();
  if (std::regex_match(name, m, std::regex(R"(disk-(\d{1,2}))"))) return holed_disk_config(std::stoi(m[1]));
  if (std::regex_match(name, m, std::regex(R"(surface-g(\d{1,2}))"))) return surface_config(std::stoi(m[1]));
  if (std::regex_match(name, m, std::regex(R"(sections-h(\d)-l(\d{1,2}))")))
    return sections_config(std::stoi(m[1]), std::stoi(m[2]));
  throw Error("unknown built-in config " + name);
}

bool is_builtin_config_name(const std::string& name) {
  return name == "torus" || std::regex_match(name, std::regex(R"((disk-\d{1,2})|(surface-g\d{1,2})|(sections-h\d-l\d{1,2}))"));
}

}  // namespace mcg
