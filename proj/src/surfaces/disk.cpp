#include <functional>

#include "mcg/surface.hpp"

namespace mcg {

namespace {

// Twist about the curve enclosing holes i..j of an n-holed disk. Loops
// gamma_1..gamma_n are based on the outer boundary and multiply to it.
FreeAutomorphism interval_twist(int n, int i, int j) {
  FreeWord c;
  for (int k = i; k <= j; ++k) c.push_back(k);
  FreeAutomorphism t = FreeAutomorphism::identity(n, n);
  for (int k = i; k <= j; ++k) {
    t.images[k - 1] = concat(concat(c, {k}), inverse(c));
    t.inverse_images[k - 1] = concat(concat(inverse(c), {k}), c);
    t.framing[k - 1] = 1;
  }
  return t;
}

// Artin generator sigma_i^{+-1}; moves holes, so it carries no framing.
FreeAutomorphism half_twist(int n, int i, bool positive) {
  FreeAutomorphism s = FreeAutomorphism::identity(n);
  FreeAutomorphism inv = FreeAutomorphism::identity(n);
  s.images[i - 1] = {i, i + 1, -i};
  s.images[i] = {i};
  inv.images[i - 1] = {i + 1};
  inv.images[i] = {-(i + 1), i, i + 1};
  s.inverse_images = inv.images;
  inv.inverse_images = s.images;
  return positive ? s : inv;
}

FreeAutomorphism braid_conjugate(int n, const std::vector<int>& word, FreeAutomorphism t) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = std::abs(*it);
    auto s = half_twist(n, i, *it > 0);
    auto framing = t.framing;
    t = s.after(t).after(s.inverted());
    std::swap(framing[i - 1], framing[i]);
    t.framing = framing;
  }
  return t;
}

}  // namespace

std::string holed_disk_y(int k) { return "y" + std::to_string(k); }

SurfaceConfig holed_disk_config(int n) {
  if (n < 3) throw Error("holed disk needs at least three holes");
  SurfaceConfig cfg;
  cfg.name = "disk-" + std::to_string(n);
  cfg.genus = 0;
  cfg.boundary_count = n + 1;
  cfg.form = IntMatrix(n, n);
  for (int i = 1; i <= n; ++i) {
    cfg.pi1_generators.push_back("g" + std::to_string(i));
    cfg.boundary_word.push_back(i);
  }
  auto a = [](int i) { return "a" + std::to_string(i); };
  auto x = [](int i) { return "x" + std::to_string(i); };
  // P_j encloses holes 1..j, Q_j encloses holes j+2..n.
  auto P = [&](int j) { return j == 1 ? a(1) : j == n - 1 ? x(n) : holed_disk_y(2 * j - 3); };
  auto Q = [&](int j) { return j == 0 ? x(1) : j == n - 2 ? a(n) : holed_disk_y(2 * j); };

  auto add = [&](const std::string& name, const FreeAutomorphism& t, bool boundary) {
    IntVec hom(t.framing.begin(), t.framing.end());
    auto& c = cfg.add_curve(name, hom);
    c.separating = true;
    c.boundary_parallel = boundary;
    c.pi1 = t;
  };
  add("delta", interval_twist(n, 1, n), true);
  cfg.boundary_names.push_back("delta");
  for (int i = 1; i <= n; ++i) {
    add(a(i), interval_twist(n, i, i), true);
    cfg.boundary_names.push_back(a(i));
  }
  add(x(1), interval_twist(n, 2, n), false);
  for (int k = 2; k < n; ++k) {
    std::vector<int> w;
    for (int i = k; i < n; ++i) w.push_back(-i);
    add(x(k), braid_conjugate(n, w, interval_twist(n, 1, n - 1)), false);
  }
  add(x(n), interval_twist(n, 1, n - 1), false);
  for (int j = 1; j <= n - 3; ++j) {
    add(P(j + 1), interval_twist(n, 1, j + 1), false);
    add(Q(j), interval_twist(n, j + 2, n), false);
  }

  for (std::size_t i = 0; i < cfg.curves.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.curves.size(); ++j) {
      auto& s = *cfg.curves[i].pi1;
      auto& t = *cfg.curves[j].pi1;
      if (s.after(t) == t.after(s)) cfg.declare_disjoint(cfg.curves[i].name, cfg.curves[j].name);
    }

  for (int j = 1; j <= n - 2; ++j) {
    LanternRecord l{{"delta", P(j), a(j + 1), Q(j)}, {}};
    if (n == 3) l.interiors = {Q(0), x(2), P(2)};
    else if (j < n - 2) l.interiors = {P(j + 1), Q(j - 1), x(j + 1)};
    else l.interiors = {x(n - 1), P(n - 1), Q(n - 3)};
    cfg.lanterns.push_back(l);
  }
  return cfg;
}

}  // namespace mcg
