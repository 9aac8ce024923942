#include <algorithm>

#include "mcg/surface.hpp"

namespace mcg {

namespace {

void require_curve(const SurfaceConfig& cfg, const std::string& n) {
  if (!cfg.curve(n)) throw Error("missing curve " + n + " in config " + cfg.name);
}

GroupWord product(const std::vector<std::string>& names) {
  GroupWord w;
  for (auto& n : names) w *= GroupWord::twist(n);
  return w;
}

bool cyclic_match(const std::array<std::string, 3>& a, const std::array<std::string, 3>& b) {
  for (int r = 0; r < 3; ++r)
    if (a[0] == b[r] && a[1] == b[(r + 1) % 3] && a[2] == b[(r + 2) % 3]) return true;
  return false;
}

}  // namespace

Equation instantiate_lantern(const SurfaceConfig& cfg, const std::array<std::string, 4>& holes,
                             const std::array<std::string, 3>& interiors) {
  for (auto& n : holes) require_curve(cfg, n);
  for (auto& n : interiors) require_curve(cfg, n);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!cfg.disjoint(holes[i], holes[j]))
        throw Error("lantern holes " + holes[i] + " and " + holes[j] + " are not declared disjoint");
  for (auto& h : holes)
    for (auto& x : interiors)
      if (!cfg.disjoint(h, x)) throw Error("lantern hole " + h + " is not declared disjoint from " + x);

  auto sorted = [](std::array<std::string, 4> a) {
    std::sort(a.begin(), a.end());
    return a;
  };
  bool sphere = false;
  for (auto& l : cfg.lanterns) {
    if (sorted(l.holes) != sorted(holes)) continue;
    sphere = true;
    if (cyclic_match(interiors, l.interiors))
      return {product({holes.begin(), holes.end()}), product({interiors.begin(), interiors.end()})};
  }
  if (sphere) throw Error("interior curves are not in the cyclic order recorded for this four-holed sphere");
  throw Error("curves " + holes[0] + " " + holes[1] + " " + holes[2] + " " + holes[3] +
              " do not bound a recorded four-holed sphere");
}

Equation instantiate_chain(const SurfaceConfig& cfg, const std::vector<std::string>& chain,
                           const std::array<std::string, 2>& boundaries) {
  if (chain.empty() || chain.size() % 2 == 0) throw Error("chain relation needs an odd number of curves");
  for (auto& n : chain) require_curve(cfg, n);
  for (auto& n : boundaries) require_curve(cfg, n);
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      if (j == i + 1 && !cfg.declared_once(chain[i], chain[j]))
        throw Error("consecutive chain curves " + chain[i] + " and " + chain[j] + " are not declared to meet once");
      if (j >= i + 2 && !cfg.disjoint(chain[i], chain[j]))
        throw Error("chain curves " + chain[i] + " and " + chain[j] + " are not declared disjoint");
    }
  for (auto& d : boundaries)
    for (auto& c : chain)
      if (!cfg.disjoint(d, c)) throw Error("chain boundary " + d + " is not declared disjoint from " + c);
  bool declared = false;
  for (auto& r : cfg.chains) {
    auto b = r.boundaries;
    if (r.chain == chain && (b == boundaries || (b[0] == boundaries[1] && b[1] == boundaries[0]))) declared = true;
  }
  if (!declared) throw Error("chain is not recorded with these boundary curves in config " + cfg.name);
  int k = int(chain.size());
  return {product(chain).power(k + 1), product({boundaries[0], boundaries[1]})};
}

Equation instantiate_genus1(const SurfaceConfig& cfg) {
  if (cfg.genus != 1 || cfg.boundary_count != 1) throw Error("genus-1 relation needs a torus with one boundary");
  require_curve(cfg, "a");
  require_curve(cfg, "b");
  if (!cfg.declared_once("a", "b")) throw Error("curves a and b are not declared to meet once");
  return {GroupWord::twist(cfg.boundary_names.at(0)), product({"a", "b"}).power(6)};
}

Equation instantiate_braid(const SurfaceConfig& cfg, const std::string& a, const std::string& b) {
  require_curve(cfg, a);
  require_curve(cfg, b);
  if (!cfg.declared_once(a, b)) throw Error("curves " + a + " and " + b + " are not declared to meet once");
  return {product({a, b, a}), product({b, a, b})};
}

}  // namespace mcg
