#include "doctest.h"
#include "mcg/repcheck.hpp"
#include "mcg/surface.hpp"

using namespace mcg;

namespace {
GroupWord T(const std::string& c, int e = 1) { return GroupWord::twist(c, e); }

std::vector<std::string> shipped_names() {
  std::vector<std::string> n{"torus"};
  for (int k = 3; k <= 8; ++k) n.push_back("disk-" + std::to_string(k));
  for (int g = 2; g <= 5; ++g) n.push_back("surface-g" + std::to_string(g));
  for (int h = 1; h <= 3; ++h)
    for (int l = 0; l <= 1; ++l) n.push_back("sections-h" + std::to_string(h) + "-l" + std::to_string(l));
  return n;
}
}  // namespace

TEST_CASE("every shipped configuration validates") {
  for (auto& n : shipped_names()) {
    CAPTURE(n);
    auto r = validate_config(builtin_config(n));
    for (auto& e : r.errors) MESSAGE(e);
    CHECK(r.ok());
  }
}

TEST_CASE("pi1 rank and boundary bookkeeping") {
  auto s = sections_config(2, 1);
  CHECK(s.genus == 9);
  CHECK(s.boundary_count == 5);
  CHECK(s.pi1_rank() == 2 * 9 + 5 - 1);
  CHECK(s.boundary_names.size() == 5);
  CHECK(holed_disk_config(5).pi1_rank() == 5);
}

TEST_CASE("a table whose inverse does not compose to the identity is rejected") {
  auto cfg = torus_config();
  cfg.curves[0].pi1->inverse_images[1] = {2, 1};
  auto r = validate_config(cfg);
  CHECK_FALSE(r.ok());
  CHECK(r.errors[0].find("a:") == 0);
}

TEST_CASE("a wrong homology class is caught against the table") {
  auto cfg = torus_config();
  cfg.curves[0].homology = {0, 1};
  CHECK_FALSE(validate_config(cfg).ok());
}

TEST_CASE("nonzero class on the boundary of a one-boundary surface is rejected") {
  auto cfg = surface_config(2);
  cfg.curves[0].homology[0] = 1;
  CHECK_FALSE(validate_config(cfg).ok());
}

TEST_CASE("lantern instances on the four-holed disk") {
  auto cfg = holed_disk_config(4);
  auto e1 = instantiate_lantern(cfg, {"delta", "a1", "a2", "y2"}, {"y1", "x1", "x2"});
  CHECK(e1.lhs.size() == 4);
  CHECK(e1.rhs.size() == 3);
  auto e2 = instantiate_lantern(cfg, {"delta", "y1", "a3", "a4"}, {"x3", "x4", "y2"});
  CHECK(pi1_compare(cfg, e1.lhs, e1.rhs).equal);
  CHECK(pi1_compare(cfg, e2.lhs, e2.rhs).equal);
  // cyclic rotation is the same relation
  auto e3 = instantiate_lantern(cfg, {"delta", "a1", "a2", "y2"}, {"x1", "x2", "y1"});
  CHECK(pi1_compare(cfg, e3.lhs, e3.rhs).equal);
  // the transposed order is a different (false) relation and is refused
  CHECK_THROWS_AS(instantiate_lantern(cfg, {"delta", "a1", "a2", "y2"}, {"x1", "y1", "x2"}), Error);
  CHECK_FALSE(pi1_compare(cfg, e1.lhs, T("x1") * T("y1") * T("x2")).equal);
  CHECK_THROWS_AS(instantiate_lantern(cfg, {"delta", "a1", "a2", "zz"}, {"y1", "x1", "x2"}), Error);
  CHECK_THROWS_AS(instantiate_lantern(cfg, {"delta", "a1", "x1", "y2"}, {"y1", "x1", "x2"}), Error);
}

TEST_CASE("three-holed disk carries the basic lantern") {
  auto cfg = holed_disk_config(3);
  auto e = instantiate_lantern(cfg, {"delta", "a1", "a2", "a3"}, {"x1", "x2", "x3"});
  CHECK(e.lhs.str() == "T(delta) T(a1) T(a2) T(a3)");
  CHECK(pi1_compare(cfg, e.lhs, e.rhs).equal);
  CHECK(h1_compare(cfg, e.lhs, e.rhs).equal);
}

TEST_CASE("every recorded lantern of the n-holed disks holds exactly") {
  for (int n = 3; n <= 8; ++n) {
    auto cfg = holed_disk_config(n);
    CHECK(int(cfg.lanterns.size()) == n - 2);
    for (auto& l : cfg.lanterns) {
      auto e = instantiate_lantern(cfg, l.holes, l.interiors);
      CHECK(pi1_compare(cfg, e.lhs, e.rhs).equal);
    }
  }
}

TEST_CASE("marked surface lanterns reuse the identified curve names") {
  auto cfg = surface_config(2);
  auto e1 = instantiate_lantern(cfg, {"delta", "a1", "a2", "y2"}, {"y1", "x1", "x2"});
  auto e2 = instantiate_lantern(cfg, {"delta", "y1", "a3", "a4"}, {"x3", "x4", "y2"});
  CHECK(h1_compare(cfg, e1.lhs, e1.rhs).equal);
  CHECK(h1_compare(cfg, e2.lhs, e2.rhs).equal);
  CHECK(curve_class(cfg, CurveExpr::base("a1")) == -curve_class(cfg, CurveExpr::base("a4")));
}

TEST_CASE("chain relations") {
  auto cfg = surface_config(4);
  for (int l = 1; l <= 3; ++l) {
    std::vector<std::string> ch;
    for (int i = 1; i <= 2 * l + 1; ++i) ch.push_back(chain_curve(i, 4));
    std::string tag = ".l" + std::to_string(l + 1);
    auto e = instantiate_chain(cfg, ch, {"d1" + tag, "d2" + tag});
    CHECK(e.lhs.unit_length() == std::size_t((2 * l + 1) * (2 * l + 2)));
    CHECK(e.rhs.unit_length() == 2);
    CHECK(h1_compare(cfg, e.lhs, e.rhs).equal);
  }
  CHECK_THROWS_AS(instantiate_chain(cfg, {"c1", "c2"}, {"d1.l2", "d2.l2"}), Error);
  CHECK_THROWS_AS(instantiate_chain(cfg, {"c1", "c3", "c2"}, {"d1.l2", "d2.l2"}), Error);
  auto g2 = surface_config(2);
  auto short_chain = instantiate_chain(g2, {"c1"}, {"a2", "a3"});
  CHECK(short_chain.lhs == T("c1", 2));
  auto e = instantiate_chain(g2, {"a1", "r", "b"}, {"x2", "a3"});
  CHECK(h1_compare(g2, e.lhs, e.rhs).equal);
}

TEST_CASE("genus-1 relation") {
  auto cfg = torus_config();
  auto e = instantiate_genus1(cfg);
  CHECK(e.lhs.unit_length() == 1);
  CHECK(e.rhs.unit_length() == 12);
  CHECK(genus1_degree(cfg, e.rhs) == 12);
  CHECK(genus1_degree(cfg, e.lhs) == 12);
  CHECK(pi1_compare(cfg, e.lhs, e.rhs).equal);
  CHECK_THROWS_AS(instantiate_genus1(surface_config(2)), Error);
  auto b = instantiate_braid(cfg, "a", "b");
  CHECK(pi1_compare(cfg, b.lhs, b.rhs).equal);
}

TEST_CASE("torus witness swaps the two curves") {
  auto cfg = torus_config();
  CHECK(pi1_sends(cfg, "w", "a", "b"));
  CHECK(pi1_sends(cfg, "w", "b", "a"));
  CHECK_FALSE(pi1_sends(cfg, "w", "a", "a"));
}
