#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mcg/freegroup.hpp"
#include "mcg/intmat.hpp"
#include "mcg/word.hpp"

namespace mcg {

struct Equation {
  GroupWord lhs, rhs;
  bool operator==(const Equation&) const = default;
};

struct CurveRecord {
  std::string name;
  IntVec homology;
  bool separating = false;
  bool boundary_parallel = false;
  std::optional<FreeAutomorphism> pi1;
};

// A formal mapping class standing for a diffeomorphism whose existence is
// asserted by the surface picture. Only its declared action is known.
struct FormalRecord {
  std::string name;
  std::optional<IntMatrix> h1;
  std::optional<FreeAutomorphism> pi1;
  std::vector<std::pair<std::string, std::string>> sends;  // curve -> image curve
};

struct LanternRecord {
  std::array<std::string, 4> holes;      // outer boundary first
  std::array<std::string, 3> interiors;  // cyclic order of the right-hand side
};

struct ChainRecord {
  std::vector<std::string> chain;
  std::array<std::string, 2> boundaries;
};

using NamePair = std::pair<std::string, std::string>;
NamePair make_pair_sorted(const std::string& a, const std::string& b);

struct SurfaceConfig {
  std::string name;
  int genus = 0;
  int boundary_count = 1;
  std::vector<std::string> boundary_names;
  IntMatrix form;  // <x,y> = x^T form y
  std::vector<CurveRecord> curves;
  std::vector<FormalRecord> formals;
  std::set<NamePair> disjoint_pairs;
  std::set<NamePair> once_pairs;
  std::vector<LanternRecord> lanterns;
  std::vector<ChainRecord> chains;
  std::vector<std::string> pi1_generators;
  FreeWord boundary_word;

  int pi1_rank() const { return 2 * genus + boundary_count - 1; }
  const CurveRecord* curve(const std::string& n) const;
  const FormalRecord* formal(const std::string& n) const;
  CurveRecord& add_curve(const std::string& n, IntVec hom);
  FormalRecord& add_formal(const std::string& n);
  void declare_disjoint(const std::string& a, const std::string& b);
  void declare_once(const std::string& a, const std::string& b);
  bool declared_disjoint(const std::string& a, const std::string& b) const;
  bool declared_once(const std::string& a, const std::string& b) const;
  // Whether twists about a and b commute: declared disjoint, or one of them
  // is boundary parallel.
  bool disjoint(const std::string& a, const std::string& b) const;
  bool has_pi1() const { return !pi1_generators.empty(); }
};

struct ValidationReport {
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
};

ValidationReport validate_config(const SurfaceConfig& cfg);

Equation instantiate_lantern(const SurfaceConfig& cfg, const std::array<std::string, 4>& holes,
                             const std::array<std::string, 3>& interiors);
Equation instantiate_chain(const SurfaceConfig& cfg, const std::vector<std::string>& chain,
                           const std::array<std::string, 2>& boundaries);
Equation instantiate_genus1(const SurfaceConfig& cfg);
Equation instantiate_braid(const SurfaceConfig& cfg, const std::string& a, const std::string& b);

// Shipped configurations.
SurfaceConfig torus_config();
SurfaceConfig holed_disk_config(int n);
SurfaceConfig surface_config(int g);
SurfaceConfig sections_config(int h, int l);
// "torus", "disk-N", "surface-gG", "sections-hH-lL"
SurfaceConfig builtin_config(const std::string& name);
bool is_builtin_config_name(const std::string& name);

// Curve names used by the constructions on a surface with one marked
// four-holed disk. A suffix keeps copies on disjoint subsurfaces apart.
struct DiskNames {
  std::string delta = "delta";
  std::string a1 = "a1", a2 = "a2", a3 = "a3", a4 = "a4";
  std::string x1 = "x1", x2 = "x2", x3 = "x3", x4 = "x4";
  std::string y1 = "y1", y2 = "y2";
  std::string fC = "fC", fK = "fK", fY = "fY";
  static DiskNames with_suffix(const std::string& s);
};

std::string chain_curve(int i, int g);
// Suffix of the piece carrying the boundary with self-intersection i: m2, p1, 0.
std::string section_tag(int i);
std::string holed_disk_y(int k);

}  // namespace mcg
