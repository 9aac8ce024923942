#pragma once

#include <optional>
#include <string>

#include "mcg/freegroup.hpp"
#include "mcg/intmat.hpp"
#include "mcg/surface.hpp"
#include "mcg/word.hpp"

namespace mcg {

class BackendUnavailable : public Error {
 public:
  using Error::Error;
};

// x -> x + e<x,c>c
IntMatrix transvection(const IntMatrix& form, const IntVec& c, std::int64_t e = 1);
std::int64_t pairing(const IntMatrix& form, const IntVec& x, const IntVec& y);

IntVec curve_class(const SurfaceConfig& cfg, const CurveExpr& c);
IntMatrix h1_action(const SurfaceConfig& cfg, const GroupWord& w);

struct BackendReport {
  bool equal = false;
  std::string detail;
};

BackendReport h1_compare(const SurfaceConfig& cfg, const GroupWord& lhs, const GroupWord& rhs);

FreeAutomorphism pi1_action(const SurfaceConfig& cfg, const GroupWord& w);
BackendReport pi1_compare(const SurfaceConfig& cfg, const GroupWord& lhs, const GroupWord& rhs);
// Checks f t_a f^-1 = t_b exactly; throws BackendUnavailable without tables.
bool pi1_sends(const SurfaceConfig& cfg, const std::string& f, const std::string& a, const std::string& b);

// Abelianization Mod(torus with one hole) -> Z: nonseparating twists count 1,
// the boundary twist 12.
std::int64_t genus1_degree(const SurfaceConfig& cfg, const GroupWord& w);

}  // namespace mcg
