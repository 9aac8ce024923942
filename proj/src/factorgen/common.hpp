#pragma once

#include "mcg/factorgen.hpp"

namespace mcg {

std::string four_hole_lantern_name(const DiskNames& n);
Factorization boundary_twist_factors(const DiskNames& n, int power);
// Lantern steps turning the resolved boundary-twist word into delta^power.
void boundary_twist_tactic(TraceBuilder& b, const DiskNames& n, int power);
// Pads with [1, 1] up to `count` commutators.
void pad_commutators(Factorization& f, int count);
// Fills trace, census and cited relations; throws if the builder did not
// reach the target.
void finish_result(FactorizationResult& r, const TraceBuilder& b, const RelationRegistry& reg);

}  // namespace mcg
