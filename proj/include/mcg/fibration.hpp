#pragma once

#include <string>
#include <vector>

#include "mcg/factorgen.hpp"
#include "mcg/factorization.hpp"
#include "mcg/surface.hpp"

namespace mcg {

// Monodromy of a surface bundle or Lefschetz fibration over a genus-h
// surface, lifted to the surface with one boundary: the flattened
// monodromy equals t_delta^boundary_power.
struct FibrationSpec {
  int fiber_genus = 0;
  int base_genus = 0;
  Factorization monodromy;
  int boundary_power = 0;
  bool relatively_minimal = true;  // recorded, never detected

  bool is_bundle() const;
  std::vector<std::string> problems() const;
};

struct SectionInfo {
  int self_intersection = 0;
};

struct SectionedFibration {
  FibrationSpec spec;
  SectionInfo section;
};

enum class Verdict { Ok, Violates, Maximal };
enum class Decomposability { PairIndecomposable, NoCriterion };
std::string to_string(Verdict v);
std::string to_string(Decomposability d);

int section_self_intersection(const FibrationSpec& s);
SectionedFibration with_section(FibrationSpec s);
// Same bundle with inverted monodromy; the section square changes sign.
FibrationSpec reflection(const FibrationSpec& s);
long euler_characteristic(const FibrationSpec& s);
Verdict adjunction_check(int g, int h, int k, bool is_bundle);
Verdict adjunction_check(const FibrationSpec& s);
Verdict genus1_constraint(const FibrationSpec& s);
Verdict genus1_constraint(int boundary_power, int twists);
SectionedFibration fiber_sum(const SectionedFibration& a, const SectionedFibration& b);
FibrationSpec section_sum(const SectionedFibration& a, const SectionedFibration& b);
Decomposability indecomposability_check(int h, int k);

// Reads the fibration off a generated factorization whose target is a
// power of the boundary twist.
FibrationSpec fibration_from(const FactorizationResult& r, int base_genus);

}  // namespace mcg
