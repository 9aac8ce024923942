#pragma once

#include <string>
#include <vector>

#include "mcg/intmat.hpp"

namespace mcg {

// Reduced word in a free group; generator i (1-based) is +i, its inverse -i.
using FreeWord = std::vector<int>;

FreeWord reduce(FreeWord w);
FreeWord inverse(const FreeWord& w);
FreeWord concat(const FreeWord& a, const FreeWord& b);

// Automorphism of a free group together with a framing vector. The framing
// counts full turns around each non-base boundary component; it makes the
// action faithful on planar surfaces with several holes.
struct FreeAutomorphism {
  std::vector<FreeWord> images;
  std::vector<FreeWord> inverse_images;
  IntVec framing;

  static FreeAutomorphism identity(int rank, int frames = 0);
  int rank() const { return int(images.size()); }

  FreeWord apply(const FreeWord& w) const;
  FreeWord apply_inverse(const FreeWord& w) const;
  // (*this)(o(x))
  FreeAutomorphism after(const FreeAutomorphism& o) const;
  FreeAutomorphism inverted() const;
  FreeAutomorphism power(int n) const;
  // Abelianized action, columns are images of generators.
  IntMatrix abelianized() const;

  bool operator==(const FreeAutomorphism& o) const { return images == o.images && framing == o.framing; }
};

std::string free_word_str(const FreeWord& w, const std::vector<std::string>& names);

}  // namespace mcg
