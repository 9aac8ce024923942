#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mcg/word.hpp"

namespace mcg {

struct Factor {
  enum class Kind { TwistPower, Commutator, Conjugated };
  Kind kind = Kind::TwistPower;
  CurveExpr curve;
  int exp = 0;
  GroupWord u, v;
  std::shared_ptr<const Factor> inner;
  GroupWord conj;

  static Factor twist_power(CurveExpr c, int e);
  static Factor twist_power(const std::string& c, int e) { return twist_power(CurveExpr::base(c), e); }
  static Factor commutator(GroupWord u, GroupWord v);
  static Factor conjugated(Factor f, GroupWord g);

  GroupWord flatten() const;
  Factor inverse() const;
  bool operator==(const Factor& o) const;
  std::string str() const;
};

struct Census {
  int commutators = 0;
  int positive_twists = 0;
  int negative_twists = 0;
  bool operator==(const Census&) const = default;
};

class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<Factor> f) : factors_(std::move(f)) {}

  const std::vector<Factor>& factors() const { return factors_; }
  std::vector<Factor>& factors() { return factors_; }
  void push(Factor f) { factors_.push_back(std::move(f)); }
  void append(const Factorization& o);

  GroupWord flatten() const;
  Census census() const;
  Factorization inverse() const;
  bool operator==(const Factorization&) const = default;
  std::string str() const;

 private:
  std::vector<Factor> factors_;
};

}  // namespace mcg
