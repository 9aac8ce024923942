#include "mcg/factorization.hpp"

#include <algorithm>

namespace mcg {

Factor Factor::twist_power(CurveExpr c, int e) {
  Factor f;
  f.kind = Kind::TwistPower;
  f.curve = std::move(c);
  f.exp = e;
  return f;
}

Factor Factor::commutator(GroupWord u, GroupWord v) {
  Factor f;
  f.kind = Kind::Commutator;
  f.u = std::move(u);
  f.v = std::move(v);
  return f;
}

Factor Factor::conjugated(Factor inner, GroupWord g) {
  Factor f;
  f.kind = Kind::Conjugated;
  f.inner = std::make_shared<const Factor>(std::move(inner));
  f.conj = std::move(g);
  return f;
}

GroupWord Factor::flatten() const {
  switch (kind) {
    case Kind::TwistPower:
      return GroupWord::twist(curve, exp);
    case Kind::Commutator:
      return mcg::commutator(u, v);
    case Kind::Conjugated:
      return conj * inner->flatten() * conj.inverse();
  }
  return {};
}

Factor Factor::inverse() const {
  switch (kind) {
    case Kind::TwistPower:
      return twist_power(curve, -exp);
    case Kind::Commutator:
      return commutator(v, u);
    case Kind::Conjugated:
      return conjugated(inner->inverse(), conj);
  }
  return {};
}

bool Factor::operator==(const Factor& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::TwistPower:
      return curve == o.curve && exp == o.exp;
    case Kind::Commutator:
      return u == o.u && v == o.v;
    case Kind::Conjugated:
      return conj == o.conj && *inner == *o.inner;
  }
  return false;
}

std::string Factor::str() const {
  switch (kind) {
    case Kind::TwistPower:
      return Letter{Generator::twist(curve), exp}.str();
    case Kind::Commutator:
      return "C[" + u.str() + " ; " + v.str() + "]";
    case Kind::Conjugated:
      return "@" + conj.str() + "{" + inner->str() + "}";
  }
  return {};
}

void Factorization::append(const Factorization& o) {
  factors_.insert(factors_.end(), o.factors_.begin(), o.factors_.end());
}

GroupWord Factorization::flatten() const {
  GroupWord w;
  for (auto& f : factors_) w *= f.flatten();
  return w;
}

namespace {
void count(const Factor& f, Census& c) {
  switch (f.kind) {
    case Factor::Kind::TwistPower:
      if (f.exp > 0) c.positive_twists += f.exp;
      else c.negative_twists -= f.exp;
      break;
    case Factor::Kind::Commutator:
      ++c.commutators;
      break;
    case Factor::Kind::Conjugated:
      count(*f.inner, c);
      break;
  }
}
}  // namespace

Census Factorization::census() const {
  Census c;
  for (auto& f : factors_) count(f, c);
  return c;
}

Factorization Factorization::inverse() const {
  std::vector<Factor> out;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) out.push_back(it->inverse());
  return Factorization(std::move(out));
}

std::string Factorization::str() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (auto& f : factors_) {
    if (!s.empty()) s += ' ';
    s += f.str();
  }
  return s;
}

}  // namespace mcg
