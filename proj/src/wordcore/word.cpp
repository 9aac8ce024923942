#include "mcg/word.hpp"

#include <cstdlib>

namespace mcg {

CurveExpr CurveExpr::base(std::string name) {
  if (name.empty()) throw Error("empty curve name");
  CurveExpr c;
  c.key_ = name;
  c.base_ = std::move(name);
  return c;
}

CurveExpr CurveExpr::image(const GroupWord& map, const CurveExpr& curve) {
  GroupWord full = curve.img_ ? map * *curve.img_ : map;
  if (full.empty()) return curve.root();
  CurveExpr c;
  c.base_ = curve.base_;
  c.img_ = std::make_shared<const GroupWord>(full);
  c.key_ = "[" + full.str() + "]" + c.base_;
  return c;
}

const GroupWord& CurveExpr::map() const {
  static const GroupWord none;
  return img_ ? *img_ : none;
}

std::string Generator::str() const {
  return is_twist() ? "T(" + curve.key() + ")" : "F(" + symbol + ")";
}

std::string Letter::str() const {
  auto s = gen.str();
  if (exp != 1) s += "^" + std::to_string(exp);
  return s;
}

std::vector<Letter> free_reduce(std::vector<Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (auto& l : letters) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(std::move(l));
    }
  }
  return out;
}

GroupWord::GroupWord(std::vector<Letter> letters) : letters_(free_reduce(std::move(letters))) {}

GroupWord GroupWord::twist(const std::string& curve, int exp) {
  return twist(CurveExpr::base(curve), exp);
}

GroupWord GroupWord::twist(const CurveExpr& curve, int exp) {
  return GroupWord({Letter{Generator::twist(curve), exp}});
}

GroupWord GroupWord::formal(const std::string& symbol, int exp) {
  return GroupWord({Letter{Generator::formal(symbol), exp}});
}

GroupWord GroupWord::from_units(const std::vector<Letter>& units) { return GroupWord(units); }

std::size_t GroupWord::unit_length() const {
  std::size_t n = 0;
  for (auto& l : letters_) n += std::abs(l.exp);
  return n;
}

std::vector<Letter> GroupWord::units() const {
  std::vector<Letter> out;
  out.reserve(unit_length());
  for (auto& l : letters_) {
    int s = l.exp > 0 ? 1 : -1;
    for (int i = 0; i < std::abs(l.exp); ++i) out.push_back({l.gen, s});
  }
  return out;
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exp = -l.exp;
  GroupWord w;
  w.letters_ = std::move(out);
  return w;
}

GroupWord GroupWord::power(int n) const {
  GroupWord base = n < 0 ? inverse() : *this;
  std::vector<Letter> out;
  for (int i = 0; i < std::abs(n); ++i) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return GroupWord(std::move(out));
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  GroupWord w = *this;
  w *= o;
  return w;
}

GroupWord& GroupWord::operator*=(const GroupWord& o) {
  for (auto& l : o.letters_) {
    if (!letters_.empty() && letters_.back().gen == l.gen) {
      letters_.back().exp += l.exp;
      if (letters_.back().exp == 0) letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
  return *this;
}

std::string GroupWord::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (auto& l : letters_) {
    if (!s.empty()) s += ' ';
    s += l.str();
  }
  return s;
}

GroupWord commutator(const GroupWord& u, const GroupWord& v) {
  return u * v * u.inverse() * v.inverse();
}

}  // namespace mcg
