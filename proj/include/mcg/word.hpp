#pragma once

#include <compare>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GroupWord;

// A curve is either a named base curve or the image g(c) of another curve
// under a mapping-class word. Images are kept in canonical form:
// g(h(c)) is stored as (gh)(c) and the identity image collapses.
class CurveExpr {
 public:
  CurveExpr() = default;
  static CurveExpr base(std::string name);
  static CurveExpr image(const GroupWord& map, const CurveExpr& curve);

  bool is_base() const { return !img_; }
  const std::string& base_name() const { return base_; }
  const GroupWord& map() const;
  CurveExpr root() const { return base(base_); }
  const std::string& key() const { return key_; }

  bool operator==(const CurveExpr& o) const { return key_ == o.key_; }
  std::strong_ordering operator<=>(const CurveExpr& o) const { return key_ <=> o.key_; }

 private:
  std::string key_;
  std::string base_;
  std::shared_ptr<const GroupWord> img_;
};

struct Generator {
  enum class Kind { Twist, Formal };
  Kind kind = Kind::Twist;
  CurveExpr curve;
  std::string symbol;

  static Generator twist(CurveExpr c) { return {Kind::Twist, std::move(c), {}}; }
  static Generator formal(std::string s) { return {Kind::Formal, {}, std::move(s)}; }

  bool is_twist() const { return kind == Kind::Twist; }
  const std::string& key() const { return is_twist() ? curve.key() : symbol; }
  std::string str() const;

  bool operator==(const Generator& o) const { return kind == o.kind && key() == o.key(); }
  std::strong_ordering operator<=>(const Generator& o) const {
    if (kind != o.kind) return kind <=> o.kind;
    return key() <=> o.key();
  }
};

struct Letter {
  Generator gen;
  int exp = 1;
  bool operator==(const Letter&) const = default;
  std::string str() const;
};

// Free reduction with eager merging of adjacent powers.
std::vector<Letter> free_reduce(std::vector<Letter> letters);

class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters);
  static GroupWord twist(const std::string& curve, int exp = 1);
  static GroupWord twist(const CurveExpr& curve, int exp = 1);
  static GroupWord formal(const std::string& symbol, int exp = 1);
  static GroupWord from_units(const std::vector<Letter>& units);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  // Number of letters once every power is expanded into +-1 steps.
  std::size_t unit_length() const;
  std::vector<Letter> units() const;

  GroupWord inverse() const;
  GroupWord power(int n) const;
  GroupWord operator*(const GroupWord& o) const;
  GroupWord& operator*=(const GroupWord& o);

  bool operator==(const GroupWord&) const = default;
  std::string str() const;

 private:
  std::vector<Letter> letters_;
};

GroupWord commutator(const GroupWord& u, const GroupWord& v);

}  // namespace mcg
