#include <cctype>

#include "textio/cursor.hpp"

namespace mcg {

namespace {
std::string expected_list(const std::vector<std::string>& e) {
  std::string s;
  for (std::size_t k = 0; k < e.size(); ++k) s += (k ? (k + 1 == e.size() ? " or " : ", ") : "") + e[k];
  return s;
}
}  // namespace

ParseError::ParseError(int line, int col, std::vector<std::string> exp, const std::string& got)
    : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": expected " + expected_list(exp) +
            ", found " + got),
      line(line),
      col(col),
      expected(std::move(exp)) {}

namespace textio {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

namespace {

int exponent(Cursor& c) {
  if (!c.eat("^")) return 1;
  long e = c.integer();
  if (e == 0 || e > 1000000 || e < -1000000) c.fail({"nonzero exponent"});
  return int(e);
}

CurveExpr read_curve(Cursor& c) {
  if (c.eat("[")) {
    auto map = read_word(c);
    c.expect("]");
    return CurveExpr::image(map, CurveExpr::base(c.ident()));
  }
  return CurveExpr::base(c.ident());
}

bool at_letter(Cursor& c) { return c.at("T(") || c.at("F("); }

}  // namespace

GroupWord read_word(Cursor& c) {
  if (c.at("1")) {
    c.i += 1;
    return {};
  }
  if (!at_letter(c)) c.fail({"'T('", "'F('", "'1'"});
  std::vector<Letter> out;
  while (at_letter(c)) {
    if (c.eat("T(")) {
      auto cv = read_curve(c);
      c.expect(")");
      out.push_back({Generator::twist(cv), exponent(c)});
    } else {
      c.expect("F(");
      auto f = c.ident();
      c.expect(")");
      out.push_back({Generator::formal(f), exponent(c)});
    }
  }
  return GroupWord(out);
}

Factor read_factor(Cursor& c) {
  if (c.eat("T(")) {
    auto cv = read_curve(c);
    c.expect(")");
    return Factor::twist_power(cv, exponent(c));
  }
  if (c.eat("C[")) {
    auto u = read_word(c);
    c.expect(";");
    auto v = read_word(c);
    c.expect("]");
    return Factor::commutator(u, v);
  }
  if (c.eat("@")) {
    auto g = read_word(c);
    c.expect("{");
    auto f = read_factor(c);
    c.expect("}");
    return Factor::conjugated(f, g);
  }
  c.fail({"'T('", "'C['", "'@'"});
}

Factorization read_factorization(Cursor& c) {
  Factorization f;
  if (c.at("1")) {
    c.i += 1;
    return f;
  }
  do f.push(read_factor(c));
  while (c.at("T(") || c.at("C[") || c.at("@"));
  return f;
}

}  // namespace textio

GroupWord parse_word(std::string_view text) {
  textio::Cursor c(text);
  auto w = textio::read_word(c);
  c.end();
  return w;
}

Factorization parse_factorization(std::string_view text) {
  textio::Cursor c(text);
  auto f = textio::read_factorization(c);
  c.end();
  return f;
}

}  // namespace mcg
