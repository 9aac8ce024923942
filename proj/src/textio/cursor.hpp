#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcg/textio.hpp"

namespace mcg::textio {

// Scanner over one chunk of text; positions are reported relative to the
// line and column the chunk starts at.
struct Cursor {
  std::string_view s;
  std::size_t i = 0;
  int line0 = 1, col0 = 1;

  Cursor(std::string_view text, int line = 1, int col = 1) : s(text), line0(line), col0(col) {}

  void ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
  }
  bool eof() {
    ws();
    return i >= s.size();
  }
  bool at(std::string_view tok) {
    ws();
    return s.substr(i, tok.size()) == tok;
  }
  bool eat(std::string_view tok) {
    if (!at(tok)) return false;
    i += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!eat(tok)) fail({std::string(tok)});
  }
  std::string got() {
    ws();
    if (i >= s.size()) return "end of input";
    auto e = s.find_first_of(" \t\n", i);
    return "'" + std::string(s.substr(i, e == std::string_view::npos ? std::string_view::npos : e - i)) + "'";
  }
  [[noreturn]] void fail(std::vector<std::string> expected) {
    ws();
    int line = line0, col = col0;
    for (std::size_t k = 0; k < i && k < s.size(); ++k) {
      if (s[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, std::move(expected), got());
  }

  static bool ident_start(char c) { return std::isalpha((unsigned char)c) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum((unsigned char)c) || c == '_' || c == '.'; }

  std::string ident() {
    ws();
    if (i >= s.size() || !ident_start(s[i])) fail({"identifier"});
    auto b = i;
    while (i < s.size() && ident_char(s[i])) ++i;
    return std::string(s.substr(b, i - b));
  }
  long integer() {
    ws();
    auto b = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i >= s.size() || !std::isdigit((unsigned char)s[i])) {
      i = b;
      fail({"integer"});
    }
    while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
    try {
      return std::stol(std::string(s.substr(b, i - b)));
    } catch (const std::out_of_range&) {
      i = b;
      fail({"integer in range"});
    }
  }
  std::string quoted() {
    ws();
    if (i >= s.size() || s[i] != '"') fail({"quoted string"});
    std::string out;
    for (++i; i < s.size() && s[i] != '"'; ++i) {
      if (s[i] == '\\' && i + 1 < s.size()) ++i;
      out += s[i];
    }
    if (i >= s.size()) fail({"closing '\"'"});
    ++i;
    return out;
  }
  // bare token up to whitespace
  std::string token() {
    ws();
    if (i >= s.size()) fail({"token"});
    auto b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\n') ++i;
    return std::string(s.substr(b, i - b));
  }
  void end() {
    if (!eof()) fail({"end of line"});
  }
};

std::string quote(const std::string& s);
GroupWord read_word(Cursor& c);
Factor read_factor(Cursor& c);
Factorization read_factorization(Cursor& c);

}  // namespace mcg::textio
