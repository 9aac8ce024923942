#pragma once

#include <string>

#include "textio/cursor.hpp"

namespace mcg::textio {

// Reads the body lines of a config document one at a time.
class ConfigReader {
 public:
  // false if the keyword does not belong to a config body
  bool line(const std::string& keyword, Cursor& c);
  SurfaceConfig finish(Cursor& at_end);
  bool started() const { return started_; }

 private:
  SurfaceConfig cfg_;
  bool started_ = false;
  enum class Owner { None, Curve, Formal } owner_ = Owner::None;
  std::size_t index_ = 0;
  std::optional<FreeAutomorphism>* table_ = nullptr;
  IntMatrix* matrix_ = nullptr;
  int rows_seen_ = 0;
};

std::string config_body(const SurfaceConfig& cfg);

}  // namespace mcg::textio
