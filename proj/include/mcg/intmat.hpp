#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mcg {

using IntVec = std::vector<std::int64_t>;

// Dense integer matrix with overflow-checked arithmetic.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  std::int64_t operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntVec operator*(const IntVec& v) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix&) const = default;
  std::vector<IntVec> to_rows() const;
  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> a_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);
IntVec scaled(const IntVec& a, std::int64_t s);
bool is_zero(const IntVec& v);

}  // namespace mcg
