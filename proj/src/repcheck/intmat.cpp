#include "mcg/intmat.hpp"

#include <stdexcept>

#include "mcg/word.hpp"

namespace mcg {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in homology arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in homology arithmetic");
  return r;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  int r = int(rows.size());
  int c = r ? int(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c) throw Error("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix shape mismatch");
  IntMatrix m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      auto x = (*this)(i, k);
      if (!x) continue;
      for (int j = 0; j < o.cols_; ++j) m(i, j) = checked_add(m(i, j), checked_mul(x, o(k, j)));
    }
  return m;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
  if (int(v.size()) != cols_) throw Error("matrix/vector shape mismatch");
  IntVec out(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] = checked_add(out[i], checked_mul((*this)(i, j), v[j]));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

std::vector<IntVec> IntMatrix::to_rows() const {
  std::vector<IntVec> out(rows_, IntVec(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

std::string IntMatrix::str() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < cols_; ++j) s += (j ? " " : "") + std::to_string((*this)(i, j));
  }
  return "[" + s + "]";
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error("vector length mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

IntVec operator-(const IntVec& a) { return scaled(a, -1); }

IntVec scaled(const IntVec& a, std::int64_t s) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], s);
  return r;
}

bool is_zero(const IntVec& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

}  // namespace mcg
