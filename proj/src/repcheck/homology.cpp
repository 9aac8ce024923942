#include <cmath>
#include <cstdlib>

#include "mcg/repcheck.hpp"

namespace mcg {

std::int64_t pairing(const IntMatrix& form, const IntVec& x, const IntVec& y) {
  std::int64_t s = 0;
  for (int i = 0; i < form.rows(); ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < form.cols(); ++j)
      if (form(i, j) && y[j]) s = checked_add(s, checked_mul(checked_mul(x[i], form(i, j)), y[j]));
  }
  return s;
}

IntMatrix transvection(const IntMatrix& form, const IntVec& c, std::int64_t e) {
  int n = form.rows();
  if (int(c.size()) != n) throw Error("homology vector has wrong length");
  // column j is the image of basis vector j: e_j + e <e_j, c> c
  IntVec fc = form * c;
  IntMatrix m = IntMatrix::identity(n);
  for (int j = 0; j < n; ++j) {
    auto p = checked_mul(e, fc[j]);
    if (!p) continue;
    for (int i = 0; i < n; ++i) m(i, j) = checked_add(m(i, j), checked_mul(p, c[i]));
  }
  return m;
}

namespace {

IntMatrix letter_matrix(const SurfaceConfig& cfg, const Letter& l);

IntMatrix formal_matrix(const SurfaceConfig& cfg, const std::string& f) {
  auto rec = cfg.formal(f);
  if (!rec) throw Error("unknown formal symbol " + f);
  if (!rec->h1) throw Error("formal symbol " + f + " has no declared homology action");
  return *rec->h1;
}

IntMatrix inverse_symplectic(const SurfaceConfig& cfg, const IntMatrix& m, const std::string& who) {
  // Form-preserving maps have inverse -form^-1 m^T form; with a degenerate
  // form fall back to a unipotent check of the declared action.
  int n = m.rows();
  IntMatrix id = IntMatrix::identity(n);
  if (m == id) return id;
  IntMatrix n1(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) n1(i, j) = m(i, j) - id(i, j);
  if (n1 * n1 == IntMatrix(n, n)) {
    IntMatrix inv = id;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inv(i, j) -= n1(i, j);
    return inv;
  }
  // Integer inverse by adjugate-free Gauss-Jordan over rationals on small sizes.
  std::vector<std::vector<long double>> a(n, std::vector<long double>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = (long double)m(i, j);
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c; r < n; ++r)
      if (std::abs((double)a[r][c]) > std::abs((double)a[p][c])) p = r;
    if (a[p][c] == 0) throw Error("homology action of " + who + " is singular");
    std::swap(a[p], a[c]);
    long double d = a[c][c];
    for (auto& x : a[c]) x /= d;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      long double f = a[r][c];
      for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  IntMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = std::llround((double)a[i][n + j]);
  if (!(inv * m == id)) throw Error("homology action of " + who + " is not invertible over the integers");
  (void)cfg;
  return inv;
}

IntMatrix letter_matrix(const SurfaceConfig& cfg, const Letter& l) {
  if (l.gen.is_twist()) return transvection(cfg.form, curve_class(cfg, l.gen.curve), l.exp);
  IntMatrix m = formal_matrix(cfg, l.gen.symbol);
  if (l.exp < 0) m = inverse_symplectic(cfg, m, l.gen.symbol);
  IntMatrix r = IntMatrix::identity(m.rows());
  for (int i = 0; i < std::abs(l.exp); ++i) r = r * m;
  return r;
}

}  // namespace

IntVec curve_class(const SurfaceConfig& cfg, const CurveExpr& c) {
  auto rec = cfg.curve(c.base_name());
  if (!rec) throw Error("unknown curve " + c.base_name() + " in config " + cfg.name);
  if (c.is_base()) return rec->homology;
  return h1_action(cfg, c.map()) * rec->homology;
}

IntMatrix h1_action(const SurfaceConfig& cfg, const GroupWord& w) {
  IntMatrix m = IntMatrix::identity(cfg.pi1_rank());
  for (auto& l : w.letters()) m = m * letter_matrix(cfg, l);
  return m;
}

BackendReport h1_compare(const SurfaceConfig& cfg, const GroupWord& lhs, const GroupWord& rhs) {
  auto a = h1_action(cfg, lhs), b = h1_action(cfg, rhs);
  if (a == b) return {true, "homology actions agree"};
  return {false, "homology actions differ: " + a.str() + " vs " + b.str()};
}

std::int64_t genus1_degree(const SurfaceConfig& cfg, const GroupWord& w) {
  if (cfg.genus != 1 || cfg.boundary_count != 1) throw Error("degree map needs the one-holed torus");
  std::int64_t d = 0;
  for (auto& l : w.letters()) {
    if (!l.gen.is_twist()) throw Error("degree map is defined on twist letters only");
    auto rec = cfg.curve(l.gen.curve.base_name());
    if (!rec) throw Error("unknown curve " + l.gen.curve.base_name());
    d += std::int64_t(l.exp) * (rec->boundary_parallel ? 12 : 1);
  }
  return d;
}

}  // namespace mcg
