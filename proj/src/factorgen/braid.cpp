#include "mcg/factorgen.hpp"

namespace mcg {

namespace {

// Left division in the positive monoid: brings x to the front of w[lo..]
// with commutations and braid moves, recursing on whatever blocks it.
struct Puller {
  TraceBuilder& b;
  std::size_t base;
  std::vector<std::string>& w;

  bool commutes(const std::string& x, const std::string& y) const {
    return b.context().independent(Generator::twist(CurveExpr::base(x)), Generator::twist(CurveExpr::base(y)));
  }

  void pull(const std::string& x, std::size_t lo) {
    if (lo >= w.size()) throw Error("twist about " + x + " does not divide the positive word");
    if (w[lo] == x) return;
    auto y = w[lo];
    if (commutes(x, y)) {
      pull(x, lo + 1);
      b.commute(base + lo);
      std::swap(w[lo], w[lo + 1]);
    } else if (b.context().config().declared_once(x, y)) {
      pull(x, lo + 1);
      pull(y, lo + 2);
      // y x y -> x y x
      bool fwd = y < x;
      b.relation(braid_name(std::min(x, y), std::max(x, y)), fwd, base + lo);
      w[lo] = x;
      w[lo + 1] = y;
      w[lo + 2] = x;
    } else {
      throw Error("twists about " + x + " and " + y + " satisfy no recorded relation");
    }
  }
};

}  // namespace

void positive_rewrite(TraceBuilder& b, std::size_t pos, const std::vector<std::string>& from,
                      const std::vector<std::string>& to) {
  if (from.size() != to.size()) throw Error("positive words of different lengths are never equal");
  auto w = from;
  Puller p{b, pos, w};
  for (std::size_t k = 0; k < to.size(); ++k) p.pull(to[k], k);
}

}  // namespace mcg
