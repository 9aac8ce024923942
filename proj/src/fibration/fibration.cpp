#include <cstdlib>

#include "mcg/fibration.hpp"

namespace mcg {

bool FibrationSpec::is_bundle() const { return monodromy.census().positive_twists == 0; }

std::vector<std::string> FibrationSpec::problems() const {
  std::vector<std::string> out;
  auto c = monodromy.census();
  if (fiber_genus < 0 || base_genus < 0) out.push_back("genera must be nonnegative");
  if (c.commutators > base_genus)
    out.push_back(std::to_string(c.commutators) + " commutator blocks over a base of genus " +
                  std::to_string(base_genus));
  if (c.negative_twists > 0) out.push_back("left-handed twists cannot be vanishing cycles");
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Ok: return "ok";
    case Verdict::Violates: return "violates";
    case Verdict::Maximal: return "maximal";
  }
  return "?";
}

std::string to_string(Decomposability d) {
  return d == Decomposability::PairIndecomposable ? "pair_indecomposable" : "no_criterion";
}

int section_self_intersection(const FibrationSpec& s) { return -s.boundary_power; }

SectionedFibration with_section(FibrationSpec s) {
  SectionInfo si{section_self_intersection(s)};
  return {std::move(s), si};
}

FibrationSpec reflection(const FibrationSpec& s) {
  auto r = s;
  r.monodromy = s.monodromy.inverse();
  r.boundary_power = -s.boundary_power;
  return r;
}

long euler_characteristic(const FibrationSpec& s) {
  return 4L * (s.fiber_genus - 1) * (s.base_genus - 1) + s.monodromy.census().positive_twists;
}

Verdict adjunction_check(int g, int h, int k, bool is_bundle) {
  if (g == 0) return Verdict::Ok;
  auto bounded = [&](bool ok, bool maximal) {
    if (!ok) return Verdict::Violates;
    return maximal ? Verdict::Maximal : Verdict::Ok;
  };
  if (h == 0) {
    // over the sphere: bundles with a section are trivial, Lefschetz
    // fibrations have sections of square at most -1
    if (is_bundle) return bounded(k == 0, false);
    return bounded(k <= -1, k == -1);
  }
  // torus fibers: bundle sections have square 0, and t_delta^n with n < 0 is
  // never a product of commutators and right twists
  if (g == 1 && is_bundle && k != 0) return Verdict::Violates;
  if (g == 1 && k > 0) return Verdict::Violates;
  if (is_bundle) return bounded(std::abs(k) <= 2 * h - 2, k == 2 * h - 2);
  return bounded(k <= 2 * h - 2, k == 2 * h - 2);
}

Verdict adjunction_check(const FibrationSpec& s) {
  return adjunction_check(s.fiber_genus, s.base_genus, section_self_intersection(s), s.is_bundle());
}

Verdict genus1_constraint(int boundary_power, int twists) {
  if (boundary_power < 0) return Verdict::Violates;
  return twists == 12 * boundary_power ? Verdict::Ok : Verdict::Violates;
}

Verdict genus1_constraint(const FibrationSpec& s) {
  if (s.fiber_genus != 1) throw Error("genus-1 constraint applies to torus fibers only");
  return genus1_constraint(s.boundary_power, s.monodromy.census().positive_twists);
}

SectionedFibration fiber_sum(const SectionedFibration& a, const SectionedFibration& b) {
  if (a.spec.fiber_genus != b.spec.fiber_genus) throw Error("fiber sum needs equal fiber genera");
  SectionedFibration out = a;
  out.spec.base_genus = a.spec.base_genus + b.spec.base_genus;
  out.spec.monodromy.append(b.spec.monodromy);
  out.spec.boundary_power = a.spec.boundary_power + b.spec.boundary_power;
  out.spec.relatively_minimal = a.spec.relatively_minimal && b.spec.relatively_minimal;
  out.section.self_intersection = a.section.self_intersection + b.section.self_intersection;
  return out;
}

namespace {

GroupWord prefixed(const GroupWord& w, const std::string& p);

CurveExpr prefixed(const CurveExpr& c, const std::string& p) {
  if (c.is_base()) return CurveExpr::base(p + c.base_name());
  return CurveExpr::image(prefixed(c.map(), p), CurveExpr::base(p + c.base_name()));
}

GroupWord prefixed(const GroupWord& w, const std::string& p) {
  std::vector<Letter> out;
  for (auto& l : w.letters()) {
    auto g = l.gen.is_twist() ? Generator::twist(prefixed(l.gen.curve, p)) : Generator::formal(p + l.gen.symbol);
    out.push_back({g, l.exp});
  }
  return GroupWord(out);
}

Factor prefixed(const Factor& f, const std::string& p) {
  switch (f.kind) {
    case Factor::Kind::TwistPower: return Factor::twist_power(prefixed(f.curve, p), f.exp);
    case Factor::Kind::Commutator: return Factor::commutator(prefixed(f.u, p), prefixed(f.v, p));
    case Factor::Kind::Conjugated: return Factor::conjugated(prefixed(*f.inner, p), prefixed(f.conj, p));
  }
  return f;
}

std::pair<GroupWord, GroupWord> entries(const Factor& f) {
  if (f.kind == Factor::Kind::Commutator) return {f.u, f.v};
  auto [u, v] = entries(*f.inner);
  return {f.conj * u * f.conj.inverse(), f.conj * v * f.conj.inverse()};
}

void split(const Factorization& f, const std::string& p, std::vector<std::pair<GroupWord, GroupWord>>& comms,
           std::vector<Factor>& twists) {
  for (auto& x : f.factors()) {
    auto y = prefixed(x, p);
    if (y.kind == Factor::Kind::TwistPower) twists.push_back(y);
    else comms.push_back(entries(y));
  }
}

}  // namespace

FibrationSpec section_sum(const SectionedFibration& a, const SectionedFibration& b) {
  if (a.spec.fiber_genus < 1 || b.spec.fiber_genus < 1) throw Error("section sum needs fiber genus at least 1 on both sides");
  if (a.spec.base_genus != b.spec.base_genus) throw Error("section sum needs equal base genera");
  if (a.section.self_intersection != 0 || b.section.self_intersection != 0)
    throw Error("section sum glues along sections of self-intersection 0");
  std::vector<std::pair<GroupWord, GroupWord>> ca, cb;
  std::vector<Factor> twists;
  split(a.spec.monodromy, "s1.", ca, twists);
  split(b.spec.monodromy, "s2.", cb, twists);
  FibrationSpec out;
  out.fiber_genus = a.spec.fiber_genus + b.spec.fiber_genus;
  out.base_genus = a.spec.base_genus;
  out.relatively_minimal = a.spec.relatively_minimal && b.spec.relatively_minimal;
  // the two halves have disjoint supports: [a1,a2][b1,b2] = [a1 b1, a2 b2]
  std::size_t n = std::max(ca.size(), cb.size());
  for (std::size_t j = 0; j < n; ++j) {
    GroupWord u, v;
    if (j < ca.size()) u *= ca[j].first, v *= ca[j].second;
    if (j < cb.size()) u *= cb[j].first, v *= cb[j].second;
    out.monodromy.push(Factor::commutator(u, v));
  }
  for (auto& t : twists) out.monodromy.push(t);
  out.boundary_power = 0;
  return out;
}

Decomposability indecomposability_check(int h, int k) {
  if (h < 1) throw Error("indecomposability criterion needs base genus at least 1");
  return k == 2 * h - 2 || k == 2 * h - 3 ? Decomposability::PairIndecomposable : Decomposability::NoCriterion;
}

FibrationSpec fibration_from(const FactorizationResult& r, int base_genus) {
  FibrationSpec s;
  s.fiber_genus = r.config.genus;
  s.base_genus = base_genus;
  s.monodromy = r.factorization;
  auto& l = r.target.letters();
  if (l.size() > 1 || (l.size() == 1 && (!l[0].gen.is_twist() || !r.config.curve(l[0].gen.curve.base_name()) ||
                                          !r.config.curve(l[0].gen.curve.base_name())->boundary_parallel)))
    throw Error("target " + r.target.str() + " is not a power of a boundary twist");
  s.boundary_power = l.empty() ? 0 : l[0].exp;
  return s;
}

}  // namespace mcg
