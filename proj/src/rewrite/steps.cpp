#include <algorithm>

#include "mcg/rewrite.hpp"

namespace mcg {

void RelationRegistry::add(Relation r) {
  auto name = r.name;
  rels_[name] = std::move(r);
}

const Relation* RelationRegistry::find(const std::string& name) const {
  auto it = rels_.find(name);
  return it == rels_.end() ? nullptr : &it->second;
}

const Relation& RelationRegistry::get(const std::string& name) const {
  auto r = find(name);
  if (!r) throw Error("unresolved relation " + name);
  return *r;
}

void RelationRegistry::merge(const RelationRegistry& o) {
  for (auto& [n, r] : o.rels_) rels_[n] = r;
}

RelationRegistry RelationRegistry::closure(const std::set<std::string>& names) const {
  RelationRegistry out;
  std::vector<std::string> todo(names.begin(), names.end());
  while (!todo.empty()) {
    auto n = todo.back();
    todo.pop_back();
    if (out.find(n)) continue;
    auto& r = get(n);
    out.add(r);
    if (r.proof)
      for (auto& s : r.proof->steps)
        if (s.kind == Step::Kind::Relation) todo.push_back(s.relation);
  }
  return out;
}

namespace {

std::vector<Letter> inverse_units(const std::vector<Letter>& u) {
  std::vector<Letter> out(u.rbegin(), u.rend());
  for (auto& l : out) l.exp = -l.exp;
  return out;
}

std::vector<Letter> join(std::vector<Letter> a, const std::vector<Letter>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Finds the letters of `pattern` in w starting at pos so that the window
// w[pos, end) equals pattern * rest in the trace monoid. Returns the window
// end and the skipped letters in order.
std::pair<std::size_t, std::vector<Letter>> left_divide(const std::vector<Letter>& w, std::size_t pos,
                                                        const std::vector<Letter>& pattern,
                                                        const CommutationContext& ctx) {
  if (pattern.empty()) return {pos, {}};
  if (pos >= w.size() || !(w[pos] == pattern[0]))
    throw MatchError("pattern does not start at position " + std::to_string(pos));
  std::vector<bool> used(w.size(), false);
  std::size_t end = pos;
  for (auto& p : pattern) {
    bool found = false;
    for (std::size_t k = pos; k < w.size(); ++k) {
      if (used[k]) continue;
      if (w[k] == p) {
        used[k] = true;
        end = std::max(end, k + 1);
        found = true;
        break;
      }
      if (!ctx.independent(w[k].gen, p.gen)) break;
    }
    if (!found) throw MatchError("pattern letter " + p.str() + " is blocked after position " + std::to_string(pos));
  }
  std::vector<Letter> rest;
  for (std::size_t k = pos; k < end; ++k)
    if (!used[k]) rest.push_back(w[k]);
  return {end, rest};
}

GroupWord splice(const std::vector<Letter>& w, std::size_t pos, std::size_t end, const std::vector<Letter>& repl,
                 const CommutationContext& ctx) {
  std::vector<Letter> out(w.begin(), w.begin() + pos);
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + end, w.end());
  return raag_reduce(out, ctx);
}

GroupWord apply_relation(const std::vector<Letter>& w, const Step& s, const RelationRegistry& reg,
                         const CommutationContext& ctx) {
  auto& r = reg.get(s.relation);
  auto L = r.eq.lhs.units(), R = r.eq.rhs.units();
  auto rho = s.forward ? join(L, inverse_units(R)) : join(R, inverse_units(L));
  int n = int(rho.size());
  int len = s.length < 0 ? int(s.forward ? L.size() : R.size()) : s.length;
  if (s.length < 0 && s.offset != 0) throw MatchError("a whole-side step takes no offset");
  if (len > n || s.offset < 0 || (n > 0 && s.offset >= n) || (n == 0 && s.offset != 0))
    throw MatchError("segment out of range for relation " + s.relation);
  std::vector<Letter> rot;
  for (int i = 0; i < n; ++i) rot.push_back(rho[(s.offset + i) % n]);
  std::vector<Letter> u(rot.begin(), rot.begin() + len), rest(rot.begin() + len, rot.end());
  if (s.pos > w.size()) throw MatchError("position past the end of the word");
  auto [end, skipped] = left_divide(w, s.pos, u, ctx);
  return splice(w, s.pos, end, join(inverse_units(rest), skipped), ctx);
}

GroupWord apply_conjugation(const std::vector<Letter>& w, const Step& s, const CommutationContext& ctx) {
  if (s.span <= 0 || s.pos + s.span > w.size()) throw MatchError("conjugation span out of range");
  std::vector<Letter> win(w.begin() + s.pos, w.begin() + s.pos + s.span);
  std::vector<Letter> repl;
  if (s.forward) {
    int k = s.conj_length;
    if (k <= 0 || 2 * k > s.span) throw MatchError("bad conjugator length");
    std::vector<Letter> g(win.begin(), win.begin() + k);
    std::vector<Letter> tail(win.end() - k, win.end());
    if (tail != inverse_units(g)) throw MatchError("window does not end with the inverse conjugator");
    GroupWord gw(g);
    for (auto it = win.begin() + k; it != win.end() - k; ++it) {
      if (!it->gen.is_twist()) throw MatchError("conjugation rule applies to twist letters only");
      repl.push_back({Generator::twist(CurveExpr::image(gw, it->gen.curve)), it->exp});
    }
  } else {
    std::optional<GroupWord> g;
    std::vector<Letter> mid;
    for (auto& l : win) {
      if (!l.gen.is_twist() || l.gen.curve.is_base()) throw MatchError("expected twists about image curves");
      if (g && !(*g == l.gen.curve.map())) throw MatchError("image curves use different maps");
      g = l.gen.curve.map();
      mid.push_back({Generator::twist(l.gen.curve.root()), l.exp});
    }
    repl = join(join(g->units(), mid), g->inverse().units());
  }
  return splice(w, s.pos, s.pos + s.span, repl, ctx);
}

}  // namespace

GroupWord apply_step(const GroupWord& w, const Step& s, const RelationRegistry& reg, const CommutationContext& ctx) {
  auto u = w.units();
  switch (s.kind) {
    case Step::Kind::Commute: {
      if (s.pos + 1 >= u.size()) throw MatchError("commute position out of range");
      if (!ctx.independent(u[s.pos].gen, u[s.pos + 1].gen))
        throw MatchError(u[s.pos].str() + " and " + u[s.pos + 1].str() + " are not declared to commute");
      std::swap(u[s.pos], u[s.pos + 1]);
      return GroupWord(u);
    }
    case Step::Kind::Conjugation:
      return apply_conjugation(u, s, ctx);
    case Step::Kind::Relation:
      return apply_relation(u, s, reg, ctx);
  }
  return w;
}

bool step_is_local(const GroupWord& w, const Step& s, const RelationRegistry& reg, const CommutationContext& ctx) {
  long before = long(w.unit_length()), after = long(apply_step(w, s, reg, ctx).unit_length());
  switch (s.kind) {
    case Step::Kind::Commute:
      return true;
    case Step::Kind::Conjugation: {
      if (s.forward) return after == before - 2 * s.conj_length;
      auto map = w.units()[s.pos].gen.curve.map();
      return after == before + 2 * long(map.unit_length());
    }
    case Step::Kind::Relation: {
      auto& r = reg.get(s.relation);
      long nl = long(r.eq.lhs.unit_length()), nr = long(r.eq.rhs.unit_length());
      long len = s.length < 0 ? (s.forward ? nl : nr) : s.length;
      return after == before - len + (nl + nr - len);
    }
  }
  return false;
}

}  // namespace mcg
