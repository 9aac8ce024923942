#include <functional>

#include "mcg/rewrite.hpp"

namespace mcg {

TraceReport check_trace(const DerivationTrace& t, const RelationRegistry& reg, const CommutationContext& ctx) {
  TraceReport rep;
  GroupWord w;
  try {
    for (auto& l : t.start.letters()) ctx.require_known(l.gen);
    for (auto& l : t.end.letters()) ctx.require_known(l.gen);
    w = raag_reduce(t.start, ctx);
  } catch (const Error& e) {
    rep.message = e.what();
    rep.reached = t.start;
    return rep;
  }
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    try {
      w = apply_step(w, t.steps[i], reg, ctx);
    } catch (const Error& e) {
      rep.failed_step = int(i);
      rep.message = "step " + std::to_string(i + 1) + ": " + e.what();
      rep.reached = w;
      return rep;
    }
  }
  rep.reached = w;
  rep.syntactic = w == raag_reduce(t.end, ctx);
  rep.ok = rep.syntactic || equal_mod_commutation(w, t.end, ctx);
  if (!rep.ok) rep.message = "trace ends at " + w.str() + " instead of " + t.end.str();
  return rep;
}

namespace {

bool sides_match(const DerivationTrace& t, const Equation& eq, const CommutationContext& ctx) {
  auto eqv = [&](const GroupWord& a, const GroupWord& b) { return equal_mod_commutation(a, b, ctx); };
  return (eqv(t.start, eq.lhs) && eqv(t.end, eq.rhs)) || (eqv(t.start, eq.rhs) && eqv(t.end, eq.lhs));
}

}  // namespace

TraceReport check_relation(const std::string& name, const RelationRegistry& reg, const CommutationContext& ctx) {
  std::set<std::string> done;
  std::function<TraceReport(const std::string&)> rec = [&](const std::string& n) -> TraceReport {
    TraceReport ok;
    ok.ok = true;
    if (done.count(n)) return ok;
    auto r = reg.find(n);
    if (!r) {
      TraceReport bad;
      bad.message = "unresolved relation " + n;
      return bad;
    }
    if (r->kind != Relation::Kind::Derived) {
      done.insert(n);
      return ok;
    }
    if (!r->proof) {
      TraceReport bad;
      bad.message = "derived relation " + n + " has no proof";
      return bad;
    }
    for (auto& s : r->proof->steps)
      if (s.kind == Step::Kind::Relation && s.relation != n) {
        auto sub = rec(s.relation);
        if (!sub.ok) {
          sub.message = "in " + s.relation + ": " + sub.message;
          return sub;
        }
      }
    auto rep = check_trace(*r->proof, reg, ctx);
    if (rep.ok && !sides_match(*r->proof, r->eq, ctx)) {
      rep.ok = false;
      rep.message = "proof of " + n + " does not connect the two sides of the relation";
    }
    if (rep.ok) done.insert(n);
    return rep;
  };
  return rec(name);
}

namespace {

// Adjacent swaps turning w into target; both must be reduced and equal
// modulo commutation.
std::vector<std::size_t> sorting_swaps(std::vector<Letter> w, const std::vector<Letter>& target,
                                       const CommutationContext& ctx) {
  std::vector<std::size_t> out;
  if (w.size() != target.size()) throw Error("words differ in length");
  for (std::size_t j = 0; j < target.size(); ++j) {
    std::size_t k = j;
    while (k < w.size() && !(w[k] == target[j])) {
      if (w[k].gen == target[j].gen) throw Error("words are not commutation equivalent");
      ++k;
    }
    if (k == w.size()) throw Error("words are not commutation equivalent");
    for (; k > j; --k) {
      if (!ctx.independent(w[k - 1].gen, w[k].gen)) throw Error("words are not commutation equivalent");
      std::swap(w[k - 1], w[k]);
      out.push_back(k - 1);
    }
  }
  return out;
}

// Feeds candidate steps undoing s to visit, most likely first, until visit
// accepts one.
bool undo_candidates(const Step& s, const GroupWord& after, const RelationRegistry& reg,
                     const std::function<bool(const Step&)>& visit) {
  std::size_t len = after.unit_length();
  if (s.kind == Step::Kind::Conjugation) {
    if (s.forward) {
      for (std::size_t p = 0; p < len; ++p)
        for (std::size_t sp = 1; p + sp <= len; ++sp) {
          Step c = s;
          c.forward = false;
          c.pos = p;
          c.span = int(sp);
          c.conj_length = 0;
          if (visit(c)) return true;
        }
    } else {
      for (std::size_t p = 0; p < len; ++p)
        for (int k = 1; p + 2 * k <= len; ++k)
          for (std::size_t sp = 2 * k + 1; p + sp <= len; ++sp) {
            Step c = s;
            c.forward = true;
            c.pos = p;
            c.conj_length = k;
            c.span = int(sp);
            if (visit(c)) return true;
          }
    }
    return false;
  }
  auto& r = reg.get(s.relation);
  int nl = int(r.eq.lhs.unit_length()), nr = int(r.eq.rhs.unit_length());
  int n = nl + nr;
  int len_u = s.length < 0 ? (s.forward ? nl : nr) : s.length;
  int off = n == 0 ? 0 : (n - 1 - (s.offset + n - 1) % n);
  if (s.length < 0) off = 0;
  std::vector<std::pair<int, int>> segs{{off, n - len_u}};
  for (int o = 0; o < std::max(n, 1); ++o)
    for (int l = 0; l <= n; ++l)
      if (!(o == off && l == n - len_u)) segs.push_back({o, l});
  for (auto [o, l] : segs)
    for (std::size_t p = 0; p <= len; ++p) {
      Step c = s;
      c.forward = !s.forward;
      c.pos = p;
      c.offset = o;
      c.length = l;
      int whole = c.forward ? nl : nr;
      if (o == 0 && l == whole) c.length = -1;
      if (visit(c)) return true;
    }
  return false;
}

}  // namespace

std::vector<std::size_t> commutation_swaps(const GroupWord& from, const GroupWord& to, const CommutationContext& ctx) {
  return sorting_swaps(raag_reduce(from, ctx).units(), raag_reduce(to, ctx).units(), ctx);
}

DerivationTrace reverse_trace(const DerivationTrace& t, const RelationRegistry& reg, const CommutationContext& ctx) {
  std::vector<GroupWord> words{raag_reduce(t.start, ctx)};
  for (auto& s : t.steps) words.push_back(apply_step(words.back(), s, reg, ctx));
  DerivationTrace out;
  out.start = raag_reduce(t.end, ctx);
  out.end = t.start;
  // the replay reaches t.end only modulo commutation
  for (auto p : commutation_swaps(out.start, words.back(), ctx)) {
    Step sw;
    sw.kind = Step::Kind::Commute;
    sw.pos = p;
    out.steps.push_back(sw);
  }
  GroupWord w = words.back();
  for (std::size_t i = t.steps.size(); i-- > 0;) {
    auto& s = t.steps[i];
    auto& target = words[i];
    if (s.kind == Step::Kind::Commute) {
      out.steps.push_back(s);
      w = apply_step(w, s, reg, ctx);
      continue;
    }
    auto found = undo_candidates(s, w, reg, [&](const Step& c) {
      GroupWord next;
      try {
        next = apply_step(w, c, reg, ctx);
      } catch (const MatchError&) {
        return false;
      }
      if (!equal_mod_commutation(next, target, ctx)) return false;
      out.steps.push_back(c);
      for (auto p : sorting_swaps(next.units(), target.units(), ctx)) {
        Step sw;
        sw.kind = Step::Kind::Commute;
        sw.pos = p;
        out.steps.push_back(sw);
      }
      return true;
    });
    w = target;
    if (!found) {
      std::string why = step_is_local(target, s, reg, ctx) ? "" : ": it cancels letters outside its window";
      throw Error("cannot undo step " + std::to_string(i + 1) + why);
    }
  }
  return out;
}

}  // namespace mcg
