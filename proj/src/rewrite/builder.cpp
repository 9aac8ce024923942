#include <cstdlib>

#include "mcg/rewrite.hpp"

namespace mcg {

TraceBuilder::TraceBuilder(GroupWord start, const RelationRegistry& reg, const CommutationContext& ctx)
    : start_(std::move(start)), reg_(reg), ctx_(ctx) {
  word_ = raag_reduce(start_, ctx_);
}

void TraceBuilder::step(const Step& s) {
  word_ = apply_step(word_, s, reg_, ctx_);
  steps_.push_back(s);
}

void TraceBuilder::relation(const std::string& name, bool forward, std::size_t pos, int offset, int length) {
  Step s;
  s.relation = name;
  s.forward = forward;
  s.pos = pos;
  s.offset = offset;
  s.length = length;
  step(s);
}

bool TraceBuilder::relation_anywhere(const std::string& name, bool forward, int offset, int length) {
  std::size_t n = word_.unit_length();
  for (std::size_t p = 0; p <= n; ++p) {
    try {
      relation(name, forward, p, offset, length);
      return true;
    } catch (const MatchError&) {
    }
  }
  return false;
}

void TraceBuilder::commute(std::size_t pos) {
  Step s;
  s.kind = Step::Kind::Commute;
  s.pos = pos;
  step(s);
}

bool TraceBuilder::replace(const std::string& name, const GroupWord& pattern) {
  auto& r = reg_.get(name);
  auto p = pattern.units();
  for (bool fwd : {true, false}) {
    auto L = (fwd ? r.eq.lhs : r.eq.rhs).units();
    auto R = (fwd ? r.eq.rhs : r.eq.lhs).inverse().units();
    auto rho = L;
    rho.insert(rho.end(), R.begin(), R.end());
    int n = int(rho.size());
    if (p.size() > rho.size()) continue;
    for (int off = 0; off < n; ++off) {
      bool ok = true;
      for (std::size_t i = 0; i < p.size() && ok; ++i) ok = rho[(off + i) % n] == p[i];
      if (!ok) continue;
      int len = int(p.size());
      if (off == 0 && len == int(L.size())) len = -1;
      if (relation_anywhere(name, fwd, off, len)) return true;
    }
  }
  return false;
}

void TraceBuilder::commute_to(const GroupWord& target) {
  for (auto p : commutation_swaps(word_, target, ctx_)) commute(p);
}

int TraceBuilder::resolve_conjugations() {
  int count = 0;
  for (;;) {
    auto u = word_.units();
    bool done = false;
    for (std::size_t i = 0; i < u.size() && !done; ++i) {
      if (u[i].gen.is_twist()) continue;
      std::size_t run = 0;
      while (i + run < u.size() && !u[i + run].gen.is_twist()) ++run;
      for (std::size_t k = run; k >= 1 && !done; --k) {
        // twists follow the conjugator, then its inverse
        std::size_t j = i + k;
        while (j < u.size() && u[j].gen.is_twist()) ++j;
        if (j == i + k || j + k > u.size()) continue;
        bool inv = true;
        for (std::size_t m = 0; m < k; ++m) {
          auto& a = u[i + k - 1 - m];
          auto& b = u[j + m];
          if (!(a.gen == b.gen && a.exp == -b.exp)) inv = false;
        }
        if (!inv) continue;
        Step s;
        s.kind = Step::Kind::Conjugation;
        s.forward = true;
        s.pos = i;
        s.conj_length = int(k);
        s.span = int(j + k - i);
        step(s);
        ++count;
        done = true;
      }
    }
    if (!done) return count;
  }
}

int TraceBuilder::rewrite_images() {
  int count = 0;
  for (;;) {
    auto u = word_.units();
    bool done = false;
    for (std::size_t i = 0; i < u.size() && !done; ++i) {
      auto& g = u[i].gen;
      if (!g.is_twist() || g.curve.is_base()) continue;
      auto name = image_witness_name(g.curve.map(), g.curve.base_name());
      if (!reg_.find(name)) continue;
      if (u[i].exp > 0) relation(name, true, i, 0, 1);
      else relation(name, false, i, 1, 1);
      ++count;
      done = true;
    }
    if (!done) return count;
  }
}

DerivationTrace TraceBuilder::finish(const GroupWord& end) const { return {start_, steps_, end}; }

}  // namespace mcg
