#include <algorithm>

#include "mcg/rewrite.hpp"

namespace mcg {

namespace {

// Name under which a generator's support is declared in the config.
std::string support_name(const Generator& g) { return g.is_twist() ? g.curve.base_name() : g.symbol; }

}  // namespace

void CommutationContext::require_known(const Generator& g) const {
  if (g.is_twist()) {
    if (!cfg_->curve(g.curve.base_name()))
      throw Error("unknown curve " + g.curve.base_name() + " in config " + cfg_->name);
  } else if (!cfg_->formal(g.symbol)) {
    throw Error("unknown formal symbol " + g.symbol + " in config " + cfg_->name);
  }
}

bool CommutationContext::independent(const Generator& a, const Generator& b) const {
  if (a == b) return false;
  auto key = a.key() < b.key() ? std::make_pair(a.key(), b.key()) : std::make_pair(b.key(), a.key());
  if (a.kind != b.kind) key.first = (a.is_twist() ? "T:" : "F:") + key.first;
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  bool r;
  if (a.is_twist() && b.is_twist()) {
    // t_{g(a)} and t_{g(b)} commute exactly when t_a and t_b do
    if (a.curve.map() == b.curve.map()) r = cfg_->disjoint(a.curve.base_name(), b.curve.base_name());
    else r = a.curve.is_base() && b.curve.is_base() && cfg_->disjoint(a.curve.base_name(), b.curve.base_name());
  } else if (a.is_twist() != b.is_twist()) {
    auto& t = a.is_twist() ? a : b;
    r = t.curve.is_base() && cfg_->declared_disjoint(support_name(a), support_name(b));
  } else {
    r = cfg_->declared_disjoint(a.symbol, b.symbol);
  }
  cache_[key] = r;
  return r;
}

GroupWord raag_reduce(const std::vector<Letter>& units, const CommutationContext& ctx) {
  std::vector<Letter> out;
  out.reserve(units.size());
  for (auto& x : units) {
    bool cancelled = false;
    for (std::size_t k = out.size(); k-- > 0;) {
      if (out[k].gen == x.gen) {
        if (out[k].exp == -x.exp) {
          out.erase(out.begin() + k);
          cancelled = true;
        }
        break;
      }
      if (!ctx.independent(out[k].gen, x.gen)) break;
    }
    if (!cancelled) out.push_back(x);
  }
  return GroupWord(std::move(out));
}

GroupWord raag_reduce(const GroupWord& w, const CommutationContext& ctx) { return raag_reduce(w.units(), ctx); }

GroupWord foata_normal_form(const GroupWord& w, const CommutationContext& ctx) {
  for (auto& l : w.letters()) ctx.require_known(l.gen);
  auto u = raag_reduce(w, ctx).units();
  // layer of a letter = longest chain of dependent letters ending at it
  std::vector<int> layer(u.size(), 0);
  int top = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (layer[j] >= layer[i] && !ctx.independent(u[j].gen, u[i].gen)) layer[i] = layer[j] + 1;
    top = std::max(top, layer[i]);
  }
  std::vector<Letter> out;
  out.reserve(u.size());
  for (int k = 0; k <= top; ++k) {
    std::vector<Letter> step;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (layer[i] == k) step.push_back(u[i]);
    std::sort(step.begin(), step.end(), [](const Letter& a, const Letter& b) { return a.gen < b.gen; });
    out.insert(out.end(), step.begin(), step.end());
  }
  return GroupWord(std::move(out));
}

bool equal_mod_commutation(const GroupWord& a, const GroupWord& b, const CommutationContext& ctx) {
  return foata_normal_form(a, ctx) == foata_normal_form(b, ctx);
}

}  // namespace mcg
