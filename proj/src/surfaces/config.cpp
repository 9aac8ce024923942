#include <algorithm>

#include "mcg/repcheck.hpp"
#include "mcg/surface.hpp"

namespace mcg {

NamePair make_pair_sorted(const std::string& a, const std::string& b) {
  return a < b ? NamePair{a, b} : NamePair{b, a};
}

const CurveRecord* SurfaceConfig::curve(const std::string& n) const {
  for (auto& c : curves)
    if (c.name == n) return &c;
  return nullptr;
}

const FormalRecord* SurfaceConfig::formal(const std::string& n) const {
  for (auto& f : formals)
    if (f.name == n) return &f;
  return nullptr;
}

CurveRecord& SurfaceConfig::add_curve(const std::string& n, IntVec hom) {
  if (curve(n)) throw Error("duplicate curve " + n);
  curves.push_back({n, std::move(hom), false, false, std::nullopt});
  return curves.back();
}

FormalRecord& SurfaceConfig::add_formal(const std::string& n) {
  if (formal(n)) throw Error("duplicate formal symbol " + n);
  formals.push_back({n, std::nullopt, std::nullopt, {}});
  return formals.back();
}

void SurfaceConfig::declare_disjoint(const std::string& a, const std::string& b) {
  if (a == b) throw Error("curve " + a + " cannot be disjoint from itself");
  disjoint_pairs.insert(make_pair_sorted(a, b));
}

void SurfaceConfig::declare_once(const std::string& a, const std::string& b) {
  if (a == b) throw Error("curve " + a + " cannot meet itself once");
  once_pairs.insert(make_pair_sorted(a, b));
}

bool SurfaceConfig::declared_disjoint(const std::string& a, const std::string& b) const {
  return disjoint_pairs.count(make_pair_sorted(a, b)) > 0;
}

bool SurfaceConfig::declared_once(const std::string& a, const std::string& b) const {
  return once_pairs.count(make_pair_sorted(a, b)) > 0;
}

bool SurfaceConfig::disjoint(const std::string& a, const std::string& b) const {
  if (a == b) return false;
  if (declared_disjoint(a, b)) return true;
  auto ca = curve(a), cb = curve(b);
  return ca && cb && (ca->boundary_parallel || cb->boundary_parallel);
}

namespace {

bool known(const SurfaceConfig& cfg, const std::string& n) { return cfg.curve(n) || cfg.formal(n); }

void check_table(const SurfaceConfig& cfg, const std::string& who, const FreeAutomorphism& f,
                 ValidationReport& r) {
  int n = cfg.pi1_rank();
  if (f.rank() != n || int(f.inverse_images.size()) != n) {
    r.errors.push_back(who + ": automorphism table has wrong rank");
    return;
  }
  try {
    for (int i = 1; i <= n; ++i) {
      if (f.apply(f.apply_inverse({i})) != FreeWord{i} || f.apply_inverse(f.apply({i})) != FreeWord{i}) {
        r.errors.push_back(who + ": declared inverse table does not compose to the identity");
        return;
      }
    }
    if (!cfg.boundary_word.empty() && f.apply(cfg.boundary_word) != reduce(cfg.boundary_word))
      r.errors.push_back(who + ": automorphism moves the boundary word");
  } catch (const Error& e) {
    r.errors.push_back(who + ": " + e.what());
  }
}

}  // namespace

ValidationReport validate_config(const SurfaceConfig& cfg) {
  ValidationReport r;
  int rank = cfg.pi1_rank();
  if (cfg.genus < 0) r.errors.push_back("negative genus");
  if (cfg.boundary_count < 1) r.errors.push_back("boundary count must be positive");
  if (int(cfg.boundary_names.size()) != cfg.boundary_count)
    r.errors.push_back("boundary name list does not match boundary count");
  if (cfg.form.rows() != rank || cfg.form.cols() != rank) r.errors.push_back("intersection form has wrong size");
  else {
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j <= i; ++j)
        if (cfg.form(i, j) != -cfg.form(j, i)) {
          r.errors.push_back("intersection form is not antisymmetric");
          i = rank;
          break;
        }
  }

  for (auto& b : cfg.boundary_names) {
    auto c = cfg.curve(b);
    if (!c) r.errors.push_back("boundary " + b + " is not a curve");
    else if (!c->boundary_parallel) r.errors.push_back("boundary " + b + " is not marked boundary parallel");
  }
  for (auto& c : cfg.curves) {
    if (int(c.homology.size()) != rank) {
      r.errors.push_back(c.name + ": homology vector has length " + std::to_string(c.homology.size()));
      continue;
    }
    if (c.boundary_parallel && cfg.boundary_count == 1 && !is_zero(c.homology))
      r.errors.push_back(c.name + ": boundary parallel curve on a one-boundary surface must be null-homologous");
  }
  for (auto& [a, b] : cfg.disjoint_pairs) {
    if (a == b) r.errors.push_back("disjoint pair is reflexive: " + a);
    if (!known(cfg, a) || !known(cfg, b)) {
      r.errors.push_back("disjoint pair names unknown curve: " + a + " " + b);
      continue;
    }
    auto ca = cfg.curve(a), cb = cfg.curve(b);
    if (ca && cb && int(ca->homology.size()) == rank && int(cb->homology.size()) == rank &&
        cfg.form.rows() == rank && pairing(cfg.form, ca->homology, cb->homology) != 0)
      r.errors.push_back("disjoint curves " + a + " and " + b + " have nonzero algebraic intersection");
  }
  for (auto& [a, b] : cfg.once_pairs) {
    if (!cfg.curve(a) || !cfg.curve(b)) r.errors.push_back("once pair names unknown curve: " + a + " " + b);
    else if (cfg.declared_disjoint(a, b)) r.errors.push_back(a + " and " + b + " declared both disjoint and meeting once");
  }

  bool tables = cfg.has_pi1();
  if (tables && int(cfg.pi1_generators.size()) != rank) r.errors.push_back("pi1 generator list has wrong length");
  for (auto& c : cfg.curves) {
    if (!c.pi1) continue;
    if (!tables) {
      r.errors.push_back(c.name + ": automorphism table without pi1 generators");
      continue;
    }
    std::size_t before = r.errors.size();
    check_table(cfg, c.name, *c.pi1, r);
    if (r.errors.size() != before || int(c.homology.size()) != rank || cfg.form.rows() != rank) continue;
    if (!(c.pi1->abelianized() == transvection(cfg.form, c.homology)))
      r.errors.push_back(c.name + ": automorphism does not induce the transvection of its class");
  }
  for (auto& f : cfg.formals) {
    if (f.h1) {
      if (f.h1->rows() != rank || f.h1->cols() != rank) r.errors.push_back(f.name + ": homology action has wrong size");
      else if (cfg.form.rows() == rank && !(f.h1->transpose() * cfg.form * *f.h1 == cfg.form))
        r.errors.push_back(f.name + ": homology action does not preserve the intersection form");
    }
    if (f.pi1) check_table(cfg, f.name, *f.pi1, r);
    for (auto& [a, b] : f.sends) {
      auto ca = cfg.curve(a), cb = cfg.curve(b);
      if (!ca || !cb) {
        r.errors.push_back(f.name + ": sends unknown curve " + a + " -> " + b);
        continue;
      }
      if (f.h1 && f.h1->rows() == rank && int(ca->homology.size()) == rank && int(cb->homology.size()) == rank) {
        auto img = *f.h1 * ca->homology;
        if (img != cb->homology && img != -cb->homology)
          r.errors.push_back(f.name + ": homology action does not send " + a + " to " + b);
      }
    }
  }
  for (auto& l : cfg.lanterns)
    for (auto& n : l.holes)
      if (!cfg.curve(n)) r.errors.push_back("lantern names unknown curve " + n);
  for (auto& ch : cfg.chains)
    for (auto& n : ch.chain)
      if (!cfg.curve(n)) r.errors.push_back("chain names unknown curve " + n);
  return r;
}

}  // namespace mcg
