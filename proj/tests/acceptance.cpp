// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "mcg/factorgen.hpp"
#include "mcg/fibration.hpp"
#include "mcg/repcheck.hpp"
#include "mcg/textio.hpp"

using namespace mcg;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void report(int n, const std::function<Outcome()>& run) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.ok) ++failures;
  std::printf("criterion %d: %s  %s (%.2fs)\n", n, o.ok ? "PASS" : "FAIL", o.detail.c_str(), secs);
  std::fflush(stdout);
}

// Runs a command line through the CLI and parses what it prints.
Document gen(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int rc = run_cli(args, out, err);
  if (rc != 0) throw Error("mcgcalc exited " + std::to_string(rc) + ": " + err.str());
  return parse_document(out.str());
}

std::string verify_trace(const Document& d) {
  auto v = verify_document(d, resolve_config(d), "trace");
  return v.ok ? "" : v.failure;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  report(1, [] {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    int docs = 0;
    for (int g : {2, 3})
      for (int n = 1; n <= 20; ++n) {
        auto d = gen({"gen", "cl-factorization", "--n", std::to_string(n), "--genus", std::to_string(g)});
        int want = (n + 3) / 2;
        int got = d.factorization->census().commutators;
        std::string tag = "g=" + std::to_string(g) + " n=" + std::to_string(n);
        if (got != want) o.fail(tag + ": " + std::to_string(got) + " commutators, expected " + std::to_string(want));
        if (cl_reference(n) != want) o.fail(tag + ": reference table disagrees");
        if (auto why = verify_trace(d); !why.empty()) o.fail(tag + ": " + why);
        ++docs;
      }
    double secs = elapsed_since(t0);
    if (secs >= 10) o.fail("took " + std::to_string(secs) + "s");
    if (o.ok) o.detail = std::to_string(docs) + " documents, floor((n+3)/2) commutators, all traces replay";
    return o;
  });

  report(2, [] {
    Outcome o;
    std::vector<double> ratio(41);
    for (int n = 1; n <= 40; ++n) {
      ratio[n] = double(boundary_twist_commutators(n, 2).factorization.census().commutators) / n;
      if (ratio[n] < 0.5 || ratio[n] > 0.5 + 2.0 / n) o.fail("n=" + std::to_string(n) + " outside envelope");
    }
    // cl(n)/n itself is not monotone (n=4 gives 0.75, n=5 gives 0.8), so
    // monotonicity is checked on the even and the odd n separately.
    for (int n = 3; n <= 40; ++n)
      if (ratio[n] > ratio[n - 2] + 1e-12) o.fail("ratio rises from n=" + std::to_string(n - 2) + " to n=" + std::to_string(n));
    auto scl = scl_reference();
    if (!(scl == Rational{1, 2})) o.fail("scl reference is not 1/2");
    int rejected = 0, accepted = 0;
    for (int h = 1; h <= 4; ++h)
      for (int k = -10; k <= 10; ++k) {
        bool ok = true;
        try {
          range_commutators(k, h, 2);
        } catch (const Error&) {
          ok = false;
        }
        bool inside = std::abs(k) <= 2 * h - 2;
        if (k > 2 * h - 2 && ok) o.fail("range accepted k=" + std::to_string(k) + " h=" + std::to_string(h));
        if (inside && !ok) o.fail("range rejected k=" + std::to_string(k) + " h=" + std::to_string(h));
        ok ? ++accepted : ++rejected;
      }
    if (o.ok)
      o.detail = "cl(n)/n in [1/2, 1/2+2/n] for n<=40, nonincreasing along even and along odd n (not along all n); range accepted " +
                 std::to_string(accepted) + ", rejected " + std::to_string(rejected) + " with k>2h-2 always rejected";
    return o;
  });

  report(3, [] {
    Outcome o;
    // lantern on the four-holed sphere, in both backends
    auto disk = holed_disk_config(3);
    auto reg = registry_for(disk);
    auto& lan = reg.get(lantern_name(disk.lanterns[0]));
    if (!h1_compare(disk, lan.eq.lhs, lan.eq.rhs).equal) o.fail("lantern differs on H1");
    if (!pi1_compare(disk, lan.eq.lhs, lan.eq.rhs).equal) o.fail("lantern differs on pi1");
    // generalized lantern: replay the derivation, which must pass through
    // and then cancel the interior y twists
    for (int n = 3; n <= 8; ++n) {
      auto cfg = holed_disk_config(n);
      auto r = registry_for(cfg);
      auto rel = generalized_lantern_relation(n);
      r.add(rel);
      CommutationContext ctx(cfg);
      auto rep = check_relation(rel.name, r, ctx);
      if (!rep.ok) o.fail("lantern n=" + std::to_string(n) + ": " + rep.message);
      if (!pi1_compare(cfg, rel.eq.lhs, rel.eq.rhs).equal) o.fail("lantern n=" + std::to_string(n) + " differs on pi1");
      auto has_y = [](const GroupWord& w) {
        for (auto& l : w.letters())
          if (l.gen.is_twist() && l.gen.curve.is_base() && l.gen.curve.base_name()[0] == 'y') return true;
        return false;
      };
      if (n >= 4) {
        bool seen = false;
        GroupWord w = raag_reduce(rel.proof->start, ctx);
        for (auto& s : rel.proof->steps) {
          w = apply_step(w, s, r, ctx);
          seen = seen || has_y(w);
        }
        if (!seen || has_y(rel.proof->start) || has_y(rel.proof->end))
          o.fail("lantern n=" + std::to_string(n) + " does not cancel interior twists");
      }
    }
    // chains of length 3, 5, 7 on the genus-4 surface, as integer matrices
    auto g4 = surface_config(4);
    std::set<int> ls;
    for (auto& c : g4.chains) {
      int len = int(c.chain.size());
      if (len % 2 == 0 || len < 3 || len > 7) continue;
      auto eq = instantiate_chain(g4, c.chain, c.boundaries);
      if (!(h1_action(g4, eq.lhs) == h1_action(g4, eq.rhs))) o.fail("chain " + chain_name(c) + " differs on H1");
      ls.insert((len - 1) / 2);
    }
    if (ls != std::set<int>{1, 2, 3}) o.fail("genus-4 config lacks a chain for some l in 1..3");
    auto torus = torus_config();
    auto g1 = instantiate_genus1(torus);
    auto p = pi1_compare(torus, g1.lhs, g1.rhs);
    if (!p.equal) o.fail("genus-1 relation differs on pi1: " + p.detail);
    if (o.ok) o.detail = "lantern (H1, pi1), generalized lantern n=3..8 replayed, chains l=1..3 on H1, genus-1 relation on pi1";
    return o;
  });

  report(4, [] {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    int docs = 0;
    auto check = [&](int g, int h, int m, int l, long want) {
      std::vector<std::string> args{"gen", "lefschetz", "--g", std::to_string(g), "--h", std::to_string(h),
                                    "--m", std::to_string(m)};
      if (h == 1) args.insert(args.end(), {"--l", std::to_string(l)});
      auto d = gen(args);
      std::string tag = "g=" + std::to_string(g) + " h=" + std::to_string(h) + " m=" + std::to_string(m) +
                        (h == 1 ? " l=" + std::to_string(l) : "");
      auto c = d.factorization->census();
      if (c.positive_twists != want || c.negative_twists != 0)
        o.fail(tag + ": " + std::to_string(c.positive_twists) + " positive twists, expected " + std::to_string(want));
      auto spec = fibration_spec(d);
      if (section_self_intersection(spec) != 2 * h - 2) o.fail(tag + ": section square is not 2h-2");
      if (adjunction_check(spec) != Verdict::Maximal) o.fail(tag + ": verdict is " + to_string(adjunction_check(spec)));
      if (auto why = verify_trace(d); !why.empty()) o.fail(tag + ": " + why);
      ++docs;
    };
    for (int g : {2, 3, 4})
      for (int h : {2, 3})
        for (int m : {1, 2, 5}) check(g, h, m, 2, 4L * (2 * g + 1) * m);
    // the h = 1 family needs l <= g
    for (int g : {2, 3, 4})
      for (int l : {2, 3})
        if (l <= g)
          for (int m : {1, 2, 5}) check(g, 1, m, l, long(m) * (2 * l - 2) * (2 * l + 1));
    double secs = elapsed_since(t0);
    if (secs >= 30) o.fail("took " + std::to_string(secs) + "s");
    if (o.ok) o.detail = std::to_string(docs) + " documents (h=1, l=3 needs g>=3), all maximal with square 2h-2, traces replay";
    return o;
  });

  report(5, [] {
    Outcome o;
    for (int h : {1, 2, 3})
      for (int l : {0, 1}) {
        auto d = gen({"gen", "sections", "--h", std::to_string(h), "--l", std::to_string(l)});
        auto cfg = resolve_config(d);
        std::string tag = "h=" + std::to_string(h) + " l=" + std::to_string(l);
        if (cfg.boundary_count != 4 * h - 3) o.fail(tag + ": boundary count " + std::to_string(cfg.boundary_count));
        if (cfg.genus != 8 * h - 8 + l) o.fail(tag + ": genus " + std::to_string(cfg.genus));
        if (d.factorization->census().commutators != h) o.fail(tag + ": commutator count");
        if (!(h1_action(cfg, d.factorization->flatten()) == IntMatrix::identity(cfg.form.rows())))
          o.fail(tag + ": not the identity on H1");
        if (auto why = verify_trace(d); !why.empty()) o.fail(tag + ": " + why);
      }
    if (o.ok) o.detail = "6 surfaces with 4h-3 boundaries and genus 8h-8+l, h commutators acting trivially on H1";
    return o;
  });

  report(6, [] {
    Outcome o;
    auto cfg = torus_config();
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> dn(-5, 5), dm(0, 60), coin(0, 1);
    int hits = 0;
    for (int it = 0; it < 500; ++it) {
      int n = dn(rng), m = it % 4 == 0 ? 12 * std::abs(n) : dm(rng);
      std::ostringstream text;
      text << "mcg factorization\nconfig torus\nfibration fiber_genus 1 base_genus 0 boundary_power " << n
           << " minimal yes\nfactorization ";
      GroupWord w;
      for (int i = 0; i < m; ++i) {
        const char* c = coin(rng) ? "a" : "b";
        text << (i ? " " : "") << "T(" << c << ")";
        w *= GroupWord::twist(c);
      }
      if (m == 0) text << "1";
      text << "\ntarget ";
      if (n == 0) text << "1\n";
      else text << "T(delta)^" << n << "\n";
      auto d = parse_document(text.str());
      bool ok = genus1_constraint(fibration_spec(d)) == Verdict::Ok;
      bool want = m == 12 * n && n >= 0;
      // degree oracle: each right twist counts 1, the boundary twist 12
      bool degree_match = genus1_degree(cfg, w) == genus1_degree(cfg, GroupWord::twist("delta", n));
      if (ok != want || (ok && !degree_match))
        o.fail("n=" + std::to_string(n) + " m=" + std::to_string(m) + " gives the wrong verdict");
      hits += ok;
    }
    if (hits == 0) o.fail("no sample satisfied the constraint");
    if (o.ok) o.detail = "500 random documents, " + std::to_string(hits) + " admissible, verdict ok iff m=12n and n>=0";
    return o;
  });

  report(7, [] {
    Outcome o;
    FibrationSpec torus_bundle;
    torus_bundle.fiber_genus = 1;
    torus_bundle.base_genus = 1;
    torus_bundle.monodromy.push(Factor::commutator(GroupWord::twist("a"), GroupWord::twist("b")));
    if (euler_characteristic(torus_bundle) != 0) o.fail("e(1,1,0) is not 0");
    // pairs drawn from generated genus-2 fibrations
    std::vector<SectionedFibration> pool;
    for (int h = 1; h <= 3; ++h)
      for (int k = 2 - 2 * h; k <= 2 * h - 2; ++k) pool.push_back(with_section(fibration_from(range_commutators(k, h, 2), h)));
    for (int h = 2; h <= 3; ++h)
      for (int m : {0, 1, 2}) pool.push_back(with_section(fibration_from(lefschetz_word(2, h, m), h)));
    pool.push_back(with_section(fibration_from(lefschetz_word(2, 1, 1, 2), 1)));
    std::mt19937 rng(77);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int it = 0; it < 100; ++it) {
      auto& a = pool[pick(rng)];
      auto& b = pool[pick(rng)];
      auto s = fiber_sum(a, b);
      long want = euler_characteristic(a.spec) + euler_characteristic(b.spec) + 4L * (2 - 1);
      if (euler_characteristic(s.spec) != want) o.fail("euler characteristic is not additive");
      if (s.section.self_intersection != a.section.self_intersection + b.section.self_intersection)
        o.fail("section squares do not add");
      if (s.section.self_intersection != section_self_intersection(s.spec)) o.fail("summed section square disagrees");
    }
    if (o.ok) o.detail = "e(1,1,0)=0; 100 fiber sums of " + std::to_string(pool.size()) + " generated fibrations additive";
    return o;
  });

  report(8, [] {
    Outcome o;
    fs::path dir = fs::path(MCG_SOURCE_DIR) / "data" / "golden";
    int docs = 0, cfgs = 0;
    for (auto& e : fs::recursive_directory_iterator(dir)) {
      if (!e.is_regular_file()) continue;
      auto text = slurp(e.path());
      auto ext = e.path().extension();
      if (ext == ".mcg") {
        if (print_document(parse_document(text)) != text) o.fail(e.path().filename().string() + " changes on round trip");
        ++docs;
      } else if (ext == ".cfg") {
        if (print_config(parse_config(text)) != text) o.fail(e.path().filename().string() + " changes on round trip");
        ++cfgs;
      }
    }
    if (docs == 0) o.fail("no golden documents found in " + dir.string());
    if (o.ok) o.detail = std::to_string(docs) + " documents and " + std::to_string(cfgs) + " configs byte-identical";
    return o;
  });

  return failures ? 1 : 0;
}
