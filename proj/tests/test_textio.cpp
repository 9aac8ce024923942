#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "mcg/repcheck.hpp"
#include "mcg/textio.hpp"

using namespace mcg;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path golden() { return std::filesystem::path(MCG_SOURCE_DIR) / "data" / "golden"; }

struct RandomDocs {
  std::mt19937 rng;
  explicit RandomDocs(unsigned seed) : rng(seed) {}
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  std::string name() {
    static const char* n[] = {"a", "b", "delta", "x1", "c12", "d1.l2", "s1.a_3", "fK"};
    return n[pick(0, 7)];
  }
  GroupWord word(int depth = 0) {
    std::vector<Letter> ls;
    int len = pick(0, 5);
    for (int i = 0; i < len; ++i) {
      int e = pick(-3, 3);
      if (e == 0) e = 1;
      if (pick(0, 3) == 0) {
        ls.push_back({Generator::formal(name()), e});
      } else {
        auto c = CurveExpr::base(name());
        if (depth < 2 && pick(0, 4) == 0) c = CurveExpr::image(word(depth + 1), c);
        ls.push_back({Generator::twist(c), e});
      }
    }
    return GroupWord(ls);
  }
  Factor factor(int depth = 0) {
    int k = pick(0, depth < 2 ? 2 : 1);
    if (k == 0) {
      int e = pick(-4, 4);
      return Factor::twist_power(name(), e ? e : 2);
    }
    if (k == 1) return Factor::commutator(word(), word());
    return Factor::conjugated(factor(depth + 1), word());
  }
  Step step() {
    Step s;
    switch (pick(0, 2)) {
      case 0:
        s.kind = Step::Kind::Commute;
        s.pos = pick(0, 40);
        break;
      case 1:
        s.kind = Step::Kind::Conjugation;
        s.forward = pick(0, 1);
        s.pos = pick(0, 40);
        s.conj_length = pick(0, 5);
        s.span = pick(0, 20);
        break;
      default:
        s.kind = Step::Kind::Relation;
        s.forward = pick(0, 1);
        s.pos = pick(0, 40);
        s.offset = pick(0, 12);
        s.length = pick(-1, 12);
        s.relation = "chain(" + name() + "," + name() + ")";
    }
    return s;
  }
  DerivationTrace trace() {
    DerivationTrace t{word(), {}, word()};
    int n = pick(0, 6);
    for (int i = 0; i < n; ++i) t.steps.push_back(step());
    return t;
  }
  std::string text() {
    static const char* t[] = {"plain", "with \"quotes\"", "back\\slash", "spaced  out", ""};
    return t[pick(0, 4)];
  }
  Document doc() {
    Document d;
    d.kind = Document::Kind(pick(1, 4));
    d.title = text();
    if (pick(0, 1)) d.config_ref = pick(0, 1) ? "surface-g3" : "../cfg/my surface.cfg";
    d.provenance = text();
    if (pick(0, 1)) d.word = word();
    if (pick(0, 1)) {
      Factorization f;
      int n = pick(0, 4);
      for (int i = 0; i < n; ++i) f.push(factor());
      d.factorization = f;
    }
    if (pick(0, 1)) d.target = word();
    if (pick(0, 1)) d.fibration = FibrationInfo{pick(0, 9), pick(0, 9), pick(-9, 9), bool(pick(0, 1))};
    int nf = pick(0, 2);
    for (int i = 0; i < nf; ++i) d.fields.push_back({"key_" + std::to_string(i), text()});
    int nr = pick(0, 3);
    for (int i = 0; i < nr; ++i) {
      Relation r;
      r.name = "rel(" + name() + ":" + std::to_string(i) + ")";
      r.kind = Relation::Kind(pick(0, 2));
      r.source = pick(0, 1) ? "lantern" : "witness";
      int na = pick(0, 3);
      for (int j = 0; j < na; ++j) r.args.push_back(pick(0, 1) ? name() : text());
      r.eq = {word(), word()};
      if (pick(0, 1)) r.proof = std::make_shared<const DerivationTrace>(trace());
      d.relations.push_back(r);
    }
    if (pick(0, 1)) d.trace = trace();
    return d;
  }
};

int error_line(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("word and factor grammar") {
  auto f = parse_factorization("T(d)^-2");
  REQUIRE(f.factors().size() == 1);
  CHECK(f.factors()[0].kind == Factor::Kind::TwistPower);
  CHECK(f.factors()[0].curve.key() == "d");
  CHECK(f.factors()[0].exp == -2);

  auto c = parse_factorization("C[T(a) T(b)^-1 ; F(f)]");
  REQUIRE(c.factors().size() == 1);
  CHECK(c.factors()[0].kind == Factor::Kind::Commutator);
  CHECK(c.factors()[0].u == GroupWord::twist("a") * GroupWord::twist("b", -1));
  CHECK(c.factors()[0].v == GroupWord::formal("f"));

  auto g = parse_factorization("@T(x3)^2{C[T(x1) ; F(fC)]} T(delta)");
  CHECK(g.factors().size() == 2);
  CHECK(g.factors()[0].kind == Factor::Kind::Conjugated);
  CHECK(g.factors()[0].conj == GroupWord::twist("x3", 2));
  CHECK(g.str() == "@T(x3)^2{C[T(x1) ; F(fC)]} T(delta)");

  CHECK(parse_word("1").empty());
  CHECK(parse_factorization("1").factors().empty());
  auto w = parse_word("T([F(w) T(a)]b)^3 F(w)^-1");
  CHECK(w.letters()[0].gen.curve.base_name() == "b");
  CHECK(w.letters()[0].gen.curve.map() == GroupWord::formal("w") * GroupWord::twist("a"));
  CHECK(parse_word(w.str()) == w);
  // adjacent equal letters merge and cancel
  CHECK(parse_word("T(a) T(a)^-1") == GroupWord());
  CHECK(parse_word("T(a)^2 T(a)") == GroupWord::twist("a", 3));
}

TEST_CASE("syntax errors carry position and expected tokens") {
  try {
    parse_word("T(a) T(b");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 9);
    CHECK(e.expected == std::vector<std::string>{")"});
  }
  try {
    parse_factorization("C[T(a) T(b)]");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.col == 12);
    CHECK(std::string(e.what()).find("expected ;") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_word("T(a)^0"), ParseError);
  CHECK_THROWS_AS(parse_word("X(a)"), ParseError);
  CHECK_THROWS_AS(parse_word("1 T(a)"), ParseError);
  CHECK_THROWS_AS(parse_word("T(9a)"), ParseError);

  CHECK(error_line("mcg word\nword T(a)\nwordz T(b)\n") == 3);
  CHECK(error_line("mcg nonsense\n") == 1);
  CHECK(error_line("word T(a)\n") == 1);
  CHECK(error_line("mcg trace\ntrace\n  start 1\n  step commute 2\n") == 5);
  CHECK(error_line("mcg trace\nrelation \"r\" derived x\n  rhs 1\n") == 3);
  CHECK(error_line("mcg trace\ntrace\n  start 1\n  step shuffle 2\n  end 1\n") == 4);
  CHECK(error_line("mcg config\nform 2 2\n  row 0 1\n") == 4);
  CHECK(error_line("mcg config\nform 2 2\n  row 0 1 5\n") == 3);
}

TEST_CASE("unknown names are semantic errors") {
  auto d = parse_document("mcg word\nconfig torus\nword T(a) T(zz)\n");
  CHECK_THROWS_WITH_AS(resolve_config(d), doctest::Contains("unknown curve 'zz'"), SemanticError);
  auto e = parse_document("mcg word\nconfig torus\nword T([F(v)]a)\n");
  CHECK_THROWS_WITH_AS(resolve_config(e), doctest::Contains("unknown formal symbol 'v'"), SemanticError);
  auto ok = parse_document("mcg word\nconfig torus\nword T([F(w)]a) T(b)^-1\n");
  CHECK(resolve_config(ok).name == "torus");
  CHECK_THROWS_AS(resolve_config(parse_document("mcg word\nword 1\n")), SemanticError);
}

TEST_CASE("round trip on random documents") {
  RandomDocs gen(2024);
  for (int i = 0; i < 1000; ++i) {
    auto d = gen.doc();
    auto text = print_document(d);
    CAPTURE(text);
    auto back = parse_document(text);
    CHECK(same_document(back, d));
    CHECK(print_document(back) == text);
  }
}

TEST_CASE("builtin configs survive the .cfg format") {
  for (std::string n : {"torus", "disk-3", "disk-6", "surface-g2", "surface-g4", "sections-h2-l1"}) {
    CAPTURE(n);
    auto cfg = builtin_config(n);
    auto text = print_config(cfg);
    auto back = parse_config(text);
    CHECK(print_config(back) == text);
    CHECK(validate_config(back).ok());
    CHECK(back.disjoint_pairs == cfg.disjoint_pairs);
    CHECK(back.curves.size() == cfg.curves.size());
    for (std::size_t i = 0; i < cfg.curves.size(); ++i) {
      CHECK(back.curves[i].homology == cfg.curves[i].homology);
      CHECK(back.curves[i].pi1.has_value() == cfg.curves[i].pi1.has_value());
      if (cfg.curves[i].pi1) CHECK(*back.curves[i].pi1 == *cfg.curves[i].pi1);
    }
  }
}

TEST_CASE("a config file referenced by path") {
  auto dir = std::filesystem::temp_directory_path() / "mcg_textio_cfg";
  std::filesystem::create_directories(dir);
  write_file((dir / "t.cfg").string(), print_config(torus_config()));
  auto d = parse_document("mcg word\nconfig file \"t.cfg\"\nword T(a) T(b)\n");
  CHECK(resolve_config(d, dir.string()).name == "torus");
  CHECK_THROWS_AS(resolve_config(d, "/nonexistent"), Error);
}

TEST_CASE("generated documents round trip exactly") {
  std::vector<FactorizationResult> rs{boundary_twist_commutators(5, 2), range_commutators(-2, 3, 2),
                                      disjoint_sections_word(2, 1), lefschetz_word(2, 2, 1), lefschetz_word(3, 1, 1, 3)};
  for (auto& r : rs) {
    auto d = document_from(r, r.config.name, FibrationInfo{r.config.genus, 2, 0, true});
    auto back = parse_document(print_document(d));
    CHECK(same_document(back, d));
    auto cfg = resolve_config(back);
    auto v = verify_document(back, cfg, "trace");
    INFO(v.failure);
    CHECK(v.ok);
  }
}

TEST_CASE("golden corpus is printed back byte for byte") {
  int n = 0;
  for (auto& e : std::filesystem::directory_iterator(golden())) {
    if (!e.is_regular_file()) continue;
    CAPTURE(e.path().string());
    auto text = slurp(e.path());
    auto d = parse_document(text);
    CHECK(print_document(d) == text);
    auto cfg = resolve_config(d, golden().string());
    auto v = verify_document(d, cfg, "trace");
    INFO(v.failure);
    CHECK(v.ok);
    ++n;
  }
  for (auto& e : std::filesystem::directory_iterator(golden() / "configs")) {
    CAPTURE(e.path().string());
    auto text = slurp(e.path());
    CHECK(print_config(parse_config(text)) == text);
    ++n;
  }
  CHECK(n >= 40);
}

TEST_CASE("verification catches tampering") {
  auto r = boundary_twist_commutators(4, 2);
  auto d = document_from(r, "surface-g2");
  auto cfg = resolve_config(d);
  CHECK(verify_document(d, cfg, "trace").ok);
  CHECK(verify_document(d, cfg, "h1").ok);

  auto bad_step = d;
  bad_step.trace->steps[2].pos += 1;
  auto v = verify_document(bad_step, cfg, "trace");
  CHECK_FALSE(v.ok);
  CHECK(v.failure.find("step") == 0);

  auto bad_target = d;
  bad_target.target = GroupWord::twist("delta", 3);
  bad_target.trace->end = *bad_target.target;
  CHECK_FALSE(verify_document(bad_target, cfg, "trace").ok);
  // boundary twists act trivially on homology; a wrong nonseparating twist does not
  CHECK(verify_document(bad_target, cfg, "h1").ok);
  bad_target.target = GroupWord::twist("delta", 4) * GroupWord::twist("a1");
  CHECK_FALSE(verify_document(bad_target, cfg, "h1").ok);

  // a false lantern passed off as an instance
  auto bad_rel = d;
  for (auto& rel : bad_rel.relations)
    if (rel.kind == Relation::Kind::Instance) {
      rel.eq.rhs = rel.eq.rhs.inverse();
      break;
    }
  CHECK(verify_document(bad_rel, cfg, "trace").failure.find("not an instance") != std::string::npos);

  // a derived relation whose proof is broken
  auto bad_proof = d;
  for (auto& rel : bad_proof.relations)
    if (rel.kind == Relation::Kind::Derived) {
      auto t = *rel.proof;
      t.steps.pop_back();
      rel.proof = std::make_shared<const DerivationTrace>(t);
      break;
    }
  CHECK(verify_document(bad_proof, cfg, "trace").failure.find("proof of") == 0);
  CHECK_THROWS_AS(verify_document(d, cfg, "pi1"), BackendUnavailable);
}

TEST_CASE("json records") {
  auto r = lefschetz_word(2, 2, 1);
  auto j = to_json(document_from(r, "surface-g2", FibrationInfo{2, 2, -2, true}));
  CHECK(j["kind"] == "factorization");
  CHECK(j["census"]["commutators"] == 2);
  CHECK(j["census"]["positive_twists"] == 20);
  CHECK(j["fibration"]["boundary_power"] == -2);
  REQUIRE(j["trace"]["steps"].size() == r.trace.steps.size());
  for (auto& s : j["trace"]["steps"]) CHECK(s.contains("provenance"));
  CHECK(j["trace"]["steps"][0]["provenance"].is_string());
}
