#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "textio/config_io.hpp"
#include "textio/cursor.hpp"

namespace mcg {

using textio::Cursor;
using textio::quote;

std::string to_string(Document::Kind k) {
  switch (k) {
    case Document::Kind::Config: return "config";
    case Document::Kind::Word: return "word";
    case Document::Kind::Factorization: return "factorization";
    case Document::Kind::Trace: return "trace";
    case Document::Kind::Report: return "report";
  }
  return "?";
}

namespace {

bool same_trace(const DerivationTrace& a, const DerivationTrace& b) {
  return a.start == b.start && a.steps == b.steps && a.end == b.end;
}

bool same_relation(const Relation& a, const Relation& b) {
  if (a.name != b.name || !(a.eq == b.eq) || a.kind != b.kind || a.source != b.source || a.args != b.args)
    return false;
  if (!a.proof || !b.proof) return !a.proof && !b.proof;
  return same_trace(*a.proof, *b.proof);
}

const char* kind_word(Relation::Kind k) {
  switch (k) {
    case Relation::Kind::Instance: return "instance";
    case Relation::Kind::Assumption: return "assumption";
    case Relation::Kind::Derived: return "derived";
  }
  return "?";
}

std::string step_line(const Step& s) {
  std::string dir = s.forward ? "fwd" : "bwd";
  switch (s.kind) {
    case Step::Kind::Commute: return "step commute " + std::to_string(s.pos);
    case Step::Kind::Conjugation:
      return "step conjugation " + dir + " " + std::to_string(s.pos) + " " + std::to_string(s.conj_length) + " " +
             std::to_string(s.span);
    case Step::Kind::Relation:
      return "step relation " + dir + " " + std::to_string(s.pos) + " " + std::to_string(s.offset) + " " +
             std::to_string(s.length) + " " + quote(s.relation);
  }
  return {};
}

void print_trace(std::string& out, const DerivationTrace& t, const std::string& indent) {
  out += indent + "start " + t.start.str() + "\n";
  for (auto& s : t.steps) out += indent + step_line(s) + "\n";
  out += indent + "end " + t.end.str() + "\n";
}

Step read_step(Cursor& c) {
  Step s;
  auto dir = [&] {
    if (c.eat("fwd")) return true;
    if (c.eat("bwd")) return false;
    c.fail({"'fwd'", "'bwd'"});
  };
  auto count = [&] {
    long v = c.integer();
    if (v < 0) c.fail({"nonnegative integer"});
    return std::size_t(v);
  };
  if (c.eat("commute")) {
    s.kind = Step::Kind::Commute;
    s.pos = count();
  } else if (c.eat("conjugation")) {
    s.kind = Step::Kind::Conjugation;
    s.forward = dir();
    s.pos = count();
    s.conj_length = int(count());
    s.span = int(count());
  } else if (c.eat("relation")) {
    s.kind = Step::Kind::Relation;
    s.forward = dir();
    s.pos = count();
    s.offset = int(c.integer());
    s.length = int(c.integer());
    s.relation = c.quoted();
  } else {
    c.fail({"'commute'", "'conjugation'", "'relation'"});
  }
  return s;
}

const std::vector<std::string> top_keywords{"title", "config", "provenance", "word", "factorization", "target",
                                            "fibration", "field", "relation", "trace"};

}  // namespace

bool same_document(const Document& a, const Document& b) {
  if (a.kind != b.kind || a.title != b.title || a.config_ref != b.config_ref || a.provenance != b.provenance ||
      a.word != b.word || a.factorization != b.factorization || a.target != b.target ||
      a.fibration != b.fibration || a.fields != b.fields || a.relations.size() != b.relations.size())
    return false;
  if (a.config.has_value() != b.config.has_value()) return false;
  if (a.config && textio::config_body(*a.config) != textio::config_body(*b.config)) return false;
  for (std::size_t i = 0; i < a.relations.size(); ++i)
    if (!same_relation(a.relations[i], b.relations[i])) return false;
  if (a.trace.has_value() != b.trace.has_value()) return false;
  return !a.trace || same_trace(*a.trace, *b.trace);
}

std::string print_document(const Document& d) {
  std::string out = "mcg " + to_string(d.kind) + "\n";
  if (!d.title.empty()) out += "title " + quote(d.title) + "\n";
  if (!d.config_ref.empty())
    out += is_builtin_config_name(d.config_ref) ? "config " + d.config_ref + "\n"
                                                : "config file " + quote(d.config_ref) + "\n";
  if (!d.provenance.empty()) out += "provenance " + quote(d.provenance) + "\n";
  if (d.fibration) {
    auto& f = *d.fibration;
    out += "fibration fiber_genus " + std::to_string(f.fiber_genus) + " base_genus " + std::to_string(f.base_genus) +
           " boundary_power " + std::to_string(f.boundary_power) + " minimal " +
           (f.relatively_minimal ? "yes" : "no") + "\n";
  }
  if (d.word) out += "word " + d.word->str() + "\n";
  if (d.factorization) out += "factorization " + d.factorization->str() + "\n";
  if (d.target) out += "target " + d.target->str() + "\n";
  for (auto& [k, v] : d.fields) out += "field " + k + " " + quote(v) + "\n";
  for (auto& r : d.relations) {
    out += "relation " + quote(r.name) + " " + kind_word(r.kind) + " " + r.source;
    for (auto& a : r.args) out += " " + quote(a);
    out += "\n  lhs " + r.eq.lhs.str() + "\n  rhs " + r.eq.rhs.str() + "\n";
    if (r.proof) {
      out += "  proof\n";
      print_trace(out, *r.proof, "    ");
    }
  }
  if (d.trace) {
    out += "trace\n";
    print_trace(out, *d.trace, "  ");
  }
  if (d.config) out += textio::config_body(*d.config);
  return out;
}

Document parse_document(std::string_view text) {
  Document d;
  textio::ConfigReader cfg;
  bool header = false;
  // the trace under construction and where it goes once closed
  std::optional<DerivationTrace> open;
  bool open_started = false;
  int open_for = -1;  // -1 main trace, else relation index
  enum class Want { Any, Lhs, Rhs } want = Want::Any;
  int line_no = 0;
  std::size_t p = 0;
  int lines = int(std::count(text.begin(), text.end(), '\n')) + (text.empty() || text.back() == '\n' ? 0 : 1);
  Cursor last("", lines + 1, 1);  // where end-of-input errors point

  while (p <= text.size()) {
    auto e = text.find('\n', p);
    if (e == std::string_view::npos) e = text.size();
    auto line = text.substr(p, e - p);
    p = e + 1;
    ++line_no;
    Cursor c(line, line_no, 1);
    if (c.eof() || c.at("#")) continue;

    if (!header) {
      c.expect("mcg");
      auto k = c.ident();
      if (k == "config") d.kind = Document::Kind::Config;
      else if (k == "word") d.kind = Document::Kind::Word;
      else if (k == "factorization") d.kind = Document::Kind::Factorization;
      else if (k == "trace") d.kind = Document::Kind::Trace;
      else if (k == "report") d.kind = Document::Kind::Report;
      else {
        c.i -= k.size();
        c.fail({"'config'", "'word'", "'factorization'", "'trace'", "'report'"});
      }
      c.end();
      header = true;
      continue;
    }

    auto kw_at = c.i;
    auto kw = c.ident();
    auto refuse = [&](std::vector<std::string> exp) {
      c.i = kw_at;
      c.fail(std::move(exp));
    };

    if (want == Want::Lhs && kw != "lhs") refuse({"'lhs'"});
    if (want == Want::Rhs && kw != "rhs") refuse({"'rhs'"});

    if (open) {
      if (!open_started) {
        if (kw != "start") refuse({"'start'"});
        open->start = textio::read_word(c);
        open_started = true;
      } else if (kw == "step") {
        open->steps.push_back(read_step(c));
      } else if (kw == "end") {
        open->end = textio::read_word(c);
        c.end();
        if (open_for < 0) d.trace = std::move(*open);
        else d.relations[open_for].proof = std::make_shared<const DerivationTrace>(std::move(*open));
        open.reset();
        continue;
      } else {
        refuse({"'step'", "'end'"});
      }
      c.end();
      continue;
    }

    if (kw == "title") {
      d.title = c.quoted();
    } else if (kw == "config") {
      if (c.eat("file")) d.config_ref = c.quoted();
      else d.config_ref = c.token();
    } else if (kw == "provenance") {
      d.provenance = c.quoted();
    } else if (kw == "fibration") {
      FibrationInfo f;
      c.expect("fiber_genus");
      f.fiber_genus = int(c.integer());
      c.expect("base_genus");
      f.base_genus = int(c.integer());
      c.expect("boundary_power");
      f.boundary_power = int(c.integer());
      c.expect("minimal");
      if (c.eat("yes")) f.relatively_minimal = true;
      else if (c.eat("no")) f.relatively_minimal = false;
      else c.fail({"'yes'", "'no'"});
      d.fibration = f;
    } else if (kw == "word") {
      d.word = textio::read_word(c);
    } else if (kw == "factorization") {
      d.factorization = textio::read_factorization(c);
    } else if (kw == "target") {
      d.target = textio::read_word(c);
    } else if (kw == "field") {
      auto k = c.ident();
      d.fields.push_back({k, c.quoted()});
    } else if (kw == "relation") {
      Relation r;
      r.name = c.quoted();
      auto k = c.ident();
      if (k == "instance") r.kind = Relation::Kind::Instance;
      else if (k == "assumption") r.kind = Relation::Kind::Assumption;
      else if (k == "derived") r.kind = Relation::Kind::Derived;
      else {
        c.i -= k.size();
        c.fail({"'instance'", "'assumption'", "'derived'"});
      }
      r.source = c.ident();
      while (!c.eof()) r.args.push_back(c.quoted());
      d.relations.push_back(std::move(r));
      want = Want::Lhs;
    } else if (kw == "lhs") {
      if (want != Want::Lhs) refuse(top_keywords);
      d.relations.back().eq.lhs = textio::read_word(c);
      want = Want::Rhs;
    } else if (kw == "rhs") {
      if (want != Want::Rhs) refuse(top_keywords);
      d.relations.back().eq.rhs = textio::read_word(c);
      want = Want::Any;
    } else if (kw == "proof") {
      if (d.relations.empty() || d.relations.back().proof) refuse(top_keywords);
      open.emplace();
      open_started = false;
      open_for = int(d.relations.size()) - 1;
    } else if (kw == "trace") {
      if (d.trace) refuse(top_keywords);
      open.emplace();
      open_started = false;
      open_for = -1;
    } else if (!cfg.line(kw, c)) {
      refuse(top_keywords);
    }
    c.end();
  }
  if (!header) last.fail({"'mcg'"});
  if (want == Want::Lhs) last.fail({"'lhs'"});
  if (want == Want::Rhs) last.fail({"'rhs'"});
  if (open) last.fail({open_started ? "'end'" : "'start'"});
  if (cfg.started()) d.config = cfg.finish(last);
  if (d.kind == Document::Kind::Config && !d.config) last.fail({"config body"});
  return d;
}

SurfaceConfig parse_config(std::string_view text) {
  auto d = parse_document(text);
  if (d.kind != Document::Kind::Config || !d.config) throw SemanticError("not a config document");
  return *d.config;
}

std::string print_config(const SurfaceConfig& cfg) {
  Document d;
  d.kind = Document::Kind::Config;
  d.config = cfg;
  return print_document(d);
}

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

Document read_document(const std::string& path) {
  return parse_document(slurp(path));
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

namespace {

struct NameCheck {
  const SurfaceConfig& cfg;
  std::string where;
  void curve(const CurveExpr& c) {
    if (!cfg.curve(c.base_name())) throw SemanticError("unknown curve '" + c.base_name() + "' in " + where);
    word(c.map());
  }
  void word(const GroupWord& w) {
    for (auto& l : w.letters()) {
      if (l.gen.is_twist()) curve(l.gen.curve);
      else if (!cfg.formal(l.gen.symbol)) throw SemanticError("unknown formal symbol '" + l.gen.symbol + "' in " + where);
    }
  }
  void factor(const Factor& f) {
    switch (f.kind) {
      case Factor::Kind::TwistPower: curve(f.curve); break;
      case Factor::Kind::Commutator:
        word(f.u);
        word(f.v);
        break;
      case Factor::Kind::Conjugated:
        word(f.conj);
        factor(*f.inner);
        break;
    }
  }
};

}  // namespace

void check_names(const Document& d, const SurfaceConfig& cfg) {
  NameCheck n{cfg, "word"};
  if (d.word) n.word(*d.word);
  n.where = "factorization";
  if (d.factorization)
    for (auto& f : d.factorization->factors()) n.factor(f);
  n.where = "target";
  if (d.target) n.word(*d.target);
  for (auto& r : d.relations) {
    n.where = "relation " + r.name;
    n.word(r.eq.lhs);
    n.word(r.eq.rhs);
  }
  n.where = "trace";
  if (d.trace) {
    n.word(d.trace->start);
    n.word(d.trace->end);
  }
}

SurfaceConfig resolve_config(const Document& d, const std::string& base_dir) {
  SurfaceConfig cfg;
  if (d.config) {
    cfg = *d.config;
  } else if (d.config_ref.empty()) {
    throw SemanticError("document names no config");
  } else if (is_builtin_config_name(d.config_ref)) {
    cfg = builtin_config(d.config_ref);
  } else {
    std::filesystem::path p(d.config_ref);
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    cfg = parse_config(slurp(p.string()));
  }
  check_names(d, cfg);
  return cfg;
}

Document document_from(const FactorizationResult& r, const std::string& config_name, std::optional<FibrationInfo> fib) {
  Document d;
  d.kind = Document::Kind::Factorization;
  d.config_ref = config_name;
  d.provenance = r.provenance;
  d.fibration = fib;
  d.factorization = r.factorization;
  d.target = r.target;
  for (auto& [name, rel] : r.relations.all()) d.relations.push_back(rel);
  d.trace = r.trace;
  return d;
}

Document derivation_document(const RelationRegistry& reg, const std::string& name, const std::string& config_name) {
  auto& rel = reg.get(name);
  if (!rel.proof) throw Error("relation " + name + " has no proof");
  Document d;
  d.kind = Document::Kind::Trace;
  d.config_ref = config_name;
  d.provenance = rel.source;
  d.word = rel.proof->start;
  d.target = rel.proof->end;
  auto used = reg.closure({name});
  for (auto& [n, r] : used.all()) d.relations.push_back(r);
  d.trace = *rel.proof;
  return d;
}

Document relation_document(const RelationRegistry& reg, const std::string& name, const std::string& config_name) {
  auto& rel = reg.get(name);
  if (rel.proof) return derivation_document(reg, name, config_name);
  Document d;
  d.kind = Document::Kind::Trace;
  d.config_ref = config_name;
  d.provenance = rel.source;
  d.word = rel.eq.lhs;
  d.target = rel.eq.rhs;
  d.relations.push_back(rel);
  Step s;
  s.relation = name;
  d.trace = DerivationTrace{rel.eq.lhs, {s}, rel.eq.rhs};
  return d;
}

}  // namespace mcg
