#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mcg/textio.hpp"

namespace mcg {

namespace {

struct Io {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  std::string output;

  void emit(const Document& d) {
    std::string text = json ? to_json(d).dump(2) + "\n" : print_document(d);
    if (output.empty()) out << text;
    else write_file(output, text);
  }
};

Document load(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return parse_document(ss.str());
  }
  if (!std::filesystem::exists(path)) throw SemanticError("no such file " + path);
  return read_document(path);
}

std::string dir_of(const std::string& path) {
  if (path == "-") return ".";
  auto p = std::filesystem::path(path).parent_path();
  return p.empty() ? "." : p.string();
}

SectionedFibration sectioned(const Document& d) { return with_section(fibration_spec(d)); }

int report(Io& io, const Document& r) {
  if (io.json || !io.output.empty()) {
    io.emit(r);
    return 0;
  }
  std::size_t w = 0;
  for (auto& [k, v] : r.fields) w = std::max(w, k.size());
  for (auto& [k, v] : r.fields) io.out << k << std::string(w + 2 - k.size(), ' ') << v << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mapping class group factorization calculator", "mcgcalc"};
  app.set_help_flag("--help", "print help");
  app.fallthrough();
  Io io{out, err, false, {}};
  app.add_flag("--json", io.json, "structured output");
  app.add_option("-o,--output", io.output, "write the document to a file");
  app.require_subcommand(1);

  auto gen = app.add_subcommand("gen", "generate a factorization with its trace");
  gen->require_subcommand(1);
  int n = 0, genus = 2, k = 0, h = 1, l = 0, m = 1, lef_l = 2, g = 2;
  auto cl = gen->add_subcommand("cl-factorization", "boundary twist power as commutators");
  cl->add_option("--n", n, "exponent")->required();
  cl->add_option("--genus", genus, "fiber genus")->check(CLI::Range(2, 40));
  auto range = gen->add_subcommand("range", "t_delta^k as exactly h commutators");
  range->add_option("--k", k, "exponent")->required();
  range->add_option("--h", h, "base genus")->required();
  range->add_option("--genus", genus, "fiber genus")->check(CLI::Range(2, 40));
  auto sections = gen->add_subcommand("sections", "disjoint sections of every square");
  sections->add_option("--h", h, "base genus")->required()->check(CLI::Range(1, 6));
  sections->add_option("--l", l, "extra handles")->required()->check(CLI::Range(0, 20));
  auto lef = gen->add_subcommand("lefschetz", "Lefschetz fibration with a maximal section");
  lef->add_option("--g", g, "fiber genus")->required()->check(CLI::Range(2, 40));
  lef->add_option("--h", h, "base genus")->required()->check(CLI::Range(1, 40));
  lef->add_option("--m", m, "copies of the twist block")->required()->check(CLI::Range(0, 1000));
  lef->add_option("--l", lef_l, "chain size for base genus 1");

  auto derive = app.add_subcommand("derive", "derive a relation");
  derive->require_subcommand(1);
  auto lantern = derive->add_subcommand("lantern-n", "lantern relation on the n-holed disk");
  lantern->add_option("--n", n, "holes")->required()->check(CLI::Range(3, 40));
  std::string cfg_name, rel_name;
  auto relation = derive->add_subcommand("relation", "a recorded relation as a one-step document; lists names without --name");
  relation->add_option("--config", cfg_name, "builtin config")->required();
  relation->add_option("--name", rel_name, "relation name");

  std::string show_name;
  auto show = app.add_subcommand("config", "print a builtin config as a .cfg document");
  show->add_option("name", show_name, "builtin config name")->required();

  std::string backend = "trace";
  std::vector<std::string> files;
  auto verify = app.add_subcommand("verify", "check documents");
  verify->add_option("--backend", backend, "trace, h1 or pi1")->check(CLI::IsMember({"trace", "h1", "pi1"}));
  verify->add_option("files", files, "documents")->required();

  std::string file = "-";
  auto inv = app.add_subcommand("invariants", "section square, Euler characteristic, census and bounds");
  inv->add_option("file", file, "document, - for standard input");

  auto sum = app.add_subcommand("sum", "fiber or section sum of two fibrations");
  sum->require_subcommand(1);
  std::string f1, f2;
  auto fiber = sum->add_subcommand("fiber", "fiber sum");
  auto section = sum->add_subcommand("section", "section sum");
  for (auto s : {fiber, section}) {
    s->add_option("first", f1)->required();
    s->add_option("second", f2)->required();
  }

  std::vector<const char*> argv{"mcgcalc"};
  for (auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*gen) {
      FactorizationResult r;
      std::optional<FibrationInfo> fib;
      if (*cl) {
        r = boundary_twist_commutators(n, genus);
        fib = FibrationInfo{genus, r.census.commutators, n, true};
      } else if (*range) {
        r = range_commutators(k, h, genus);
        fib = FibrationInfo{genus, h, k, true};
      } else if (*sections) {
        r = disjoint_sections_word(h, l);
      } else {
        r = lefschetz_word(g, h, m, lef_l);
        fib = FibrationInfo{g, h, 2 - 2 * h, true};
      }
      io.emit(document_from(r, r.config.name, fib));
      return 0;
    }
    if (*show) {
      auto cfg = builtin_config(show_name);
      Document d;
      d.kind = Document::Kind::Config;
      d.config = cfg;
      io.emit(d);
      return 0;
    }
    if (*relation) {
      auto cfg = builtin_config(cfg_name);
      auto reg = registry_for(cfg);
      if (rel_name.empty()) {
        for (auto& [name, r] : reg.all()) out << name << "\n";
        return 0;
      }
      if (!reg.find(rel_name)) throw SemanticError("no relation " + rel_name + " on " + cfg_name);
      io.emit(relation_document(reg, rel_name, cfg_name));
      return 0;
    }
    if (*derive) {
      auto cfg = holed_disk_config(n);
      auto reg = registry_for(cfg);
      auto rel = generalized_lantern_relation(n);
      reg.add(rel);
      io.emit(derivation_document(reg, rel.name, cfg.name));
      return 0;
    }
    if (*verify) {
      bool all = true;
      nlohmann::json records = nlohmann::json::array();
      for (auto& f : files) {
        VerifyOutcome v;
        try {
          auto d = load(f);
          auto cfg = resolve_config(d, dir_of(f));
          v = verify_document(d, cfg, backend);
          if (v.ok && d.factorization) {
            auto c = d.factorization->census();
            v.notes.push_back(std::to_string(c.commutators) + " commutators, " + std::to_string(c.positive_twists) +
                              " positive twists");
          }
        } catch (const ParseError& e) {
          err << f << ": " << e.what() << "\n";
          return 2;
        } catch (const SemanticError& e) {
          err << f << ": " << e.what() << "\n";
          return 2;
        } catch (const Error& e) {
          v.ok = false;
          v.failure = e.what();
        }
        all = all && v.ok;
        if (io.json) {
          records.push_back({{"file", f}, {"backend", backend}, {"ok", v.ok}, {"failure", v.failure}, {"notes", v.notes}});
          continue;
        }
        if (v.ok) {
          out << f << ": ok (" << backend << ")";
          for (auto& s : v.notes) out << "; " << s;
          out << "\n";
        } else {
          out << f << ": FAILED (" << backend << "): " << v.failure << "\n";
        }
      }
      if (io.json) out << records.dump(2) << "\n";
      return all ? 0 : 1;
    }
    if (*inv) {
      auto d = load(file);
      if (!d.config_ref.empty() || d.config) resolve_config(d, dir_of(file));
      auto r = invariants_report(d);
      report(io, r);
      for (auto& [key, v] : r.fields)
        if (key == "problems" && v != "none") return 1;
      return 0;
    }
    if (*sum) {
      auto a = load(f1), b = load(f2);
      Document d;
      d.kind = Document::Kind::Factorization;
      if (*fiber) {
        auto s = fiber_sum(sectioned(a), sectioned(b));
        if (a.config_ref == b.config_ref) d.config_ref = a.config_ref;
        d.provenance = "fiber-sum";
        d.factorization = s.spec.monodromy;
        // the boundary twist, read off whichever target names it
        std::optional<Generator> delta;
        for (auto* t : {&a.target, &b.target})
          if (*t && !(*t)->empty()) {
            auto gen = (*t)->letters()[0].gen;
            if (delta && !(*delta == gen)) throw SemanticError("the two targets twist different curves");
            delta = gen;
          }
        if (delta) d.target = GroupWord({{*delta, s.spec.boundary_power}});
        else if (s.spec.boundary_power == 0) d.target = GroupWord();
        d.fibration = FibrationInfo{s.spec.fiber_genus, s.spec.base_genus, s.spec.boundary_power,
                                    s.spec.relatively_minimal};
      } else {
        auto s = section_sum(sectioned(a), sectioned(b));
        d.provenance = "section-sum";
        d.factorization = s.monodromy;
        d.fibration = FibrationInfo{s.fiber_genus, s.base_genus, s.boundary_power, s.relatively_minimal};
      }
      io.emit(d);
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const SemanticError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace mcg
