#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mcg/factorgen.hpp"
#include "mcg/factorization.hpp"
#include "mcg/fibration.hpp"
#include "mcg/rewrite.hpp"
#include "mcg/surface.hpp"

namespace mcg {

class ParseError : public Error {
 public:
  ParseError(int line, int col, std::vector<std::string> expected, const std::string& got);
  int line, col;
  std::vector<std::string> expected;
};

// Names that parse fine but do not resolve in the config.
class SemanticError : public Error {
 public:
  using Error::Error;
};

// Grammar, juxtaposition meaning product and "1" the empty word:
//   word   := "1" | letter+
//   letter := ("T(" curve ")" | "F(" ident ")") ["^" int]
//   curve  := ident | "[" word "]" ident
//   factor := "T(" curve ")" ["^" int] | "C[" word ";" word "]" | "@" word "{" factor "}"
GroupWord parse_word(std::string_view text);
Factorization parse_factorization(std::string_view text);

struct FibrationInfo {
  int fiber_genus = 0;
  int base_genus = 0;
  int boundary_power = 0;
  bool relatively_minimal = true;
  bool operator==(const FibrationInfo&) const = default;
};

struct Document {
  enum class Kind { Config, Word, Factorization, Trace, Report };
  Kind kind = Kind::Word;
  std::string title;
  // builtin name, or a .cfg path relative to the document
  std::string config_ref;
  std::optional<SurfaceConfig> config;  // Config documents carry the body
  std::string provenance;
  std::optional<GroupWord> word;
  std::optional<Factorization> factorization;
  std::optional<GroupWord> target;
  std::vector<Relation> relations;
  std::optional<DerivationTrace> trace;
  std::optional<FibrationInfo> fibration;
  std::vector<std::pair<std::string, std::string>> fields;  // report lines
};

bool same_document(const Document& a, const Document& b);
std::string to_string(Document::Kind k);

Document parse_document(std::string_view text);
std::string print_document(const Document& d);
SurfaceConfig parse_config(std::string_view text);
std::string print_config(const SurfaceConfig& cfg);

Document read_document(const std::string& path);
void write_file(const std::string& path, const std::string& text);
// Resolves config_ref (relative to base_dir) or the embedded body, then
// checks every curve and formal name the document uses.
SurfaceConfig resolve_config(const Document& d, const std::string& base_dir = ".");
void check_names(const Document& d, const SurfaceConfig& cfg);

// A generated factorization as a document (config by builtin name).
Document document_from(const FactorizationResult& r, const std::string& config_name,
                       std::optional<FibrationInfo> fib = std::nullopt);
// The derived relation `name` with its proof and every relation it rests on.
Document derivation_document(const RelationRegistry& reg, const std::string& name, const std::string& config_name);
// Any relation: derived ones as above, others as a single whole-side step.
Document relation_document(const RelationRegistry& reg, const std::string& name, const std::string& config_name);

nlohmann::json to_json(const Document& d);
nlohmann::json to_json(const DerivationTrace& t);

struct VerifyOutcome {
  bool ok = false;
  std::string failure;
  std::vector<std::string> notes;
};

// backend: "trace", "h1" or "pi1". Instances are rechecked against the
// config, derived relations against their proofs; assumptions are listed.
VerifyOutcome verify_document(const Document& d, const SurfaceConfig& cfg, const std::string& backend);

// Needs a fibration line and a factorization.
FibrationSpec fibration_spec(const Document& d);
Document invariants_report(const Document& d);

// The mcgcalc command line; returns the exit status (0 ok, 1 failed
// verification, 2 usage or parse error).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcg
