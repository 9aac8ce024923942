#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mcg/surface.hpp"
#include "mcg/word.hpp"

namespace mcg {

class MatchError : public Error {
 public:
  using Error::Error;
};

// Which generators commute: twists about disjoint curves, plus any pair a
// config declares disjoint. A generator never commutes with itself here,
// so x and x^-1 stay ordered.
class CommutationContext {
 public:
  explicit CommutationContext(const SurfaceConfig& cfg) : cfg_(&cfg) {}
  const SurfaceConfig& config() const { return *cfg_; }
  bool independent(const Generator& a, const Generator& b) const;
  void require_known(const Generator& g) const;

 private:
  const SurfaceConfig* cfg_;
  mutable std::map<std::pair<std::string, std::string>, bool> cache_;
};

// Cancels x ... x^-1 whenever everything in between commutes with x.
GroupWord raag_reduce(const std::vector<Letter>& units, const CommutationContext& ctx);
GroupWord raag_reduce(const GroupWord& w, const CommutationContext& ctx);
GroupWord foata_normal_form(const GroupWord& w, const CommutationContext& ctx);
bool equal_mod_commutation(const GroupWord& a, const GroupWord& b, const CommutationContext& ctx);

struct DerivationTrace;

struct Relation {
  enum class Kind { Instance, Assumption, Derived };
  std::string name;
  Equation eq;
  Kind kind = Kind::Instance;
  std::string source;             // lantern, chain, braid, genus1, witness, lemma
  std::vector<std::string> args;  // instance data, e.g. the curves involved
  std::shared_ptr<const DerivationTrace> proof;
};

class RelationRegistry {
 public:
  void add(Relation r);
  const Relation* find(const std::string& name) const;
  const Relation& get(const std::string& name) const;
  const std::map<std::string, Relation>& all() const { return rels_; }
  void merge(const RelationRegistry& o);
  // Restricts to the relations reachable from the given names (through proofs).
  RelationRegistry closure(const std::set<std::string>& names) const;

 private:
  std::map<std::string, Relation> rels_;
};

struct Step {
  enum class Kind { Commute, Conjugation, Relation };
  Kind kind = Kind::Relation;
  std::size_t pos = 0;  // in unit letters
  bool forward = true;
  std::string relation;
  int offset = 0;
  int length = -1;  // -1: the whole side
  int conj_length = 0;
  int span = 0;
  bool operator==(const Step&) const = default;
};

struct DerivationTrace {
  GroupWord start;
  std::vector<Step> steps;
  GroupWord end;
};

GroupWord apply_step(const GroupWord& w, const Step& s, const RelationRegistry& reg, const CommutationContext& ctx);
// True when reduction after the step cancels nothing, so the replacement
// sits intact in the result. Only such steps have a one-step inverse.
bool step_is_local(const GroupWord& w, const Step& s, const RelationRegistry& reg, const CommutationContext& ctx);

struct TraceReport {
  bool ok = false;
  int failed_step = -1;  // -1: replay fine, final word mismatch (if !ok)
  std::string message;
  bool syntactic = false;  // reached end letter for letter
  GroupWord reached;
};

TraceReport check_trace(const DerivationTrace& t, const RelationRegistry& reg, const CommutationContext& ctx);
// Also checks every derived relation used, recursively.
TraceReport check_relation(const std::string& name, const RelationRegistry& reg, const CommutationContext& ctx);

// Adjacent swaps turning one reduced word into another equivalent one.
std::vector<std::size_t> commutation_swaps(const GroupWord& from, const GroupWord& to, const CommutationContext& ctx);

// The same steps walked backwards with flipped directions; positions and
// segments are relocated when a step's cancellations hide its pattern.
// Throws when some step is not local (see step_is_local).
DerivationTrace reverse_trace(const DerivationTrace& t, const RelationRegistry& reg, const CommutationContext& ctx);

// Records steps while rewriting; used by the generators.
class TraceBuilder {
 public:
  TraceBuilder(GroupWord start, const RelationRegistry& reg, const CommutationContext& ctx);
  const GroupWord& word() const { return word_; }
  const RelationRegistry& registry() const { return reg_; }
  const CommutationContext& context() const { return ctx_; }
  void step(const Step& s);
  void relation(const std::string& name, bool forward, std::size_t pos, int offset = 0, int length = -1);
  // First position at which the relation segment matches; false if none.
  bool relation_anywhere(const std::string& name, bool forward, int offset = 0, int length = -1);
  void commute(std::size_t pos);
  // Applies the relation in whichever orientation and rotation starts with
  // `pattern`, at the first position where it matches.
  bool replace(const std::string& name, const GroupWord& pattern);
  // Commute steps reordering the word into `target`, which must be equal to
  // it modulo commutation.
  void commute_to(const GroupWord& target);
  // Replaces every f u f^-1 with f a single formal letter and u twists by
  // twists about image curves, then rewrites each image curve with a
  // registered witness relation. Returns the number of steps added.
  int resolve_conjugations();
  int rewrite_images();
  DerivationTrace finish(const GroupWord& end) const;
  const std::vector<Step>& steps() const { return steps_; }

 private:
  GroupWord start_, word_;
  std::vector<Step> steps_;
  const RelationRegistry& reg_;
  const CommutationContext& ctx_;
};

// Relations available on a config: recorded lanterns, chains, braid pairs,
// the genus-1 relation and the witness assumptions of formal symbols.
RelationRegistry registry_for(const SurfaceConfig& cfg);
std::string lantern_name(const LanternRecord& l);
std::string chain_name(const ChainRecord& c);
std::string braid_name(const std::string& a, const std::string& b);
std::string witness_name(const std::string& f, const std::string& a, bool inverse = false);
// Name of the relation rewriting t_{g(a)}; single formal letters use witness_name.
std::string image_witness_name(const GroupWord& g, const std::string& a);

struct Derivation {
  Equation eq;
  DerivationTrace trace;
};

// t_delta^{n-2} t_a1..t_an = t_x1..t_xn on the n-holed disk; the trace runs
// from the right-hand side to the left.
Derivation derive_generalized_lantern(int n);
Relation generalized_lantern_relation(int n);

}  // namespace mcg
