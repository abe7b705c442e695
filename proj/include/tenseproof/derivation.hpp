#ifndef TENSEPROOF_DERIVATION_HPP_
#define TENSEPROOF_DERIVATION_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tenseproof/syntax.hpp"

namespace tenseproof {

enum class Rule {
  kAssume,
  // labeled core
  kRaaBot,
  kImpI,
  kImpE,
  kGI,
  kGE,
  kHI,
  kHE,
  // relational core
  kRaaEmpty,
  kRImpI,
  kRImpE,
  kForallI,
  kForallE,
  kReflEq,
  kIrreflLt,
  kTransLt,
  kConn,
  // shared
  kMon,
  kUf1,
  kUf2,
  // frame extensions
  kFirst,
  kFinal,
  kLSer,
  kRSer,
  kDens,
  kLDiscr,
  kRDiscr,
  // next-time
  kXI,
  kXE,
  // derived
  kFI,
  kFE,
  kPI,
  kPE,
  kNotI,
  kNotE,
  kAndI,
  kAndE1,
  kAndE2,
  kOrI1,
  kOrI2,
  kOrE,
  kRNotI,
  kRNotE,
  kRAndI,
  kRAndE1,
  kRAndE2,
  kROrI1,
  kROrI2,
  kROrE,
  kExI,
  kExE,
};

enum class RuleClass { kStructural, kCore, kAxiom, kDerived };

struct RuleInfo {
  Rule rule;
  std::string_view name;  // JSON spelling
  RuleClass cls;
  int arity;             // number of premises
  bool needs_fresh;      // carries an eigenvariable
  int major;             // index of the major premise, -1 if none
};

const RuleInfo& rule_info(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);
const std::vector<RuleInfo>& all_rules();

bool is_intro(Rule r);
bool is_elim(Rule r);
bool is_falsum_rule(Rule r);
// Whether discharges of `r` can reach into premise `i`.
bool discharges_into(Rule r, std::size_t i);

using NodePath = std::vector<std::size_t>;
std::string path_string(const NodePath& p);

// Immutable proof tree. Sharing is structural; edits return new trees.
class Derivation {
 public:
  struct Node {
    Judgment conclusion = RFormula::empty();
    Rule rule = Rule::kAssume;
    std::optional<int> marker;  // assumption leaves only
    std::vector<Derivation> premises;
    std::vector<int> discharges;
    std::optional<Label> fresh;
  };

  Derivation() = default;
  explicit Derivation(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

  static Derivation assume(Judgment j, std::optional<int> marker = std::nullopt);
  static Derivation make(Rule r, Judgment conclusion, std::vector<Derivation> premises,
                         std::vector<int> discharges = {},
                         std::optional<Label> fresh = std::nullopt);

  bool valid_handle() const { return node_ != nullptr; }
  const Node& node() const { return *node_; }
  const Judgment& conclusion() const { return node_->conclusion; }
  Rule rule() const { return node_->rule; }
  const std::vector<Derivation>& premises() const { return node_->premises; }
  const Derivation& premise(std::size_t i) const { return node_->premises.at(i); }
  bool is_leaf() const { return node_->premises.empty(); }

  std::size_t size() const;
  const Derivation& at(const NodePath& p) const;
  Derivation replace_at(const NodePath& p, const Derivation& sub) const;
  Derivation with_conclusion(Judgment j) const;
  Derivation with_premises(std::vector<Derivation> ps) const;

  bool same_handle(const Derivation& o) const { return node_ == o.node_; }

 private:
  std::shared_ptr<const Node> node_;
};

// Structural equality on judgments (literal), rules, markers and fields.
bool operator==(const Derivation& a, const Derivation& b);

// Post-order list of node paths (leftmost-innermost first).
std::vector<NodePath> postorder_paths(const Derivation& d);

int max_marker(const Derivation& d);
std::set<Label> names_in(const Derivation& d);
// Free labels of all conclusions in the tree.
std::set<Label> labels_of(const Derivation& d);
std::set<std::string> atoms_in(const Derivation& d);

// Replace free label `old_label` by `new_label` in every judgment and eigenvariable field.
Derivation substitute_label(const Derivation& d, const Label& new_label, const Label& old_label);

// Rename every eigenvariable and every internally discharged marker to fresh ones.
// `names` and `next_marker` are advanced.
Derivation freshen_bound(const Derivation& d, NameSupply& names, int& next_marker);

// Equality after canonical renaming of markers and eigenvariables.
bool equal_up_to_renaming(const Derivation& a, const Derivation& b);

}  // namespace tenseproof

#endif  // TENSEPROOF_DERIVATION_HPP_
