#ifndef TENSEPROOF_RULES_HPP_
#define TENSEPROOF_RULES_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tenseproof/derivation.hpp"
#include "tenseproof/syntax.hpp"

namespace tenseproof {

enum class Extra { kFirst, kFinal, kLSer, kRSer, kDens, kLDiscr, kRDiscr, kMtl };

// The base system plus a set of frame extensions. Mtl brings RSer and RDiscr along.
class LogicProfile {
 public:
  LogicProfile() = default;
  explicit LogicProfile(std::set<Extra> extras);

  static LogicProfile kl() { return LogicProfile(); }
  // "kl", "kl+first", "kl+dens+final", "mtl", ...
  static LogicProfile parse(std::string_view text);

  bool has(Extra e) const { return extras_.count(e) > 0; }
  const std::set<Extra>& extras() const { return extras_; }
  std::string name() const;
  bool allows(Rule r) const;

  friend bool operator==(const LogicProfile&, const LogicProfile&) = default;

 private:
  std::set<Extra> extras_;
};

std::string_view extra_name(Extra e);

// Descriptive schema of a rule; the checker implements the same shapes.
struct RuleSchema {
  Rule rule;
  std::string_view name;
  RuleClass cls;
  std::vector<std::string> premises;
  std::string conclusion;
  std::vector<std::string> discharges;  // "premise index: shape"
  std::string side_condition;
  std::optional<RFormula> axiom;        // closed template for axioms
};

RuleSchema rule_schema(Rule r);

// Closed template of a zero-premise axiom rule.
std::optional<RFormula> axiom_template(Rule r);
// The frame extension an axiom needs, if any.
std::optional<Extra> axiom_extra(Rule r);

}  // namespace tenseproof

#endif  // TENSEPROOF_RULES_HPP_
