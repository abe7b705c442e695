#ifndef TENSEPROOF_CHECKER_HPP_
#define TENSEPROOF_CHECKER_HPP_

#include <string>
#include <vector>

#include "tenseproof/derivation.hpp"
#include "tenseproof/rules.hpp"
#include "tenseproof/syntax.hpp"

namespace tenseproof {

enum class ViolationKind {
  kPatternMismatch,
  kBadDischarge,
  kFreshnessViolation,
  kAxiomNotInProfile,
};

std::string_view violation_name(ViolationKind k);

struct Violation {
  NodePath path;
  ViolationKind kind;
  std::string message;
};

struct CheckReport {
  bool valid = false;
  std::vector<Violation> violations;
  ProofContext open;
  Judgment conclusion = RFormula::empty();
  bool is_theorem = false;
};

CheckReport check(const Derivation& d, const LogicProfile& profile);

// Leaves not discharged on their path to the root.
ProofContext open_assumptions(const Derivation& d);

}  // namespace tenseproof

#endif  // TENSEPROOF_CHECKER_HPP_
