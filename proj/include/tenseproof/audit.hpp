#ifndef TENSEPROOF_AUDIT_HPP_
#define TENSEPROOF_AUDIT_HPP_

#include <string>
#include <vector>

#include "tenseproof/derivation.hpp"

namespace tenseproof {

struct AuditEntry {
  NodePath path;
  std::string formula;
  // "1(i)".."1(v)", "2(i)".."2(vi)", or empty when nothing applies.
  std::string clause;
};

struct AuditReport {
  bool ok = true;
  std::vector<AuditEntry> entries;  // one per node, post-order
  std::vector<NodePath> violations;
};

// Justifies every formula occurrence by a subformula clause. Relational
// membership is up to label instances, since axiom and assumption bodies are
// only ever used through their instances.
AuditReport audit_subformula(const Derivation& d);

}  // namespace tenseproof

#endif  // TENSEPROOF_AUDIT_HPP_
