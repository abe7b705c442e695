#ifndef TENSEPROOF_EXPAND_HPP_
#define TENSEPROOF_EXPAND_HPP_

#include <stdexcept>

#include "tenseproof/derivation.hpp"

namespace tenseproof {

class ExpansionUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Replace every derived-rule node by a tree of core and axiom rules with the
// same conclusion. Open assumptions are preserved exactly.
Derivation expand_derived(const Derivation& d);

bool has_derived_rules(const Derivation& d);

}  // namespace tenseproof

#endif  // TENSEPROOF_EXPAND_HPP_
