#ifndef TENSEPROOF_NORMALIZER_HPP_
#define TENSEPROOF_NORMALIZER_HPP_

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "tenseproof/derivation.hpp"

namespace tenseproof {

enum class RedexKind {
  kMaximalFormula,
  kMonDisorder,
  kRedundantFalsum,
  kRedundantMon,
  kUnrestrictedRaa,
  kUnrestrictedMon,
  kDerivedRule,  // a derived-rule node that was never expanded
};

std::string_view redex_kind_name(RedexKind k);

struct Redex {
  RedexKind kind;
  NodePath site;
  // Rule pair for maximal formulas ("GI/GE"), falsum pair ("uf2;uf1", upper first), or a note.
  std::string detail;
  int grade = 0;  // grade of the maximal formula

  std::string describe() const;
};

class RedexStale : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonTermination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// RAA and mon conclusions made atomic; mon on x:false becomes a plain RAA.
Derivation restrict(const Derivation& d);

// Every redex in post-order.
std::vector<Redex> find_redexes(const Derivation& d);

Derivation reduce_step(const Derivation& d, const Redex& r);

struct TraceRecord {
  std::size_t step;
  std::string kind;
  std::string site;
  std::size_t nodes;  // size after the step
  nlohmann::json to_json() const;
};

struct NormalizeOptions {
  std::size_t step_bound;
  std::function<void(const TraceRecord&)> trace;
  NormalizeOptions();
};

// Default bound 10^6, or TENSEPROOF_STEP_BOUND when set.
std::size_t default_step_bound();

// The redex normalize() would contract next, if any.
std::optional<Redex> choose_redex(const std::vector<Redex>& rs);

Derivation normalize(const Derivation& d, const NormalizeOptions& opts = NormalizeOptions());

struct NormalReport {
  bool normal;
  std::vector<Redex> diagnosis;
};

NormalReport diagnose_normal(const Derivation& d);
bool is_normal(const Derivation& d);

}  // namespace tenseproof

#endif  // TENSEPROOF_NORMALIZER_HPP_
