#ifndef TENSEPROOF_SYNTAX_HPP_
#define TENSEPROOF_SYNTAX_HPP_

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace tenseproof {

// A point name. Labels and relational bound variables live in one namespace.
struct Label {
  std::string name;

  Label() = default;
  explicit Label(std::string n) : name(std::move(n)) {}
  friend auto operator<=>(const Label&, const Label&) = default;
};

enum class FormulaKind {
  kAtom,
  kFalsum,
  kImplies,
  kG,
  kH,
  kX,
  // abbreviations
  kNot,
  kAnd,
  kOr,
  kTop,
  kF,
  kP,
};

// Immutable labeled-formula tree (no labels inside).
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula falsum();
  static Formula top();
  static Formula implies(Formula a, Formula b);
  static Formula g(Formula a);
  static Formula h(Formula a);
  static Formula x(Formula a);
  static Formula neg(Formula a);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula f(Formula a);
  static Formula p(Formula a);

  FormulaKind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  // Unary operand, or left operand of a binary connective.
  const Formula& lhs() const { return node_->args[0]; }
  const Formula& rhs() const { return node_->args[1]; }
  std::size_t arity() const { return node_->args.size(); }

  bool is_derived() const;
  // Atom, falsum or top: no connective to unfold.
  bool is_atomic() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node {
    FormulaKind kind;
    std::string name;
    std::vector<Formula> args;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(FormulaKind k, std::string name, std::vector<Formula> args);

  std::shared_ptr<const Node> node_;
};

enum class RFormulaKind {
  kLess,
  kEq,
  kEmpty,
  kRImplies,
  kForall,
  // abbreviations
  kRNot,
  kRAnd,
  kROr,
  kExists,
  kPrec,
};

// Immutable relational formula tree.
class RFormula {
 public:
  static RFormula less(Label a, Label b);
  static RFormula eq(Label a, Label b);
  static RFormula prec(Label a, Label b);
  static RFormula empty();
  static RFormula implies(RFormula a, RFormula b);
  static RFormula forall(Label var, RFormula body);
  static RFormula exists(Label var, RFormula body);
  static RFormula neg(RFormula a);
  static RFormula conj(RFormula a, RFormula b);
  static RFormula disj(RFormula a, RFormula b);

  RFormulaKind kind() const { return node_->kind; }
  // Endpoints of <, = and the successor relation.
  const Label& left() const { return node_->a; }
  const Label& right() const { return node_->b; }
  // Bound variable of a quantifier.
  const Label& var() const { return node_->a; }
  const RFormula& lhs() const { return node_->args[0]; }
  const RFormula& rhs() const { return node_->args[1]; }
  const RFormula& body() const { return node_->args[0]; }
  std::size_t arity() const { return node_->args.size(); }

  bool is_derived() const;
  // x<y, x=y or the empty formula.
  bool is_atomic() const;
  bool is_binary_relation() const {
    return kind() == RFormulaKind::kLess || kind() == RFormulaKind::kEq ||
           kind() == RFormulaKind::kPrec;
  }
  bool is_quantifier() const {
    return kind() == RFormulaKind::kForall || kind() == RFormulaKind::kExists;
  }

  // Literal structural equality, bound names included.
  friend bool operator==(const RFormula& a, const RFormula& b);

 private:
  struct Node {
    RFormulaKind kind;
    Label a, b;
    std::vector<RFormula> args;
  };
  explicit RFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static RFormula make(RFormulaKind k, Label a, Label b, std::vector<RFormula> args);

  std::shared_ptr<const Node> node_;
};

struct Lwff {
  Label label;
  Formula formula;
  friend bool operator==(const Lwff&, const Lwff&) = default;
};

using Judgment = std::variant<Lwff, RFormula>;

inline bool is_labeled(const Judgment& j) { return std::holds_alternative<Lwff>(j); }
inline const Lwff& as_lwff(const Judgment& j) { return std::get<Lwff>(j); }
inline const RFormula& as_rwff(const Judgment& j) { return std::get<RFormula>(j); }

// ---- expansion, grade, alpha-equivalence

Formula expand(const Formula& f);
RFormula expand(const RFormula& r);
Lwff expand(const Lwff& l);
Judgment expand(const Judgment& j);

// Number of primitive connectives in the core form.
int grade(const Formula& f);
int grade(const RFormula& r);
int grade(const Lwff& l);
int grade(const Judgment& j);

bool alpha_equal(const RFormula& a, const RFormula& b);
bool alpha_equal(const Judgment& a, const Judgment& b);

// Equality modulo abbreviations and bound-variable names.
bool same(const Formula& a, const Formula& b);
bool same(const RFormula& a, const RFormula& b);
bool same(const Lwff& a, const Lwff& b);
bool same(const Judgment& a, const Judgment& b);

// ---- subformulas

bool is_subformula(const Formula& b, const Formula& a);
bool is_subformula(const RFormula& b, const RFormula& a);
// Lwffs: labels ignored.
bool is_subformula(const Lwff& b, const Lwff& a);
// b is a label instance of some subformula of a (first-order sense).
bool is_subformula_instance(const RFormula& b, const RFormula& a);
std::vector<Formula> subformulas(const Formula& f);
std::vector<RFormula> subformulas(const RFormula& r);

// ---- labels

std::set<Label> labels_of(const RFormula& r);  // free only
std::set<Label> labels_of(const Lwff& l);
std::set<Label> labels_of(const Judgment& j);
// Free and bound names alike.
std::set<Label> all_names(const RFormula& r);
std::set<Label> all_names(const Judgment& j);
std::set<std::string> atoms_of(const Formula& f);
std::set<std::string> atoms_of(const Judgment& j);

// Capture-avoiding replacement of free `old_label` by `new_label`.
RFormula substitute_label(const RFormula& r, const Label& new_label, const Label& old_label);
Lwff substitute_label(const Lwff& l, const Label& new_label, const Label& old_label);
Judgment substitute_label(const Judgment& j, const Label& new_label, const Label& old_label);

// If `target` is body[y/var] (up to alpha) for some y, return such a y.
std::optional<Label> match_instance(const RFormula& body, const Label& var, const RFormula& target);

// Reserved-prefix name generator that skips every name it was seeded with.
class NameSupply {
 public:
  explicit NameSupply(std::string prefix = "w") : prefix_(std::move(prefix)) {}
  void reserve(const Label& l) { used_.insert(l.name); }
  void reserve(const std::set<Label>& ls) {
    for (const auto& l : ls) used_.insert(l.name);
  }
  Label fresh();

 private:
  std::string prefix_;
  std::set<std::string> used_;
  unsigned long counter_ = 0;
};

// ---- label-occurrence view used by mon
//
// Occurrences are the label slots of <, = and successor atoms in
// left-to-right order; binder declarations are not occurrences.

int occurrence_count(const Judgment& j);
// Free name at occurrence i, or nullopt when that slot is bound.
std::optional<Label> free_label_at(const Judgment& j, int i);
// Replace the listed occurrences by `to`, renaming binders that would capture it.
Judgment replace_occurrences(const Judgment& j, const std::vector<int>& occ, const Label& to);
// Occurrences where `to` differs from `from` by a free a -> b replacement.
// nullopt when the two are not related that way.
std::optional<std::vector<int>> replaced_occurrences(const Judgment& from, const Judgment& to,
                                                     const Label& a, const Label& b);

// ---- contexts

// Open assumptions, kept without duplicates (modulo `same`).
class ProofContext {
 public:
  const std::vector<Lwff>& gamma() const { return gamma_; }
  const std::vector<RFormula>& delta() const { return delta_; }
  void add(const Judgment& j);
  bool contains(const Judgment& j) const;
  bool subset_of(const ProofContext& other) const;
  bool empty() const { return gamma_.empty() && delta_.empty(); }
  std::size_t size() const { return gamma_.size() + delta_.size(); }
  std::vector<Judgment> judgments() const;
  friend bool operator==(const ProofContext& a, const ProofContext& b) {
    return a.subset_of(b) && b.subset_of(a);
  }

 private:
  std::vector<Lwff> gamma_;
  std::vector<RFormula> delta_;
};

// Free labels of every member of Gamma and Delta.
std::set<Label> labels_of(const ProofContext& c);

}  // namespace tenseproof

#endif  // TENSEPROOF_SYNTAX_HPP_
