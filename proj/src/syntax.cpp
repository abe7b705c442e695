#include "tenseproof/syntax.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tenseproof {

// ---------------------------------------------------------------- Formula

Formula Formula::make(FormulaKind k, std::string name, std::vector<Formula> args) {
  return Formula(std::make_shared<const Node>(Node{k, std::move(name), std::move(args)}));
}

Formula Formula::atom(std::string name) { return make(FormulaKind::kAtom, std::move(name), {}); }
Formula Formula::falsum() { return make(FormulaKind::kFalsum, "", {}); }
Formula Formula::top() { return make(FormulaKind::kTop, "", {}); }
Formula Formula::implies(Formula a, Formula b) {
  return make(FormulaKind::kImplies, "", {std::move(a), std::move(b)});
}
Formula Formula::g(Formula a) { return make(FormulaKind::kG, "", {std::move(a)}); }
Formula Formula::h(Formula a) { return make(FormulaKind::kH, "", {std::move(a)}); }
Formula Formula::x(Formula a) { return make(FormulaKind::kX, "", {std::move(a)}); }
Formula Formula::neg(Formula a) { return make(FormulaKind::kNot, "", {std::move(a)}); }
Formula Formula::conj(Formula a, Formula b) {
  return make(FormulaKind::kAnd, "", {std::move(a), std::move(b)});
}
Formula Formula::disj(Formula a, Formula b) {
  return make(FormulaKind::kOr, "", {std::move(a), std::move(b)});
}
Formula Formula::f(Formula a) { return make(FormulaKind::kF, "", {std::move(a)}); }
Formula Formula::p(Formula a) { return make(FormulaKind::kP, "", {std::move(a)}); }

bool Formula::is_derived() const {
  switch (kind()) {
    case FormulaKind::kNot:
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
    case FormulaKind::kTop:
    case FormulaKind::kF:
    case FormulaKind::kP:
      return true;
    default:
      return false;
  }
}

bool Formula::is_atomic() const {
  return kind() == FormulaKind::kAtom || kind() == FormulaKind::kFalsum ||
         kind() == FormulaKind::kTop;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name() || a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!(a.node_->args[i] == b.node_->args[i])) return false;
  }
  return true;
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (a.name() != b.name()) return a.name() < b.name();
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a.node_->args[i] < b.node_->args[i]) return true;
    if (b.node_->args[i] < a.node_->args[i]) return false;
  }
  return false;
}

// --------------------------------------------------------------- RFormula

RFormula RFormula::make(RFormulaKind k, Label a, Label b, std::vector<RFormula> args) {
  return RFormula(
      std::make_shared<const Node>(Node{k, std::move(a), std::move(b), std::move(args)}));
}

RFormula RFormula::less(Label a, Label b) {
  return make(RFormulaKind::kLess, std::move(a), std::move(b), {});
}
RFormula RFormula::eq(Label a, Label b) {
  return make(RFormulaKind::kEq, std::move(a), std::move(b), {});
}
RFormula RFormula::prec(Label a, Label b) {
  return make(RFormulaKind::kPrec, std::move(a), std::move(b), {});
}
RFormula RFormula::empty() { return make(RFormulaKind::kEmpty, {}, {}, {}); }
RFormula RFormula::implies(RFormula a, RFormula b) {
  return make(RFormulaKind::kRImplies, {}, {}, {std::move(a), std::move(b)});
}
RFormula RFormula::forall(Label var, RFormula body) {
  return make(RFormulaKind::kForall, std::move(var), {}, {std::move(body)});
}
RFormula RFormula::exists(Label var, RFormula body) {
  return make(RFormulaKind::kExists, std::move(var), {}, {std::move(body)});
}
RFormula RFormula::neg(RFormula a) { return make(RFormulaKind::kRNot, {}, {}, {std::move(a)}); }
RFormula RFormula::conj(RFormula a, RFormula b) {
  return make(RFormulaKind::kRAnd, {}, {}, {std::move(a), std::move(b)});
}
RFormula RFormula::disj(RFormula a, RFormula b) {
  return make(RFormulaKind::kROr, {}, {}, {std::move(a), std::move(b)});
}

bool RFormula::is_derived() const {
  switch (kind()) {
    case RFormulaKind::kRNot:
    case RFormulaKind::kRAnd:
    case RFormulaKind::kROr:
    case RFormulaKind::kExists:
    case RFormulaKind::kPrec:
      return true;
    default:
      return false;
  }
}

bool RFormula::is_atomic() const {
  return kind() == RFormulaKind::kLess || kind() == RFormulaKind::kEq ||
         kind() == RFormulaKind::kEmpty;
}

bool operator==(const RFormula& a, const RFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.arity() != b.arity()) return false;
  if (!(a.node_->a == b.node_->a) || !(a.node_->b == b.node_->b)) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!(a.node_->args[i] == b.node_->args[i])) return false;
  }
  return true;
}

// -------------------------------------------------------------- expansion

Formula expand(const Formula& f) {
  using K = FormulaKind;
  const Formula bot = Formula::falsum();
  switch (f.kind()) {
    case K::kAtom:
    case K::kFalsum:
      return f;
    case K::kImplies:
      return Formula::implies(expand(f.lhs()), expand(f.rhs()));
    case K::kG:
      return Formula::g(expand(f.lhs()));
    case K::kH:
      return Formula::h(expand(f.lhs()));
    case K::kX:
      return Formula::x(expand(f.lhs()));
    case K::kNot:
      return Formula::implies(expand(f.lhs()), bot);
    case K::kTop:
      return Formula::implies(bot, bot);
    case K::kAnd:
      return Formula::implies(
          Formula::implies(expand(f.lhs()), Formula::implies(expand(f.rhs()), bot)), bot);
    case K::kOr:
      return Formula::implies(Formula::implies(expand(f.lhs()), bot), expand(f.rhs()));
    case K::kF:
      return Formula::implies(Formula::g(Formula::implies(expand(f.lhs()), bot)), bot);
    case K::kP:
      return Formula::implies(Formula::h(Formula::implies(expand(f.lhs()), bot)), bot);
  }
  throw std::logic_error("expand: bad formula kind");
}

namespace {

RFormula core_neg(RFormula a) { return RFormula::implies(std::move(a), RFormula::empty()); }

RFormula core_and(RFormula a, RFormula b) {
  return core_neg(RFormula::implies(std::move(a), core_neg(std::move(b))));
}

RFormula core_or(RFormula a, RFormula b) {
  return RFormula::implies(core_neg(std::move(a)), std::move(b));
}

}  // namespace

RFormula expand(const RFormula& r) {
  using K = RFormulaKind;
  switch (r.kind()) {
    case K::kLess:
    case K::kEq:
    case K::kEmpty:
      return r;
    case K::kRImplies:
      return RFormula::implies(expand(r.lhs()), expand(r.rhs()));
    case K::kForall:
      return RFormula::forall(r.var(), expand(r.body()));
    case K::kRNot:
      return core_neg(expand(r.lhs()));
    case K::kRAnd:
      return core_and(expand(r.lhs()), expand(r.rhs()));
    case K::kROr:
      return core_or(expand(r.lhs()), expand(r.rhs()));
    case K::kExists:
      return core_neg(RFormula::forall(r.var(), core_neg(expand(r.body()))));
    case K::kPrec: {
      // s <. t  is  s<t /\ forall z. !(s<z) \/ !(z<t)
      NameSupply names("z");
      names.reserve(r.left());
      names.reserve(r.right());
      Label z = names.fresh();
      RFormula between = core_or(core_neg(RFormula::less(r.left(), z)),
                                 core_neg(RFormula::less(z, r.right())));
      return core_and(RFormula::less(r.left(), r.right()), RFormula::forall(z, between));
    }
  }
  throw std::logic_error("expand: bad relational kind");
}

Lwff expand(const Lwff& l) { return Lwff{l.label, expand(l.formula)}; }

Judgment expand(const Judgment& j) {
  if (is_labeled(j)) return expand(as_lwff(j));
  return expand(as_rwff(j));
}

// ------------------------------------------------------------------ grade

namespace {

int core_grade(const Formula& f) {
  int n = f.kind() == FormulaKind::kAtom || f.kind() == FormulaKind::kFalsum ? 0 : 1;
  for (std::size_t i = 0; i < f.arity(); ++i) n += core_grade(i == 0 ? f.lhs() : f.rhs());
  return n;
}

int core_grade(const RFormula& r) {
  if (r.is_atomic()) return 0;
  int n = 1;
  for (std::size_t i = 0; i < r.arity(); ++i) n += core_grade(i == 0 ? r.lhs() : r.rhs());
  return n;
}

}  // namespace

int grade(const Formula& f) { return core_grade(expand(f)); }
int grade(const RFormula& r) { return core_grade(expand(r)); }
int grade(const Lwff& l) { return grade(l.formula); }
int grade(const Judgment& j) {
  return is_labeled(j) ? grade(as_lwff(j)) : grade(as_rwff(j));
}

// ----------------------------------------------------------- alpha / same

namespace {

using Env = std::vector<std::string>;

// Binder depth of `name`, counted from the outside; -1 when free.
int resolve(const Env& env, const std::string& name) {
  for (int i = static_cast<int>(env.size()) - 1; i >= 0; --i) {
    if (env[i] == name) return i;
  }
  return -1;
}

bool same_slot(const Env& ea, const std::string& a, const Env& eb, const std::string& b) {
  int ia = resolve(ea, a);
  int ib = resolve(eb, b);
  if (ia >= 0 || ib >= 0) return ia == ib;
  return a == b;
}

bool alpha_rec(const RFormula& a, const RFormula& b, Env& ea, Env& eb) {
  if (a.kind() != b.kind()) return false;
  if (a.is_binary_relation()) {
    return same_slot(ea, a.left().name, eb, b.left().name) &&
           same_slot(ea, a.right().name, eb, b.right().name);
  }
  if (a.is_quantifier()) {
    ea.push_back(a.var().name);
    eb.push_back(b.var().name);
    bool ok = alpha_rec(a.body(), b.body(), ea, eb);
    ea.pop_back();
    eb.pop_back();
    return ok;
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    const RFormula& x = i == 0 ? a.lhs() : a.rhs();
    const RFormula& y = i == 0 ? b.lhs() : b.rhs();
    if (!alpha_rec(x, y, ea, eb)) return false;
  }
  return true;
}

}  // namespace

bool alpha_equal(const RFormula& a, const RFormula& b) {
  Env ea, eb;
  return alpha_rec(a, b, ea, eb);
}

bool alpha_equal(const Judgment& a, const Judgment& b) {
  if (a.index() != b.index()) return false;
  if (is_labeled(a)) return as_lwff(a) == as_lwff(b);
  return alpha_equal(as_rwff(a), as_rwff(b));
}

bool same(const Formula& a, const Formula& b) { return expand(a) == expand(b); }
bool same(const RFormula& a, const RFormula& b) { return alpha_equal(expand(a), expand(b)); }
bool same(const Lwff& a, const Lwff& b) {
  return a.label == b.label && same(a.formula, b.formula);
}
bool same(const Judgment& a, const Judgment& b) {
  if (a.index() != b.index()) return false;
  if (is_labeled(a)) return same(as_lwff(a), as_lwff(b));
  return same(as_rwff(a), as_rwff(b));
}

// ------------------------------------------------------------- subformula

namespace {

void collect(const Formula& f, std::vector<Formula>& out) {
  out.push_back(f);
  for (std::size_t i = 0; i < f.arity(); ++i) collect(i == 0 ? f.lhs() : f.rhs(), out);
}

void collect(const RFormula& r, std::vector<RFormula>& out) {
  out.push_back(r);
  for (std::size_t i = 0; i < r.arity(); ++i) collect(i == 0 ? r.lhs() : r.rhs(), out);
}

struct Scoped {
  RFormula sub;
  std::set<std::string> instantiable;
};

void collect_scoped(const RFormula& r, std::set<std::string> inst, std::vector<Scoped>& out) {
  out.push_back({r, inst});
  if (r.is_quantifier()) {
    inst.insert(r.var().name);
    collect_scoped(r.body(), inst, out);
    return;
  }
  for (std::size_t i = 0; i < r.arity(); ++i) {
    collect_scoped(i == 0 ? r.lhs() : r.rhs(), inst, out);
  }
}

// Match `pat` against `t`, letting free instantiable names of pat map to any label.
bool instance_rec(const RFormula& pat, const RFormula& t, Env& ep, Env& et,
                  const std::set<std::string>& inst, std::map<std::string, std::string>& sigma) {
  if (pat.kind() != t.kind()) return false;
  if (pat.is_binary_relation()) {
    for (int side = 0; side < 2; ++side) {
      const std::string& pn = side == 0 ? pat.left().name : pat.right().name;
      const std::string& tn = side == 0 ? t.left().name : t.right().name;
      int ip = resolve(ep, pn);
      int it = resolve(et, tn);
      if (ip >= 0 || it >= 0) {
        if (ip != it) return false;
        continue;
      }
      if (inst.count(pn)) {
        auto [pos, inserted] = sigma.emplace(pn, tn);
        if (!inserted && pos->second != tn) return false;
      } else if (pn != tn) {
        return false;
      }
    }
    return true;
  }
  if (pat.is_quantifier()) {
    ep.push_back(pat.var().name);
    et.push_back(t.var().name);
    bool ok = instance_rec(pat.body(), t.body(), ep, et, inst, sigma);
    ep.pop_back();
    et.pop_back();
    return ok;
  }
  for (std::size_t i = 0; i < pat.arity(); ++i) {
    if (!instance_rec(i == 0 ? pat.lhs() : pat.rhs(), i == 0 ? t.lhs() : t.rhs(), ep, et, inst,
                      sigma)) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  collect(expand(f), out);
  return out;
}

std::vector<RFormula> subformulas(const RFormula& r) {
  std::vector<RFormula> out;
  collect(expand(r), out);
  return out;
}

bool is_subformula(const Formula& b, const Formula& a) {
  Formula eb = expand(b);
  for (const auto& s : subformulas(a)) {
    if (s == eb) return true;
  }
  return false;
}

bool is_subformula(const RFormula& b, const RFormula& a) {
  RFormula eb = expand(b);
  for (const auto& s : subformulas(a)) {
    if (alpha_equal(s, eb)) return true;
  }
  return false;
}

bool is_subformula(const Lwff& b, const Lwff& a) { return is_subformula(b.formula, a.formula); }

bool is_subformula_instance(const RFormula& b, const RFormula& a) {
  RFormula eb = expand(b);
  std::vector<Scoped> subs;
  collect_scoped(expand(a), {}, subs);
  for (const auto& s : subs) {
    Env ep, et;
    std::map<std::string, std::string> sigma;
    if (instance_rec(s.sub, eb, ep, et, s.instantiable, sigma)) return true;
  }
  return false;
}

// ----------------------------------------------------------------- labels

namespace {

void free_labels(const RFormula& r, std::set<std::string>& bound, std::set<Label>& out) {
  if (r.is_binary_relation()) {
    if (!bound.count(r.left().name)) out.insert(r.left());
    if (!bound.count(r.right().name)) out.insert(r.right());
    return;
  }
  if (r.is_quantifier()) {
    bool added = bound.insert(r.var().name).second;
    free_labels(r.body(), bound, out);
    if (added) bound.erase(r.var().name);
    return;
  }
  for (std::size_t i = 0; i < r.arity(); ++i) {
    free_labels(i == 0 ? r.lhs() : r.rhs(), bound, out);
  }
}

void every_name(const RFormula& r, std::set<Label>& out) {
  if (r.is_binary_relation()) {
    out.insert(r.left());
    out.insert(r.right());
    return;
  }
  if (r.is_quantifier()) out.insert(r.var());
  for (std::size_t i = 0; i < r.arity(); ++i) every_name(i == 0 ? r.lhs() : r.rhs(), out);
}

void atoms_rec(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == FormulaKind::kAtom) out.insert(f.name());
  for (std::size_t i = 0; i < f.arity(); ++i) atoms_rec(i == 0 ? f.lhs() : f.rhs(), out);
}

}  // namespace

std::set<Label> labels_of(const RFormula& r) {
  std::set<std::string> bound;
  std::set<Label> out;
  free_labels(r, bound, out);
  return out;
}

std::set<Label> labels_of(const Lwff& l) { return {l.label}; }

std::set<Label> labels_of(const Judgment& j) {
  return is_labeled(j) ? labels_of(as_lwff(j)) : labels_of(as_rwff(j));
}

std::set<Label> labels_of(const ProofContext& c) {
  std::set<Label> out;
  for (const auto& j : c.judgments()) {
    auto s = labels_of(j);
    out.insert(s.begin(), s.end());
  }
  return out;
}

std::set<Label> all_names(const RFormula& r) {
  std::set<Label> out;
  every_name(r, out);
  // Abbreviations may introduce binders on expansion.
  every_name(expand(r), out);
  return out;
}

std::set<Label> all_names(const Judgment& j) {
  return is_labeled(j) ? labels_of(as_lwff(j)) : all_names(as_rwff(j));
}

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  atoms_rec(f, out);
  return out;
}

std::set<std::string> atoms_of(const Judgment& j) {
  if (!is_labeled(j)) return {};
  return atoms_of(as_lwff(j).formula);
}

Label NameSupply::fresh() {
  for (;;) {
    std::string n = prefix_ + std::to_string(++counter_);
    if (used_.insert(n).second) return Label(n);
  }
}

// ----------------------------------------------------------- substitution

namespace {

RFormula rebuild_quant(const RFormula& q, Label var, RFormula body) {
  return q.kind() == RFormulaKind::kForall ? RFormula::forall(std::move(var), std::move(body))
                                           : RFormula::exists(std::move(var), std::move(body));
}

RFormula rebuild_binary(const RFormula& r, RFormula a, RFormula b) {
  switch (r.kind()) {
    case RFormulaKind::kRImplies:
      return RFormula::implies(std::move(a), std::move(b));
    case RFormulaKind::kRAnd:
      return RFormula::conj(std::move(a), std::move(b));
    case RFormulaKind::kROr:
      return RFormula::disj(std::move(a), std::move(b));
    default:
      throw std::logic_error("rebuild_binary: not binary");
  }
}

RFormula rebuild_atom(const RFormula& r, Label a, Label b) {
  switch (r.kind()) {
    case RFormulaKind::kLess:
      return RFormula::less(std::move(a), std::move(b));
    case RFormulaKind::kEq:
      return RFormula::eq(std::move(a), std::move(b));
    case RFormulaKind::kPrec:
      return RFormula::prec(std::move(a), std::move(b));
    default:
      throw std::logic_error("rebuild_atom: not a relation");
  }
}

}  // namespace

RFormula substitute_label(const RFormula& r, const Label& nl, const Label& ol) {
  if (nl == ol) return r;
  if (r.is_binary_relation()) {
    return rebuild_atom(r, r.left() == ol ? nl : r.left(), r.right() == ol ? nl : r.right());
  }
  switch (r.kind()) {
    case RFormulaKind::kEmpty:
      return r;
    case RFormulaKind::kRNot:
      return RFormula::neg(substitute_label(r.lhs(), nl, ol));
    case RFormulaKind::kRImplies:
    case RFormulaKind::kRAnd:
    case RFormulaKind::kROr:
      return rebuild_binary(r, substitute_label(r.lhs(), nl, ol),
                            substitute_label(r.rhs(), nl, ol));
    case RFormulaKind::kForall:
    case RFormulaKind::kExists: {
      if (r.var() == ol) return r;
      if (!labels_of(r.body()).count(ol)) return r;
      if (r.var() == nl) {
        NameSupply names;
        names.reserve(all_names(r.body()));
        names.reserve(nl);
        names.reserve(ol);
        Label v = names.fresh();
        RFormula body = substitute_label(r.body(), v, r.var());
        return rebuild_quant(r, v, substitute_label(body, nl, ol));
      }
      return rebuild_quant(r, r.var(), substitute_label(r.body(), nl, ol));
    }
    default:
      throw std::logic_error("substitute_label: bad kind");
  }
}

Lwff substitute_label(const Lwff& l, const Label& nl, const Label& ol) {
  return Lwff{l.label == ol ? nl : l.label, l.formula};
}

Judgment substitute_label(const Judgment& j, const Label& nl, const Label& ol) {
  if (is_labeled(j)) return substitute_label(as_lwff(j), nl, ol);
  return substitute_label(as_rwff(j), nl, ol);
}

std::optional<Label> match_instance(const RFormula& body, const Label& var,
                                    const RFormula& target) {
  std::set<Label> candidates = labels_of(target);
  candidates.insert(var);
  for (const auto& c : candidates) {
    if (same(substitute_label(body, c, var), target)) return c;
  }
  return std::nullopt;
}

// ------------------------------------------------------------ occurrences

namespace {

void count_occ(const RFormula& r, int& n) {
  if (r.is_binary_relation()) {
    n += 2;
    return;
  }
  for (std::size_t i = 0; i < r.arity(); ++i) count_occ(i == 0 ? r.lhs() : r.rhs(), n);
}

bool label_at(const RFormula& r, int target, int& n, Env& env, std::optional<Label>& out) {
  if (r.is_binary_relation()) {
    for (const Label* l : {&r.left(), &r.right()}) {
      if (n++ == target) {
        out = resolve(env, l->name) >= 0 ? std::nullopt : std::optional<Label>(*l);
        return true;
      }
    }
    return false;
  }
  if (r.is_quantifier()) {
    env.push_back(r.var().name);
    bool done = label_at(r.body(), target, n, env, out);
    env.pop_back();
    return done;
  }
  for (std::size_t i = 0; i < r.arity(); ++i) {
    if (label_at(i == 0 ? r.lhs() : r.rhs(), target, n, env, out)) return true;
  }
  return false;
}

// Does any occurrence index in [first, first+count) appear in occ?
bool touches(const std::set<int>& occ, int first, int count) {
  auto it = occ.lower_bound(first);
  return it != occ.end() && *it < first + count;
}

RFormula replace_rec(const RFormula& r, const std::set<int>& occ, const Label& to, int& n) {
  if (r.is_binary_relation()) {
    Label a = occ.count(n) ? to : r.left();
    Label b = occ.count(n + 1) ? to : r.right();
    n += 2;
    return rebuild_atom(r, a, b);
  }
  if (r.kind() == RFormulaKind::kEmpty) return r;
  if (r.is_quantifier()) {
    int width = 0;
    count_occ(r.body(), width);
    if (r.var() == to && touches(occ, n, width)) {
      NameSupply names;
      names.reserve(all_names(r.body()));
      names.reserve(to);
      Label v = names.fresh();
      RFormula body = substitute_label(r.body(), v, r.var());
      return rebuild_quant(r, v, replace_rec(body, occ, to, n));
    }
    return rebuild_quant(r, r.var(), replace_rec(r.body(), occ, to, n));
  }
  if (r.kind() == RFormulaKind::kRNot) return RFormula::neg(replace_rec(r.lhs(), occ, to, n));
  RFormula a = replace_rec(r.lhs(), occ, to, n);
  RFormula b = replace_rec(r.rhs(), occ, to, n);
  return rebuild_binary(r, std::move(a), std::move(b));
}

bool replaced_rec(const RFormula& f, const RFormula& t, const Label& a, const Label& b, Env& ef,
                  Env& et, int& n, std::vector<int>& out) {
  if (f.kind() != t.kind()) return false;
  if (f.is_binary_relation()) {
    for (int side = 0; side < 2; ++side, ++n) {
      const std::string& fn = side == 0 ? f.left().name : f.right().name;
      const std::string& tn = side == 0 ? t.left().name : t.right().name;
      int jf = resolve(ef, fn);
      int jt = resolve(et, tn);
      if (jf >= 0 || jt >= 0) {
        if (jf != jt) return false;
        continue;
      }
      if (fn == tn) continue;
      if (fn == a.name && tn == b.name) {
        out.push_back(n);
        continue;
      }
      return false;
    }
    return true;
  }
  if (f.is_quantifier()) {
    ef.push_back(f.var().name);
    et.push_back(t.var().name);
    bool ok = replaced_rec(f.body(), t.body(), a, b, ef, et, n, out);
    ef.pop_back();
    et.pop_back();
    return ok;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (!replaced_rec(i == 0 ? f.lhs() : f.rhs(), i == 0 ? t.lhs() : t.rhs(), a, b, ef, et, n,
                      out)) {
      return false;
    }
  }
  return true;
}

}  // namespace

int occurrence_count(const Judgment& j) {
  if (is_labeled(j)) return 1;
  int n = 0;
  count_occ(expand(as_rwff(j)), n);
  return n;
}

std::optional<Label> free_label_at(const Judgment& j, int i) {
  if (is_labeled(j)) return i == 0 ? std::optional<Label>(as_lwff(j).label) : std::nullopt;
  int n = 0;
  Env env;
  std::optional<Label> out;
  label_at(expand(as_rwff(j)), i, n, env, out);
  return out;
}

Judgment replace_occurrences(const Judgment& j, const std::vector<int>& occ, const Label& to) {
  std::set<int> s(occ.begin(), occ.end());
  if (is_labeled(j)) {
    Lwff l = expand(as_lwff(j));
    if (s.count(0)) l.label = to;
    return l;
  }
  int n = 0;
  return replace_rec(expand(as_rwff(j)), s, to, n);
}

std::optional<std::vector<int>> replaced_occurrences(const Judgment& from, const Judgment& to,
                                                     const Label& a, const Label& b) {
  if (from.index() != to.index()) return std::nullopt;
  if (is_labeled(from)) {
    const Lwff& f = as_lwff(from);
    const Lwff& t = as_lwff(to);
    if (!same(f.formula, t.formula)) return std::nullopt;
    if (f.label == t.label) return std::vector<int>{};
    if (f.label == a && t.label == b) return std::vector<int>{0};
    return std::nullopt;
  }
  std::vector<int> out;
  Env ef, et;
  int n = 0;
  if (!replaced_rec(expand(as_rwff(from)), expand(as_rwff(to)), a, b, ef, et, n, out)) {
    return std::nullopt;
  }
  return out;
}

// --------------------------------------------------------------- contexts

void ProofContext::add(const Judgment& j) {
  if (contains(j)) return;
  if (is_labeled(j)) {
    gamma_.push_back(as_lwff(j));
  } else {
    delta_.push_back(as_rwff(j));
  }
}

bool ProofContext::contains(const Judgment& j) const {
  if (is_labeled(j)) {
    return std::any_of(gamma_.begin(), gamma_.end(),
                       [&](const Lwff& l) { return same(l, as_lwff(j)); });
  }
  return std::any_of(delta_.begin(), delta_.end(),
                     [&](const RFormula& r) { return same(r, as_rwff(j)); });
}

bool ProofContext::subset_of(const ProofContext& other) const {
  for (const auto& l : gamma_) {
    if (!other.contains(l)) return false;
  }
  for (const auto& r : delta_) {
    if (!other.contains(r)) return false;
  }
  return true;
}

std::vector<Judgment> ProofContext::judgments() const {
  std::vector<Judgment> out(gamma_.begin(), gamma_.end());
  out.insert(out.end(), delta_.begin(), delta_.end());
  return out;
}

}  // namespace tenseproof
