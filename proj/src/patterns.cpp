#include "tenseproof/patterns.hpp"

namespace tenseproof::pat {

namespace {

std::optional<std::pair<Formula, Formula>> core_imp(const Formula& c) {
  if (c.kind() != FormulaKind::kImplies) return std::nullopt;
  return std::make_pair(c.lhs(), c.rhs());
}

std::optional<Formula> core_neg(const Formula& c) {
  auto i = core_imp(c);
  if (!i || i->second.kind() != FormulaKind::kFalsum) return std::nullopt;
  return i->first;
}

std::optional<std::pair<RFormula, RFormula>> core_rimp(const RFormula& c) {
  if (c.kind() != RFormulaKind::kRImplies) return std::nullopt;
  return std::make_pair(c.lhs(), c.rhs());
}

std::optional<RFormula> core_rneg(const RFormula& c) {
  auto i = core_rimp(c);
  if (!i || i->second.kind() != RFormulaKind::kEmpty) return std::nullopt;
  return i->first;
}

}  // namespace

bool is_falsum(const Formula& f) { return f.kind() == FormulaKind::kFalsum; }

std::optional<std::pair<Formula, Formula>> imp(const Formula& f) { return core_imp(expand(f)); }

std::optional<Formula> g(const Formula& f) {
  Formula c = expand(f);
  if (c.kind() != FormulaKind::kG) return std::nullopt;
  return c.lhs();
}

std::optional<Formula> h(const Formula& f) {
  Formula c = expand(f);
  if (c.kind() != FormulaKind::kH) return std::nullopt;
  return c.lhs();
}

std::optional<Formula> x(const Formula& f) {
  Formula c = expand(f);
  if (c.kind() != FormulaKind::kX) return std::nullopt;
  return c.lhs();
}

std::optional<Formula> neg(const Formula& f) { return core_neg(expand(f)); }

// A & B  is  (A -> ~B) -> false
std::optional<std::pair<Formula, Formula>> conj(const Formula& f) {
  auto inner = core_neg(expand(f));
  if (!inner) return std::nullopt;
  auto i = core_imp(*inner);
  if (!i) return std::nullopt;
  auto b = core_neg(i->second);
  if (!b) return std::nullopt;
  return std::make_pair(i->first, *b);
}

// A | B  is  ~A -> B
std::optional<std::pair<Formula, Formula>> disj(const Formula& f) {
  auto i = core_imp(expand(f));
  if (!i) return std::nullopt;
  auto a = core_neg(i->first);
  if (!a) return std::nullopt;
  return std::make_pair(*a, i->second);
}

std::optional<Formula> f(const Formula& fm) {
  auto inner = core_neg(expand(fm));
  if (!inner || inner->kind() != FormulaKind::kG) return std::nullopt;
  return core_neg(inner->lhs());
}

std::optional<Formula> p(const Formula& fm) {
  auto inner = core_neg(expand(fm));
  if (!inner || inner->kind() != FormulaKind::kH) return std::nullopt;
  return core_neg(inner->lhs());
}

bool is_empty(const RFormula& r) { return r.kind() == RFormulaKind::kEmpty; }

std::optional<std::pair<Label, Label>> less(const RFormula& r) {
  if (r.kind() != RFormulaKind::kLess) return std::nullopt;
  return std::make_pair(r.left(), r.right());
}

std::optional<std::pair<Label, Label>> eq(const RFormula& r) {
  if (r.kind() != RFormulaKind::kEq) return std::nullopt;
  return std::make_pair(r.left(), r.right());
}

std::optional<std::pair<Label, Label>> prec(const RFormula& r) {
  if (r.kind() == RFormulaKind::kPrec) return std::make_pair(r.left(), r.right());
  auto c = rconj(r);
  if (!c) return std::nullopt;
  auto l = less(c->first);
  if (!l) return std::nullopt;
  if (!same(r, RFormula::prec(l->first, l->second))) return std::nullopt;
  return l;
}

std::optional<std::pair<RFormula, RFormula>> rimp(const RFormula& r) {
  return core_rimp(expand(r));
}

std::optional<std::pair<Label, RFormula>> forall(const RFormula& r) {
  RFormula c = expand(r);
  if (c.kind() != RFormulaKind::kForall) return std::nullopt;
  return std::make_pair(c.var(), c.body());
}

std::optional<RFormula> rneg(const RFormula& r) { return core_rneg(expand(r)); }

std::optional<std::pair<RFormula, RFormula>> rconj(const RFormula& r) {
  auto inner = core_rneg(expand(r));
  if (!inner) return std::nullopt;
  auto i = core_rimp(*inner);
  if (!i) return std::nullopt;
  auto b = core_rneg(i->second);
  if (!b) return std::nullopt;
  return std::make_pair(i->first, *b);
}

std::optional<std::pair<RFormula, RFormula>> rdisj(const RFormula& r) {
  auto i = core_rimp(expand(r));
  if (!i) return std::nullopt;
  auto a = core_rneg(i->first);
  if (!a) return std::nullopt;
  return std::make_pair(*a, i->second);
}

std::optional<std::pair<Label, RFormula>> exists(const RFormula& r) {
  auto inner = core_rneg(expand(r));
  if (!inner || inner->kind() != RFormulaKind::kForall) return std::nullopt;
  auto body = core_rneg(inner->body());
  if (!body) return std::nullopt;
  return std::make_pair(inner->var(), *body);
}

}  // namespace tenseproof::pat
