#include "tenseproof/checker.hpp"

#include <algorithm>

#include "tenseproof/parser.hpp"
#include "tenseproof/patterns.hpp"

namespace tenseproof {

std::string_view violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::kPatternMismatch: return "PatternMismatch";
    case ViolationKind::kBadDischarge: return "BadDischarge";
    case ViolationKind::kFreshnessViolation: return "FreshnessViolation";
    case ViolationKind::kAxiomNotInProfile: return "AxiomNotInProfile";
  }
  return "?";
}

namespace {

struct OpenLeaf {
  std::optional<int> marker;
  Judgment judgment;
};

struct Expect {
  bool ok = true;
  std::vector<std::vector<Judgment>> slots;  // per premise
  std::optional<Label> eigen;
  std::vector<Judgment> eigen_excluded;      // judgments the eigenvariable must not occur in
};

Lwff lw(const Label& l, const Formula& f) { return Lwff{l, f}; }

class Checker {
 public:
  explicit Checker(const LogicProfile& p) : profile_(p) {}

  std::vector<Violation> violations;

  std::vector<OpenLeaf> visit(const Derivation& d, NodePath& path) {
    const auto& n = d.node();
    const RuleInfo& info = rule_info(n.rule);
    std::vector<std::vector<OpenLeaf>> opens(n.premises.size());
    for (std::size_t i = 0; i < n.premises.size(); ++i) {
      path.push_back(i);
      opens[i] = visit(n.premises[i], path);
      path.pop_back();
    }
    if (n.rule == Rule::kAssume) {
      if (!n.premises.empty()) add(path, ViolationKind::kPatternMismatch, "assumption with premises");
      return {OpenLeaf{n.marker, n.conclusion}};
    }
    Expect e;
    e.slots.resize(n.premises.size());
    if (static_cast<int>(n.premises.size()) != info.arity) {
      add(path, ViolationKind::kPatternMismatch,
          std::string(info.name) + " expects " + std::to_string(info.arity) + " premises");
      e.ok = false;
    } else {
      e = pattern(d, path);
      e.slots.resize(n.premises.size());
    }
    if (!profile_.allows(n.rule)) {
      add(path, ViolationKind::kAxiomNotInProfile,
          std::string(info.name) + " is not available in profile " + profile_.name());
    }
    if (n.fresh && !info.needs_fresh && n.rule != Rule::kForallI) {
      add(path, ViolationKind::kPatternMismatch, "unexpected fresh label");
    }
    if (!n.discharges.empty() && info.arity > 0) {
      bool any = false;
      for (int i = 0; i < info.arity; ++i) any = any || discharges_into(n.rule, i);
      if (!any) add(path, ViolationKind::kBadDischarge, "rule discharges nothing");
    }

    std::vector<OpenLeaf> out;
    for (std::size_t i = 0; i < opens.size(); ++i) {
      std::vector<OpenLeaf> kept;
      for (auto& leaf : opens[i]) {
        bool listed = leaf.marker && std::find(n.discharges.begin(), n.discharges.end(),
                                               *leaf.marker) != n.discharges.end();
        if (!listed) {
          kept.push_back(leaf);
          continue;
        }
        if (!discharges_into(n.rule, i)) {
          add(path, ViolationKind::kBadDischarge,
              "marker " + std::to_string(*leaf.marker) + " discharged outside its premise");
          kept.push_back(leaf);
          continue;
        }
        bool fits = std::any_of(e.slots[i].begin(), e.slots[i].end(),
                                [&](const Judgment& s) { return same(s, leaf.judgment); });
        if (!fits && e.ok) {
          add(path, ViolationKind::kBadDischarge,
              "marker " + std::to_string(*leaf.marker) + " labels " + render(leaf.judgment) +
                  ", which this rule cannot discharge");
          kept.push_back(leaf);
        } else if (!fits) {
          kept.push_back(leaf);
        }
      }
      if (e.eigen && e.ok) {
        std::size_t scoped = info.arity == 1 ? 0 : 1;
        if (i == scoped) {
          for (const auto& leaf : kept) {
            if (labels_of(leaf.judgment).count(*e.eigen)) {
              add(path, ViolationKind::kFreshnessViolation,
                  "eigenvariable " + e.eigen->name + " occurs in open assumption " +
                      render(leaf.judgment));
            }
          }
        }
      }
      out.insert(out.end(), kept.begin(), kept.end());
    }
    if (e.eigen && e.ok) {
      for (const auto& j : e.eigen_excluded) {
        if (labels_of(j).count(*e.eigen)) {
          add(path, ViolationKind::kFreshnessViolation,
              "eigenvariable " + e.eigen->name + " occurs in " + render(j));
        }
      }
    }
    return out;
  }

 private:
  void add(const NodePath& p, ViolationKind k, std::string msg) {
    violations.push_back({p, k, std::move(msg)});
  }

  // Validates the local shape and returns the discharge slots.
  Expect pattern(const Derivation& d, const NodePath& path) {
    const auto& n = d.node();
    Expect e;
    e.slots.resize(n.premises.size());
    auto bad = [&](const std::string& msg) {
      if (e.ok) add(path, ViolationKind::kPatternMismatch, std::string(rule_info(n.rule).name) + ": " + msg);
      e.ok = false;
      return e;
    };
    const Judgment& c = n.conclusion;
    auto prem = [&](std::size_t i) -> const Judgment& { return n.premises[i].conclusion(); };
    auto lab = [](const Judgment& j) -> const Lwff* {
      return is_labeled(j) ? &as_lwff(j) : nullptr;
    };
    auto rel = [](const Judgment& j) -> const RFormula* {
      return is_labeled(j) ? nullptr : &as_rwff(j);
    };
    auto need_fresh = [&]() -> std::optional<Label> {
      if (!n.fresh) bad("missing fresh label");
      return n.fresh;
    };

    switch (n.rule) {
      case Rule::kRaaBot: {
        const Lwff* cl = lab(c);
        const Lwff* p0 = lab(prem(0));
        if (!cl || !p0 || !pat::is_falsum(expand(p0->formula))) return bad("premise must be y : false");
        e.slots[0] = {lw(cl->label, Formula::implies(cl->formula, Formula::falsum()))};
        return e;
      }
      case Rule::kImpI:
      case Rule::kNotI: {
        const Lwff* cl = lab(c);
        const Lwff* p0 = lab(prem(0));
        if (!cl || !p0) return bad("labeled formulas expected");
        auto parts = pat::imp(cl->formula);
        if (!parts) return bad("conclusion is not an implication");
        if (n.rule == Rule::kNotI && !pat::is_falsum(parts->second)) return bad("conclusion is not a negation");
        if (p0->label != cl->label || !same(p0->formula, parts->second)) return bad("premise does not match consequent");
        e.slots[0] = {lw(cl->label, parts->first)};
        return e;
      }
      case Rule::kImpE:
      case Rule::kNotE: {
        const Lwff* p0 = lab(prem(0));
        const Lwff* p1 = lab(prem(1));
        const Lwff* cl = lab(c);
        if (!p0 || !p1 || !cl) return bad("labeled formulas expected");
        auto parts = pat::imp(p0->formula);
        if (!parts) return bad("major premise is not an implication");
        if (n.rule == Rule::kNotE && !pat::is_falsum(parts->second)) return bad("major premise is not a negation");
        if (p1->label != p0->label || !same(p1->formula, parts->first)) return bad("minor premise does not match antecedent");
        if (cl->label != p0->label || !same(cl->formula, parts->second)) return bad("conclusion does not match consequent");
        return e;
      }
      case Rule::kGI:
      case Rule::kHI:
      case Rule::kXI: {
        auto y = need_fresh();
        if (!y) return e;
        const Lwff* cl = lab(c);
        const Lwff* p0 = lab(prem(0));
        if (!cl || !p0) return bad("labeled formulas expected");
        auto body = n.rule == Rule::kGI ? pat::g(cl->formula)
                    : n.rule == Rule::kHI ? pat::h(cl->formula)
                                          : pat::x(cl->formula);
        if (!body) return bad("conclusion has the wrong modality");
        if (p0->label != *y || !same(p0->formula, *body)) return bad("premise must be the body at the fresh label");
        if (*y == cl->label) return bad("fresh label equals the conclusion label");
        const Label& x = cl->label;
        e.slots[0] = {n.rule == Rule::kGI   ? RFormula::less(x, *y)
                      : n.rule == Rule::kHI ? RFormula::less(*y, x)
                                            : RFormula::prec(x, *y)};
        e.eigen = y;
        return e;
      }
      case Rule::kGE:
      case Rule::kHE:
      case Rule::kXE: {
        const Lwff* p0 = lab(prem(0));
        const RFormula* p1 = rel(prem(1));
        const Lwff* cl = lab(c);
        if (!p0 || !p1 || !cl) return bad("expected a labeled major premise and a relational minor premise");
        auto body = n.rule == Rule::kGE ? pat::g(p0->formula)
                    : n.rule == Rule::kHE ? pat::h(p0->formula)
                                          : pat::x(p0->formula);
        if (!body) return bad("major premise has the wrong modality");
        auto rel_parts = n.rule == Rule::kXE ? pat::prec(*p1) : pat::less(expand(*p1));
        if (!rel_parts) return bad("minor premise has the wrong relation");
        Label from = n.rule == Rule::kHE ? rel_parts->second : rel_parts->first;
        Label to = n.rule == Rule::kHE ? rel_parts->first : rel_parts->second;
        if (from != p0->label) return bad("minor premise does not start at the major label");
        if (cl->label != to || !same(cl->formula, *body)) return bad("conclusion does not match");
        return e;
      }
      case Rule::kRaaEmpty: {
        const RFormula* cr = rel(c);
        const RFormula* p0 = rel(prem(0));
        if (!cr || !p0 || !pat::is_empty(expand(*p0))) return bad("premise must be empty");
        e.slots[0] = {RFormula::implies(*cr, RFormula::empty())};
        return e;
      }
      case Rule::kRImpI:
      case Rule::kRNotI: {
        const RFormula* cr = rel(c);
        const RFormula* p0 = rel(prem(0));
        if (!cr || !p0) return bad("relational formulas expected");
        auto parts = pat::rimp(*cr);
        if (!parts) return bad("conclusion is not an implication");
        if (n.rule == Rule::kRNotI && !pat::is_empty(parts->second)) return bad("conclusion is not a negation");
        if (!same(*p0, parts->second)) return bad("premise does not match consequent");
        e.slots[0] = {parts->first};
        return e;
      }
      case Rule::kRImpE:
      case Rule::kRNotE: {
        const RFormula* p0 = rel(prem(0));
        const RFormula* p1 = rel(prem(1));
        const RFormula* cr = rel(c);
        if (!p0 || !p1 || !cr) return bad("relational formulas expected");
        auto parts = pat::rimp(*p0);
        if (!parts) return bad("major premise is not an implication");
        if (n.rule == Rule::kRNotE && !pat::is_empty(parts->second)) return bad("major premise is not a negation");
        if (!same(*p1, parts->first)) return bad("minor premise does not match antecedent");
        if (!same(*cr, parts->second)) return bad("conclusion does not match consequent");
        return e;
      }
      case Rule::kForallI: {
        const RFormula* cr = rel(c);
        const RFormula* p0 = rel(prem(0));
        if (!cr || !p0) return bad("relational formulas expected");
        auto q = pat::forall(*cr);
        if (!q) return bad("conclusion is not universal");
        Label u = n.fresh.value_or(q->first);
        if (!same(substitute_label(q->second, u, q->first), *p0)) return bad("premise is not the instance at the eigenvariable");
        e.eigen = u;
        e.eigen_excluded = {c};
        return e;
      }
      case Rule::kForallE: {
        const RFormula* cr = rel(c);
        const RFormula* p0 = rel(prem(0));
        if (!cr || !p0) return bad("relational formulas expected");
        auto q = pat::forall(*p0);
        if (!q) return bad("premise is not universal");
        if (!match_instance(q->second, q->first, *cr)) return bad("conclusion is not an instance");
        return e;
      }
      case Rule::kMon: {
        const RFormula* p1 = rel(prem(1));
        if (!p1) return bad("minor premise must be an equation");
        auto eqp = pat::eq(expand(*p1));
        if (!eqp) return bad("minor premise must be an equation");
        if (!replaced_occurrences(prem(0), c, eqp->first, eqp->second)) {
          return bad("conclusion is not the premise with occurrences of " + eqp->first.name +
                     " replaced by " + eqp->second.name);
        }
        return e;
      }
      case Rule::kUf1: {
        const Lwff* p0 = lab(prem(0));
        const RFormula* cr = rel(c);
        if (!p0 || !pat::is_falsum(expand(p0->formula)) || !cr || !pat::is_empty(expand(*cr))) {
          return bad("expects x : false above empty");
        }
        return e;
      }
      case Rule::kUf2: {
        const RFormula* p0 = rel(prem(0));
        const Lwff* cl = lab(c);
        if (!p0 || !pat::is_empty(expand(*p0)) || !cl || !pat::is_falsum(expand(cl->formula))) {
          return bad("expects empty above x : false");
        }
        return e;
      }
      case Rule::kFI:
      case Rule::kPI: {
        const Lwff* p0 = lab(prem(0));
        const RFormula* p1 = rel(prem(1));
        const Lwff* cl = lab(c);
        if (!p0 || !p1 || !cl) return bad("shape mismatch");
        auto body = n.rule == Rule::kFI ? pat::f(cl->formula) : pat::p(cl->formula);
        if (!body) return bad("conclusion has the wrong modality");
        auto l = pat::less(expand(*p1));
        if (!l) return bad("minor premise must be x < y");
        Label x = n.rule == Rule::kFI ? l->first : l->second;
        Label y = n.rule == Rule::kFI ? l->second : l->first;
        if (cl->label != x || p0->label != y || !same(p0->formula, *body)) return bad("labels or body do not match");
        return e;
      }
      case Rule::kFE:
      case Rule::kPE: {
        auto y = need_fresh();
        if (!y) return e;
        const Lwff* p0 = lab(prem(0));
        if (!p0) return bad("major premise must be labeled");
        auto body = n.rule == Rule::kFE ? pat::f(p0->formula) : pat::p(p0->formula);
        if (!body) return bad("major premise has the wrong modality");
        if (!same(prem(1), c)) return bad("conclusion differs from the minor premise");
        if (*y == p0->label) return bad("fresh label equals the major label");
        const Label& x = p0->label;
        e.slots[1] = {lw(*y, *body), n.rule == Rule::kFE ? RFormula::less(x, *y) : RFormula::less(*y, x)};
        e.eigen = y;
        e.eigen_excluded = {c};
        return e;
      }
      case Rule::kAndI: {
        const Lwff* p0 = lab(prem(0));
        const Lwff* p1 = lab(prem(1));
        const Lwff* cl = lab(c);
        if (!p0 || !p1 || !cl) return bad("labeled formulas expected");
        auto parts = pat::conj(cl->formula);
        if (!parts) return bad("conclusion is not a conjunction");
        if (p0->label != cl->label || p1->label != cl->label || !same(p0->formula, parts->first) ||
            !same(p1->formula, parts->second)) {
          return bad("premises do not match the conjuncts");
        }
        return e;
      }
      case Rule::kAndE1:
      case Rule::kAndE2: {
        const Lwff* p0 = lab(prem(0));
        const Lwff* cl = lab(c);
        if (!p0 || !cl) return bad("labeled formulas expected");
        auto parts = pat::conj(p0->formula);
        if (!parts) return bad("premise is not a conjunction");
        const Formula& want = n.rule == Rule::kAndE1 ? parts->first : parts->second;
        if (cl->label != p0->label || !same(cl->formula, want)) return bad("conclusion is not the conjunct");
        return e;
      }
      case Rule::kOrI1:
      case Rule::kOrI2: {
        const Lwff* p0 = lab(prem(0));
        const Lwff* cl = lab(c);
        if (!p0 || !cl) return bad("labeled formulas expected");
        auto parts = pat::disj(cl->formula);
        if (!parts) return bad("conclusion is not a disjunction");
        const Formula& want = n.rule == Rule::kOrI1 ? parts->first : parts->second;
        if (cl->label != p0->label || !same(p0->formula, want)) return bad("premise is not the disjunct");
        return e;
      }
      case Rule::kOrE: {
        const Lwff* p0 = lab(prem(0));
        if (!p0) return bad("major premise must be labeled");
        auto parts = pat::disj(p0->formula);
        if (!parts) return bad("major premise is not a disjunction");
        if (!same(prem(1), c) || !same(prem(2), c)) return bad("branches must conclude the conclusion");
        e.slots[1] = {lw(p0->label, parts->first)};
        e.slots[2] = {lw(p0->label, parts->second)};
        return e;
      }
      case Rule::kRAndI: {
        const RFormula* p0 = rel(prem(0));
        const RFormula* p1 = rel(prem(1));
        const RFormula* cr = rel(c);
        if (!p0 || !p1 || !cr) return bad("relational formulas expected");
        auto parts = pat::rconj(*cr);
        if (!parts || !same(*p0, parts->first) || !same(*p1, parts->second)) return bad("premises do not match the conjuncts");
        return e;
      }
      case Rule::kRAndE1:
      case Rule::kRAndE2: {
        const RFormula* p0 = rel(prem(0));
        const RFormula* cr = rel(c);
        if (!p0 || !cr) return bad("relational formulas expected");
        auto parts = pat::rconj(*p0);
        if (!parts) return bad("premise is not a conjunction");
        if (!same(*cr, n.rule == Rule::kRAndE1 ? parts->first : parts->second)) return bad("conclusion is not the conjunct");
        return e;
      }
      case Rule::kROrI1:
      case Rule::kROrI2: {
        const RFormula* p0 = rel(prem(0));
        const RFormula* cr = rel(c);
        if (!p0 || !cr) return bad("relational formulas expected");
        auto parts = pat::rdisj(*cr);
        if (!parts) return bad("conclusion is not a disjunction");
        if (!same(*p0, n.rule == Rule::kROrI1 ? parts->first : parts->second)) return bad("premise is not the disjunct");
        return e;
      }
      case Rule::kROrE: {
        const RFormula* p0 = rel(prem(0));
        if (!p0) return bad("major premise must be relational");
        auto parts = pat::rdisj(*p0);
        if (!parts) return bad("major premise is not a disjunction");
        if (!same(prem(1), c) || !same(prem(2), c)) return bad("branches must conclude the conclusion");
        e.slots[1] = {parts->first};
        e.slots[2] = {parts->second};
        return e;
      }
      case Rule::kExI: {
        const RFormula* p0 = rel(prem(0));
        const RFormula* cr = rel(c);
        if (!p0 || !cr) return bad("relational formulas expected");
        auto q = pat::exists(*cr);
        if (!q) return bad("conclusion is not existential");
        if (!match_instance(q->second, q->first, *p0)) return bad("premise is not an instance");
        return e;
      }
      case Rule::kExE: {
        auto y = need_fresh();
        if (!y) return e;
        const RFormula* p0 = rel(prem(0));
        if (!p0) return bad("major premise must be relational");
        auto q = pat::exists(*p0);
        if (!q) return bad("major premise is not existential");
        if (!same(prem(1), c)) return bad("conclusion differs from the minor premise");
        e.slots[1] = {substitute_label(q->second, *y, q->first)};
        e.eigen = y;
        e.eigen_excluded = {c, prem(0)};
        return e;
      }
      default: {
        auto t = axiom_template(n.rule);
        if (!t) return bad("unknown rule");
        const RFormula* cr = rel(c);
        if (!cr || !same(*cr, *t)) return bad("conclusion differs from the axiom " + render(*t));
        return e;
      }
    }
  }

  LogicProfile profile_;
};

}  // namespace

CheckReport check(const Derivation& d, const LogicProfile& profile) {
  Checker c(profile);
  NodePath path;
  auto leaves = c.visit(d, path);
  CheckReport r;
  for (const auto& l : leaves) r.open.add(l.judgment);
  r.violations = std::move(c.violations);
  r.valid = r.violations.empty();
  r.conclusion = d.conclusion();
  r.is_theorem = r.valid && r.open.empty();
  return r;
}

ProofContext open_assumptions(const Derivation& d) {
  return check(d, LogicProfile(std::set<Extra>{Extra::kMtl, Extra::kFirst, Extra::kFinal,
                                               Extra::kLSer, Extra::kDens, Extra::kLDiscr}))
      .open;
}

}  // namespace tenseproof
