#include "tenseproof/expand.hpp"

#include <set>

#include "build.hpp"
#include "tenseproof/patterns.hpp"

namespace tenseproof {

namespace {

using namespace build;

// Bring a falsum derivation (y:false or empty) to z:false.
Derivation falsum_at(const Derivation& fd, const Label& z) {
  if (is_labeled(fd.conclusion())) {
    if (as_lwff(fd.conclusion()).label == z) return fd;
    return node(Rule::kRaaBot, lw(z, bot()), {fd});
  }
  return node(Rule::kUf2, lw(z, bot()), {fd});
}

Derivation to_empty(const Derivation& fd) {
  if (is_labeled(fd.conclusion())) return node(Rule::kUf1, nil(), {fd});
  return fd;
}

// The negation of `phi` (marker k) against a proof of `phi`.
Derivation refute(const Judgment& phi, const Derivation& proof, int k) {
  if (is_labeled(phi)) {
    const Lwff& l = as_lwff(phi);
    return node(Rule::kImpE, lw(l.label, bot()), {hyp(lw(l.label, neg(l.formula)), k), proof});
  }
  return node(Rule::kRImpE, nil(), {hyp(rneg(as_rwff(phi)), k), proof});
}

// Conclude `phi` by reductio from a falsum derivation, discharging k.
Derivation close(const Judgment& phi, const Derivation& fd, int k) {
  if (is_labeled(phi)) {
    Derivation top = is_labeled(fd.conclusion()) ? fd : falsum_at(fd, as_lwff(phi).label);
    return node(Rule::kRaaBot, phi, {top}, {k});
  }
  return node(Rule::kRaaEmpty, phi, {to_empty(fd)}, {k});
}

class Expander {
 public:
  explicit Expander(int next) : next_(next) {}

  Derivation run(const Derivation& d) {
    const auto& n = d.node();
    if (d.is_leaf()) {
      return rule_info(n.rule).cls == RuleClass::kDerived ? expand_node(d, {}) : d;
    }
    std::vector<Derivation> ps;
    bool changed = false;
    for (const auto& p : n.premises) {
      ps.push_back(run(p));
      changed = changed || !ps.back().same_handle(p);
    }
    if (rule_info(n.rule).cls == RuleClass::kDerived) return expand_node(d, ps);
    return changed ? d.with_premises(std::move(ps)) : d;
  }

 private:
  int marker() { return next_++; }

  Derivation expand_node(const Derivation& d, const std::vector<Derivation>& ps) {
    const auto& n = d.node();
    const Judgment& c = n.conclusion;
    std::set<int> ms(n.discharges.begin(), n.discharges.end());
    switch (n.rule) {
      case Rule::kNotI: return node(Rule::kImpI, c, ps, n.discharges);
      case Rule::kNotE: return node(Rule::kImpE, c, ps);
      case Rule::kRNotI: return node(Rule::kRImpI, c, ps, n.discharges);
      case Rule::kRNotE: return node(Rule::kRImpE, c, ps);

      case Rule::kFI:
      case Rule::kPI: {
        bool fut = n.rule == Rule::kFI;
        const Lwff& cl = as_lwff(c);
        Formula a = fut ? *pat::f(cl.formula) : *pat::p(cl.formula);
        Label y = as_lwff(ps[0].conclusion()).label;
        Formula box = fut ? Formula::g(neg(a)) : Formula::h(neg(a));
        int m = marker();
        Derivation e = node(fut ? Rule::kGE : Rule::kHE, lw(y, neg(a)),
                            {hyp(lw(cl.label, box), m), ps[1]});
        Derivation f = node(Rule::kImpE, lw(y, bot()), {e, ps[0]});
        return node(Rule::kImpI, c, {falsum_at(f, cl.label)}, {m});
      }
      case Rule::kFE:
      case Rule::kPE: {
        bool fut = n.rule == Rule::kFE;
        const Lwff& maj = as_lwff(ps[0].conclusion());
        Formula a = fut ? *pat::f(maj.formula) : *pat::p(maj.formula);
        const Label& x = maj.label;
        const Label& y = *n.fresh;
        int ma = marker(), mb = marker(), k = marker();
        Derivation minor = remark_open(ps[1], ms, ma, mb);
        Derivation yb = falsum_at(refute(c, minor, k), y);
        Derivation ni = node(Rule::kImpI, lw(y, neg(a)), {yb}, {ma});
        Formula box = fut ? Formula::g(neg(a)) : Formula::h(neg(a));
        Derivation gi = node(fut ? Rule::kGI : Rule::kHI, lw(x, box), {ni}, {mb}, y);
        Derivation xb = node(Rule::kImpE, lw(x, bot()), {ps[0], gi});
        return close(c, xb, k);
      }
      case Rule::kAndI: {
        const Lwff& cl = as_lwff(c);
        auto [a, b] = *pat::conj(cl.formula);
        int m = marker();
        Derivation nb = node(Rule::kImpE, lw(cl.label, neg(b)),
                             {hyp(lw(cl.label, Formula::implies(a, neg(b))), m), ps[0]});
        Derivation f = node(Rule::kImpE, lw(cl.label, bot()), {nb, ps[1]});
        return node(Rule::kImpI, c, {f}, {m});
      }
      case Rule::kAndE1: {
        const Lwff& maj = as_lwff(ps[0].conclusion());
        auto [a, b] = *pat::conj(maj.formula);
        const Label& x = maj.label;
        int m1 = marker(), m2 = marker();
        Derivation f = node(Rule::kImpE, lw(x, bot()), {hyp(lw(x, neg(a)), m1), hyp(lw(x, a), m2)});
        Derivation nb = node(Rule::kImpI, lw(x, neg(b)), {f});
        Derivation imp = node(Rule::kImpI, lw(x, Formula::implies(a, neg(b))), {nb}, {m2});
        Derivation g = node(Rule::kImpE, lw(x, bot()), {ps[0], imp});
        return node(Rule::kRaaBot, c, {g}, {m1});
      }
      case Rule::kAndE2: {
        const Lwff& maj = as_lwff(ps[0].conclusion());
        auto [a, b] = *pat::conj(maj.formula);
        const Label& x = maj.label;
        int m = marker();
        Derivation imp = node(Rule::kImpI, lw(x, Formula::implies(a, neg(b))), {hyp(lw(x, neg(b)), m)});
        Derivation g = node(Rule::kImpE, lw(x, bot()), {ps[0], imp});
        return node(Rule::kRaaBot, c, {g}, {m});
      }
      case Rule::kOrI1: {
        const Lwff& cl = as_lwff(c);
        auto [a, b] = *pat::disj(cl.formula);
        int m = marker();
        Derivation f = node(Rule::kImpE, lw(cl.label, bot()), {hyp(lw(cl.label, neg(a)), m), ps[0]});
        Derivation rb = node(Rule::kRaaBot, lw(cl.label, b), {f});
        return node(Rule::kImpI, c, {rb}, {m});
      }
      case Rule::kOrI2: return node(Rule::kImpI, c, {ps[0]});
      case Rule::kOrE: {
        const Lwff& maj = as_lwff(ps[0].conclusion());
        auto [a, b] = *pat::disj(maj.formula);
        const Label& x = maj.label;
        int ma = marker(), mb = marker(), k = marker();
        Derivation left = remark_open(ps[1], ms, ma, ma);
        Derivation right = remark_open(ps[2], ms, mb, mb);
        Derivation na = node(Rule::kImpI, lw(x, neg(a)), {falsum_at(refute(c, left, k), x)}, {ma});
        Derivation pb = node(Rule::kImpE, lw(x, b), {ps[0], na});
        Derivation nb = node(Rule::kImpI, lw(x, neg(b)), {falsum_at(refute(c, right, k), x)}, {mb});
        Derivation f = node(Rule::kImpE, lw(x, bot()), {nb, pb});
        return close(c, f, k);
      }
      case Rule::kRAndI: {
        auto [a, b] = *pat::rconj(as_rwff(c));
        int m = marker();
        Derivation nb = node(Rule::kRImpE, rneg(b), {hyp(RFormula::implies(a, rneg(b)), m), ps[0]});
        Derivation f = node(Rule::kRImpE, nil(), {nb, ps[1]});
        return node(Rule::kRImpI, c, {f}, {m});
      }
      case Rule::kRAndE1: {
        auto [a, b] = *pat::rconj(as_rwff(ps[0].conclusion()));
        int m1 = marker(), m2 = marker();
        Derivation f = node(Rule::kRImpE, nil(), {hyp(rneg(a), m1), hyp(a, m2)});
        Derivation nb = node(Rule::kRImpI, rneg(b), {f});
        Derivation imp = node(Rule::kRImpI, RFormula::implies(a, rneg(b)), {nb}, {m2});
        Derivation g = node(Rule::kRImpE, nil(), {ps[0], imp});
        return node(Rule::kRaaEmpty, c, {g}, {m1});
      }
      case Rule::kRAndE2: {
        auto [a, b] = *pat::rconj(as_rwff(ps[0].conclusion()));
        int m = marker();
        Derivation imp = node(Rule::kRImpI, RFormula::implies(a, rneg(b)), {hyp(rneg(b), m)});
        Derivation g = node(Rule::kRImpE, nil(), {ps[0], imp});
        return node(Rule::kRaaEmpty, c, {g}, {m});
      }
      case Rule::kROrI1: {
        auto [a, b] = *pat::rdisj(as_rwff(c));
        int m = marker();
        Derivation f = node(Rule::kRImpE, nil(), {hyp(rneg(a), m), ps[0]});
        Derivation rb = node(Rule::kRaaEmpty, b, {f});
        return node(Rule::kRImpI, c, {rb}, {m});
      }
      case Rule::kROrI2: return node(Rule::kRImpI, c, {ps[0]});
      case Rule::kROrE: {
        auto [a, b] = *pat::rdisj(as_rwff(ps[0].conclusion()));
        int ma = marker(), mb = marker(), k = marker();
        Derivation left = remark_open(ps[1], ms, ma, ma);
        Derivation right = remark_open(ps[2], ms, mb, mb);
        Derivation na = node(Rule::kRImpI, rneg(a), {to_empty(refute(c, left, k))}, {ma});
        Derivation pb = node(Rule::kRImpE, b, {ps[0], na});
        Derivation nb = node(Rule::kRImpI, rneg(b), {to_empty(refute(c, right, k))}, {mb});
        Derivation f = node(Rule::kRImpE, nil(), {nb, pb});
        return close(c, f, k);
      }
      case Rule::kExI: {
        auto [v, body] = *pat::exists(as_rwff(c));
        Label y = *match_instance(body, v, as_rwff(ps[0].conclusion()));
        int m = marker();
        RFormula all = RFormula::forall(v, rneg(body));
        Derivation inst = node(Rule::kForallE, substitute_label(rneg(body), y, v), {hyp(all, m)});
        Derivation f = node(Rule::kRImpE, nil(), {inst, ps[0]});
        return node(Rule::kRImpI, c, {f}, {m});
      }
      case Rule::kExE: {
        auto [v, body] = *pat::exists(as_rwff(ps[0].conclusion()));
        const Label& y = *n.fresh;
        int ma = marker(), k = marker();
        Derivation minor = remark_open(ps[1], ms, ma, ma);
        Derivation ni = node(Rule::kRImpI, substitute_label(rneg(body), y, v),
                             {to_empty(refute(c, minor, k))}, {ma});
        Derivation all = node(Rule::kForallI, RFormula::forall(v, rneg(body)), {ni}, {}, y);
        Derivation f = node(Rule::kRImpE, nil(), {ps[0], all});
        return close(c, f, k);
      }
      default:
        throw ExpansionUnavailable(std::string("no expansion for ") + std::string(rule_info(n.rule).name));
    }
  }

  int next_;
};

}  // namespace

Derivation expand_derived(const Derivation& d) {
  if (!has_derived_rules(d)) return d;
  Expander e(max_marker(d) + 1);
  return e.run(d);
}

bool has_derived_rules(const Derivation& d) {
  if (rule_info(d.rule()).cls == RuleClass::kDerived) return true;
  for (const auto& p : d.premises()) {
    if (has_derived_rules(p)) return true;
  }
  return false;
}

}  // namespace tenseproof
