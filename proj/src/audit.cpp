#include "tenseproof/audit.hpp"

#include <map>

#include "tenseproof/checker.hpp"
#include "tenseproof/parser.hpp"
#include "tenseproof/patterns.hpp"

namespace tenseproof {

namespace {

struct Binder {
  NodePath path;
  Rule rule;
};

class Auditor {
 public:
  explicit Auditor(const Derivation& d) : d_(d) {
    ProofContext open = open_assumptions(d);
    for (const auto& l : open.gamma()) s_l_.push_back(expand(l.formula));
    for (const auto& r : open.delta()) s_r_.push_back(expand(r));
    if (is_labeled(d.conclusion())) {
      s_l_.push_back(expand(as_lwff(d.conclusion()).formula));
    } else {
      s_r_.push_back(expand(as_rwff(d.conclusion())));
    }
    NodePath path;
    std::map<int, std::vector<Binder>> env;
    scan(d, path, env);
  }

  AuditReport run() {
    AuditReport rep;
    for (const auto& p : postorder_paths(d_)) {
      const Derivation& n = d_.at(p);
      std::string clause = justify(n, p);
      rep.entries.push_back({p, render(n.conclusion()), clause});
      if (clause.empty()) rep.violations.push_back(p);
    }
    rep.ok = rep.violations.empty();
    return rep;
  }

 private:
  // Binding sites, axiom instances and modal eigen-assumptions.
  void scan(const Derivation& d, NodePath& path, std::map<int, std::vector<Binder>>& env) {
    const auto& n = d.node();
    if (rule_info(n.rule).cls == RuleClass::kAxiom) s_r_.push_back(expand(as_rwff(n.conclusion)));
    if (n.rule == Rule::kAssume && n.marker) {
      auto it = env.find(*n.marker);
      if (it != env.end() && !it->second.empty()) {
        const Binder& b = it->second.back();
        binder_[path] = b;
        ++bound_count_[b.path];
        bool modal = b.rule == Rule::kGI || b.rule == Rule::kHI || b.rule == Rule::kXI;
        if (modal && !is_labeled(n.conclusion)) modal_rel_.push_back(expand(as_rwff(n.conclusion)));
      }
    }
    for (std::size_t i = 0; i < n.premises.size(); ++i) {
      bool binds = discharges_into(n.rule, i);
      if (binds) {
        for (int m : n.discharges) env[m].push_back({path, n.rule});
      }
      path.push_back(i);
      scan(n.premises[i], path, env);
      path.pop_back();
      if (binds) {
        for (int m : n.discharges) env[m].pop_back();
      }
    }
  }

  bool in_sl(const Formula& b) const {
    for (const auto& s : s_l_) {
      if (is_subformula(b, s)) return true;
    }
    return false;
  }

  bool in_sr(const RFormula& r) const {
    for (const auto& s : s_r_) {
      if (is_subformula_instance(r, s)) return true;
    }
    return false;
  }

  // Leaf at `p` is a negated assumption discharged by `raa` whose body is in S.
  bool raa_negation(const NodePath& p, Rule raa) const {
    const Derivation& leaf = d_.at(p);
    if (!leaf.is_leaf() || leaf.rule() != Rule::kAssume) return false;
    auto it = binder_.find(p);
    if (it == binder_.end() || it->second.rule != raa) return false;
    const Judgment& j = leaf.conclusion();
    if (is_labeled(j)) {
      auto parts = pat::imp(as_lwff(j).formula);
      return parts && pat::is_falsum(parts->second) && in_sl(parts->first);
    }
    auto parts = pat::rimp(as_rwff(j));
    return parts && pat::is_empty(parts->second) && in_sr(parts->first);
  }

  std::string justify(const Derivation& n, const NodePath& p) const {
    const Judgment& j = n.conclusion();
    NodePath major = p;
    major.push_back(0);
    if (is_labeled(j)) {
      Formula b = expand(as_lwff(j).formula);
      bool bot = pat::is_falsum(b);
      if (in_sl(b)) return "1(i)";
      if (raa_negation(p, Rule::kRaaBot)) return "1(ii)";
      if (bot && n.rule() == Rule::kImpE && raa_negation(major, Rule::kRaaBot)) return "1(iii)";
      if (bot && n.rule() == Rule::kRaaBot && !bound_count_.count(p)) return "1(iv)";
      if (bot && n.rule() == Rule::kUf2) return "1(v)";
      return "";
    }
    RFormula r = expand(as_rwff(j));
    bool empty = pat::is_empty(r);
    if (in_sr(r)) return "2(i)";
    if (raa_negation(p, Rule::kRaaEmpty)) return "2(ii)";
    if (empty && n.rule() == Rule::kRImpE && raa_negation(major, Rule::kRaaEmpty)) return "2(iii)";
    if (empty && n.rule() == Rule::kUf1) return "2(iv)";
    if (n.rule() == Rule::kMon) return "2(v)";
    for (const auto& m : modal_rel_) {
      if (is_subformula_instance(r, m)) return "2(vi)";
    }
    return "";
  }

  const Derivation& d_;
  std::vector<Formula> s_l_;
  std::vector<RFormula> s_r_;
  std::vector<RFormula> modal_rel_;
  std::map<NodePath, Binder> binder_;
  std::map<NodePath, int> bound_count_;
};

}  // namespace

AuditReport audit_subformula(const Derivation& d) { return Auditor(d).run(); }

}  // namespace tenseproof
