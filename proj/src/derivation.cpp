#include "tenseproof/derivation.hpp"

#include <algorithm>
#include <stdexcept>

#include "tenseproof/patterns.hpp"

namespace tenseproof {

namespace {

using RC = RuleClass;

const std::vector<RuleInfo>& table() {
  static const std::vector<RuleInfo> t = {
      {Rule::kAssume, "assume", RC::kStructural, 0, false, -1},
      {Rule::kRaaBot, "raa_bot", RC::kCore, 1, false, 0},
      {Rule::kImpI, "imp_i", RC::kCore, 1, false, 0},
      {Rule::kImpE, "imp_e", RC::kCore, 2, false, 0},
      {Rule::kGI, "g_i", RC::kCore, 1, true, 0},
      {Rule::kGE, "g_e", RC::kCore, 2, false, 0},
      {Rule::kHI, "h_i", RC::kCore, 1, true, 0},
      {Rule::kHE, "h_e", RC::kCore, 2, false, 0},
      {Rule::kRaaEmpty, "raa_empty", RC::kCore, 1, false, 0},
      {Rule::kRImpI, "rimp_i", RC::kCore, 1, false, 0},
      {Rule::kRImpE, "rimp_e", RC::kCore, 2, false, 0},
      {Rule::kForallI, "forall_i", RC::kCore, 1, true, 0},
      {Rule::kForallE, "forall_e", RC::kCore, 1, false, 0},
      {Rule::kReflEq, "refl_eq", RC::kAxiom, 0, false, -1},
      {Rule::kIrreflLt, "irrefl_lt", RC::kAxiom, 0, false, -1},
      {Rule::kTransLt, "trans_lt", RC::kAxiom, 0, false, -1},
      {Rule::kConn, "conn", RC::kAxiom, 0, false, -1},
      {Rule::kMon, "mon", RC::kCore, 2, false, 0},
      {Rule::kUf1, "uf1", RC::kCore, 1, false, 0},
      {Rule::kUf2, "uf2", RC::kCore, 1, false, 0},
      {Rule::kFirst, "first", RC::kAxiom, 0, false, -1},
      {Rule::kFinal, "final", RC::kAxiom, 0, false, -1},
      {Rule::kLSer, "lser", RC::kAxiom, 0, false, -1},
      {Rule::kRSer, "rser", RC::kAxiom, 0, false, -1},
      {Rule::kDens, "dens", RC::kAxiom, 0, false, -1},
      {Rule::kLDiscr, "ldiscr", RC::kAxiom, 0, false, -1},
      {Rule::kRDiscr, "rdiscr", RC::kAxiom, 0, false, -1},
      {Rule::kXI, "x_i", RC::kCore, 1, true, 0},
      {Rule::kXE, "x_e", RC::kCore, 2, false, 0},
      {Rule::kFI, "f_i", RC::kDerived, 2, false, 0},
      {Rule::kFE, "f_e", RC::kDerived, 2, true, 0},
      {Rule::kPI, "p_i", RC::kDerived, 2, false, 0},
      {Rule::kPE, "p_e", RC::kDerived, 2, true, 0},
      {Rule::kNotI, "not_i", RC::kDerived, 1, false, 0},
      {Rule::kNotE, "not_e", RC::kDerived, 2, false, 0},
      {Rule::kAndI, "and_i", RC::kDerived, 2, false, 0},
      {Rule::kAndE1, "and_e1", RC::kDerived, 1, false, 0},
      {Rule::kAndE2, "and_e2", RC::kDerived, 1, false, 0},
      {Rule::kOrI1, "or_i1", RC::kDerived, 1, false, 0},
      {Rule::kOrI2, "or_i2", RC::kDerived, 1, false, 0},
      {Rule::kOrE, "or_e", RC::kDerived, 3, false, 0},
      {Rule::kRNotI, "rnot_i", RC::kDerived, 1, false, 0},
      {Rule::kRNotE, "rnot_e", RC::kDerived, 2, false, 0},
      {Rule::kRAndI, "rand_i", RC::kDerived, 2, false, 0},
      {Rule::kRAndE1, "rand_e1", RC::kDerived, 1, false, 0},
      {Rule::kRAndE2, "rand_e2", RC::kDerived, 1, false, 0},
      {Rule::kROrI1, "ror_i1", RC::kDerived, 1, false, 0},
      {Rule::kROrI2, "ror_i2", RC::kDerived, 1, false, 0},
      {Rule::kROrE, "ror_e", RC::kDerived, 3, false, 0},
      {Rule::kExI, "exists_i", RC::kDerived, 1, false, 0},
      {Rule::kExE, "exists_e", RC::kDerived, 2, true, 0},
  };
  return t;
}

}  // namespace

const std::vector<RuleInfo>& all_rules() { return table(); }

const RuleInfo& rule_info(Rule r) {
  for (const auto& i : table()) {
    if (i.rule == r) return i;
  }
  throw std::logic_error("rule_info: unknown rule");
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& i : table()) {
    if (i.name == name) return i.rule;
  }
  return std::nullopt;
}

bool is_intro(Rule r) {
  switch (r) {
    case Rule::kImpI:
    case Rule::kGI:
    case Rule::kHI:
    case Rule::kXI:
    case Rule::kRImpI:
    case Rule::kForallI:
      return true;
    default:
      return false;
  }
}

bool is_elim(Rule r) {
  switch (r) {
    case Rule::kImpE:
    case Rule::kGE:
    case Rule::kHE:
    case Rule::kXE:
    case Rule::kRImpE:
    case Rule::kForallE:
      return true;
    default:
      return false;
  }
}

bool is_falsum_rule(Rule r) {
  return r == Rule::kRaaBot || r == Rule::kRaaEmpty || r == Rule::kUf1 || r == Rule::kUf2;
}

bool discharges_into(Rule r, std::size_t i) {
  switch (r) {
    case Rule::kRaaBot:
    case Rule::kImpI:
    case Rule::kGI:
    case Rule::kHI:
    case Rule::kXI:
    case Rule::kRaaEmpty:
    case Rule::kRImpI:
    case Rule::kNotI:
    case Rule::kRNotI:
      return i == 0;
    case Rule::kFE:
    case Rule::kPE:
    case Rule::kExE:
      return i == 1;
    case Rule::kOrE:
    case Rule::kROrE:
      return i == 1 || i == 2;
    default:
      return false;
  }
}

std::string path_string(const NodePath& p) {
  std::string s = "/";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += "/";
    s += std::to_string(p[i]);
  }
  return s;
}

// ------------------------------------------------------------- Derivation

Derivation Derivation::assume(Judgment j, std::optional<int> marker) {
  Node n;
  n.conclusion = std::move(j);
  n.rule = Rule::kAssume;
  n.marker = marker;
  return Derivation(std::move(n));
}

Derivation Derivation::make(Rule r, Judgment conclusion, std::vector<Derivation> premises,
                            std::vector<int> discharges, std::optional<Label> fresh) {
  Node n;
  n.conclusion = std::move(conclusion);
  n.rule = r;
  n.premises = std::move(premises);
  n.discharges = std::move(discharges);
  n.fresh = std::move(fresh);
  return Derivation(std::move(n));
}

std::size_t Derivation::size() const {
  std::size_t n = 1;
  for (const auto& p : premises()) n += p.size();
  return n;
}

const Derivation& Derivation::at(const NodePath& p) const {
  const Derivation* d = this;
  for (std::size_t i : p) d = &d->premise(i);
  return *d;
}

Derivation Derivation::replace_at(const NodePath& p, const Derivation& sub) const {
  if (p.empty()) return sub;
  NodePath rest(p.begin() + 1, p.end());
  std::vector<Derivation> ps = premises();
  ps.at(p[0]) = ps.at(p[0]).replace_at(rest, sub);
  return with_premises(std::move(ps));
}

Derivation Derivation::with_conclusion(Judgment j) const {
  Node n = node();
  n.conclusion = std::move(j);
  return Derivation(std::move(n));
}

Derivation Derivation::with_premises(std::vector<Derivation> ps) const {
  Node n = node();
  n.premises = std::move(ps);
  return Derivation(std::move(n));
}

bool operator==(const Derivation& a, const Derivation& b) {
  if (a.same_handle(b)) return true;
  const auto& x = a.node();
  const auto& y = b.node();
  if (x.rule != y.rule || x.marker != y.marker || x.discharges != y.discharges ||
      x.fresh != y.fresh || x.premises.size() != y.premises.size()) {
    return false;
  }
  if (!alpha_equal(x.conclusion, y.conclusion)) return false;
  for (std::size_t i = 0; i < x.premises.size(); ++i) {
    if (!(x.premises[i] == y.premises[i])) return false;
  }
  return true;
}

namespace {

void postorder(const Derivation& d, NodePath& cur, std::vector<NodePath>& out) {
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    cur.push_back(i);
    postorder(d.premise(i), cur, out);
    cur.pop_back();
  }
  out.push_back(cur);
}

// Rename leaves marked `from` that are still open at the top of `d`.
Derivation rename_open_marker(const Derivation& d, int from, int to) {
  const auto& n = d.node();
  if (d.is_leaf()) {
    if (n.rule == Rule::kAssume && n.marker == from) {
      Derivation::Node m = n;
      m.marker = to;
      return Derivation(std::move(m));
    }
    return d;
  }
  bool binds = std::find(n.discharges.begin(), n.discharges.end(), from) != n.discharges.end();
  std::vector<Derivation> ps = n.premises;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (binds && discharges_into(n.rule, i)) continue;
    ps[i] = rename_open_marker(ps[i], from, to);
  }
  return d.with_premises(std::move(ps));
}

}  // namespace

std::vector<NodePath> postorder_paths(const Derivation& d) {
  std::vector<NodePath> out;
  NodePath cur;
  postorder(d, cur, out);
  return out;
}

int max_marker(const Derivation& d) {
  int m = d.node().marker.value_or(0);
  for (int k : d.node().discharges) m = std::max(m, k);
  for (const auto& p : d.premises()) m = std::max(m, max_marker(p));
  return m;
}

std::set<Label> names_in(const Derivation& d) {
  std::set<Label> out = all_names(d.conclusion());
  if (d.node().fresh) out.insert(*d.node().fresh);
  for (const auto& p : d.premises()) {
    auto s = names_in(p);
    out.insert(s.begin(), s.end());
  }
  return out;
}

std::set<Label> labels_of(const Derivation& d) {
  std::set<Label> out = labels_of(d.conclusion());
  for (const auto& p : d.premises()) {
    auto s = labels_of(p);
    out.insert(s.begin(), s.end());
  }
  return out;
}

std::set<std::string> atoms_in(const Derivation& d) {
  std::set<std::string> out = atoms_of(d.conclusion());
  for (const auto& p : d.premises()) {
    auto s = atoms_in(p);
    out.insert(s.begin(), s.end());
  }
  return out;
}

Derivation substitute_label(const Derivation& d, const Label& nl, const Label& ol) {
  if (nl == ol) return d;
  Derivation::Node n = d.node();
  n.conclusion = substitute_label(n.conclusion, nl, ol);
  if (n.fresh && *n.fresh == ol) n.fresh = nl;
  for (auto& p : n.premises) p = substitute_label(p, nl, ol);
  return Derivation(std::move(n));
}

Derivation freshen_bound(const Derivation& d, NameSupply& names, int& next_marker) {
  Derivation::Node n = d.node();
  if (!n.fresh && n.rule == Rule::kForallI && !is_labeled(n.conclusion)) {
    if (auto q = pat::forall(as_rwff(n.conclusion))) n.fresh = q->first;
  }
  if (n.fresh) {
    Label y = *n.fresh;
    Label y2 = names.fresh();
    for (std::size_t i = 0; i < n.premises.size(); ++i) {
      bool scoped = rule_info(n.rule).arity == 1 || discharges_into(n.rule, i);
      if (scoped) n.premises[i] = substitute_label(n.premises[i], y2, y);
    }
    n.fresh = y2;
  }
  for (int& k : n.discharges) {
    int k2 = next_marker++;
    for (std::size_t i = 0; i < n.premises.size(); ++i) {
      if (discharges_into(n.rule, i)) n.premises[i] = rename_open_marker(n.premises[i], k, k2);
    }
    k = k2;
  }
  for (auto& p : n.premises) p = freshen_bound(p, names, next_marker);
  return Derivation(std::move(n));
}

namespace {

bool equal_modulo(const Derivation& a, const Derivation& b) {
  const auto& x = a.node();
  const auto& y = b.node();
  if (x.rule != y.rule || x.marker != y.marker || x.fresh != y.fresh ||
      x.premises.size() != y.premises.size()) {
    return false;
  }
  std::vector<int> dx = x.discharges, dy = y.discharges;
  std::sort(dx.begin(), dx.end());
  std::sort(dy.begin(), dy.end());
  if (dx != dy) return false;
  if (!same(x.conclusion, y.conclusion)) return false;
  for (std::size_t i = 0; i < x.premises.size(); ++i) {
    if (!equal_modulo(x.premises[i], y.premises[i])) return false;
  }
  return true;
}

}  // namespace

bool equal_up_to_renaming(const Derivation& a, const Derivation& b) {
  // Canonical names use a prefix the surface grammar cannot produce.
  NameSupply na("_e"), nb("_e");
  int ma = 1000000, mb = 1000000;
  return equal_modulo(freshen_bound(a, na, ma), freshen_bound(b, nb, mb));
}

}  // namespace tenseproof
