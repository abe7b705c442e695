#include "tenseproof/normalizer.hpp"

#include <algorithm>
#include <cstdlib>

#include "build.hpp"
#include "tenseproof/expand.hpp"
#include "tenseproof/patterns.hpp"
#include "tenseproof/rules.hpp"

namespace tenseproof {

std::string_view redex_kind_name(RedexKind k) {
  switch (k) {
    case RedexKind::kMaximalFormula: return "MaximalFormula";
    case RedexKind::kMonDisorder: return "MonDisorder";
    case RedexKind::kRedundantFalsum: return "RedundantFalsum";
    case RedexKind::kRedundantMon: return "RedundantMon";
    case RedexKind::kUnrestrictedRaa: return "UnrestrictedRAA";
    case RedexKind::kUnrestrictedMon: return "UnrestrictedMon";
    case RedexKind::kDerivedRule: return "DerivedRule";
  }
  return "?";
}

std::string Redex::describe() const {
  std::string s(redex_kind_name(kind));
  if (!detail.empty()) s += "(" + detail + ")";
  return s + " at " + path_string(site);
}

nlohmann::json TraceRecord::to_json() const {
  return {{"step", step}, {"kind", kind}, {"site", site}, {"nodes", nodes}};
}

std::size_t default_step_bound() {
  if (const char* env = std::getenv("TENSEPROOF_STEP_BOUND")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
    }
  }
  return 1'000'000;
}

NormalizeOptions::NormalizeOptions() : step_bound(default_step_bound()) {}

namespace {

using namespace build;

bool is_atom_lwff(const Judgment& j) {
  return is_labeled(j) && expand(as_lwff(j).formula).kind() == FormulaKind::kAtom;
}

bool is_falsum_lwff(const Judgment& j) {
  return is_labeled(j) && pat::is_falsum(expand(as_lwff(j).formula));
}

bool is_rel_atom(const Judgment& j) {
  if (is_labeled(j)) return false;
  auto k = expand(as_rwff(j)).kind();
  return k == RFormulaKind::kLess || k == RFormulaKind::kEq;
}

struct MonView {
  Label a, b;
  std::vector<int> occ;
};

std::optional<MonView> mon_view(const Derivation& d) {
  if (d.rule() != Rule::kMon || d.premises().size() != 2) return std::nullopt;
  const Judgment& e = d.premise(1).conclusion();
  if (is_labeled(e)) return std::nullopt;
  auto ab = pat::eq(expand(as_rwff(e)));
  if (!ab) return std::nullopt;
  auto occ = replaced_occurrences(d.premise(0).conclusion(), d.conclusion(), ab->first, ab->second);
  if (!occ) return std::nullopt;
  return MonView{ab->first, ab->second, *occ};
}

bool mon_restricted(const Derivation& d, const MonView& v) {
  const Judgment& p = d.premise(0).conclusion();
  return v.occ.size() == 1 && v.a != v.b && (is_atom_lwff(p) || is_rel_atom(p));
}

bool raa_restricted(const Derivation& d) {
  if (d.rule() == Rule::kRaaBot) {
    return is_atom_lwff(d.conclusion()) || is_falsum_lwff(d.conclusion());
  }
  if (d.rule() == Rule::kRaaEmpty) return is_rel_atom(d.conclusion());
  return true;
}

std::optional<Rule> intro_for(Rule elim) {
  switch (elim) {
    case Rule::kImpE: return Rule::kImpI;
    case Rule::kGE: return Rule::kGI;
    case Rule::kHE: return Rule::kHI;
    case Rule::kXE: return Rule::kXI;
    case Rule::kRImpE: return Rule::kRImpI;
    case Rule::kForallE: return Rule::kForallI;
    default: return std::nullopt;
  }
}

std::string pair_name(Rule elim) {
  switch (elim) {
    case Rule::kImpE: return "ImpI/ImpE";
    case Rule::kGE: return "GI/GE";
    case Rule::kHE: return "HI/HE";
    case Rule::kXE: return "XI/XE";
    case Rule::kRImpE: return "RImpI/RImpE";
    case Rule::kForallE: return "ForallI/ForallE";
    default: return "?";
  }
}

// Upper rule first.
std::optional<std::string> falsum_pair(Rule upper, Rule lower) {
  if (upper == Rule::kRaaBot && lower == Rule::kRaaBot) return "RAA_bot;RAA_bot";
  if (upper == Rule::kRaaBot && lower == Rule::kUf1) return "RAA_bot;uf1";
  if (upper == Rule::kUf1 && lower == Rule::kUf2) return "uf1;uf2";
  if (upper == Rule::kUf2 && lower == Rule::kUf1) return "uf2;uf1";
  return std::nullopt;
}

// Mon nodes from `d` upwards along major premises, bottom first.
std::vector<const Derivation*> mon_chain(const Derivation& d) {
  std::vector<const Derivation*> out;
  const Derivation* cur = &d;
  while (cur->rule() == Rule::kMon && cur->premises().size() == 2) {
    out.push_back(cur);
    cur = &cur->premise(0);
  }
  return out;
}

void chain_redexes(const Derivation& d, const NodePath& path, std::vector<Redex>& out) {
  auto chain = mon_chain(d);
  std::vector<int> pos;
  for (const Derivation* m : chain) {
    auto v = mon_view(*m);
    if (!v || !mon_restricted(*m, *v)) return;
    pos.push_back(v->occ[0]);
  }
  // Top to bottom the positions must not decrease.
  if (!std::is_sorted(pos.rbegin(), pos.rend())) {
    out.push_back({RedexKind::kMonDisorder, path, "", 0});
    return;
  }
  NodePath p = path;
  for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
    if (pos[i] == pos[i + 1]) {
      out.push_back({RedexKind::kRedundantMon, p, "position " + std::to_string(pos[i] + 1), 0});
    }
    p.push_back(0);
  }
}

void collect(const Derivation& d, NodePath& path, bool mon_major, std::vector<Redex>& out) {
  const auto& n = d.node();
  for (std::size_t i = 0; i < n.premises.size(); ++i) {
    path.push_back(i);
    collect(n.premises[i], path, n.rule == Rule::kMon && i == 0, out);
    path.pop_back();
  }
  const RuleInfo& info = rule_info(n.rule);
  if (static_cast<int>(n.premises.size()) != info.arity) return;
  if (info.cls == RuleClass::kDerived) {
    out.push_back({RedexKind::kDerivedRule, path, std::string(info.name), 0});
    return;
  }
  if ((n.rule == Rule::kRaaBot || n.rule == Rule::kRaaEmpty) && !raa_restricted(d)) {
    out.push_back({RedexKind::kUnrestrictedRaa, path, std::string(info.name), 0});
  }
  if (n.rule == Rule::kMon) {
    auto v = mon_view(d);
    if (v && !mon_restricted(d, *v)) out.push_back({RedexKind::kUnrestrictedMon, path, "", 0});
    if (!mon_major) chain_redexes(d, path, out);
  }
  if (auto intro = intro_for(n.rule)) {
    if (n.premises[0].rule() == *intro) {
      out.push_back({RedexKind::kMaximalFormula, path, pair_name(n.rule),
                     grade(n.premises[0].conclusion())});
    }
  }
  if (info.arity == 1 && (n.rule == Rule::kRaaBot || n.rule == Rule::kUf1 || n.rule == Rule::kUf2)) {
    if (auto name = falsum_pair(n.premises[0].rule(), n.rule)) {
      out.push_back({RedexKind::kRedundantFalsum, path, *name, 0});
    }
  }
}

bool proper_prefix(const NodePath& a, const NodePath& b) {
  return a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin());
}

class Reducer {
 public:
  explicit Reducer(const Derivation& whole) : s_(whole) {}

  Derivation apply(const Derivation& sub, const Redex& r) {
    Derivation out = sub;
    switch (r.kind) {
      case RedexKind::kDerivedRule: out = expand_derived(sub); break;
      case RedexKind::kUnrestrictedRaa: out = restrict_raa(sub); break;
      case RedexKind::kUnrestrictedMon: out = restrict_mon(sub); break;
      case RedexKind::kMaximalFormula: out = detour(sub); break;
      case RedexKind::kMonDisorder: out = permute_mons(sub); break;
      case RedexKind::kRedundantMon: out = compose_mons(sub); break;
      case RedexKind::kRedundantFalsum: out = collapse_falsum(sub, r.detail); break;
    }
    return out.with_conclusion(sub.conclusion());
  }

 private:
  // Replace every open leaf of `d` marked by one of `ms` and matching `shape`.
  static Derivation graft(Derivation d, const std::vector<int>& ms, const Judgment& shape,
                          const std::function<Derivation(const Judgment&)>& make) {
    for (int m : ms) {
      d = replace_open(d, m, [&](const Judgment& j) -> std::optional<Derivation> {
        if (same(j, shape)) return make(j);
        return std::nullopt;
      });
    }
    return d;
  }

  // A derivation of b = a from one of a = b.
  Derivation symmetric(const Derivation& eq_ab, const Label& a, const Label& b) {
    RFormula refl = *axiom_template(Rule::kReflEq);
    Derivation aa = node(Rule::kForallE, RFormula::eq(a, a), {node(Rule::kReflEq, refl, {})});
    return node(Rule::kMon, RFormula::eq(b, a), {aa, eq_ab});
  }

  Derivation restrict_raa(const Derivation& d) {
    const auto& n = d.node();
    const Derivation& pi = n.premises[0];
    if (n.rule == Rule::kRaaBot) {
      const Lwff& c = as_lwff(n.conclusion);
      const Label& x = c.label;
      Formula a = expand(c.formula);
      Judgment shape = lw(x, neg(c.formula));
      if (a.kind() == FormulaKind::kImplies) {
        const Formula& b = a.lhs();
        const Formula& cc = a.rhs();
        int n1 = s_.marker(), n2 = s_.marker(), n3 = s_.marker();
        auto repl = [&](const Judgment&) {
          Derivation e1 = node(Rule::kImpE, lw(x, cc), {hyp(lw(x, a), n1), hyp(lw(x, b), n3)});
          Derivation e2 = node(Rule::kImpE, lw(x, bot()), {hyp(lw(x, neg(cc)), n2), e1});
          return node(Rule::kImpI, lw(x, neg(a)), {e2}, {n1});
        };
        Derivation body = node(Rule::kRaaBot, lw(x, cc), {graft(pi, n.discharges, shape, repl)}, {n2});
        return node(Rule::kImpI, n.conclusion, {body}, {n3});
      }
      if (a.kind() == FormulaKind::kG || a.kind() == FormulaKind::kH || a.kind() == FormulaKind::kX) {
        const Formula& b = a.lhs();
        Label v = s_.label();
        int n1 = s_.marker(), n2 = s_.marker(), n3 = s_.marker();
        Rule elim = a.kind() == FormulaKind::kG ? Rule::kGE : a.kind() == FormulaKind::kH ? Rule::kHE : Rule::kXE;
        Rule intro = a.kind() == FormulaKind::kG ? Rule::kGI : a.kind() == FormulaKind::kH ? Rule::kHI : Rule::kXI;
        RFormula rel = a.kind() == FormulaKind::kG   ? RFormula::less(x, v)
                       : a.kind() == FormulaKind::kH ? RFormula::less(v, x)
                                                     : RFormula::prec(x, v);
        auto repl = [&](const Judgment&) {
          Derivation inner = node(elim, lw(v, b), {hyp(lw(x, a), n1), hyp(rel, n3)});
          Derivation f = node(Rule::kImpE, lw(v, bot()), {hyp(lw(v, neg(b)), n2), inner});
          return node(Rule::kImpI, lw(x, neg(a)), {node(Rule::kRaaBot, lw(x, bot()), {f})}, {n1});
        };
        Derivation body = node(Rule::kRaaBot, lw(v, b), {graft(pi, n.discharges, shape, repl)}, {n2});
        return node(intro, n.conclusion, {body}, {n3}, v);
      }
      return d;
    }
    const RFormula& rho = as_rwff(n.conclusion);
    RFormula core = expand(rho);
    Judgment shape = rneg(rho);
    switch (core.kind()) {
      case RFormulaKind::kEmpty: {
        auto repl = [&](const Judgment& j) {
          int m = s_.marker();
          return node(Rule::kRImpI, j, {hyp(nil(), m)}, {m});
        };
        return graft(pi, n.discharges, shape, repl);
      }
      case RFormulaKind::kRImplies: {
        const RFormula& r1 = core.lhs();
        const RFormula& r2 = core.rhs();
        int n1 = s_.marker(), n2 = s_.marker(), n3 = s_.marker();
        auto repl = [&](const Judgment&) {
          Derivation e1 = node(Rule::kRImpE, r2, {hyp(core, n1), hyp(r1, n3)});
          Derivation e2 = node(Rule::kRImpE, nil(), {hyp(rneg(r2), n2), e1});
          return node(Rule::kRImpI, rneg(core), {e2}, {n1});
        };
        Derivation body = node(Rule::kRaaEmpty, r2, {graft(pi, n.discharges, shape, repl)}, {n2});
        return node(Rule::kRImpI, n.conclusion, {body}, {n3});
      }
      case RFormulaKind::kForall: {
        Label u = s_.label();
        RFormula su = substitute_label(core.body(), u, core.var());
        int n1 = s_.marker(), n2 = s_.marker();
        auto repl = [&](const Judgment&) {
          Derivation inst = node(Rule::kForallE, su, {hyp(core, n2)});
          Derivation f = node(Rule::kRImpE, nil(), {hyp(rneg(su), n1), inst});
          return node(Rule::kRImpI, rneg(core), {f}, {n2});
        };
        Derivation body = node(Rule::kRaaEmpty, su, {graft(pi, n.discharges, shape, repl)}, {n1});
        return node(Rule::kForallI, n.conclusion, {body}, {}, u);
      }
      default:
        return d;
    }
  }

  Derivation restrict_mon(const Derivation& d) {
    MonView v = *mon_view(d);
    const Derivation& pm = d.premise(0);
    const Derivation& pe = d.premise(1);
    const Judgment& phi = pm.conclusion();
    const Judgment& psi = d.conclusion();
    const Label& a = v.a;
    const Label& b = v.b;
    if (v.occ.empty() || a == b) return pm;
    if (is_falsum_lwff(phi)) return node(Rule::kRaaBot, psi, {pm});
    if (is_atom_lwff(phi)) return d;
    if (is_rel_atom(phi)) {
      if (v.occ.size() < 2) return d;
      Judgment mid = replace_occurrences(phi, {v.occ[0]}, b);
      return node(Rule::kMon, psi, {node(Rule::kMon, mid, {pm, pe}), pe});
    }
    Derivation sym = symmetric(pe, a, b);
    if (is_labeled(phi)) {
      Formula c = expand(as_lwff(phi).formula);
      const Label& x = a;
      const Label& y = b;
      if (c.kind() == FormulaKind::kImplies) {
        int m = s_.marker();
        Derivation xb = node(Rule::kMon, lw(x, c.lhs()), {hyp(lw(y, c.lhs()), m), sym});
        Derivation xd = node(Rule::kImpE, lw(x, c.rhs()), {pm, xb});
        Derivation yd = node(Rule::kMon, lw(y, c.rhs()), {xd, pe});
        return node(Rule::kImpI, psi, {yd}, {m});
      }
      Label z = s_.label();
      int m = s_.marker();
      Rule elim = c.kind() == FormulaKind::kG ? Rule::kGE : c.kind() == FormulaKind::kH ? Rule::kHE : Rule::kXE;
      Rule intro = c.kind() == FormulaKind::kG ? Rule::kGI : c.kind() == FormulaKind::kH ? Rule::kHI : Rule::kXI;
      auto rel = [&](const Label& from) {
        return c.kind() == FormulaKind::kG   ? RFormula::less(from, z)
               : c.kind() == FormulaKind::kH ? RFormula::less(z, from)
                                             : RFormula::prec(from, z);
      };
      Derivation mr = node(Rule::kMon, rel(x), {hyp(rel(y), m), sym});
      Derivation el = node(elim, lw(z, c.lhs()), {pm, mr});
      return node(intro, psi, {el}, {m}, z);
    }
    RFormula c = expand(as_rwff(phi));
    if (c.kind() == RFormulaKind::kRImplies) {
      int c1 = occurrence_count(Judgment(c.lhs()));
      std::vector<int> o1, o2;
      for (int o : v.occ) (o < c1 ? o1 : o2).push_back(o < c1 ? o : o - c1);
      Judgment r1 = c.lhs();
      Judgment r1b = replace_occurrences(r1, o1, b);
      Judgment r2b = replace_occurrences(Judgment(c.rhs()), o2, b);
      int m = s_.marker();
      Derivation back = o1.empty() ? hyp(r1, m) : node(Rule::kMon, r1, {hyp(r1b, m), sym});
      Derivation e = node(Rule::kRImpE, c.rhs(), {pm, back});
      Derivation fwd = o2.empty() ? e : node(Rule::kMon, r2b, {e, pe});
      return node(Rule::kRImpI, psi, {fwd}, {m});
    }
    if (c.kind() == RFormulaKind::kForall) {
      Label u = s_.label();
      RFormula su = substitute_label(c.body(), u, c.var());
      Derivation inst = node(Rule::kForallE, su, {pm});
      Derivation moved = node(Rule::kMon, replace_occurrences(Judgment(su), v.occ, b), {inst, pe});
      return node(Rule::kForallI, psi, {moved}, {}, u);
    }
    return d;
  }

  Derivation detour(const Derivation& e) {
    Derivation intro = freshen_bound(e.premise(0), s_.names, s_.next_marker);
    const auto& in = intro.node();
    const Derivation& pi = in.premises[0];
    switch (e.rule()) {
      case Rule::kImpE: {
        const Lwff& maj = as_lwff(intro.conclusion());
        Judgment ant = lw(maj.label, pat::imp(maj.formula)->first);
        const Derivation& minor = e.premise(1);
        return graft(pi, in.discharges, ant, [&](const Judgment&) { return minor; });
      }
      case Rule::kRImpE: {
        Judgment ant = pat::rimp(as_rwff(intro.conclusion()))->first;
        const Derivation& minor = e.premise(1);
        return graft(pi, in.discharges, ant, [&](const Judgment&) { return minor; });
      }
      case Rule::kGE:
      case Rule::kHE:
      case Rule::kXE: {
        const Label& x = as_lwff(intro.conclusion()).label;
        const Label& y = *in.fresh;
        const Label& z = as_lwff(e.conclusion()).label;
        RFormula rel = e.rule() == Rule::kGE   ? RFormula::less(x, z)
                       : e.rule() == Rule::kHE ? RFormula::less(z, x)
                                               : RFormula::prec(x, z);
        const Derivation& minor = e.premise(1);
        return graft(substitute_label(pi, z, y), in.discharges, rel,
                     [&](const Judgment&) { return minor; });
      }
      case Rule::kForallE: {
        auto [v, body] = *pat::forall(as_rwff(intro.conclusion()));
        Label u = in.fresh.value_or(v);
        Label w = match_instance(body, v, as_rwff(e.conclusion())).value_or(u);
        return substitute_label(pi, w, u);
      }
      default:
        return e;
    }
  }

  Derivation permute_mons(const Derivation& bottom) {
    auto chain = mon_chain(bottom);
    struct Item {
      int pos;
      Label to;
      Derivation eq;
    };
    std::vector<Item> items;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      MonView v = *mon_view(**it);
      items.push_back({v.occ[0], v.b, (*it)->premise(1)});
    }
    std::stable_sort(items.begin(), items.end(), [](const Item& p, const Item& q) { return p.pos < q.pos; });
    Derivation cur = chain.back()->premise(0);
    for (const auto& item : items) {
      Judgment c = replace_occurrences(cur.conclusion(), {item.pos}, item.to);
      cur = node(Rule::kMon, c, {cur, item.eq});
    }
    return cur;
  }

  Derivation compose_mons(const Derivation& lower) {
    const Derivation& upper = lower.premise(0);
    const Derivation& base = upper.premise(0);
    MonView vu = *mon_view(upper);
    MonView vl = *mon_view(lower);
    const Label& a = vu.a;
    const Label& c = vl.b;
    if (a == c) return base;
    Derivation ac = node(Rule::kMon, RFormula::eq(a, c), {upper.premise(1), lower.premise(1)});
    return node(Rule::kMon, lower.conclusion(), {base, ac});
  }

  // Remove an RAA_bot node; its discharged y:false->false leaves become trivial proofs.
  Derivation unwrap_raa(const Derivation& u) {
    const Label& y = as_lwff(u.conclusion()).label;
    Judgment shape = lw(y, neg(bot()));
    return graft(u.premise(0), u.node().discharges, shape, [&](const Judgment& j) {
      int m = s_.marker();
      return node(Rule::kImpI, j, {hyp(lw(y, bot()), m)}, {m});
    });
  }

  Derivation collapse_falsum(const Derivation& s, const std::string& which) {
    const Derivation& u = s.premise(0);
    if (which == "RAA_bot;RAA_bot") {
      return node(Rule::kRaaBot, s.conclusion(), {unwrap_raa(u)}, s.node().discharges);
    }
    if (which == "RAA_bot;uf1") return node(Rule::kUf1, s.conclusion(), {unwrap_raa(u)});
    if (which == "uf1;uf2") {
      const Derivation& pi = u.premise(0);
      if (as_lwff(pi.conclusion()).label == as_lwff(s.conclusion()).label) return pi;
      return node(Rule::kRaaBot, s.conclusion(), {pi});
    }
    if (which == "uf2;uf1") return u.premise(0);
    return s;
  }

  Supply s_;
};

Derivation apply_redex(const Derivation& d, const Redex& r) {
  Reducer red(d);
  return d.replace_at(r.site, red.apply(d.at(r.site), r));
}

}  // namespace

std::vector<Redex> find_redexes(const Derivation& d) {
  std::vector<Redex> out;
  NodePath path;
  collect(d, path, false, out);
  return out;
}

std::optional<Redex> choose_redex(const std::vector<Redex>& rs) {
  auto first_of = [&](RedexKind k) -> std::optional<Redex> {
    for (const auto& r : rs) {
      if (r.kind == k) return r;
    }
    return std::nullopt;
  };
  if (auto r = first_of(RedexKind::kDerivedRule)) return r;
  for (const auto& r : rs) {
    if (r.kind == RedexKind::kUnrestrictedRaa || r.kind == RedexKind::kUnrestrictedMon) return r;
  }
  // Highest grade among maximal formulas with no maximal formula of equal or
  // higher grade above them.
  const Redex* best = nullptr;
  for (const auto& r : rs) {
    if (r.kind != RedexKind::kMaximalFormula) continue;
    bool ok = std::none_of(rs.begin(), rs.end(), [&](const Redex& o) {
      return o.kind == RedexKind::kMaximalFormula && o.grade >= r.grade && proper_prefix(r.site, o.site);
    });
    if (ok && (!best || r.grade > best->grade)) best = &r;
  }
  if (best) return *best;
  if (auto r = first_of(RedexKind::kMonDisorder)) return r;
  if (auto r = first_of(RedexKind::kRedundantMon)) return r;
  return first_of(RedexKind::kRedundantFalsum);
}

Derivation restrict(const Derivation& d) {
  Derivation cur = d;
  while (true) {
    auto rs = find_redexes(cur);
    auto it = std::find_if(rs.begin(), rs.end(), [](const Redex& r) {
      return r.kind == RedexKind::kUnrestrictedRaa || r.kind == RedexKind::kUnrestrictedMon;
    });
    if (it == rs.end()) return cur;
    cur = apply_redex(cur, *it);
  }
}

Derivation reduce_step(const Derivation& d, const Redex& r) {
  auto rs = find_redexes(d);
  bool found = std::any_of(rs.begin(), rs.end(), [&](const Redex& o) {
    return o.kind == r.kind && o.site == r.site && o.detail == r.detail;
  });
  if (!found) throw RedexStale("no " + r.describe() + " in this derivation");
  return apply_redex(d, r);
}

Derivation normalize(const Derivation& d, const NormalizeOptions& opts) {
  Derivation cur = expand_derived(d);
  std::size_t step = 0;
  while (auto r = choose_redex(find_redexes(cur))) {
    if (step >= opts.step_bound) {
      throw NonTermination("normalization exceeded " + std::to_string(opts.step_bound) +
                           " steps; next redex " + r->describe() + ", tree size " +
                           std::to_string(cur.size()));
    }
    cur = apply_redex(cur, *r);
    ++step;
    if (opts.trace) {
      std::string kind(redex_kind_name(r->kind));
      if (!r->detail.empty()) kind += "(" + r->detail + ")";
      opts.trace({step, kind, path_string(r->site), cur.size()});
    }
  }
  return cur.with_conclusion(d.conclusion());
}

NormalReport diagnose_normal(const Derivation& d) {
  NormalReport rep;
  rep.diagnosis = find_redexes(d);
  rep.normal = rep.diagnosis.empty();
  return rep;
}

bool is_normal(const Derivation& d) { return find_redexes(d).empty(); }

}  // namespace tenseproof
