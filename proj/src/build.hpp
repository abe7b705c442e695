#ifndef TENSEPROOF_SRC_BUILD_HPP_
#define TENSEPROOF_SRC_BUILD_HPP_

#include <functional>
#include <optional>
#include <set>

#include "tenseproof/derivation.hpp"
#include "tenseproof/syntax.hpp"

// Small tree-building vocabulary for proof transformations.
namespace tenseproof::build {

inline Formula bot() { return Formula::falsum(); }
inline RFormula nil() { return RFormula::empty(); }
inline Formula neg(const Formula& a) { return Formula::implies(a, bot()); }
inline RFormula rneg(const RFormula& a) { return RFormula::implies(a, nil()); }
inline Lwff lw(const Label& l, const Formula& f) { return Lwff{l, f}; }

inline Derivation hyp(Judgment j, int marker) { return Derivation::assume(std::move(j), marker); }

inline Derivation node(Rule r, Judgment c, std::vector<Derivation> ps, std::vector<int> ds = {},
                       std::optional<Label> fresh = std::nullopt) {
  return Derivation::make(r, std::move(c), std::move(ps), std::move(ds), std::move(fresh));
}

// Fresh markers and labels for one transformation.
struct Supply {
  NameSupply names;
  int next_marker;

  explicit Supply(const Derivation& d) : names("w"), next_marker(max_marker(d) + 1) {
    names.reserve(names_in(d));
  }
  int marker() { return next_marker++; }
  Label label() { return names.fresh(); }
};

// Replace leaves marked `m` that are open at the top of `d`; `f` returns the
// replacement or nullopt to keep the leaf.
inline Derivation replace_open(const Derivation& d, int m,
                               const std::function<std::optional<Derivation>(const Judgment&)>& f) {
  const auto& n = d.node();
  if (d.is_leaf()) {
    if (n.rule == Rule::kAssume && n.marker == m) {
      if (auto r = f(n.conclusion)) return *r;
    }
    return d;
  }
  bool binds = false;
  for (int k : n.discharges) binds = binds || k == m;
  std::vector<Derivation> ps = n.premises;
  bool changed = false;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (binds && discharges_into(n.rule, i)) continue;
    Derivation q = replace_open(ps[i], m, f);
    if (!q.same_handle(ps[i])) {
      ps[i] = q;
      changed = true;
    }
  }
  return changed ? d.with_premises(std::move(ps)) : d;
}

// Re-mark open leaves whose marker is in `ms`: labeled ones get `to_lab`, relational ones `to_rel`.
inline Derivation remark_open(const Derivation& d, const std::set<int>& ms, int to_lab, int to_rel) {
  const auto& n = d.node();
  if (d.is_leaf()) {
    if (n.rule == Rule::kAssume && n.marker && ms.count(*n.marker)) {
      return Derivation::assume(n.conclusion, is_labeled(n.conclusion) ? to_lab : to_rel);
    }
    return d;
  }
  std::vector<Derivation> ps = n.premises;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::set<int> live = ms;
    if (discharges_into(n.rule, i)) {
      for (int k : n.discharges) live.erase(k);
    }
    if (!live.empty()) ps[i] = remark_open(ps[i], live, to_lab, to_rel);
  }
  return d.with_premises(std::move(ps));
}

}  // namespace tenseproof::build

#endif  // TENSEPROOF_SRC_BUILD_HPP_
