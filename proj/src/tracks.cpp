#include "tenseproof/tracks.hpp"

#include <map>

#include "tenseproof/parser.hpp"

namespace tenseproof {

std::string_view track_sort_name(TrackSort s) {
  switch (s) {
    case TrackSort::kLabeled: return "labeled";
    case TrackSort::kRelational: return "relational";
    case TrackSort::kMixed: return "mixed";
  }
  return "?";
}

std::string_view track_origin_name(TrackOrigin o) {
  switch (o) {
    case TrackOrigin::kAssumption: return "assumption";
    case TrackOrigin::kAxiom: return "axiom";
    case TrackOrigin::kUfConclusion: return "uf-conclusion";
  }
  return "?";
}

std::string_view track_terminus_name(TrackTerminus t) {
  switch (t) {
    case TrackTerminus::kConclusion: return "conclusion";
    case TrackTerminus::kUfPremise: return "uf-premise";
    case TrackTerminus::kMinorPremise: return "minor-premise";
  }
  return "?";
}

std::string_view link_kind_name(LinkKind k) {
  switch (k) {
    case LinkKind::kMajorOfElim: return "(i) elimination minor premise";
    case LinkKind::kMonMinor: return "(ii) mon minor premise";
    case LinkKind::kUf2Origin: return "(iii) uf2";
    case LinkKind::kUf1Terminus: return "(iv) uf1";
    case LinkKind::kSameSort: return "same-sort";
    case LinkKind::kUnclassified: return "unclassified";
  }
  return "?";
}

std::size_t Track::index_of(const NodePath& p) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] == p) return i;
  }
  return nodes.size();
}

namespace {

bool is_uf(Rule r) { return r == Rule::kUf1 || r == Rule::kUf2; }

bool is_atomic_judgment(const Judgment& j) {
  if (is_labeled(j)) {
    auto k = expand(as_lwff(j).formula).kind();
    return k == FormulaKind::kAtom || k == FormulaKind::kFalsum;
  }
  auto k = expand(as_rwff(j)).kind();
  return k == RFormulaKind::kLess || k == RFormulaKind::kEq || k == RFormulaKind::kEmpty;
}

// b is a subformula of a (labels ignored; relational up to instances).
bool sub_of(const Judgment& b, const Judgment& a) {
  if (is_labeled(b) != is_labeled(a)) return false;
  if (is_labeled(b)) return is_subformula(as_lwff(b).formula, as_lwff(a).formula);
  return is_subformula_instance(as_rwff(b), as_rwff(a));
}

// Whether the track passes from premise `i` of `parent` into `parent`.
bool continues(const Derivation& parent, std::size_t i) {
  if (is_uf(parent.rule())) return false;
  const RuleInfo& info = rule_info(parent.rule());
  if (parent.premises().size() == 1) return true;
  return info.major >= 0 && static_cast<std::size_t>(info.major) == i;
}

bool is_start(const Derivation& d) {
  if (d.is_leaf() || is_uf(d.rule())) return true;
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    if (continues(d, i)) return false;
  }
  return true;
}

NodePath parent_of(const NodePath& p) { return NodePath(p.begin(), p.end() - 1); }

class Analyzer {
 public:
  explicit Analyzer(const Derivation& d) : d_(d) {}

  TrackReport run() {
    for (const auto& p : postorder_paths(d_)) {
      if (is_start(d_.at(p))) build(p);
    }
    for (std::size_t t = 0; t < rep_.tracks.size(); ++t) link(t);
    return std::move(rep_);
  }

 private:
  void fail(std::size_t t, const std::string& msg) {
    rep_.violations.push_back("track " + std::to_string(t) + ": " + msg);
  }

  void build(const NodePath& start) {
    Track tr;
    const Derivation& s = d_.at(start);
    tr.origin = is_uf(s.rule())                                ? TrackOrigin::kUfConclusion
                : rule_info(s.rule()).cls == RuleClass::kAxiom ? TrackOrigin::kAxiom
                                                               : TrackOrigin::kAssumption;
    NodePath cur = start;
    tr.nodes.push_back(cur);
    while (true) {
      if (cur.empty()) {
        tr.terminus = TrackTerminus::kConclusion;
        break;
      }
      NodePath par = parent_of(cur);
      const Derivation& pd = d_.at(par);
      if (is_uf(pd.rule())) {
        tr.terminus = TrackTerminus::kUfPremise;
        break;
      }
      if (!continues(pd, cur.back())) {
        tr.terminus = TrackTerminus::kMinorPremise;
        break;
      }
      cur = par;
      tr.nodes.push_back(cur);
    }
    std::size_t idx = rep_.tracks.size();
    for (const auto& p : tr.nodes) owner_[p] = idx;
    decompose(tr, idx);
    rep_.tracks.push_back(std::move(tr));
  }

  void decompose(Track& tr, std::size_t t) {
    const std::size_t n = tr.nodes.size();
    auto phi = [&](std::size_t i) -> const Judgment& { return d_.at(tr.nodes[i]).conclusion(); };
    // Rule applied to formula i, if it lies on this track or is the uf it ends in.
    auto below = [&](std::size_t i) -> std::optional<Rule> {
      if (i + 1 < n) return d_.at(tr.nodes[i + 1]).rule();
      if (tr.terminus == TrackTerminus::kUfPremise) return d_.at(parent_of(tr.nodes[i])).rule();
      return std::nullopt;
    };

    bool labeled = is_labeled(phi(0));
    tr.sort = labeled ? TrackSort::kLabeled : TrackSort::kRelational;
    for (std::size_t i = 1; i < n; ++i) {
      if (is_labeled(phi(i)) != labeled) tr.sort = TrackSort::kMixed;
    }
    if (tr.sort == TrackSort::kMixed) fail(t, "mixes labeled and relational formulas");

    std::size_t i = 0;
    while (i + 1 < n && is_elim(*below(i))) {
      if (!sub_of(phi(i + 1), phi(i))) {
        fail(t, "elimination step from " + render(phi(i)) + " to " + render(phi(i + 1)) +
                    " does not go to a subformula");
      }
      ++i;
    }
    tr.elim_end = i;
    while (i < n && below(i) && (is_falsum_rule(*below(i)) || *below(i) == Rule::kMon)) {
      if (!is_atomic_judgment(phi(i))) {
        fail(t, "central formula " + render(phi(i)) + " is not atomic");
      }
      if (is_falsum_rule(*below(i))) ++tr.falsum_rules;
      ++i;
    }
    tr.central_end = i;
    for (; i + 1 < n; ++i) {
      if (!is_intro(*below(i))) {
        fail(t, render(phi(i)) + " is the premise of " + std::string(rule_info(*below(i)).name) +
                    " after the elimination part");
      } else if (!sub_of(phi(i), phi(i + 1))) {
        fail(t, "introduction step from " + render(phi(i)) + " to " + render(phi(i + 1)) +
                    " does not come from a subformula");
      }
    }
    if (tr.falsum_rules > 1) {
      fail(t, "central part has " + std::to_string(tr.falsum_rules) + " falsum-rule applications");
    }
    if (tr.origin == TrackOrigin::kUfConclusion && tr.elim_end > 0) {
      fail(t, "track starting at uf has an elimination part");
    }
    if (tr.terminus == TrackTerminus::kUfPremise && tr.central_end < n) {
      fail(t, "track ending in uf has an introduction part");
    }
  }

  void link(std::size_t t) {
    const Track& tr = rep_.tracks[t];
    if (tr.terminus == TrackTerminus::kConclusion) return;
    NodePath at = parent_of(tr.nodes.back());
    std::size_t lower = owner_.at(at);
    const Track& lt = rep_.tracks[lower];
    Rule r = d_.at(at).rule();
    LinkKind kind = LinkKind::kUnclassified;
    if (tr.sort == lt.sort) {
      kind = LinkKind::kSameSort;
    } else if (tr.terminus == TrackTerminus::kUfPremise) {
      if (r == Rule::kUf2 && tr.sort == TrackSort::kRelational) kind = LinkKind::kUf2Origin;
      if (r == Rule::kUf1 && tr.sort == TrackSort::kLabeled) kind = LinkKind::kUf1Terminus;
    } else if (tr.sort == TrackSort::kRelational && lt.sort == TrackSort::kLabeled) {
      std::size_t major = lt.index_of(at);  // index of the rule's conclusion
      if ((r == Rule::kGE || r == Rule::kHE || r == Rule::kXE) && major > 0 &&
          major - 1 < lt.elim_end) {
        kind = LinkKind::kMajorOfElim;
      } else if (r == Rule::kMon && major > 0 && major - 1 >= lt.elim_end &&
                 major - 1 < lt.central_end) {
        kind = LinkKind::kMonMinor;
      }
    }
    if (kind == LinkKind::kUnclassified) {
      fail(t, "link into track " + std::to_string(lower) + " at " + path_string(at) +
                  " fits no labeled/relational connection");
    }
    rep_.links.push_back({t, lower, kind, at});
  }

  const Derivation& d_;
  TrackReport rep_;
  std::map<NodePath, std::size_t> owner_;
};

}  // namespace

TrackReport analyze_tracks(const Derivation& d) { return Analyzer(d).run(); }

TrackReport tracks(const Derivation& d) {
  TrackReport r = analyze_tracks(d);
  if (!r.ok()) throw StructureViolation(r.violations.front());
  return r;
}

}  // namespace tenseproof
