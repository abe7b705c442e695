#include "tenseproof/semantics.hpp"

#include "tenseproof/checker.hpp"

namespace tenseproof {

Model::Model(int n) : n_(n), prec_(static_cast<std::size_t>(n) * n, false) {}

Model Model::chain(int n) {
  Model m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) m.set_prec(i, j);
  }
  return m;
}

bool Model::succ(int i, int j) const {
  if (!prec(i, j)) return false;
  for (int k = 0; k < n_; ++k) {
    if (prec(i, k) && prec(k, j)) return false;
  }
  return true;
}

bool Model::holds(const std::string& atom, int w) const {
  auto it = val_.find(atom);
  return it != val_.end() && it->second[w];
}

void Model::set_atom(const std::string& atom, int w, bool v) {
  auto& row = val_[atom];
  row.resize(n_, false);
  row[w] = v;
}

bool FrameReport::ok() const {
  if (!irreflexive || !transitive || !connected) return false;
  for (const auto& [e, v] : extras) {
    if (!v) return false;
  }
  return true;
}

namespace {

bool any_world(int n, const auto& pred) {
  for (int i = 0; i < n; ++i) {
    if (pred(i)) return true;
  }
  return false;
}

bool all_worlds(int n, const auto& pred) {
  for (int i = 0; i < n; ++i) {
    if (!pred(i)) return false;
  }
  return true;
}

bool extra_holds(const Model& m, Extra e) {
  int n = m.size();
  auto P = [&](int a, int b) { return m.prec(a, b); };
  switch (e) {
    case Extra::kFirst:
      return any_world(n, [&](int x) { return all_worlds(n, [&](int y) { return !P(y, x); }); });
    case Extra::kFinal:
      return any_world(n, [&](int x) { return all_worlds(n, [&](int y) { return !P(x, y); }); });
    case Extra::kLSer:
      return all_worlds(n, [&](int x) { return any_world(n, [&](int y) { return P(y, x); }); });
    case Extra::kRSer:
      return all_worlds(n, [&](int x) { return any_world(n, [&](int y) { return P(x, y); }); });
    case Extra::kDens:
      return all_worlds(n, [&](int x) {
        return all_worlds(n, [&](int y) {
          return !P(x, y) || any_world(n, [&](int z) { return P(x, z) && P(z, y); });
        });
      });
    case Extra::kLDiscr:
      return all_worlds(n, [&](int x) {
        return all_worlds(n, [&](int y) {
          return !P(x, y) || any_world(n, [&](int z) {
                   return P(z, y) && !any_world(n, [&](int u) { return P(z, u) && P(u, y); });
                 });
        });
      });
    case Extra::kRDiscr:
      return all_worlds(n, [&](int x) {
        return all_worlds(n, [&](int y) {
          return !P(x, y) || any_world(n, [&](int z) {
                   return P(x, z) && !any_world(n, [&](int u) { return P(x, u) && P(u, z); });
                 });
        });
      });
    case Extra::kMtl:
      return extra_holds(m, Extra::kRSer) && extra_holds(m, Extra::kRDiscr);
  }
  return false;
}

int lookup(const Interpretation& lam, const Label& l) {
  auto it = lam.find(l);
  if (it == lam.end()) throw UnboundLabel(l);
  return it->second;
}

}  // namespace

FrameReport check_frame(const Model& m, const LogicProfile& profile) {
  int n = m.size();
  FrameReport r;
  r.irreflexive = all_worlds(n, [&](int i) { return !m.prec(i, i); });
  r.transitive = all_worlds(n, [&](int i) {
    return all_worlds(n, [&](int j) {
      return all_worlds(n, [&](int k) { return !(m.prec(i, j) && m.prec(j, k)) || m.prec(i, k); });
    });
  });
  r.connected = all_worlds(n, [&](int i) {
    return all_worlds(n, [&](int j) { return i == j || m.prec(i, j) || m.prec(j, i); });
  });
  for (Extra e : profile.extras()) r.extras[e] = extra_holds(m, e);
  return r;
}

bool eval_at(const Model& m, int w, const Formula& f) {
  int n = m.size();
  switch (f.kind()) {
    case FormulaKind::kAtom: return m.holds(f.name(), w);
    case FormulaKind::kFalsum: return false;
    case FormulaKind::kTop: return true;
    case FormulaKind::kImplies: return !eval_at(m, w, f.lhs()) || eval_at(m, w, f.rhs());
    case FormulaKind::kNot: return !eval_at(m, w, f.lhs());
    case FormulaKind::kAnd: return eval_at(m, w, f.lhs()) && eval_at(m, w, f.rhs());
    case FormulaKind::kOr: return eval_at(m, w, f.lhs()) || eval_at(m, w, f.rhs());
    case FormulaKind::kG:
      return all_worlds(n, [&](int v) { return !m.prec(w, v) || eval_at(m, v, f.lhs()); });
    case FormulaKind::kH:
      return all_worlds(n, [&](int v) { return !m.prec(v, w) || eval_at(m, v, f.lhs()); });
    case FormulaKind::kF:
      return any_world(n, [&](int v) { return m.prec(w, v) && eval_at(m, v, f.lhs()); });
    case FormulaKind::kP:
      return any_world(n, [&](int v) { return m.prec(v, w) && eval_at(m, v, f.lhs()); });
    case FormulaKind::kX:
      return any_world(n, [&](int v) { return m.succ(w, v) && eval_at(m, v, f.lhs()); });
  }
  return false;
}

bool eval(const Model& m, const Interpretation& lam, const RFormula& r) {
  int n = m.size();
  switch (r.kind()) {
    case RFormulaKind::kLess: return m.prec(lookup(lam, r.left()), lookup(lam, r.right()));
    case RFormulaKind::kEq: return lookup(lam, r.left()) == lookup(lam, r.right());
    case RFormulaKind::kPrec: return m.succ(lookup(lam, r.left()), lookup(lam, r.right()));
    case RFormulaKind::kEmpty: return false;
    case RFormulaKind::kRImplies: return !eval(m, lam, r.lhs()) || eval(m, lam, r.rhs());
    case RFormulaKind::kRNot: return !eval(m, lam, r.lhs());
    case RFormulaKind::kRAnd: return eval(m, lam, r.lhs()) && eval(m, lam, r.rhs());
    case RFormulaKind::kROr: return eval(m, lam, r.lhs()) || eval(m, lam, r.rhs());
    case RFormulaKind::kForall:
    case RFormulaKind::kExists: {
      Interpretation inner = lam;
      bool all = r.kind() == RFormulaKind::kForall;
      for (int v = 0; v < n; ++v) {
        inner[r.var()] = v;
        bool b = eval(m, inner, r.body());
        if (all && !b) return false;
        if (!all && b) return true;
      }
      return all;
    }
  }
  return false;
}

bool eval(const Model& m, const Interpretation& lam, const Judgment& j) {
  if (is_labeled(j)) return eval_at(m, lookup(lam, as_lwff(j).label), as_lwff(j).formula);
  return eval(m, lam, as_rwff(j));
}

bool entails(const Model& m, const Interpretation& lam, const ProofContext& ctx,
             const Judgment& phi) {
  for (const auto& j : ctx.judgments()) {
    if (!eval(m, lam, j)) return true;
  }
  return eval(m, lam, phi);
}

std::optional<Countermodel> find_countermodel(const ProofContext& ctx, const Judgment& phi,
                                              int max_worlds, const LogicProfile& profile,
                                              int min_worlds) {
  for (Extra e : {Extra::kDens, Extra::kLSer, Extra::kRSer, Extra::kMtl}) {
    if (profile.has(e)) {
      throw FinitelyVacuous("profile " + profile.name() +
                            " has no finite chains of interest; semantic search skipped");
    }
  }
  std::set<std::string> atom_set = atoms_of(phi);
  std::set<Label> label_set = labels_of(phi);
  for (const auto& j : ctx.judgments()) {
    auto a = atoms_of(j);
    atom_set.insert(a.begin(), a.end());
    auto l = labels_of(j);
    label_set.insert(l.begin(), l.end());
  }
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  std::vector<Label> labels(label_set.begin(), label_set.end());

  for (int n = std::max(1, min_worlds); n <= max_worlds; ++n) {
    Model frame = Model::chain(n);
    if (!check_frame(frame, profile).ok()) continue;
    std::size_t bits = atoms.size() * static_cast<std::size_t>(n);
    if (bits > 30) throw std::runtime_error("find_countermodel: valuation space too large");
    std::uint64_t nvals = std::uint64_t{1} << bits;
    std::uint64_t nlams = 1;
    for (std::size_t i = 0; i < labels.size(); ++i) nlams *= static_cast<std::uint64_t>(n);
    for (std::uint64_t v = 0; v < nvals; ++v) {
      Model m = frame;
      for (std::size_t a = 0; a < atoms.size(); ++a) {
        for (int w = 0; w < n; ++w) {
          // Most significant bit first: atom-major, world-minor.
          std::size_t bit = bits - 1 - (a * n + w);
          m.set_atom(atoms[a], w, (v >> bit) & 1u);
        }
      }
      for (std::uint64_t l = 0; l < nlams; ++l) {
        Interpretation lam;
        std::uint64_t rest = l;
        for (std::size_t i = labels.size(); i-- > 0;) {
          lam[labels[i]] = static_cast<int>(rest % n);
          rest /= n;
        }
        if (!entails(m, lam, ctx, phi)) return Countermodel{m, lam};
      }
    }
  }
  return std::nullopt;
}

std::string_view probe_status_name(ProbeStatus s) {
  switch (s) {
    case ProbeStatus::kPass: return "PASS";
    case ProbeStatus::kCountermodel: return "COUNTERMODEL";
    case ProbeStatus::kSkipped: return "SKIPPED-SEMANTICS";
  }
  return "?";
}

ProbeResult soundness_probe(const Derivation& d, int max_worlds, const LogicProfile& profile) {
  try {
    auto cm = find_countermodel(open_assumptions(d), d.conclusion(), max_worlds, profile);
    if (cm) return {ProbeStatus::kCountermodel, cm, ""};
    return {ProbeStatus::kPass, std::nullopt, ""};
  } catch (const FinitelyVacuous& e) {
    return {ProbeStatus::kSkipped, std::nullopt, e.what()};
  }
}

nlohmann::json model_to_json(const Model& m) {
  nlohmann::json j;
  j["worlds"] = m.size();
  j["prec"] = nlohmann::json::array();
  for (int i = 0; i < m.size(); ++i) {
    for (int k = 0; k < m.size(); ++k) {
      if (m.prec(i, k)) j["prec"].push_back({i, k});
    }
  }
  j["valuation"] = nlohmann::json::object();
  for (const auto& [atom, row] : m.valuation()) {
    nlohmann::json ws = nlohmann::json::array();
    for (int w = 0; w < m.size(); ++w) {
      if (row[w]) ws.push_back(w);
    }
    j["valuation"][atom] = ws;
  }
  return j;
}

Model model_from_json(const nlohmann::json& j) {
  int n = j.contains("n") ? j.at("n").get<int>() : j.at("worlds").get<int>();
  if (n < 0) throw std::invalid_argument("model: negative size");
  Model m(n);
  for (const auto& pr : j.value("prec", nlohmann::json::array())) {
    int a = pr.at(0).get<int>(), b = pr.at(1).get<int>();
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("model: world out of range");
    m.set_prec(a, b);
  }
  const nlohmann::json valuation = j.value("valuation", nlohmann::json::object());
  for (const auto& [atom, ws] : valuation.items()) {
    for (const auto& w : ws) {
      int k = w.get<int>();
      if (k < 0 || k >= n) throw std::invalid_argument("model: world out of range");
      m.set_atom(atom, k);
    }
  }
  return m;
}

nlohmann::json countermodel_to_json(const Countermodel& c) {
  nlohmann::json j = model_to_json(c.model);
  j["lambda"] = nlohmann::json::object();
  for (const auto& [l, w] : c.lambda) j["lambda"][l.name] = w;
  return j;
}

Interpretation interpretation_from_json(const nlohmann::json& j) {
  Interpretation lam;
  for (const auto& [k, v] : j.items()) lam[Label(k)] = v.get<int>();
  return lam;
}

}  // namespace tenseproof
