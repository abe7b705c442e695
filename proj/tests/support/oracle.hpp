#ifndef TENSEPROOF_TESTS_ORACLE_HPP_
#define TENSEPROOF_TESTS_ORACLE_HPP_

// Test-side truth definition, written clause by clause for every surface
// connective (derived ones included) and independent of the library's
// expansion and evaluator.

#include <map>
#include <string>
#include <vector>

#include "tenseproof/syntax.hpp"

namespace tenseproof::testing {

struct Frame {
  int n = 0;
  std::vector<std::vector<bool>> lt;
  std::map<std::string, std::vector<bool>> val;

  static Frame chain(int n) {
    Frame f;
    f.n = n;
    f.lt.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) f.lt[i][j] = true;
    }
    return f;
  }
  bool truth(const std::string& a, int w) const {
    auto it = val.find(a);
    return it != val.end() && it->second[w];
  }
  bool next(int a, int b) const {
    if (!lt[a][b]) return false;
    for (int c = 0; c < n; ++c) {
      if (lt[a][c] && lt[c][b]) return false;
    }
    return true;
  }
};

inline bool oracle_truth(const Frame& m, int w, const Formula& f) {
  auto all = [&](auto pred) {
    for (int v = 0; v < m.n; ++v) {
      if (!pred(v)) return false;
    }
    return true;
  };
  auto some = [&](auto pred) {
    for (int v = 0; v < m.n; ++v) {
      if (pred(v)) return true;
    }
    return false;
  };
  switch (f.kind()) {
    case FormulaKind::kAtom: return m.truth(f.name(), w);
    case FormulaKind::kFalsum: return false;
    case FormulaKind::kTop: return true;
    case FormulaKind::kImplies: return !oracle_truth(m, w, f.lhs()) || oracle_truth(m, w, f.rhs());
    case FormulaKind::kNot: return !oracle_truth(m, w, f.lhs());
    case FormulaKind::kAnd: return oracle_truth(m, w, f.lhs()) && oracle_truth(m, w, f.rhs());
    case FormulaKind::kOr: return oracle_truth(m, w, f.lhs()) || oracle_truth(m, w, f.rhs());
    case FormulaKind::kG: return all([&](int v) { return !m.lt[w][v] || oracle_truth(m, v, f.lhs()); });
    case FormulaKind::kH: return all([&](int v) { return !m.lt[v][w] || oracle_truth(m, v, f.lhs()); });
    case FormulaKind::kF: return some([&](int v) { return m.lt[w][v] && oracle_truth(m, v, f.lhs()); });
    case FormulaKind::kP: return some([&](int v) { return m.lt[v][w] && oracle_truth(m, v, f.lhs()); });
    case FormulaKind::kX: return some([&](int v) { return m.next(w, v) && oracle_truth(m, v, f.lhs()); });
  }
  return false;
}

inline bool oracle_truth(const Frame& m, std::map<std::string, int> lam, const RFormula& r) {
  auto at = [&](const Label& l) { return lam.at(l.name); };
  auto over = [&](bool universal) {
    for (int v = 0; v < m.n; ++v) {
      auto ext = lam;
      ext[r.var().name] = v;
      bool b = oracle_truth(m, ext, r.body());
      if (universal && !b) return false;
      if (!universal && b) return true;
    }
    return universal;
  };
  switch (r.kind()) {
    case RFormulaKind::kLess: return m.lt[at(r.left())][at(r.right())];
    case RFormulaKind::kEq: return at(r.left()) == at(r.right());
    case RFormulaKind::kPrec: return m.next(at(r.left()), at(r.right()));
    case RFormulaKind::kEmpty: return false;
    case RFormulaKind::kRImplies: return !oracle_truth(m, lam, r.lhs()) || oracle_truth(m, lam, r.rhs());
    case RFormulaKind::kRNot: return !oracle_truth(m, lam, r.lhs());
    case RFormulaKind::kRAnd: return oracle_truth(m, lam, r.lhs()) && oracle_truth(m, lam, r.rhs());
    case RFormulaKind::kROr: return oracle_truth(m, lam, r.lhs()) || oracle_truth(m, lam, r.rhs());
    case RFormulaKind::kForall: return over(true);
    case RFormulaKind::kExists: return over(false);
  }
  return false;
}

}  // namespace tenseproof::testing

#endif  // TENSEPROOF_TESTS_ORACLE_HPP_
