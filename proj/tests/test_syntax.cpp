#include <gtest/gtest.h>

#include <random>

#include "support/generators.hpp"
#include "support/oracle.hpp"
#include "tenseproof/parser.hpp"
#include "tenseproof/syntax.hpp"

namespace tenseproof {
namespace {

using testing::FormulaGen;
using testing::Frame;
using testing::oracle_truth;

Formula at(const char* n) { return Formula::atom(n); }
Label L(const char* n) { return Label(n); }

bool core_only(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kAtom:
    case FormulaKind::kFalsum: return true;
    case FormulaKind::kImplies: return core_only(f.lhs()) && core_only(f.rhs());
    case FormulaKind::kG:
    case FormulaKind::kH:
    case FormulaKind::kX: return core_only(f.lhs());
    default: return false;
  }
}

TEST(Expand, NegationUnfoldsToImplicationIntoFalsum) {
  EXPECT_EQ(expand(Formula::neg(at("a"))), Formula::implies(at("a"), Formula::falsum()));
}

TEST(Expand, AtomIsFixed) { EXPECT_EQ(expand(at("p")), at("p")); }

TEST(Expand, FutureUnfoldsToNotAlwaysNot) {
  Formula want = Formula::implies(Formula::g(Formula::implies(at("p"), Formula::falsum())), Formula::falsum());
  EXPECT_EQ(expand(Formula::f(at("p"))), want);
  // Same truth value as the direct clause on every 2-world chain.
  for (int v = 0; v < 4; ++v) {
    Frame m = Frame::chain(2);
    m.val["p"] = {bool(v & 1), bool(v & 2)};
    for (int w = 0; w < 2; ++w) EXPECT_EQ(oracle_truth(m, w, want), oracle_truth(m, w, Formula::f(at("p"))));
  }
}

TEST(Expand, RelationalAbbreviations) {
  RFormula a = RFormula::less(L("x"), L("y")), b = RFormula::eq(L("x"), L("y"));
  RFormula e = RFormula::empty();
  EXPECT_EQ(expand(RFormula::neg(a)), RFormula::implies(a, e));
  EXPECT_EQ(expand(RFormula::disj(a, b)), RFormula::implies(RFormula::implies(a, e), b));
  EXPECT_EQ(expand(RFormula::conj(a, b)),
            RFormula::implies(RFormula::implies(a, RFormula::implies(b, e)), e));
  RFormula ex = RFormula::exists(L("z"), RFormula::less(L("x"), L("z")));
  EXPECT_EQ(expand(ex),
            RFormula::implies(RFormula::forall(L("z"), RFormula::implies(RFormula::less(L("x"), L("z")), e)), e));
}

TEST(Expand, ImmediatePrecedenceUnfoldsToNoPointBetween) {
  RFormula got = expand(RFormula::prec(L("s"), L("t")));
  RFormula want = expand(parse_rformula("s < t /\\ forall z. !(s < z) \\/ !(z < t)"));
  EXPECT_TRUE(alpha_equal(got, want));
}

TEST(Grade, Examples) {
  EXPECT_EQ(grade(Lwff{L("x"), Formula::falsum()}), 0);
  EXPECT_EQ(grade(RFormula::forall(L("x"), RFormula::neg(RFormula::less(L("x"), L("x"))))), 2);
  Formula a = at("a"), b = at("b");
  Formula k = Formula::implies(Formula::g(Formula::implies(a, b)), Formula::implies(Formula::g(a), Formula::g(b)));
  EXPECT_EQ(grade(k), 6);
}

TEST(Grade, CountsTheExpansion) {
  // ~G~p = (G(p -> false)) -> false: two implications and one G.
  EXPECT_EQ(grade(Formula::f(at("p"))), 3);
  EXPECT_EQ(grade(Formula::top()), 1);
}

TEST(Subformula, Examples) {
  Formula a = at("a");
  EXPECT_TRUE(is_subformula(a, Formula::g(a)));
  EXPECT_TRUE(is_subformula(a, a));
  EXPECT_FALSE(is_subformula(Formula::g(at("p")), at("p")));
}

TEST(Subformula, LabeledIgnoresLabels) {
  EXPECT_TRUE(is_subformula(Lwff{L("y"), at("p")}, Lwff{L("x"), Formula::h(at("p"))}));
}

TEST(Subformula, RelationalAndInstances) {
  RFormula body = parse_rformula("forall x. !(x < x)");
  EXPECT_TRUE(is_subformula(parse_rformula("!(x < x)"), body));
  EXPECT_FALSE(is_subformula(parse_rformula("!(t < t)"), body));
  EXPECT_TRUE(is_subformula_instance(parse_rformula("!(t < t)"), body));
  EXPECT_FALSE(is_subformula_instance(parse_rformula("!(t < s)"), body));
}

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute_label(Lwff{L("x"), at("p")}, L("y"), L("x")), (Lwff{L("y"), at("p")}));
  EXPECT_EQ(substitute_label(RFormula::less(L("x"), L("x")), L("y"), L("x")), RFormula::less(L("y"), L("y")));
  RFormula bound = RFormula::forall(L("x"), RFormula::less(L("x"), L("z")));
  EXPECT_EQ(substitute_label(bound, L("y"), L("x")), bound);
}

TEST(Substitute, AvoidsCapture) {
  RFormula r = parse_rformula("forall y. x < y");
  RFormula got = substitute_label(r, L("y"), L("x"));
  ASSERT_EQ(got.kind(), RFormulaKind::kForall);
  EXPECT_NE(got.var(), L("y"));
  EXPECT_EQ(labels_of(got), std::set<Label>{L("y")});
  EXPECT_TRUE(alpha_equal(got, parse_rformula("forall w. y < w")));
}

TEST(Labels, Examples) {
  EXPECT_EQ(labels_of(Judgment(Lwff{L("x"), Formula::g(at("p"))})), std::set<Label>{L("x")});
  EXPECT_EQ(labels_of(parse_rformula("forall x. x < y")), std::set<Label>{L("y")});
  ProofContext c;
  c.add(Lwff{L("x"), at("p")});
  c.add(RFormula::less(L("x"), L("y")));
  EXPECT_EQ(labels_of(c), (std::set<Label>{L("x"), L("y")}));
}

TEST(AlphaEqual, BoundNamesDoNotMatter) {
  EXPECT_TRUE(alpha_equal(parse_rformula("forall x. x < y"), parse_rformula("forall z. z < y")));
  EXPECT_FALSE(alpha_equal(parse_rformula("forall x. x < y"), parse_rformula("forall y. y < y")));
  EXPECT_TRUE(same(Judgment(parse_lwff("x : F p")), Judgment(parse_lwff("x : G (p -> false) -> false"))));
}

TEST(Occurrences, LabelSlotsInOrder) {
  Judgment j = parse_rformula("x < y /\\ forall z. z = x");
  // Core form: ((x<y) => ((forall z. z=x) => empty)) => empty; slots x, y, z(bound), x.
  EXPECT_EQ(occurrence_count(j), 4);
  EXPECT_EQ(free_label_at(j, 0), L("x"));
  EXPECT_EQ(free_label_at(j, 1), L("y"));
  EXPECT_EQ(free_label_at(j, 2), std::nullopt);
  EXPECT_EQ(free_label_at(j, 3), L("x"));
  Judgment lw = parse_lwff("x : G p");
  EXPECT_EQ(occurrence_count(lw), 1);
  EXPECT_EQ(free_label_at(lw, 0), L("x"));
}

TEST(Occurrences, ReplaceSubsets) {
  Judgment j = RFormula::less(L("x"), L("x"));
  EXPECT_TRUE(same(replace_occurrences(j, {0}, L("y")), Judgment(RFormula::less(L("y"), L("x")))));
  EXPECT_TRUE(same(replace_occurrences(j, {1}, L("y")), Judgment(RFormula::less(L("x"), L("y")))));
  EXPECT_TRUE(same(replace_occurrences(j, {0, 1}, L("y")), Judgment(RFormula::less(L("y"), L("y")))));
  auto occ = replaced_occurrences(j, RFormula::less(L("x"), L("y")), L("x"), L("y"));
  ASSERT_TRUE(occ.has_value());
  EXPECT_EQ(*occ, std::vector<int>{1});
  EXPECT_FALSE(replaced_occurrences(j, RFormula::less(L("z"), L("x")), L("x"), L("y")).has_value());
}

TEST(ProofContext, SetSemantics) {
  ProofContext c;
  c.add(parse_judgment("x : F p"));
  c.add(parse_judgment("x : G (p -> false) -> false"));
  c.add(parse_judgment("forall a. a < y"));
  c.add(parse_judgment("forall b. b < y"));
  EXPECT_EQ(c.size(), 2u);
  EXPECT_TRUE(c.contains(parse_judgment("x : F p")));
  ProofContext d;
  d.add(parse_judgment("x : F p"));
  EXPECT_TRUE(d.subset_of(c));
  EXPECT_FALSE(c.subset_of(d));
}

TEST(NameSupply, SkipsReservedNames) {
  NameSupply s("w");
  s.reserve(L("w1"));
  s.reserve(L("w2"));
  Label a = s.fresh(), b = s.fresh();
  EXPECT_NE(a, L("w1"));
  EXPECT_NE(a, L("w2"));
  EXPECT_NE(a, b);
}

// ---- properties over random formulas

TEST(Properties, ExpandIsIdempotentAndPreservesTruth) {
  FormulaGen gen(7, {"p", "q", "r"}, {"x", "y"});
  for (int i = 0; i < 400; ++i) {
    Formula f = gen.formula(4);
    Formula e = expand(f);
    ASSERT_EQ(expand(e), e) << render(f);
    ASSERT_TRUE(core_only(e)) << render(e);
    for (int n = 1; n <= 3; ++n) {
      for (int v = 0; v < (1 << (3 * n)); v += 5) {
        Frame m = Frame::chain(n);
        for (int k = 0; k < 3; ++k) {
          std::vector<bool> row(n);
          for (int w = 0; w < n; ++w) row[w] = (v >> (k * n + w)) & 1;
          m.val[std::string(1, "pqr"[k])] = row;
        }
        for (int w = 0; w < n; ++w) ASSERT_EQ(oracle_truth(m, w, f), oracle_truth(m, w, e)) << render(f);
      }
    }
  }
}

TEST(Properties, RelationalExpandPreservesTruth) {
  FormulaGen gen(11, {"p"}, {"x", "y", "z"});
  for (int i = 0; i < 300; ++i) {
    RFormula r = gen.rformula(3);
    RFormula e = expand(r);
    ASSERT_EQ(expand(e), e);
    for (int n = 1; n <= 3; ++n) {
      Frame m = Frame::chain(n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            std::map<std::string, int> lam{{"x", a}, {"y", b}, {"z", c}};
            ASSERT_EQ(oracle_truth(m, lam, r), oracle_truth(m, lam, e)) << render(r);
          }
    }
  }
}

TEST(Properties, GradeInvariantUnderSubstitution) {
  FormulaGen gen(3, {"p", "q"}, {"x", "y", "z"});
  for (int i = 0; i < 500; ++i) {
    Judgment j = gen.judgment(4);
    Label a = gen.label(), b = gen.label();
    ASSERT_EQ(grade(substitute_label(j, b, a)), grade(j)) << render(j);
    ASSERT_TRUE(same(substitute_label(j, a, a), j)) << render(j);
  }
}

TEST(Properties, SubformulaIsAPartialOrderOnCoreForms) {
  FormulaGen gen(5, {"p", "q"}, {"x"});
  std::vector<Formula> fs;
  for (int i = 0; i < 60; ++i) {
    Formula f = expand(gen.formula(3));
    fs.push_back(f);
    for (const auto& s : subformulas(f)) fs.push_back(s);
  }
  for (const auto& a : fs) {
    ASSERT_TRUE(is_subformula(a, a));
    for (const auto& b : fs) {
      if (is_subformula(a, b) && is_subformula(b, a)) {
        ASSERT_EQ(a, b);
      }
      if (!is_subformula(a, b)) continue;
      for (const auto& c : subformulas(a)) ASSERT_TRUE(is_subformula(c, b));
    }
  }
}

}  // namespace
}  // namespace tenseproof
