#include <gtest/gtest.h>

#include <filesystem>

#include "support/generators.hpp"
#include "tenseproof/corpus.hpp"
#include "tenseproof/json_io.hpp"
#include "tenseproof/parser.hpp"
#include "tenseproof/rules.hpp"

namespace tenseproof {
namespace {

Formula at(const char* n) { return Formula::atom(n); }
Label L(const char* n) { return Label(n); }

TEST(Parse, LabeledFormula) {
  Lwff l = parse_lwff("x : G (p -> q)");
  EXPECT_EQ(l.label, L("x"));
  EXPECT_EQ(l.formula, Formula::g(Formula::implies(at("p"), at("q"))));
}

TEST(Parse, IrreflexivityTemplate) {
  EXPECT_EQ(parse_rformula("forall x. !(x < x)"), *axiom_template(Rule::kIrreflLt));
  EXPECT_EQ(parse_rformula("forall x. !(x < x)"),
            RFormula::forall(L("x"), RFormula::neg(RFormula::less(L("x"), L("x")))));
}

TEST(Parse, PrefixBindsTighterThanImplication) {
  EXPECT_EQ(parse_lwff("x : G p -> q").formula, Formula::implies(Formula::g(at("p")), at("q")));
}

TEST(Parse, PrecedenceAndAssociativity) {
  Formula p = at("p"), q = at("q"), r = at("r");
  EXPECT_EQ(parse_formula("p -> q -> r"), Formula::implies(p, Formula::implies(q, r)));
  EXPECT_EQ(parse_formula("p & q | r"), Formula::disj(Formula::conj(p, q), r));
  EXPECT_EQ(parse_formula("p | q & r"), Formula::disj(p, Formula::conj(q, r)));
  EXPECT_EQ(parse_formula("p & q & r"), Formula::conj(p, Formula::conj(q, r)));
  EXPECT_EQ(parse_formula("~ F p -> false"), Formula::implies(Formula::neg(Formula::f(p)), Formula::falsum()));
  EXPECT_EQ(parse_formula("(p -> q) -> r"), Formula::implies(Formula::implies(p, q), r));
  EXPECT_EQ(parse_formula("X true"), Formula::x(Formula::top()));
}

TEST(Parse, RelationalPrecedence) {
  RFormula a = RFormula::less(L("x"), L("y")), b = RFormula::eq(L("x"), L("y")), c = RFormula::less(L("y"), L("x"));
  EXPECT_EQ(parse_rformula("x < y \\/ x = y \\/ y < x"), RFormula::disj(a, RFormula::disj(b, c)));
  EXPECT_EQ(parse_rformula("x < y /\\ x = y => empty"),
            RFormula::implies(RFormula::conj(a, b), RFormula::empty()));
  // Quantifier bodies extend as far as possible.
  EXPECT_EQ(parse_rformula("forall y. x < y => x = y"), RFormula::forall(L("y"), RFormula::implies(a, b)));
  EXPECT_EQ(parse_rformula("x <. y"), RFormula::prec(L("x"), L("y")));
  EXPECT_EQ(parse_rformula("exists z. !(z < x)"),
            RFormula::exists(L("z"), RFormula::neg(RFormula::less(L("z"), L("x")))));
}

TEST(Parse, JudgmentSortIsDetected) {
  EXPECT_TRUE(is_labeled(parse_judgment("x : p")));
  EXPECT_FALSE(is_labeled(parse_judgment("x < y")));
  EXPECT_FALSE(is_labeled(parse_judgment("empty")));
}

TEST(Parse, ErrorsCarryPositionAndExpectedTokens) {
  try {
    parse_lwff("x : (p");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 7);
    EXPECT_NE(std::find(e.expected().begin(), e.expected().end(), "')'"), e.expected().end());
  }
  try {
    parse_formula("p ->\n  -> q");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
  }
  EXPECT_THROW(parse_lwff("x : P"), ParseError);
  EXPECT_THROW(parse_rformula("x < "), ParseError);
  EXPECT_THROW(parse_formula("p q"), ParseError);
  EXPECT_THROW(parse_lwff("X : p"), ParseError);
}

TEST(Render, Examples) {
  EXPECT_EQ(render(parse_lwff("x : F p")), "x : F p");
  EXPECT_EQ(render(expand(parse_formula("F p"))), "(G (p -> false)) -> false");
  EXPECT_EQ(render(*axiom_template(Rule::kConn)), "forall x. forall y. x < y \\/ x = y \\/ y < x");
}

TEST(RoundTrip, RandomFormulas) {
  testing::FormulaGen gen(2024, {"p", "q", "r"}, {"x", "y", "z"});
  for (int i = 0; i < 3000; ++i) {
    Formula f = gen.formula(6);
    ASSERT_EQ(parse_formula(render(f)), f) << render(f);
    RFormula r = gen.rformula(6);
    ASSERT_EQ(parse_rformula(render(r)), r) << render(r);
    Judgment j = gen.judgment(6);
    ASSERT_EQ(render(parse_judgment(render(j))), render(j));
  }
}

TEST(DerivationJson, CorpusFilesRoundTrip) {
  std::size_t files = 0;
  for (const auto& f : std::filesystem::directory_iterator(TENSEPROOF_CORPUS_DIR)) {
    if (f.path().extension() != ".json") continue;
    ++files;
    nlohmann::json j = read_json_file(f.path().string());
    Derivation d = derivation_from_json(j.at("derivation"));
    Derivation back = derivation_from_json(derivation_to_json(d));
    EXPECT_TRUE(back == d) << f.path();
    EXPECT_EQ(derivation_to_json(back), derivation_to_json(d)) << f.path();
  }
  EXPECT_GT(files, 0u);
}

TEST(DerivationJson, AxiomConclusionIsFilledFromTemplate) {
  Derivation d = derivation_from_json(nlohmann::json::parse(R"({"rule":"conn"})"));
  EXPECT_EQ(as_rwff(d.conclusion()), *axiom_template(Rule::kConn));
}

TEST(DerivationJson, FieldsAreRead) {
  auto j = nlohmann::json::parse(R"({"rule":"g_i","conclusion":"x : G p","discharges":[1],"fresh":"y",
    "premises":[{"rule":"assume","conclusion":"y : p","marker":2}]})");
  Derivation d = derivation_from_json(j);
  EXPECT_EQ(d.rule(), Rule::kGI);
  EXPECT_EQ(d.node().discharges, std::vector<int>{1});
  EXPECT_EQ(d.node().fresh, L("y"));
  EXPECT_EQ(d.premise(0).node().marker, 2);
}

TEST(DerivationJson, MalformedInputIsRejected) {
  EXPECT_THROW(derivation_from_json(nlohmann::json::parse(R"({"rule":"teleport","conclusion":"x : p"})")),
               FormatError);
  EXPECT_THROW(derivation_from_json(nlohmann::json::parse(R"({"rule":"imp_i","premises":[]})")), FormatError);
  EXPECT_THROW(derivation_from_json(nlohmann::json::parse(R"({"rule":"assume","conclusion":"x : ("})")),
               FormatError);
  EXPECT_THROW(derivation_from_json(nlohmann::json::parse(R"([1,2])")), FormatError);
}

}  // namespace
}  // namespace tenseproof
