#include "tenseproof/rules.hpp"

#include <map>
#include <stdexcept>

#include "tenseproof/parser.hpp"

namespace tenseproof {

namespace {

const std::vector<std::pair<Extra, std::string_view>>& extra_names() {
  static const std::vector<std::pair<Extra, std::string_view>> v = {
      {Extra::kFirst, "first"}, {Extra::kFinal, "final"},   {Extra::kLSer, "lser"},
      {Extra::kRSer, "rser"},   {Extra::kDens, "dens"},     {Extra::kLDiscr, "ldiscr"},
      {Extra::kRDiscr, "rdiscr"}, {Extra::kMtl, "mtl"},
  };
  return v;
}

}  // namespace

std::string_view extra_name(Extra e) {
  for (const auto& [x, n] : extra_names()) {
    if (x == e) return n;
  }
  return "?";
}

LogicProfile::LogicProfile(std::set<Extra> extras) : extras_(std::move(extras)) {
  if (has(Extra::kMtl)) {
    extras_.insert(Extra::kRSer);
    extras_.insert(Extra::kRDiscr);
  }
}

LogicProfile LogicProfile::parse(std::string_view text) {
  std::set<Extra> extras;
  std::size_t start = 0;
  bool first = true;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    std::string_view part =
        text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
    bool matched = false;
    if (first && part == "kl") {
      matched = true;
    } else {
      for (const auto& [x, n] : extra_names()) {
        if (n == part) {
          extras.insert(x);
          matched = true;
        }
      }
    }
    if (!matched) throw std::invalid_argument("unknown profile component: " + std::string(part));
    first = false;
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return LogicProfile(std::move(extras));
}

std::string LogicProfile::name() const {
  if (has(Extra::kMtl)) {
    std::string s = "mtl";
    for (Extra e : extras_) {
      if (e != Extra::kMtl && e != Extra::kRSer && e != Extra::kRDiscr) {
        s += "+" + std::string(extra_name(e));
      }
    }
    return s;
  }
  std::string s = "kl";
  for (Extra e : extras_) s += "+" + std::string(extra_name(e));
  return s;
}

bool LogicProfile::allows(Rule r) const {
  if (r == Rule::kXI || r == Rule::kXE) return has(Extra::kMtl);
  auto e = axiom_extra(r);
  return !e || has(*e);
}

std::optional<Extra> axiom_extra(Rule r) {
  switch (r) {
    case Rule::kFirst: return Extra::kFirst;
    case Rule::kFinal: return Extra::kFinal;
    case Rule::kLSer: return Extra::kLSer;
    case Rule::kRSer: return Extra::kRSer;
    case Rule::kDens: return Extra::kDens;
    case Rule::kLDiscr: return Extra::kLDiscr;
    case Rule::kRDiscr: return Extra::kRDiscr;
    default: return std::nullopt;
  }
}

std::optional<RFormula> axiom_template(Rule r) {
  static const std::map<Rule, RFormula> templates = {
      {Rule::kReflEq, parse_rformula("forall x. x = x")},
      {Rule::kIrreflLt, parse_rformula("forall x. !(x < x)")},
      {Rule::kTransLt,
       parse_rformula("forall x. forall y. forall z. (x < y /\\ y < z) => x < z")},
      {Rule::kConn, parse_rformula("forall x. forall y. x < y \\/ x = y \\/ y < x")},
      {Rule::kFirst, parse_rformula("exists x. forall y. !(y < x)")},
      {Rule::kFinal, parse_rformula("exists x. forall y. !(x < y)")},
      {Rule::kLSer, parse_rformula("forall x. exists y. y < x")},
      {Rule::kRSer, parse_rformula("forall x. exists y. x < y")},
      {Rule::kDens, parse_rformula("forall x. forall y. x < y => exists z. x < z /\\ z < y")},
      {Rule::kLDiscr, parse_rformula("forall x. forall y. x < y => exists z. z < y /\\ "
                                     "!(exists u. z < u /\\ u < y)")},
      {Rule::kRDiscr, parse_rformula("forall x. forall y. x < y => exists z. x < z /\\ "
                                     "!(exists u. x < u /\\ u < z)")},
  };
  auto it = templates.find(r);
  if (it == templates.end()) return std::nullopt;
  return it->second;
}

RuleSchema rule_schema(Rule r) {
  const RuleInfo& info = rule_info(r);
  RuleSchema s{r, info.name, info.cls, {}, "", {}, "", axiom_template(r)};
  auto set = [&](std::vector<std::string> ps, std::string c, std::vector<std::string> ds = {},
                 std::string side = "") {
    s.premises = std::move(ps);
    s.conclusion = std::move(c);
    s.discharges = std::move(ds);
    s.side_condition = std::move(side);
  };
  switch (r) {
    case Rule::kAssume: set({}, "phi"); break;
    case Rule::kRaaBot: set({"y : false"}, "x : A", {"0: x : A -> false"}); break;
    case Rule::kImpI: set({"x : B"}, "x : A -> B", {"0: x : A"}); break;
    case Rule::kImpE: set({"x : A -> B", "x : A"}, "x : B"); break;
    case Rule::kGI:
      set({"y : A"}, "x : G A", {"0: x < y"}, "y differs from x and from every other open label");
      break;
    case Rule::kGE: set({"x : G A", "x < y"}, "y : A"); break;
    case Rule::kHI:
      set({"y : A"}, "x : H A", {"0: y < x"}, "y differs from x and from every other open label");
      break;
    case Rule::kHE: set({"x : H A", "y < x"}, "y : A"); break;
    case Rule::kXI:
      set({"y : A"}, "x : X A", {"0: x <. y"}, "y differs from x and from every other open label");
      break;
    case Rule::kXE: set({"x : X A", "x <. y"}, "y : A"); break;
    case Rule::kRaaEmpty: set({"empty"}, "r", {"0: r => empty"}); break;
    case Rule::kRImpI: set({"r2"}, "r1 => r2", {"0: r1"}); break;
    case Rule::kRImpE: set({"r1 => r2", "r1"}, "r2"); break;
    case Rule::kForallI:
      set({"r[u/x]"}, "forall x. r", {}, "u not free in the conclusion or any open assumption");
      break;
    case Rule::kForallE: set({"forall x. r"}, "r[y/x]"); break;
    case Rule::kMon:
      set({"phi", "x = y"}, "phi with some free occurrences of x replaced by y");
      break;
    case Rule::kUf1: set({"x : false"}, "empty"); break;
    case Rule::kUf2: set({"empty"}, "x : false"); break;
    case Rule::kFI: set({"y : A", "x < y"}, "x : F A"); break;
    case Rule::kPI: set({"y : A", "y < x"}, "x : P A"); break;
    case Rule::kFE:
      set({"x : F A", "phi"}, "phi", {"1: y : A", "1: x < y"},
          "y differs from x, is not free in phi nor in other open assumptions");
      break;
    case Rule::kPE:
      set({"x : P A", "phi"}, "phi", {"1: y : A", "1: y < x"},
          "y differs from x, is not free in phi nor in other open assumptions");
      break;
    case Rule::kNotI: set({"x : false"}, "x : ~ A", {"0: x : A"}); break;
    case Rule::kNotE: set({"x : ~ A", "x : A"}, "x : false"); break;
    case Rule::kAndI: set({"x : A", "x : B"}, "x : A & B"); break;
    case Rule::kAndE1: set({"x : A & B"}, "x : A"); break;
    case Rule::kAndE2: set({"x : A & B"}, "x : B"); break;
    case Rule::kOrI1: set({"x : A"}, "x : A | B"); break;
    case Rule::kOrI2: set({"x : B"}, "x : A | B"); break;
    case Rule::kOrE: set({"x : A | B", "phi", "phi"}, "phi", {"1: x : A", "2: x : B"}); break;
    case Rule::kRNotI: set({"empty"}, "! r", {"0: r"}); break;
    case Rule::kRNotE: set({"! r", "r"}, "empty"); break;
    case Rule::kRAndI: set({"r1", "r2"}, "r1 /\\ r2"); break;
    case Rule::kRAndE1: set({"r1 /\\ r2"}, "r1"); break;
    case Rule::kRAndE2: set({"r1 /\\ r2"}, "r2"); break;
    case Rule::kROrI1: set({"r1"}, "r1 \\/ r2"); break;
    case Rule::kROrI2: set({"r2"}, "r1 \\/ r2"); break;
    case Rule::kROrE: set({"r1 \\/ r2", "phi", "phi"}, "phi", {"1: r1", "2: r2"}); break;
    case Rule::kExI: set({"r[y/x]"}, "exists x. r"); break;
    case Rule::kExE:
      set({"exists x. r", "phi"}, "phi", {"1: r[y/x]"},
          "y not free in exists x. r, phi or other open assumptions");
      break;
    default: {
      auto t = axiom_template(r);
      if (!t) throw std::logic_error("rule_schema: no schema");
      set({}, render(*t));
      break;
    }
  }
  return s;
}

}  // namespace tenseproof
