#include "tenseproof/parser.hpp"

#include <cctype>
#include <set>

namespace tenseproof {

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ", ";
    out += x;
  }
  return out;
}

enum class Tok {
  kIdent,
  kLParen,
  kRParen,
  kColon,
  kArrow,
  kTilde,
  kAmp,
  kBar,
  kG,
  kH,
  kF,
  kP,
  kX,
  kDArrow,
  kBang,
  kWedge,
  kVee,
  kLt,
  kPrec,
  kEq,
  kDot,
  kForall,
  kExists,
  kEmpty,
  kFalse,
  kTrue,
  kEnd,
};

const char* spelling(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kColon: return "':'";
    case Tok::kArrow: return "'->'";
    case Tok::kTilde: return "'~'";
    case Tok::kAmp: return "'&'";
    case Tok::kBar: return "'|'";
    case Tok::kG: return "'G'";
    case Tok::kH: return "'H'";
    case Tok::kF: return "'F'";
    case Tok::kP: return "'P'";
    case Tok::kX: return "'X'";
    case Tok::kDArrow: return "'=>'";
    case Tok::kBang: return "'!'";
    case Tok::kWedge: return "'/\\'";
    case Tok::kVee: return "'\\/'";
    case Tok::kLt: return "'<'";
    case Tok::kPrec: return "'<.'";
    case Tok::kEq: return "'='";
    case Tok::kDot: return "'.'";
    case Tok::kForall: return "'forall'";
    case Tok::kExists: return "'exists'";
    case Tok::kEmpty: return "'empty'";
    case Tok::kFalse: return "'false'";
    case Tok::kTrue: return "'true'";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(s.substr(i, len)), line, col});
    i += len;
    col += static_cast<int>(len);
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    auto next = [&](char d) { return i + 1 < s.size() && s[i + 1] == d; };
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string_view w = s.substr(i, j - i);
      Tok k = Tok::kIdent;
      if (w == "forall") k = Tok::kForall;
      else if (w == "exists") k = Tok::kExists;
      else if (w == "empty") k = Tok::kEmpty;
      else if (w == "false") k = Tok::kFalse;
      else if (w == "true") k = Tok::kTrue;
      push(k, j - i);
      continue;
    }
    switch (c) {
      case '(': push(Tok::kLParen, 1); continue;
      case ')': push(Tok::kRParen, 1); continue;
      case ':': push(Tok::kColon, 1); continue;
      case '~': push(Tok::kTilde, 1); continue;
      case '&': push(Tok::kAmp, 1); continue;
      case '|': push(Tok::kBar, 1); continue;
      case 'G': push(Tok::kG, 1); continue;
      case 'H': push(Tok::kH, 1); continue;
      case 'F': push(Tok::kF, 1); continue;
      case 'P': push(Tok::kP, 1); continue;
      case 'X': push(Tok::kX, 1); continue;
      case '!': push(Tok::kBang, 1); continue;
      case '.': push(Tok::kDot, 1); continue;
      case '-':
        if (next('>')) { push(Tok::kArrow, 2); continue; }
        break;
      case '=':
        if (next('>')) { push(Tok::kDArrow, 2); continue; }
        push(Tok::kEq, 1);
        continue;
      case '<':
        if (next('.')) { push(Tok::kPrec, 2); continue; }
        push(Tok::kLt, 1);
        continue;
      case '/':
        if (next('\\')) { push(Tok::kWedge, 2); continue; }
        break;
      case '\\':
        if (next('/')) { push(Tok::kVee, 2); continue; }
        break;
      default:
        break;
    }
    throw ParseError(line, col, {}, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::kEnd, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Formula formula() { return finish(imp()); }
  RFormula rformula() { return finish(rimp()); }
  Lwff lwff() { return finish(lwff_body()); }
  Judgment judgment() {
    if (toks_.size() > 2 && toks_[0].kind == Tok::kIdent && toks_[1].kind == Tok::kColon) {
      return finish(lwff_body());
    }
    return Judgment(finish(rimp()));
  }

 private:
  const Token& cur() const { return toks_[pos_]; }

  bool peek(Tok k) {
    expected_.insert(spelling(k));
    return cur().kind == k;
  }

  bool accept(Tok k) {
    if (!peek(k)) return false;
    ++pos_;
    expected_.clear();
    return true;
  }

  Token expect(Tok k) {
    if (!peek(k)) fail();
    Token t = cur();
    ++pos_;
    expected_.clear();
    return t;
  }

  [[noreturn]] void fail() {
    std::vector<std::string> exp(expected_.begin(), expected_.end());
    std::string found = cur().kind == Tok::kEnd ? "end of input" : "'" + cur().text + "'";
    throw ParseError(cur().line, cur().column, exp, found);
  }

  template <typename T>
  T finish(T value) {
    if (!peek(Tok::kEnd)) fail();
    return value;
  }

  Lwff lwff_body() {
    Label l(expect(Tok::kIdent).text);
    expect(Tok::kColon);
    return Lwff{l, imp()};
  }

  // A -> B, right associative
  Formula imp() {
    Formula a = disj();
    if (accept(Tok::kArrow)) return Formula::implies(a, imp());
    return a;
  }

  Formula disj() {
    Formula a = conj();
    if (accept(Tok::kBar)) return Formula::disj(a, disj());
    return a;
  }

  Formula conj() {
    Formula a = unary();
    if (accept(Tok::kAmp)) return Formula::conj(a, conj());
    return a;
  }

  Formula unary() {
    if (accept(Tok::kTilde)) return Formula::neg(unary());
    if (accept(Tok::kG)) return Formula::g(unary());
    if (accept(Tok::kH)) return Formula::h(unary());
    if (accept(Tok::kF)) return Formula::f(unary());
    if (accept(Tok::kP)) return Formula::p(unary());
    if (accept(Tok::kX)) return Formula::x(unary());
    if (accept(Tok::kFalse)) return Formula::falsum();
    if (accept(Tok::kTrue)) return Formula::top();
    if (peek(Tok::kIdent)) return Formula::atom(expect(Tok::kIdent).text);
    if (accept(Tok::kLParen)) {
      Formula f = imp();
      expect(Tok::kRParen);
      return f;
    }
    fail();
  }

  RFormula rimp() {
    RFormula a = rdisj();
    if (accept(Tok::kDArrow)) return RFormula::implies(a, rimp());
    return a;
  }

  RFormula rdisj() {
    RFormula a = rconj();
    if (accept(Tok::kVee)) return RFormula::disj(a, rdisj());
    return a;
  }

  RFormula rconj() {
    RFormula a = runary();
    if (accept(Tok::kWedge)) return RFormula::conj(a, rconj());
    return a;
  }

  RFormula runary() {
    if (accept(Tok::kBang)) return RFormula::neg(runary());
    if (peek(Tok::kForall) || peek(Tok::kExists)) {
      bool all = cur().kind == Tok::kForall;
      ++pos_;
      expected_.clear();
      Label v(expect(Tok::kIdent).text);
      expect(Tok::kDot);
      RFormula body = rimp();
      return all ? RFormula::forall(v, body) : RFormula::exists(v, body);
    }
    if (accept(Tok::kEmpty)) return RFormula::empty();
    if (peek(Tok::kIdent)) {
      Label a(expect(Tok::kIdent).text);
      if (accept(Tok::kLt)) return RFormula::less(a, Label(expect(Tok::kIdent).text));
      if (accept(Tok::kEq)) return RFormula::eq(a, Label(expect(Tok::kIdent).text));
      if (accept(Tok::kPrec)) return RFormula::prec(a, Label(expect(Tok::kIdent).text));
      fail();
    }
    if (accept(Tok::kLParen)) {
      RFormula r = rimp();
      expect(Tok::kRParen);
      return r;
    }
    fail();
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::set<std::string> expected_;
};

// ---------------------------------------------------------------- printer

int precedence(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kImplies: return 1;
    case FormulaKind::kOr: return 2;
    case FormulaKind::kAnd: return 3;
    default: return 4;
  }
}

int precedence(const RFormula& r) {
  switch (r.kind()) {
    case RFormulaKind::kRImplies: return 1;
    case RFormulaKind::kROr: return 2;
    case RFormulaKind::kRAnd: return 3;
    default: return 4;
  }
}

std::string paren(const std::string& s) { return "(" + s + ")"; }

}  // namespace

ParseError::ParseError(int line, int column, std::vector<std::string> expected,
                       const std::string& found)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(column) +
                         ": found " + found +
                         (expected.empty() ? "" : ", expected one of " + join(expected))),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

Formula parse_formula(std::string_view text) { return Parser(text).formula(); }
RFormula parse_rformula(std::string_view text) { return Parser(text).rformula(); }
Lwff parse_lwff(std::string_view text) { return Parser(text).lwff(); }
Judgment parse_judgment(std::string_view text) { return Parser(text).judgment(); }

std::string render(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kAtom: return f.name();
    case FormulaKind::kFalsum: return "false";
    case FormulaKind::kTop: return "true";
    case FormulaKind::kNot:
    case FormulaKind::kG:
    case FormulaKind::kH:
    case FormulaKind::kF:
    case FormulaKind::kP:
    case FormulaKind::kX: {
      static const char* ops = "~GHFPX";
      char op = '?';
      switch (f.kind()) {
        case FormulaKind::kNot: op = ops[0]; break;
        case FormulaKind::kG: op = ops[1]; break;
        case FormulaKind::kH: op = ops[2]; break;
        case FormulaKind::kF: op = ops[3]; break;
        case FormulaKind::kP: op = ops[4]; break;
        default: op = ops[5]; break;
      }
      std::string arg = render(f.lhs());
      if (precedence(f.lhs()) < 4) arg = paren(arg);
      return std::string(1, op) + " " + arg;
    }
    case FormulaKind::kImplies:
    case FormulaKind::kOr:
    case FormulaKind::kAnd: {
      const char* op = f.kind() == FormulaKind::kImplies ? " -> "
                       : f.kind() == FormulaKind::kOr    ? " | "
                                                         : " & ";
      std::string l = render(f.lhs());
      if (!f.lhs().is_atomic()) l = paren(l);
      std::string r = render(f.rhs());
      int pr = precedence(f.rhs());
      if (pr < precedence(f)) r = paren(r);
      return l + op + r;
    }
  }
  return "?";
}

std::string render(const RFormula& r) {
  switch (r.kind()) {
    case RFormulaKind::kLess: return r.left().name + " < " + r.right().name;
    case RFormulaKind::kEq: return r.left().name + " = " + r.right().name;
    case RFormulaKind::kPrec: return r.left().name + " <. " + r.right().name;
    case RFormulaKind::kEmpty: return "empty";
    case RFormulaKind::kRNot: {
      std::string arg = render(r.lhs());
      RFormulaKind k = r.lhs().kind();
      if (k != RFormulaKind::kRNot && k != RFormulaKind::kEmpty) arg = paren(arg);
      return "! " + arg;
    }
    case RFormulaKind::kForall:
    case RFormulaKind::kExists:
      return std::string(r.kind() == RFormulaKind::kForall ? "forall " : "exists ") +
             r.var().name + ". " + render(r.body());
    case RFormulaKind::kRImplies:
    case RFormulaKind::kROr:
    case RFormulaKind::kRAnd: {
      const char* op = r.kind() == RFormulaKind::kRImplies ? " => "
                       : r.kind() == RFormulaKind::kROr    ? " \\/ "
                                                           : " /\\ ";
      std::string l = render(r.lhs());
      if (!r.lhs().is_atomic() && r.lhs().kind() != RFormulaKind::kPrec) l = paren(l);
      std::string rs = render(r.rhs());
      if (precedence(r.rhs()) < precedence(r)) rs = paren(rs);
      return l + op + rs;
    }
  }
  return "?";
}

std::string render(const Lwff& l) { return l.label.name + " : " + render(l.formula); }

std::string render(const Judgment& j) {
  return is_labeled(j) ? render(as_lwff(j)) : render(as_rwff(j));
}

}  // namespace tenseproof
