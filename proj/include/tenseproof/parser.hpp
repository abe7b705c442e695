#ifndef TENSEPROOF_PARSER_HPP_
#define TENSEPROOF_PARSER_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tenseproof/syntax.hpp"

namespace tenseproof {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::vector<std::string> expected, const std::string& found);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

enum class SyntaxKind { kFormula, kRFormula, kLwff, kJudgment };

Formula parse_formula(std::string_view text);
RFormula parse_rformula(std::string_view text);
Lwff parse_lwff(std::string_view text);
// `label : A` is labeled; anything else is relational.
Judgment parse_judgment(std::string_view text);

std::string render(const Formula& f);
std::string render(const RFormula& r);
std::string render(const Lwff& l);
std::string render(const Judgment& j);

}  // namespace tenseproof

#endif  // TENSEPROOF_PARSER_HPP_
