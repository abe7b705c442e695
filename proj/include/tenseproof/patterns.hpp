#ifndef TENSEPROOF_PATTERNS_HPP_
#define TENSEPROOF_PATTERNS_HPP_

#include <optional>
#include <utility>

#include "tenseproof/syntax.hpp"

// Shape tests on core forms. Every matcher expands its input first, so an
// abbreviation and its unfolding are recognised alike. Parts come back in core form.
namespace tenseproof::pat {

bool is_falsum(const Formula& f);
std::optional<std::pair<Formula, Formula>> imp(const Formula& f);
std::optional<Formula> g(const Formula& f);
std::optional<Formula> h(const Formula& f);
std::optional<Formula> x(const Formula& f);
std::optional<Formula> neg(const Formula& f);
std::optional<std::pair<Formula, Formula>> conj(const Formula& f);
std::optional<std::pair<Formula, Formula>> disj(const Formula& f);
std::optional<Formula> f(const Formula& f);
std::optional<Formula> p(const Formula& f);

bool is_empty(const RFormula& r);
std::optional<std::pair<Label, Label>> less(const RFormula& r);
std::optional<std::pair<Label, Label>> eq(const RFormula& r);
std::optional<std::pair<Label, Label>> prec(const RFormula& r);
std::optional<std::pair<RFormula, RFormula>> rimp(const RFormula& r);
std::optional<std::pair<Label, RFormula>> forall(const RFormula& r);
std::optional<RFormula> rneg(const RFormula& r);
std::optional<std::pair<RFormula, RFormula>> rconj(const RFormula& r);
std::optional<std::pair<RFormula, RFormula>> rdisj(const RFormula& r);
std::optional<std::pair<Label, RFormula>> exists(const RFormula& r);

}  // namespace tenseproof::pat

#endif  // TENSEPROOF_PATTERNS_HPP_
