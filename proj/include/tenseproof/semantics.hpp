#ifndef TENSEPROOF_SEMANTICS_HPP_
#define TENSEPROOF_SEMANTICS_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "tenseproof/derivation.hpp"
#include "tenseproof/rules.hpp"
#include "tenseproof/syntax.hpp"

namespace tenseproof {

class UnboundLabel : public std::runtime_error {
 public:
  explicit UnboundLabel(const Label& l) : std::runtime_error("unbound label " + l.name) {}
};

class FinitelyVacuous : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Worlds 0..n-1 with a precedence relation and a valuation of atoms.
class Model {
 public:
  explicit Model(int n = 0);
  static Model chain(int n);

  int size() const { return n_; }
  bool prec(int i, int j) const { return prec_[i * n_ + j]; }
  void set_prec(int i, int j, bool v = true) { prec_[i * n_ + j] = v; }
  // Immediate successor: i < j with nothing strictly between.
  bool succ(int i, int j) const;

  bool holds(const std::string& atom, int w) const;
  void set_atom(const std::string& atom, int w, bool v = true);
  const std::map<std::string, std::vector<bool>>& valuation() const { return val_; }

 private:
  int n_;
  std::vector<bool> prec_;
  std::map<std::string, std::vector<bool>> val_;
};

using Interpretation = std::map<Label, int>;

struct FrameReport {
  bool irreflexive = false;
  bool transitive = false;
  bool connected = false;
  std::map<Extra, bool> extras;  // one verdict per requested extension
  bool ok() const;
};

FrameReport check_frame(const Model& m, const LogicProfile& profile);

// Truth of a labeled formula at a world; abbreviations are read directly.
bool eval_at(const Model& m, int w, const Formula& f);
bool eval(const Model& m, const Interpretation& lam, const RFormula& r);
bool eval(const Model& m, const Interpretation& lam, const Judgment& j);
bool entails(const Model& m, const Interpretation& lam, const ProofContext& ctx,
             const Judgment& phi);

struct Countermodel {
  Model model;
  Interpretation lambda;
};

// Searches chains of size min_worlds..max_worlds in order, then valuations, then
// interpretations, and returns the first model satisfying ctx but not phi.
std::optional<Countermodel> find_countermodel(const ProofContext& ctx, const Judgment& phi,
                                              int max_worlds, const LogicProfile& profile,
                                              int min_worlds = 1);

enum class ProbeStatus { kPass, kCountermodel, kSkipped };

struct ProbeResult {
  ProbeStatus status;
  std::optional<Countermodel> countermodel;
  std::string note;
};

std::string_view probe_status_name(ProbeStatus s);

ProbeResult soundness_probe(const Derivation& d, int max_worlds,
                            const LogicProfile& profile = LogicProfile::kl());

nlohmann::json model_to_json(const Model& m);
// {n, prec: [[i, j]], valuation: {"p": [worlds]}}
Model model_from_json(const nlohmann::json& j);
nlohmann::json countermodel_to_json(const Countermodel& c);
Interpretation interpretation_from_json(const nlohmann::json& j);

}  // namespace tenseproof

#endif  // TENSEPROOF_SEMANTICS_HPP_
