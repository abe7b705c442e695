#include "tenseproof/json_io.hpp"

#include <fstream>
#include <sstream>

#include "tenseproof/parser.hpp"
#include "tenseproof/patterns.hpp"
#include "tenseproof/rules.hpp"

namespace tenseproof {

namespace {

Derivation parse_node(const nlohmann::json& j, const std::string& where) {
  if (!j.is_object()) throw FormatError(where + ": derivation node must be an object");
  if (!j.contains("rule") || !j["rule"].is_string()) {
    throw FormatError(where + ": missing string field 'rule'");
  }
  std::string name = j["rule"].get<std::string>();
  auto rule = rule_from_name(name);
  if (!rule) throw FormatError(where + ": unknown rule '" + name + "'");

  Derivation::Node n;
  n.rule = *rule;
  if (j.contains("conclusion")) {
    if (!j["conclusion"].is_string()) throw FormatError(where + ": conclusion must be a string");
    try {
      n.conclusion = parse_judgment(j["conclusion"].get<std::string>());
    } catch (const ParseError& e) {
      throw FormatError(where + ": " + e.what());
    }
  } else if (auto t = axiom_template(*rule)) {
    n.conclusion = *t;
  } else {
    throw FormatError(where + ": missing conclusion");
  }
  if (j.contains("marker")) {
    if (!j["marker"].is_number_integer()) throw FormatError(where + ": marker must be an integer");
    n.marker = j["marker"].get<int>();
  }
  if (j.contains("discharges")) {
    for (const auto& k : j["discharges"]) {
      if (!k.is_number_integer()) throw FormatError(where + ": discharges must be integers");
      n.discharges.push_back(k.get<int>());
    }
  }
  if (j.contains("fresh")) {
    if (!j["fresh"].is_string()) throw FormatError(where + ": fresh must be a string");
    n.fresh = Label(j["fresh"].get<std::string>());
  }
  if (j.contains("premises")) {
    if (!j["premises"].is_array()) throw FormatError(where + ": premises must be an array");
    for (std::size_t i = 0; i < j["premises"].size(); ++i) {
      n.premises.push_back(parse_node(j["premises"][i], where + "/" + std::to_string(i)));
    }
  }
  // An omitted eigenvariable on forall_i defaults to the bound variable.
  if (n.rule == Rule::kForallI && !n.fresh && !is_labeled(n.conclusion)) {
    if (auto q = pat::forall(as_rwff(n.conclusion))) n.fresh = q->first;
  }
  return Derivation(std::move(n));
}

}  // namespace

Derivation derivation_from_json(const nlohmann::json& j) { return parse_node(j, ""); }

nlohmann::json derivation_to_json(const Derivation& d) {
  const auto& n = d.node();
  nlohmann::json j;
  j["rule"] = std::string(rule_info(n.rule).name);
  j["conclusion"] = render(n.conclusion);
  if (n.marker) j["marker"] = *n.marker;
  if (!n.discharges.empty()) j["discharges"] = n.discharges;
  if (n.fresh) j["fresh"] = n.fresh->name;
  if (!n.premises.empty()) {
    j["premises"] = nlohmann::json::array();
    for (const auto& p : n.premises) j["premises"].push_back(derivation_to_json(p));
  }
  return j;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << j.dump(2) << "\n";
}

Derivation load_derivation_file(const std::string& path) {
  nlohmann::json j = read_json_file(path);
  if (j.is_object() && j.contains("derivation")) return derivation_from_json(j["derivation"]);
  return derivation_from_json(j);
}

}  // namespace tenseproof
