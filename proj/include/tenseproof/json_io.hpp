#ifndef TENSEPROOF_JSON_IO_HPP_
#define TENSEPROOF_JSON_IO_HPP_

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "tenseproof/derivation.hpp"

namespace tenseproof {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fields: rule, conclusion, premises, marker, discharges, fresh.
// Axiom leaves may omit the conclusion; it is filled from the template.
Derivation derivation_from_json(const nlohmann::json& j);
nlohmann::json derivation_to_json(const Derivation& d);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

// Accepts a bare derivation or an object carrying one under "derivation".
Derivation load_derivation_file(const std::string& path);

}  // namespace tenseproof

#endif  // TENSEPROOF_JSON_IO_HPP_
