#ifndef TENSEPROOF_CORPUS_HPP_
#define TENSEPROOF_CORPUS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "tenseproof/derivation.hpp"
#include "tenseproof/rules.hpp"
#include "tenseproof/syntax.hpp"

namespace tenseproof {

// One transcribed derivation. Entries without `expected_open` must be theorems;
// the rest are checked against that exact set of open assumptions.
struct CorpusEntry {
  std::string id;
  LogicProfile profile;
  std::string source;
  Judgment expected = RFormula::empty();
  std::optional<ProofContext> expected_open;
  Derivation derivation;
  std::string file;
};

// TENSEPROOF_CORPUS when set, else the directory configured at build time.
std::string default_corpus_dir();

CorpusEntry load_corpus_entry(const std::string& path);
// Every *.json entry in `dir`, sorted by id.
std::vector<CorpusEntry> load_corpus(const std::string& dir = default_corpus_dir());

struct StageResult {
  std::string stage;    // check, expand, normalize, normal, tracks, audit, probe
  std::string verdict;  // PASS, FAIL, COUNTERMODEL, SKIPPED-SEMANTICS
  std::string note;
};

struct EntryResult {
  std::string id;
  std::vector<StageResult> stages;
  int exit_code = 0;  // 0, 1 check, 2 normalization, 3 probe
  Derivation normal_form;
};

EntryResult run_entry(const CorpusEntry& e, int probe_worlds = 4);

struct CorpusSummary {
  std::vector<EntryResult> entries;
  int exit_code = 0;
  std::string table() const;
};

CorpusSummary run_corpus(const std::string& prefix = "", const std::string& dir = default_corpus_dir(),
                         int probe_worlds = 4);

}  // namespace tenseproof

#endif  // TENSEPROOF_CORPUS_HPP_
