// Command-line front end: check, normalize, eval, valid, corpus.
//
// Exit codes: 0 success, 1 check failure, 2 normalization failure,
// 3 semantic failure (countermodel), 4 I/O or parse error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tenseproof/checker.hpp"
#include "tenseproof/corpus.hpp"
#include "tenseproof/expand.hpp"
#include "tenseproof/json_io.hpp"
#include "tenseproof/normalizer.hpp"
#include "tenseproof/parser.hpp"
#include "tenseproof/semantics.hpp"

namespace tp = tenseproof;

namespace {

constexpr int kExitCheck = 1;
constexpr int kExitNormalize = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitInput = 4;

void print_report(const tp::CheckReport& r) {
  std::cout << (r.valid ? "VALID" : "INVALID") << (r.is_theorem ? " theorem" : "") << "\n";
  std::cout << "conclusion: " << tp::render(r.conclusion) << "\n";
  for (const auto& j : r.open.judgments()) std::cout << "open: " << tp::render(j) << "\n";
  for (const auto& v : r.violations) {
    std::cout << tp::violation_name(v.kind) << " at " << tp::path_string(v.path) << ": " << v.message << "\n";
  }
}

int cmd_check(const std::string& file, const std::string& profile_text, std::optional<int> probe) {
  tp::LogicProfile profile = tp::LogicProfile::parse(profile_text);
  tp::Derivation d = tp::load_derivation_file(file);
  tp::CheckReport r = tp::check(d, profile);
  print_report(r);
  if (!r.valid) return kExitCheck;
  if (probe) {
    tp::ProbeResult p = tp::soundness_probe(d, *probe, profile);
    std::cout << "probe: " << tp::probe_status_name(p.status);
    if (!p.note.empty()) std::cout << " (" << p.note << ")";
    std::cout << "\n";
    if (p.countermodel) std::cout << tp::countermodel_to_json(*p.countermodel).dump(2) << "\n";
    if (p.status == tp::ProbeStatus::kCountermodel) return kExitSemantic;
  }
  return 0;
}

int cmd_normalize(const std::string& file, const std::string& profile_text, bool trace,
                  const std::string& out) {
  tp::LogicProfile profile = tp::LogicProfile::parse(profile_text);
  tp::Derivation d = tp::load_derivation_file(file);
  tp::CheckReport r = tp::check(d, profile);
  if (!r.valid) {
    print_report(r);
    return kExitCheck;
  }
  tp::NormalizeOptions opts;
  if (trace) {
    opts.trace = [](const tp::TraceRecord& t) { std::cerr << t.to_json().dump() << "\n"; };
  }
  tp::Derivation nf;
  try {
    nf = tp::normalize(d, opts);
  } catch (const tp::NonTermination& e) {
    std::cerr << "normalize: " << e.what() << "\n";
    return kExitNormalize;
  }
  tp::CheckReport nr = tp::check(nf, profile);
  nlohmann::json j = tp::derivation_to_json(nf);
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    tp::write_json_file(out, j);
  }
  if (!nr.valid || !tp::is_normal(nf)) {
    std::cerr << "normalize: result is " << (nr.valid ? "not normal" : "invalid") << "\n";
    return kExitNormalize;
  }
  return 0;
}

int cmd_eval(const std::string& model_file, const std::string& lambda_file, const std::string& formula) {
  tp::Model m = tp::model_from_json(tp::read_json_file(model_file));
  tp::Interpretation lam = tp::interpretation_from_json(tp::read_json_file(lambda_file));
  tp::Judgment j = tp::parse_judgment(formula);
  std::cout << (tp::eval(m, lam, j) ? "true" : "false") << "\n";
  return 0;
}

int cmd_valid(const std::string& formula, int max_worlds, const std::string& profile_text) {
  tp::LogicProfile profile = tp::LogicProfile::parse(profile_text);
  tp::Judgment j = tp::parse_judgment(formula);
  try {
    auto cm = tp::find_countermodel(tp::ProofContext(), j, max_worlds, profile);
    if (!cm) {
      std::cout << "VALID up to " << max_worlds << " worlds\n";
      return 0;
    }
    std::cout << "COUNTERMODEL\n" << tp::countermodel_to_json(*cm).dump(2) << "\n";
    return kExitSemantic;
  } catch (const tp::FinitelyVacuous& e) {
    std::cout << "SKIPPED-SEMANTICS (" << e.what() << ")\n";
    return 0;
  }
}

int cmd_corpus(const std::string& prefix, const std::string& dir, int max_worlds) {
  tp::CorpusSummary s = tp::run_corpus(prefix, dir.empty() ? tp::default_corpus_dir() : dir, max_worlds);
  std::cout << s.table();
  std::cout << s.entries.size() << " entries, exit " << s.exit_code << "\n";
  return s.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Labeled natural deduction for linear tense logic"};
  app.require_subcommand(1);

  std::string file, profile = "kl", out, model_file, lambda_file, formula, prefix, dir;
  std::optional<int> probe;
  bool trace = false;
  int max_worlds = 4;

  auto* check = app.add_subcommand("check", "check a derivation file");
  check->add_option("FILE", file, "derivation JSON")->required();
  check->add_option("--profile", profile, "logic profile, e.g. kl, kl+first, mtl");
  check->add_option("--probe", probe, "also search for countermodels up to N worlds");

  auto* norm = app.add_subcommand("normalize", "normalize a derivation file");
  norm->add_option("FILE", file, "derivation JSON")->required();
  norm->add_option("--profile", profile, "logic profile");
  norm->add_flag("--trace", trace, "print each reduction step as JSON on stderr");
  norm->add_option("-o,--output", out, "write the normal form here");

  auto* ev = app.add_subcommand("eval", "evaluate a formula in a finite model");
  ev->add_option("MODELFILE", model_file, "model JSON")->required();
  ev->add_option("LAMBDAFILE", lambda_file, "label interpretation JSON")->required();
  ev->add_option("FORMULA", formula, "lwff or rwff")->required();

  auto* valid = app.add_subcommand("valid", "bounded validity search");
  valid->add_option("FORMULA", formula, "lwff or rwff")->required();
  valid->add_option("--max-worlds", max_worlds, "largest chain to try")->required();
  valid->add_option("--profile", profile, "logic profile");

  auto* corpus = app.add_subcommand("corpus", "run the derivation corpus");
  corpus->add_option("PREFIX", prefix, "only entries whose id starts with this");
  corpus->add_option("--dir", dir, "corpus directory");
  corpus->add_option("--max-worlds", max_worlds, "probe bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*check) return cmd_check(file, profile, probe);
    if (*norm) return cmd_normalize(file, profile, trace, out);
    if (*ev) return cmd_eval(model_file, lambda_file, formula);
    if (*valid) return cmd_valid(formula, max_worlds, profile);
    if (*corpus) return cmd_corpus(prefix, dir, max_worlds);
  } catch (const tp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const tp::FormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const tp::UnboundLabel& e) {
    std::cerr << "eval error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
