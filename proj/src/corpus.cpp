#include "tenseproof/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "tenseproof/audit.hpp"
#include "tenseproof/checker.hpp"
#include "tenseproof/expand.hpp"
#include "tenseproof/json_io.hpp"
#include "tenseproof/normalizer.hpp"
#include "tenseproof/parser.hpp"
#include "tenseproof/semantics.hpp"
#include "tenseproof/tracks.hpp"

#ifndef TENSEPROOF_CORPUS_DIR
#define TENSEPROOF_CORPUS_DIR "corpus"
#endif

namespace tenseproof {

std::string default_corpus_dir() {
  if (const char* env = std::getenv("TENSEPROOF_CORPUS")) return env;
  return TENSEPROOF_CORPUS_DIR;
}

CorpusEntry load_corpus_entry(const std::string& path) {
  nlohmann::json j = read_json_file(path);
  CorpusEntry e;
  e.file = path;
  try {
    e.id = j.at("id").get<std::string>();
    e.profile = LogicProfile::parse(j.value("profile", std::string("kl")));
    e.source = j.value("source", std::string());
    e.expected = parse_judgment(j.at("expected").get<std::string>());
    if (j.contains("expected_open")) {
      ProofContext ctx;
      for (const auto& s : j["expected_open"]) ctx.add(parse_judgment(s.get<std::string>()));
      e.expected_open = ctx;
    }
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(path + ": " + ex.what());
  } catch (const ParseError& ex) {
    throw FormatError(path + ": " + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw FormatError(path + ": " + ex.what());
  }
  if (!j.contains("derivation")) throw FormatError(path + ": missing derivation");
  try {
    e.derivation = derivation_from_json(j["derivation"]);
  } catch (const FormatError& ex) {
    throw FormatError(path + ": " + ex.what());
  }
  return e;
}

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw FormatError("corpus directory not found: " + dir);
  std::vector<CorpusEntry> out;
  for (const auto& f : fs::directory_iterator(dir)) {
    if (f.path().extension() == ".json") out.push_back(load_corpus_entry(f.path().string()));
  }
  std::sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
  return out;
}

namespace {

std::string first_violation(const CheckReport& r) {
  if (r.violations.empty()) return "";
  const auto& v = r.violations.front();
  return std::string(violation_name(v.kind)) + " at " + path_string(v.path) + ": " + v.message;
}

std::string render_context(const ProofContext& c) {
  std::string out = "{";
  for (const auto& j : c.judgments()) {
    if (out.size() > 1) out += ", ";
    out += render(j);
  }
  return out + "}";
}

}  // namespace

EntryResult run_entry(const CorpusEntry& e, int probe_worlds) {
  EntryResult res;
  res.id = e.id;
  auto add = [&](std::string stage, bool ok, std::string note, int code) {
    res.stages.push_back({std::move(stage), ok ? "PASS" : "FAIL", std::move(note)});
    if (!ok && (res.exit_code == 0 || code < res.exit_code)) res.exit_code = code;
    return ok;
  };

  CheckReport rep = check(e.derivation, e.profile);
  bool ok = rep.valid;
  std::string note = first_violation(rep);
  if (ok && !alpha_equal(e.derivation.conclusion(), e.expected) && !same(e.derivation.conclusion(), e.expected)) {
    ok = false;
    note = "conclusion " + render(e.derivation.conclusion()) + " differs from " + render(e.expected);
  }
  if (ok && e.expected_open && !(rep.open == *e.expected_open)) {
    ok = false;
    note = "open assumptions " + render_context(rep.open) + " differ from " + render_context(*e.expected_open);
  }
  if (ok && !e.expected_open && !rep.is_theorem) {
    ok = false;
    note = "open assumptions remain: " + render_context(rep.open);
  }
  if (!add("check", ok, note, 1)) return res;

  Derivation ex = expand_derived(e.derivation);
  CheckReport xr = check(ex, e.profile);
  ok = xr.valid && alpha_equal(ex.conclusion(), e.derivation.conclusion()) && xr.open == rep.open;
  if (!add("expand", ok, xr.valid ? "" : first_violation(xr), 1)) return res;

  Derivation nf;
  try {
    nf = normalize(ex);
  } catch (const NonTermination& t) {
    add("normalize", false, t.what(), 2);
    return res;
  }
  res.normal_form = nf;
  CheckReport nr = check(nf, e.profile);
  ok = nr.valid && alpha_equal(nf.conclusion(), e.derivation.conclusion()) && nr.open.subset_of(rep.open);
  note = !nr.valid ? first_violation(nr) : ok ? "" : "conclusion or open assumptions changed";
  add("normalize", ok, note + (ok ? std::to_string(nf.size()) + " nodes" : ""), 2);
  if (!ok) return res;

  NormalReport norm = diagnose_normal(nf);
  add("normal", norm.normal, norm.normal ? "" : norm.diagnosis.front().describe(), 2);

  TrackReport tr = analyze_tracks(nf);
  add("tracks", tr.ok(), tr.ok() ? std::to_string(tr.tracks.size()) + " tracks" : tr.violations.front(), 2);

  AuditReport au = audit_subformula(nf);
  add("audit", au.ok, au.ok ? "" : "unjustified formula at " + path_string(au.violations.front()), 2);

  ProbeResult pr = soundness_probe(e.derivation, probe_worlds, e.profile);
  StageResult ps{"probe", std::string(probe_status_name(pr.status)), pr.note};
  if (pr.status == ProbeStatus::kCountermodel) {
    if (res.exit_code == 0) res.exit_code = 3;
    if (pr.countermodel) ps.note = countermodel_to_json(*pr.countermodel).dump();
  }
  res.stages.push_back(ps);
  return res;
}

std::string CorpusSummary::table() const {
  std::ostringstream out;
  const char* stages[] = {"check", "expand", "normalize", "normal", "tracks", "audit", "probe"};
  std::size_t width = 2;
  for (const auto& e : entries) width = std::max(width, e.id.size());
  out << "id" << std::string(width, ' ');
  for (const char* s : stages) out << s << "  ";
  out << "\n";
  for (const auto& e : entries) {
    out << e.id << std::string(width + 2 - e.id.size(), ' ');
    for (const char* s : stages) {
      std::string v = "-";
      for (const auto& st : e.stages) {
        if (st.stage == s) v = st.verdict;
      }
      std::size_t w = std::max<std::size_t>(std::string(s).size(), v.size());
      out << v << std::string(w + 2 - v.size(), ' ');
    }
    out << "\n";
    for (const auto& st : e.stages) {
      if (st.verdict != "PASS" && st.verdict != "SKIPPED-SEMANTICS" && !st.note.empty()) {
        out << "    " << st.stage << ": " << st.note << "\n";
      }
    }
  }
  return out.str();
}

CorpusSummary run_corpus(const std::string& prefix, const std::string& dir, int probe_worlds) {
  CorpusSummary sum;
  for (const auto& e : load_corpus(dir)) {
    if (e.id.rfind(prefix, 0) != 0) continue;
    EntryResult r = run_entry(e, probe_worlds);
    if (r.exit_code != 0 && (sum.exit_code == 0 || r.exit_code < sum.exit_code)) sum.exit_code = r.exit_code;
    sum.entries.push_back(std::move(r));
  }
  return sum;
}

}  // namespace tenseproof
