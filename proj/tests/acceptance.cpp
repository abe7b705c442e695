// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support/generators.hpp"
#include "tenseproof/audit.hpp"
#include "tenseproof/checker.hpp"
#include "tenseproof/corpus.hpp"
#include "tenseproof/json_io.hpp"
#include "tenseproof/normalizer.hpp"
#include "tenseproof/parser.hpp"
#include "tenseproof/rules.hpp"
#include "tenseproof/semantics.hpp"
#include "tenseproof/tracks.hpp"

namespace tp = tenseproof;

namespace {

const std::string kDir = TENSEPROOF_CORPUS_DIR;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    ok = false;
    notes.push_back(why);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string secs(double s) {
  std::ostringstream o;
  o.precision(3);
  o << s << "s";
  return o.str();
}

const tp::CorpusEntry& find(const std::vector<tp::CorpusEntry>& all, const std::string& id) {
  for (const auto& e : all) {
    if (e.id == id) return e;
  }
  throw std::runtime_error("corpus entry missing: " + id);
}

// 1. Every transcription is accepted under its profile.
Outcome corpus_check(const std::vector<tp::CorpusEntry>& all) {
  Outcome o;
  const std::vector<std::string> required = {"G1",    "G2",   "G3",    "G4",     "H1",
                                             "H2",    "H3",   "first", "rser",   "rdens",
                                             "rdiscr", "conn-canonical", "fi-template", "fe-template"};
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& id : required) {
    const tp::CorpusEntry* e = nullptr;
    for (const auto& c : all) {
      if (c.id == id) e = &c;
    }
    if (!e) {
      o.fail(id + " missing");
      continue;
    }
    tp::CheckReport r = tp::check(e->derivation, e->profile);
    if (!r.valid) o.fail(id + " invalid");
    if (!tp::same(r.conclusion, e->expected)) o.fail(id + " concludes something else");
    if (e->expected_open ? !(r.open == *e->expected_open) : !r.is_theorem) o.fail(id + " open assumptions differ");
  }
  double s = seconds_since(t0);
  if (s >= 1.0) o.fail("took " + secs(s));
  o.notes.push_back(std::to_string(required.size()) + " entries in " + secs(s));
  return o;
}

// 2. Normalization of every corpus entry.
Outcome corpus_normalize(const std::vector<tp::CorpusEntry>& all, std::vector<tp::Derivation>& normal) {
  Outcome o;
  for (const auto& e : all) {
    tp::Derivation n;
    try {
      n = tp::normalize(e.derivation);
    } catch (const std::exception& ex) {
      o.fail(e.id + ": " + ex.what());
      normal.push_back(e.derivation);
      continue;
    }
    normal.push_back(n);
    tp::CheckReport before = tp::check(e.derivation, e.profile);
    tp::CheckReport after = tp::check(n, e.profile);
    if (!after.valid) o.fail(e.id + ": normal form invalid");
    if (!tp::is_normal(n)) o.fail(e.id + ": not normal");
    if (!tp::audit_subformula(n).ok) o.fail(e.id + ": subformula audit");
    if (!(n.conclusion() == e.derivation.conclusion())) o.fail(e.id + ": conclusion changed");
    if (!after.open.subset_of(before.open)) o.fail(e.id + ": open assumptions grew");
  }
  o.notes.push_back(std::to_string(all.size()) + " entries");
  return o;
}

// 3. Track decomposition of the normal forms.
Outcome corpus_tracks(const std::vector<tp::CorpusEntry>& all, const std::vector<tp::Derivation>& normal) {
  Outcome o;
  std::size_t tracks = 0, links = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    tp::TrackReport r = tp::analyze_tracks(normal[i]);
    for (const auto& v : r.violations) o.fail(all[i].id + ": " + v);
    for (const auto& t : r.tracks) {
      if (t.falsum_rules > 1) o.fail(all[i].id + ": central part with several falsum rules");
    }
    for (const auto& l : r.links) {
      if (l.kind == tp::LinkKind::kUnclassified) o.fail(all[i].id + ": unclassified link");
    }
    tracks += r.tracks.size();
    links += r.links.size();
  }
  o.notes.push_back(std::to_string(tracks) + " tracks, " + std::to_string(links) + " links");
  return o;
}

// ---- mutations for criterion 4

tp::NodePath first_with(const tp::Derivation& d, const std::function<bool(const tp::Derivation&)>& pred) {
  for (const auto& p : tp::postorder_paths(d)) {
    if (pred(d.at(p))) return p;
  }
  throw std::runtime_error("no node to mutate");
}

tp::NodePath first_rule(const tp::Derivation& d, tp::Rule r) {
  return first_with(d, [r](const tp::Derivation& n) { return n.rule() == r; });
}

tp::Derivation edit(const tp::Derivation& d, const tp::NodePath& p,
                    const std::function<void(tp::Derivation::Node&)>& f) {
  tp::Derivation::Node n = d.at(p).node();
  f(n);
  return d.replace_at(p, tp::Derivation(std::move(n)));
}

struct Mutation {
  std::string name;
  tp::Derivation d;
};

std::vector<Mutation> mutations(const std::vector<tp::CorpusEntry>& all) {
  using tp::Rule;
  std::vector<Mutation> out;
  auto D = [&](const char* id) { return find(all, id).derivation; };

  {
    tp::Derivation d = D("G3");
    out.push_back({"G3: GI eigenlabel is the root label",
                   edit(d, first_rule(d, Rule::kGI), [](auto& n) { n.fresh = tp::Label("t"); })});
  }
  out.push_back({"G1: root claims G(p->q) -> Gq -> Gp",
                 D("G1").with_conclusion(tp::parse_judgment("t : G (p -> q) -> G q -> G p"))});
  {
    tp::Derivation d = D("G2");
    out.push_back({"G2: g_e premises swapped", edit(d, first_rule(d, Rule::kGE), [](auto& n) {
                     std::swap(n.premises[0], n.premises[1]);
                   })});
  }
  {
    tp::Derivation d = D("H3");
    out.push_back({"H3: h_e read as g_e",
                   edit(d, first_rule(d, Rule::kHE), [](auto& n) { n.rule = Rule::kGE; })});
  }
  {
    tp::Derivation d = D("G1");
    tp::NodePath p = first_with(d, [](const tp::Derivation& n) {
      return n.rule() == Rule::kAssume && n.node().marker && tp::is_labeled(n.conclusion());
    });
    out.push_back({"G1: discharged leaf has its atom changed", edit(d, p, [](auto& n) {
                     const auto& l = tp::as_lwff(n.conclusion);
                     n.conclusion = tp::Lwff{l.label, tp::Formula::implies(l.formula, tp::Formula::atom("r"))};
                   })});
  }
  {
    tp::Derivation d = D("G4");
    out.push_back({"G4: FE eigenlabel clashes",
                   edit(d, first_rule(d, Rule::kFE), [](auto& n) { n.fresh = tp::Label("t"); })});
  }
  {
    tp::Derivation d = D("conn-canonical");
    out.push_back({"conn-canonical: connectedness without the equality case",
                   edit(d, first_rule(d, Rule::kConn), [](auto& n) {
                     n.conclusion = tp::parse_judgment("forall x. forall y. x < y \\/ y < x");
                   })});
  }
  {
    tp::Derivation d = D("H1");
    out.push_back({"H1: HI discharges nothing",
                   edit(d, first_rule(d, Rule::kHI), [](auto& n) { n.discharges.clear(); })});
  }
  out.push_back({"H2: root claims F H p -> H p",
                 D("H2").with_conclusion(tp::parse_judgment("t : F H p -> H p"))});
  out.push_back({"GE at the wrong label",
                 tp::Derivation::make(Rule::kGE, tp::parse_judgment("z : p"),
                                      {tp::Derivation::assume(tp::parse_judgment("x : G p")),
                                       tp::Derivation::assume(tp::parse_judgment("x < y"))})});
  return out;
}

// 4. Soundness probe on base-Kl entries plus the mutation check.
Outcome soundness(const std::vector<tp::CorpusEntry>& all) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  int probed = 0;
  for (const auto& e : all) {
    if (!(e.profile == tp::LogicProfile::kl())) continue;
    ++probed;
    tp::ProbeResult r = tp::soundness_probe(e.derivation, 4, e.profile);
    if (r.status != tp::ProbeStatus::kPass) o.fail(e.id + ": " + std::string(tp::probe_status_name(r.status)));
  }
  double s = seconds_since(t0);
  if (s >= 30.0) o.fail("probe took " + secs(s));
  int caught = 0;
  auto ms = mutations(all);
  for (const auto& m : ms) {
    bool invalid = !tp::check(m.d, tp::LogicProfile::kl()).valid;
    bool cm = tp::soundness_probe(m.d, 4).status == tp::ProbeStatus::kCountermodel;
    if (invalid || cm) {
      ++caught;
    } else {
      o.fail("mutation not caught: " + m.name);
    }
  }
  if (ms.size() != 10) o.fail("expected 10 mutations");
  // The lone corrupted node must also be refuted semantically.
  if (tp::soundness_probe(ms.back().d, 4).status != tp::ProbeStatus::kCountermodel) {
    o.fail("wrong-label GE has no countermodel");
  }
  o.notes.push_back(std::to_string(probed) + " base entries probed in " + secs(s) + ", " + std::to_string(caught) +
                    "/" + std::to_string(ms.size()) + " mutations caught");
  return o;
}

// 5. Bounded validity.
Outcome validity() {
  Outcome o;
  tp::LogicProfile kl = tp::LogicProfile::kl();
  for (const char* f : {"x : G p -> G G p", "x : G (p | q) & G (p | G q) & G (G p | q) -> G p | G q"}) {
    if (tp::find_countermodel({}, tp::parse_judgment(f), 4, kl)) o.fail(std::string(f) + " has a countermodel");
  }
  for (const char* f : {"x : G p -> p", "x : F p -> F F p"}) {
    auto cm = tp::find_countermodel({}, tp::parse_judgment(f), 2, kl);
    if (!cm) {
      o.fail(std::string(f) + " has no countermodel at n = 2");
    } else if (tp::eval(cm->model, cm->lambda, tp::parse_judgment(f))) {
      o.fail(std::string(f) + " countermodel does not refute it");
    }
  }
  return o;
}

// 6. Random derivations: every single reduction and full normalization.
Outcome locality() {
  Outcome o;
  tp::testing::DerivationGenOptions opts;
  opts.max_nodes = 25;
  opts.steps = 200;
  opts.atoms = {"p", "q", "r"};
  opts.labels = {"x", "y", "z", "u"};
  tp::testing::DerivationGen gen(20241016, opts);
  tp::LogicProfile kl = tp::LogicProfile::kl();
  std::size_t reductions = 0, with_redex = 0;
  for (int i = 0; i < 1000 && o.notes.size() < 5; ++i) {
    tp::Derivation d = gen.sample(12);
    tp::CheckReport base = tp::check(d, kl);
    if (!base.valid || d.size() > 25) {
      o.fail("generator produced a bad sample " + std::to_string(i));
      continue;
    }
    auto rs = tp::find_redexes(d);
    if (!rs.empty()) ++with_redex;
    for (const auto& r : rs) {
      tp::Derivation s = tp::reduce_step(d, r);
      ++reductions;
      tp::CheckReport c = tp::check(s, kl);
      if (!c.valid || !(s.conclusion() == d.conclusion()) || !c.open.subset_of(base.open)) {
        o.fail("sample " + std::to_string(i) + ": " + r.describe());
      }
    }
    tp::Derivation n = tp::normalize(d);
    if (!tp::check(n, kl).valid || !tp::is_normal(n)) o.fail("sample " + std::to_string(i) + ": normal form");
    if (!tp::equal_up_to_renaming(tp::normalize(n), n)) o.fail("sample " + std::to_string(i) + ": not idempotent");
  }
  o.notes.push_back("1000 samples, " + std::to_string(with_redex) + " with redexes, " +
                    std::to_string(reductions) + " single steps");
  return o;
}

// 7. Parser round trip.
Outcome round_trip() {
  Outcome o;
  std::size_t strings = 0;
  std::function<void(const nlohmann::json&)> walk = [&](const nlohmann::json& j) {
    if (j.is_object()) {
      for (const auto& [k, v] : j.items()) {
        if ((k == "conclusion" || k == "expected") && v.is_string()) {
          tp::Judgment a = tp::parse_judgment(v.get<std::string>());
          ++strings;
          if (!(tp::parse_judgment(tp::render(a)) == a)) o.fail("corpus: " + v.get<std::string>());
        } else if (k == "expected_open") {
          for (const auto& s : v) {
            tp::Judgment a = tp::parse_judgment(s.get<std::string>());
            ++strings;
            if (!(tp::parse_judgment(tp::render(a)) == a)) o.fail("corpus: " + s.get<std::string>());
          }
        } else {
          walk(v);
        }
      }
    } else if (j.is_array()) {
      for (const auto& v : j) walk(v);
    }
  };
  for (const auto& f : std::filesystem::directory_iterator(kDir)) {
    if (f.path().extension() == ".json") walk(tp::read_json_file(f.path().string()));
  }
  tp::testing::FormulaGen gen(7, {"p", "q", "r"}, {"x", "y", "z", "u"});
  for (int i = 0; i < 10000; ++i) {
    tp::Formula f = gen.formula(6);
    if (!(tp::parse_formula(tp::render(f)) == f)) o.fail("formula: " + tp::render(f));
    tp::RFormula r = gen.rformula(5);
    if (!(tp::parse_rformula(tp::render(r)) == r)) o.fail("rformula: " + tp::render(r));
    if (o.notes.size() > 5) break;
  }
  o.notes.push_back(std::to_string(strings) + " corpus strings, 10000 random formulas of each sort");
  return o;
}

}  // namespace

int main() {
  bool all_ok = true;
  auto report = [&](int n, const std::function<Outcome()>& f) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all_ok = all_ok && o.ok;
    std::cout << "criterion " << n << ": " << (o.ok ? "PASS" : "FAIL");
    for (const auto& s : o.notes) std::cout << " | " << s;
    std::cout << std::endl;
  };

  std::vector<tp::CorpusEntry> all;
  try {
    all = tp::load_corpus(kDir);
  } catch (const std::exception& e) {
    std::cout << "corpus failed to load: " << e.what() << "\n";
    return 1;
  }
  std::vector<tp::Derivation> normal;
  report(1, [&] { return corpus_check(all); });
  report(2, [&] { return corpus_normalize(all, normal); });
  report(3, [&] { return corpus_tracks(all, normal); });
  report(4, [&] { return soundness(all); });
  report(5, [&] { return validity(); });
  report(6, [&] { return locality(); });
  report(7, [&] { return round_trip(); });
  return all_ok ? 0 : 1;
}
