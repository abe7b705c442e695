#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static fs::path p = [] {
    fs::path d = fs::temp_directory_path() / ("tenseproof-cli-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

CliRun run(const std::string& args, const std::string& env = "") {
  fs::path err = scratch() / "stderr.txt";
  std::string cmd = env + " " + std::string(TENSEPROOF_CLI) + " " + args + " 2>" + err.string();
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "", ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, slurp(err)};
}

std::string write(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

const std::string kCorpus = TENSEPROOF_CORPUS_DIR;

TEST(Cli, CheckTheorem) {
  CliRun r = run("check " + kCorpus + "/G3.json");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("VALID theorem"), std::string::npos) << r.out;
}

TEST(Cli, CheckWithProbe) {
  CliRun r = run("check " + kCorpus + "/G1.json --probe 3");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("probe: PASS"), std::string::npos) << r.out;
}

TEST(Cli, CheckFailureExitsOne) {
  std::string f = write("bad.json", R"({"rule": "g_e", "conclusion": "z : p",
    "premises": [{"rule": "assume", "conclusion": "x : G p"}, {"rule": "assume", "conclusion": "x < y"}]})");
  CliRun r = run("check " + f);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("PatternMismatch"), std::string::npos) << r.out;
}

TEST(Cli, ExtensionProfile) {
  EXPECT_EQ(run("check " + kCorpus + "/first.json").code, 1);
  EXPECT_EQ(run("check --profile kl+first " + kCorpus + "/first.json").code, 0);
}

TEST(Cli, InputErrorsExitFour) {
  EXPECT_EQ(run("check /nonexistent/file.json").code, 4);
  std::string f = write("garbage.json", "{ not json");
  EXPECT_EQ(run("check " + f).code, 4);
  EXPECT_EQ(run("valid 'x : (p' --max-worlds 2").code, 4);
  EXPECT_EQ(run("frobnicate").code, 4);
  EXPECT_EQ(run("check --profile kl+ind " + kCorpus + "/G1.json").code, 4);
}

TEST(Cli, NormalizeTraceOnStderr) {
  std::string f = write("detour.json", R"({"rule": "g_e", "conclusion": "z : p", "premises": [
    {"rule": "g_i", "conclusion": "x : G p", "discharges": [1], "fresh": "y", "premises": [
      {"rule": "g_e", "conclusion": "y : p", "premises": [
        {"rule": "assume", "conclusion": "x : G p"},
        {"rule": "assume", "conclusion": "x < y", "marker": 1}]}]},
    {"rule": "assume", "conclusion": "x < z"}]})");
  CliRun r = run("normalize --trace " + f);
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.err);
  std::string line;
  int records = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    EXPECT_TRUE(j.contains("step"));
    EXPECT_TRUE(j.contains("kind"));
    ++records;
  }
  EXPECT_EQ(records, 1);
  auto nf = nlohmann::json::parse(r.out);
  EXPECT_EQ(nf.at("rule"), "g_e");
  EXPECT_EQ(nf.at("premises").at(0).at("rule"), "assume");
}

TEST(Cli, NormalizeStepBoundExitsTwo) {
  std::string f = write("detour2.json", R"({"rule": "imp_e", "conclusion": "x : p", "premises": [
    {"rule": "imp_i", "conclusion": "x : p -> p", "discharges": [1], "premises": [
      {"rule": "assume", "conclusion": "x : p", "marker": 1}]},
    {"rule": "assume", "conclusion": "x : p"}]})");
  CliRun r = run("normalize " + f);
  EXPECT_EQ(r.code, 0) << r.err;
  CliRun bounded = run("normalize " + f, "TENSEPROOF_STEP_BOUND=0");
  EXPECT_EQ(bounded.code, 2);
  EXPECT_NE(bounded.err.find("exceeded"), std::string::npos);
}

TEST(Cli, EvalPrintsTruthValue) {
  std::string m = write("model.json", R"({"worlds": 2, "prec": [[0, 1]], "valuation": {"p": [1]}})");
  std::string l = write("lambda.json", R"({"x": 0, "y": 1})");
  CliRun t = run("eval " + m + " " + l + " 'x : F p'");
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out, "true\n");
  CliRun f = run("eval " + m + " " + l + " 'y : F p'");
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(f.out, "false\n");
  EXPECT_EQ(run("eval " + m + " " + l + " 'z : p'").code, 4);
}

TEST(Cli, ValidAndCountermodel) {
  CliRun v = run("valid 'x : G p -> G G p' --max-worlds 3");
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("VALID"), std::string::npos);
  CliRun c = run("valid 'x : G p -> p' --max-worlds 2");
  EXPECT_EQ(c.code, 3);
  auto pos = c.out.find('{');
  ASSERT_NE(pos, std::string::npos);
  auto j = nlohmann::json::parse(c.out.substr(pos));
  EXPECT_TRUE(j.contains("worlds"));
  EXPECT_TRUE(j.contains("lambda"));
}

TEST(Cli, CorpusVerb) {
  CliRun r = run("corpus G --dir " + kCorpus);
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("4 entries"), std::string::npos) << r.out;
}

}  // namespace
