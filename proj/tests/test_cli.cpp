#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CENTRA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof(buffer), pipe))
    output.append(buffer, got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string write_doc(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/centra_cli_" + name + ".json";
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("jordan command reports the block profile") {
  const std::string path = write_doc(
      "a21", R"({"field":{"kind":"prime","p":5},"rows":[[0,0,0],[1,0,0],[0,0,0]]})");
  const RunResult r = run_cli("jordan --input " + path);
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report.at("command") == "jordan");
  CHECK(report.at("version") == "0.1.0");
  CHECK(report.at("results").at("block_profile") == json::parse("[2,1]"));
  CHECK(report.at("results").at("nilpotency_index") == 2);
  CHECK(report.at("results").at("chains").size() == 2);
}

TEST_CASE("dim command matches the formula and bound") {
  const std::string path = write_doc(
      "dim21", R"({"field":{"kind":"prime","p":5},"rows":[[0,0,0],[1,0,0],[0,0,0]]})");
  const RunResult r = run_cli("dim --input " + path);
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report.at("results").at("dimension") == 5);
  CHECK(report.at("results").at("bound") == 6);
  CHECK(report.at("results").at("formula_dimension") == 5);
}

TEST_CASE("contains command certifies B = A^2") {
  const std::string a = write_doc(
      "j3", R"({"field":{"kind":"rational"},"rows":[[0,0,0],[1,0,0],[0,1,0]]})");
  const std::string b = write_doc(
      "j3sq", R"({"field":{"kind":"rational"},"rows":[[0,0,0],[0,0,0],[1,0,0]]})");
  const RunResult r = run_cli("contains --a " + a + " --b " + b);
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report.at("results").at("contained") == true);
  CHECK(report.at("results").at("certificate").at("display") == "t^2");

  const std::string c = write_doc(
      "e11", R"({"field":{"kind":"rational"},"rows":[[1,0,0],[0,0,0],[0,0,0]]})");
  const RunResult neg = run_cli("contains --a " + a + " --b " + c);
  CHECK(neg.exit_code == 0);
  CHECK(json::parse(neg.output).at("results").at("contained") == false);
}

TEST_CASE("decompose command and NotSplit error payloads") {
  const std::string split = write_doc(
      "split", R"({"field":{"kind":"prime","p":5},"rows":[[1,0,0],[1,1,0],[0,0,2]]})");
  const RunResult ok = run_cli("decompose --input " + split);
  CHECK(ok.exit_code == 0);
  const json report = json::parse(ok.output);
  CHECK(report.at("results").at("eigenvalues") == json::parse("[1,2]"));
  CHECK(report.at("results").at("centralizer_dimension") == 3);
  CHECK(report.at("results").at("pi_degree_bound") == 2);

  const std::string non_split = write_doc(
      "nonsplit", R"({"field":{"kind":"rational"},"rows":[[0,-1],[1,0]]})");
  const RunResult err = run_cli("decompose --input " + non_split);
  CHECK(err.exit_code == 2);
  const json payload = json::parse(err.output);
  CHECK(payload.at("error").at("kind") == "NotSplit");
  CHECK(payload.at("error").at("factor").at("display") == "1 + t^2");
}

TEST_CASE("domain errors exit 2, I/O and parse errors exit 1") {
  const std::string identity = write_doc(
      "id", R"({"field":{"kind":"prime","p":5},"rows":[[1,0],[0,1]]})");
  const RunResult not_nilpotent = run_cli("jordan --input " + identity);
  CHECK(not_nilpotent.exit_code == 2);
  CHECK(json::parse(not_nilpotent.output).at("error").at("kind") ==
        "NotNilpotent");

  CHECK(run_cli("jordan --input /nonexistent.json").exit_code == 1);
  const std::string bad = write_doc("bad", "{this is not json");
  CHECK(run_cli("jordan --input " + bad).exit_code == 1);
  CHECK(run_cli("no-such-command").exit_code == 1);
  // composite modulus in the field override
  const std::string doc = write_doc(
      "f5doc", R"({"field":{"kind":"prime","p":5},"rows":[[0]]})");
  CHECK(run_cli("jordan --input " + doc + " --field prime:6").exit_code == 1);
}

TEST_CASE("field override reinterprets entries") {
  const std::string doc = write_doc(
      "over", R"({"field":{"kind":"prime","p":5},"rows":[[0,0],[7,0]]})");
  const RunResult r = run_cli("jordan --input " + doc + " --field prime:7");
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report.at("results").at("field") == json::parse(R"({"kind":"prime","p":7})"));
  // 7 = 0 mod 7: the matrix becomes zero, two blocks of size 1
  CHECK(report.at("results").at("block_profile") == json::parse("[1,1]"));
}

TEST_CASE("pi-check runs are byte-identical for a fixed seed") {
  const std::string path = write_doc(
      "pc", R"({"field":{"kind":"prime","p":5},"rows":[[0,0],[1,0]]})");
  const RunResult a = run_cli("pi-check --input " + path + " --seed 9 --trials 20");
  const RunResult b = run_cli("pi-check --input " + path + " --seed 9 --trials 20");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  const json report = json::parse(a.output);
  CHECK(report.at("results").at("degree_bound") == 2);
  CHECK(report.at("results").at("bound_holds") == true);
  for (const auto& entry : report.at("results").at("reports"))
    CHECK(entry.at("violations") == 0);
}

TEST_CASE("centralizer command with the striped view") {
  const std::string path = write_doc(
      "cb", R"({"field":{"kind":"prime","p":5},"rows":[[0,0,0],[1,0,0],[0,0,0]]})");
  const RunResult r = run_cli("centralizer --input " + path + " --view striped");
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report.at("results").at("dimension") == 5);
  CHECK(report.at("results").at("elements").size() == 5);
  for (const auto& e : report.at("results").at("elements"))
    CHECK(e.contains("striped"));

  // text rendering should not be JSON
  const RunResult text = run_cli("centralizer --input " + path + " --format text");
  CHECK(text.exit_code == 0);
  CHECK(text.output.find("centralizer dimension 5") != std::string::npos);
}

TEST_CASE("verify-all smoke run") {
  const RunResult r = run_cli("verify-all --seed 3 --count 2");
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.output);
  CHECK(report.at("results").at("passed") == true);
  CHECK(report.at("results").at("checks").size() >= 20);
}

TEST_CASE("shipped sample documents work end to end") {
  const std::string dir = CENTRA_SAMPLES_DIR;
  CHECK(run_cli("jordan --input " + dir + "/nilpotent_2_1.json").exit_code == 0);
  CHECK(run_cli("centralizer --input " + dir + "/jordan_block_3.json").exit_code == 0);
  CHECK(run_cli("decompose --input " + dir + "/split_mixed.json").exit_code == 0);
  CHECK(run_cli("decompose --input " + dir + "/rotation_not_split.json").exit_code == 2);
  const RunResult rat = run_cli("decompose --input " + dir + "/rational_half.json");
  CHECK(rat.exit_code == 0);
  const json report = json::parse(rat.output);
  CHECK(report.at("results").at("eigenvalues") == json::parse(R"(["1/2"])"));
}
