// End-to-end checks of the command-line binary: exit codes, JSON determinism
// and TEXT/JSON agreement, run through a shell.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(SUPERSPLIT_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) res.output += buf.data();
  int status = pclose(pipe);
  res.exit_code = WEXITSTATUS(status);
  return res;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string(SUPERSPLIT_TEST_TMPDIR) + "/" + name;
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("validate: exit codes") {
  CHECK(run("validate --model builtin:elliptic_rank3").exit_code == 0);
  CHECK(run("validate --model builtin:k3_rank3").exit_code == 0);
  CHECK(run("validate --model /does/not/exist.json").exit_code == 2);
  // Corrupted model: bracket violating weight additivity -> exit 1 would be
  // the validator's verdict, but the loader already rejects it at exit 2
  // territory? No: axiom failures map to exit 1.
  std::string bad = write_temp("bad_model.json", R"({"mode":"abstract","blocks":[
    {"label":"A","degree":1,"weight":2,"dim":1,"tag":"quotient"},
    {"label":"B","degree":1,"weight":2,"dim":1,"tag":"quotient"},
    {"label":"C","degree":2,"weight":2,"dim":1,"tag":"quotient"}],
    "brackets":[{"a":"A.1","b":"B.1","c":"C.1","coeff":"1"}]})");
  RunResult r = run("validate --model " + bad);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("additive") != std::string::npos);
}

TEST_CASE("tower: verdicts and exit codes") {
  std::string mu_even = write_temp("mu_even.json", R"([["ebD23","1"]])");
  std::string mu_odd = write_temp("mu_odd.json", R"([["ebK1","1"]])");
  std::string mu_mixed = write_temp("mu_mixed.json", R"([["x","u"],["y","v"]])");
  std::string mu_unknown = write_temp("mu_unknown.json", R"([["nope","1"]])");

  RunResult even = run("tower --model builtin:elliptic_rank3 --mu " + mu_even);
  CHECK(even.exit_code == 0);
  CHECK(even.output.find("BLOCKED_EVEN(1)") != std::string::npos);

  RunResult odd = run("tower --model builtin:elliptic_rank3 --mu " + mu_odd);
  CHECK(odd.exit_code == 0);
  CHECK(odd.output.find("BLOCKED_ODD(1)") != std::string::npos);

  RunResult split = run("tower --model builtin:elliptic_rank3");
  CHECK(split.exit_code == 0);
  CHECK(split.output.find("SPLIT") != std::string::npos);

  // Non-Maurer-Cartan input: exit 3 with the residual printed.
  RunResult nonmc = run("tower --model builtin:abelian_surface_rank4 --mu " + mu_mixed);
  CHECK(nonmc.exit_code == 3);
  CHECK(nonmc.output.find("residual") != std::string::npos);

  // Unknown label: exit 4.
  CHECK(run("tower --model builtin:elliptic_rank3 --mu " + mu_unknown).exit_code == 4);
}

TEST_CASE("tower: TEXT and JSON agree on verdict and coordinates") {
  std::string mu = write_temp("mu_text_json.json", R"([["ebK1","1"]])");
  RunResult text = run("tower --model builtin:elliptic_rank3 --mu " + mu);
  RunResult json = run("tower --model builtin:elliptic_rank3 --json --mu " + mu);
  CHECK(text.exit_code == 0);
  CHECK(json.exit_code == 0);
  for (const char* needle : {"BLOCKED_ODD(1)", "ebK1", "ebK2", "ebK3"}) {
    CHECK(text.output.find(needle) != std::string::npos);
    CHECK(json.output.find(needle) != std::string::npos);
  }
  // Byte-identical JSON across runs.
  RunResult again = run("tower --model builtin:elliptic_rank3 --json --mu " + mu);
  CHECK(json.output == again.output);
}

TEST_CASE("tower: --atiyah attaches Hessian symbols") {
  std::string mu = write_temp("mu_hess.json", R"([["ebK1","1"]])");
  RunResult r = run("tower --model builtin:elliptic_rank3 --json --atiyah --mu " + mu);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("hessian_symbols") != std::string::npos);
  CHECK(r.output.find("e^1") != std::string::npos);
}

TEST_CASE("kuranishi: worked slice, labels, exit codes") {
  RunResult r = run("kuranishi --model builtin:abelian_surface_rank4 --slice x y");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("u*v") != std::string::npos);
  CHECK(r.output.find("Omega") != std::string::npos);

  RunResult j = run("kuranishi --model builtin:abelian_surface_rank4 --slice x y --json");
  CHECK(j.exit_code == 0);
  CHECK(j.output.find("\"target_label\": \"Omega\"") != std::string::npos);
  RunResult j2 = run("kuranishi --model builtin:abelian_surface_rank4 --slice x y --json");
  CHECK(j.output == j2.output);

  // Full slice of a rank-3 model: identically zero system.
  RunResult z = run("kuranishi --model builtin:elliptic_rank3 --json");
  CHECK(z.exit_code == 0);
  CHECK(z.output.find("\"equations\": []") != std::string::npos);

  CHECK(run("kuranishi --model builtin:abelian_surface_rank4 --slice nope").exit_code == 4);
}

TEST_CASE("verify: block names and exit codes") {
  CHECK(run("verify relative-elliptic").exit_code == 0);
  CHECK(run("verify no-such-block").exit_code == 4);
}

TEST_CASE("validate and export JSON are byte-deterministic") {
  RunResult a = run("validate --model builtin:abelian_surface_rank4 --json");
  RunResult b = run("validate --model builtin:abelian_surface_rank4 --json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  RunResult e1 = run("export-model --model builtin:k3_rank3");
  RunResult e2 = run("export-model --model builtin:k3_rank3");
  CHECK(e1.output == e2.output);
  CHECK(run("--version").output.find("supersplit 0.1.0") != std::string::npos);
}

TEST_CASE("verify accepts corpus tuning flags") {
  RunResult r = run("verify contraction-side-conditions --seed 9 --max-dim 10");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("OK") != std::string::npos);
}

TEST_CASE("export-model emits loadable JSON") {
  std::string out = std::string(SUPERSPLIT_TEST_TMPDIR) + "/exported.json";
  CHECK(run("export-model --model builtin:k3_rank3 --out " + out).exit_code == 0);
  CHECK(run("validate --model " + out).exit_code == 0);
  CHECK(run("export-model --model builtin:nope").exit_code == 4);
}
