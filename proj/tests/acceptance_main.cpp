// Acceptance suite: one pass/fail line per criterion, with the stated
// wall-clock budgets enforced. Exit code 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <string>

#include "supersplit/verify.hpp"

int main(int argc, char** argv) {
  using Clock = std::chrono::steady_clock;
  supersplit::verify::Options opt;
#ifdef SUPERSPLIT_FIXTURES_DIR
  opt.fixtures_dir = SUPERSPLIT_FIXTURES_DIR;
#endif
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--seed" && i + 1 < argc) opt.seed = std::stoull(argv[++i]);
    if (a == "--corpus" && i + 1 < argc) opt.corpus_size = std::stoi(argv[++i]);
    if (a == "--fixtures" && i + 1 < argc) opt.fixtures_dir = argv[++i];
  }

  int failures = 0;
  const int n = supersplit::verify::criterion_count();
  for (int k = 1; k <= n; ++k) {
    auto t0 = Clock::now();
    std::vector<supersplit::verify::CheckLine> lines;
    std::string error;
    try {
      lines = supersplit::verify::run_criterion(k, opt);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double seconds = std::chrono::duration<double>(Clock::now() - t0).count();

    bool pass = error.empty();
    for (const auto& line : lines)
      if (!line.pass) pass = false;
    double budget = supersplit::verify::criterion_budget(k);
    bool in_budget = budget <= 0.0 || seconds < budget;
    if (!in_budget) pass = false;

    std::printf("criterion %2d: %s  (%.3f s%s)  %s\n", k, pass ? "PASS" : "FAIL", seconds,
                budget > 0.0 ? (std::string(" / budget ") + std::to_string(budget)).c_str() : "",
                supersplit::verify::criterion_title(k).c_str());
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    for (const auto& line : lines)
      if (!line.pass)
        std::printf("    FAIL %s  [%s]\n", line.name.c_str(), line.detail.c_str());
    if (!pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
