#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace supersplit::verify {

struct CheckLine {
  std::string name;
  bool pass = true;
  std::string detail;  // failure explanation or interesting value
};

struct BlockResult {
  std::string block;
  std::vector<CheckLine> lines;
  double seconds = 0.0;

  bool pass() const;
};

struct Options {
  std::uint64_t seed = 1;
  int corpus_size = 50;
  int max_dim = 12;
  /// When set, shipped model files under this directory are loaded and
  /// validated as part of the axiom checks.
  std::string fixtures_dir;
};

/// Named verification blocks exposed through the CLI.
std::vector<std::string> block_names();
BlockResult run_block(const std::string& name, const Options& opt = {});

/// Numbered acceptance checks (1..11); shares the implementation with the
/// blocks above.
int criterion_count();
std::string criterion_title(int k);
/// Stated wall-clock budget in seconds; 0 = none.
double criterion_budget(int k);
std::vector<CheckLine> run_criterion(int k, const Options& opt = {});

}  // namespace supersplit::verify
