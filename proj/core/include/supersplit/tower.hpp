#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supersplit/kuranishi.hpp"

namespace supersplit {

enum class VerdictKind { Split, BlockedEven, BlockedOdd, BlockedCombined };

struct Verdict {
  VerdictKind kind = VerdictKind::Split;
  int stage = 0;  // meaningful for blocked verdicts

  std::string str() const;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Class coordinates in a displayed cohomology basis.
struct ClassReport {
  std::vector<std::string> basis;
  std::vector<AlgebraElement> coords;

  bool all_zero() const;
  std::string str() const;
};

struct StageReport {
  int stage = 1;
  std::optional<ClassReport> even;      // projected class (tagged runs)
  std::optional<ClassReport> odd;       // residual class; nullopt = ABSENT
  std::optional<ClassReport> combined;  // untagged runs only
};

struct GaugeLogEntry {
  int stage = 1;
  std::string purpose;  // "normalize-even" | "advance-odd" | "advance-combined"
  LieElement u;
};

struct ObstructionReport {
  std::vector<StageReport> stages;
  Verdict verdict;
  std::vector<GaugeLogEntry> gauge_log;
  KuranishiSystem kuranishi;
  std::string pivot_note;  // records the contraction choice
  /// Leading term of the (normalized) representative at each visited stage,
  /// in the order the stages ran; basis coordinates of the ambient algebra.
  std::vector<std::pair<int, LieElement>> leading_terms;

  std::string to_json_string(const FiltDGLA& L) const;
  std::string str(const FiltDGLA& L) const;
};

/// Display-basis override for one cohomology block of one subspace: named
/// classes given by their coordinate vectors over that subspace's chain
/// basis (local indices of the corresponding ComplexView).
struct NamedClassSet {
  enum class Space { Total, Quotient, Kernel };
  Space space = Space::Total;
  BlockKey block;
  std::vector<std::pair<std::string, std::vector<std::pair<int, Rational>>>> classes;
};

struct TowerOptions {
  linalg::PivotRule rule = linalg::PivotRule::FirstNonzero;
  /// Odd rank of the underlying split model when known; decides ABSENT for
  /// residual classes (2j+1 > n). Negative = unknown (use empty-block rule).
  int odd_rank = -1;
  std::vector<NamedClassSet> named;
  /// Parameter names for the attached full-slice Kuranishi system, keyed by
  /// H^1 chain/class label.
  std::map<std::string, std::string> slice_param_names;
};

/// Mutable state of the staged normalization. Stage j works on the exterior
/// weight-2j part (filtration step j).
struct StageState {
  int stage = 1;
  LieElement mu;
  int normalized_through = 0;  // last stage whose even part was normalized
  std::vector<GaugeLogEntry> log;
};

/// Green obstruction tower runner over a validated filtered dg Lie algebra.
/// Requires quotient/kernel tags for the even/odd refinement; otherwise only
/// combined classes are produced.
class ObstructionTower {
public:
  explicit ObstructionTower(const FiltDGLA& L, TowerOptions options = {});

  bool tagged() const { return tagged_; }
  const Contraction& total() const { return total_; }
  const Contraction& quotient() const;
  const Contraction& kernel() const;

  /// Checks the Maurer-Cartan equation; throws Error::State with the residual
  /// as witness on failure.
  StageState start(const LieElement& mu) const;

  /// Weight-2j homogeneous part of mu (must lie in F^j); asserts d-closedness.
  LieElement leading_term(const StageState& s) const;

  /// Projected class coordinates of the leading term in the displayed
  /// H^1(Q^(2j)) basis. Tagged runs only.
  ClassReport even_obstruction(const StageState& s) const;

  /// Gauges the representative so the leading term becomes kernel-valued.
  /// Pre: even_obstruction vanishes (throws Error::State with witness).
  StageState normalize_even(const StageState& s) const;

  /// Residual class in the displayed H^1(Q^(2j+1)) basis, or nullopt when the
  /// residual sheaf is absent (2j+1 > n). Pre: normalized at this stage.
  std::optional<ClassReport> odd_obstruction(const StageState& s) const;

  /// Combined (unrefined) class of the leading term.
  ClassReport combined_obstruction(const StageState& s) const;

  /// Full staged run; attaches the full-slice Kuranishi system.
  ObstructionReport run(const LieElement& mu) const;

private:
  ClassReport render_class(NamedClassSet::Space space, const Contraction& sub, BlockKey key,
                           const HVec& coords) const;
  StageState advance(const StageState& s) const;  // pushes mu into F^{j+1}

  const FiltDGLA& L_;
  TowerOptions opt_;
  bool tagged_ = false;
  Contraction total_;
  std::optional<Contraction> quotient_;
  std::optional<Contraction> kernel_;
  // Display transforms: per (space, block): labels + inverse change of basis.
  struct Display {
    std::vector<std::string> labels;
    linalg::Matrix to_named;  // named coords = to_named * sub-H coords
  };
  std::map<std::pair<int, std::pair<int, int>>, Display> displays_;
};

}  // namespace supersplit
