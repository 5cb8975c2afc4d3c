#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supersplit/tower.hpp"

namespace supersplit {

/// Declarative model description. HARMONIC mode expands through
/// from_derivations; ABSTRACT mode presents cohomology blocks (with
/// quotient/kernel tags) and optional bracket tables directly.
struct SplitModelSpec {
  enum class Mode { Harmonic, Abstract };

  struct Block {
    std::string label;
    int degree = 1;
    int weight_ext = 2;  // exterior weight (even, >= 2)
    int dim = 0;
    BasisTag tag = BasisTag::Untagged;

    friend bool operator==(const Block&, const Block&) = default;
  };

  struct Bracket {
    std::string a, b, c;
    Rational coeff;

    friend bool operator==(const Bracket&, const Bracket&) = default;
  };

  Mode mode = Mode::Harmonic;
  int m = 1;  // harmonic: holomorphic dimension
  int n = 1;  // harmonic: odd rank
  std::vector<Block> blocks;      // abstract
  std::vector<Bracket> brackets;  // abstract
  std::string metadata;

  friend bool operator==(const SplitModelSpec&, const SplitModelSpec&) = default;
};

/// A built model: the controller algebra plus naming/untangling data used by
/// the tower, the CLI and the reports.
struct Model {
  std::string name;
  SplitModelSpec spec;
  FiltDGLA algebra;
  std::optional<Universe> uni;                    // harmonic only
  std::vector<DerivationForm> basis_forms;        // harmonic only
  /// Chain-level aliases: display name -> combination of basis elements.
  std::map<std::string, std::vector<std::pair<int, Rational>>> aliases;
  /// Named cohomology classes for report rendering.
  std::vector<NamedClassSet> named;
  /// Preferred Kuranishi parameter names keyed by H^1 class label.
  std::map<std::string, std::string> slice_param_names;

  TowerOptions tower_options(linalg::PivotRule rule = linalg::PivotRule::FirstNonzero) const;

  /// Resolves a label (alias or plain basis label) to chain coordinates.
  std::vector<std::pair<int, Rational>> resolve_label(const std::string& label) const;

  /// Builds an element from (label, polynomial) pairs.
  LieElement make_element(
      const std::vector<std::pair<std::string, AlgebraElement>>& entries) const;

  DerivationForm realize(const LieElement& x) const;  // harmonic only

  /// Display name for a chain/class label: the alias when one resolves to
  /// exactly this label with coefficient 1, otherwise the label itself.
  std::string display_label(const std::string& label) const;
  /// Renames variable and target labels to their display names.
  void apply_display_names(KuranishiSystem& system) const;
};

/// Rank-three split model over an elliptic curve (harmonic m=1, n=3) with the
/// six named weight-two generators D23, D31, D12, K1, K2, K3.
Model elliptic_rank3();

/// Rank-four split model over a product of two elliptic curves (harmonic
/// m=2, n=4) with named classes x = [eb1*D], y = [eb2*K], Omega.
Model abelian_surface_rank4();

/// Rank-three model over a K3 surface in abstract-cohomology mode: quotient
/// blocks TS (dim 20) and the user-input twisted blocks TS_L, TS_Linv
/// (default dim 0), kernel block KER (dim 2); all brackets zero.
Model k3_rank3_abstract(int dim_ts_l = 0, int dim_ts_linv = 0);

/// Bookkeeping for the trivial relative family of the elliptic rank-three
/// model: direct-image ranks and their projected/residual splits.
struct RelativeRankReport {
  int r0 = 0;
  int r1 = 0;
  std::pair<int, int> r0_split;
  std::pair<int, int> r1_split;
};

RelativeRankReport relative_trivial_elliptic_ranks();

/// Generic harmonic model (no named classes).
Model harmonic_model(int m, int n);

/// Expands a spec into a model (named classes attach only to builtins).
Model build_model(const SplitModelSpec& spec);

/// Strict JSON loader (schema v1, unknown fields rejected); validates the
/// resulting algebra and fails with a witness on axiom violations.
Model load_model_file(const std::string& path);
Model load_model_json(const std::string& text, const std::string& origin = "<memory>");

std::string export_model_json(const SplitModelSpec& spec);

/// Builtin registry used by the CLI ("builtin:NAME").
std::vector<std::string> builtin_model_names();
std::optional<Model> builtin_model(const std::string& name);

}  // namespace supersplit
