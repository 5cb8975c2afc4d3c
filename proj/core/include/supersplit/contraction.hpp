#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supersplit/dglie.hpp"
#include "supersplit/linalg.hpp"

namespace supersplit {

struct BlockKey {
  int degree = 0;
  int weight = 1;
  friend bool operator<(const BlockKey& a, const BlockKey& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.degree < b.degree;
  }
  friend bool operator==(const BlockKey&, const BlockKey&) = default;
};

/// A finite complex graded by (degree, weight) with weight-preserving
/// degree-one differential, presented on a subset of some ambient basis.
/// Used for the total controller and for its tagged sub/quotient complexes.
struct ComplexView {
  std::vector<int> ambient;                                   // local -> ambient index
  std::vector<BasisEl> els;                                   // local metadata
  std::vector<std::vector<std::pair<int, Rational>>> d;       // local sparse columns

  int dim() const { return static_cast<int>(els.size()); }
};

ComplexView total_view(const FiltDGLA& L);
/// Subcomplex on the kernel-tagged basis. Throws Error::Axiom when the
/// differential does not preserve the kernel subspace.
ComplexView kernel_view(const FiltDGLA& L);
/// Quotient complex on the quotient-tagged basis (kernel rows dropped).
ComplexView quotient_view(const FiltDGLA& L);

/// Vector of polynomial coordinates over a cohomology basis.
using HVec = std::vector<AlgebraElement>;

struct HBasisEl {
  std::string label;
  int degree = 0;
  int weight = 1;
};

/// Filtered strong deformation retract onto cohomology: blockwise maps
/// (i, p, h) satisfying p i = id, id - i p = d h + h d, p h = 0, h i = 0,
/// h h = 0, exactly over the rationals.
class Contraction {
public:
  const std::vector<HBasisEl>& cohomology() const { return hbasis_; }
  int hdim() const { return static_cast<int>(hbasis_.size()); }
  std::optional<int> h_index_of(const std::string& label) const;
  std::vector<int> h_indices(int degree) const;
  std::vector<int> h_indices(int degree, int weight) const;

  /// p: chain coordinates (local to the underlying complex) -> cohomology.
  HVec project(const std::vector<AlgebraElement>& chain) const;
  /// i: cohomology -> chain coordinates.
  std::vector<AlgebraElement> include(const HVec& h) const;
  /// h: chain -> chain, degree -1, weight-preserving.
  std::vector<AlgebraElement> homotopy(const std::vector<AlgebraElement>& chain) const;

  HVec zero_h() const;
  std::vector<AlgebraElement> zero_chain() const;
  const ComplexView& complex() const { return view_; }

  std::string hvec_str(const HVec& v) const;

private:
  friend Contraction build_contraction(const ComplexView&, linalg::PivotRule);

  ComplexView view_;
  std::vector<HBasisEl> hbasis_;
  std::map<std::string, int> hindex_;
  // Per block: local chain indices, local h indices, and matrices.
  struct Block {
    BlockKey key;
    std::vector<int> chain;          // local indices of the complex
    std::vector<int> hslots;         // indices into hbasis_
    linalg::Matrix include_mat;      // dim x hdim
    linalg::Matrix project_mat;      // hdim x dim
    bool identity = false;           // i = p = id block (harmonic shortcut)
  };
  std::map<BlockKey, Block> blocks_;
  // h maps block (q, w) into block (q-1, w): matrix (dim of target) x (dim of source).
  std::map<BlockKey, linalg::Matrix> hmats_;
};

/// Builds the contraction with the prescribed deterministic pivot rule.
Contraction build_contraction(const ComplexView& view, linalg::PivotRule rule);

/// Convenience wrappers working on FiltDGLA elements via the total view.
HVec project(const Contraction& C, const LieElement& x);
LieElement include(const FiltDGLA& L, const Contraction& C, const HVec& h);
LieElement homotopy(const FiltDGLA& L, const Contraction& C, const LieElement& x);

/// Restriction of an ambient element to a view's local coordinates.
std::vector<AlgebraElement> restrict_to_view(const ComplexView& view, const LieElement& x);
/// Inclusion of local view coordinates back into the ambient space.
LieElement extend_from_view(const FiltDGLA& L, const ComplexView& view,
                            const std::vector<AlgebraElement>& local);

}  // namespace supersplit
