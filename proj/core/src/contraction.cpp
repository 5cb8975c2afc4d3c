#include "supersplit/contraction.hpp"

#include <algorithm>
#include <sstream>

namespace supersplit {

using linalg::Matrix;
using linalg::PivotRule;
using linalg::Vec;

ComplexView total_view(const FiltDGLA& L) {
  ComplexView v;
  v.ambient.resize(static_cast<std::size_t>(L.dim()));
  for (int i = 0; i < L.dim(); ++i) {
    v.ambient[static_cast<std::size_t>(i)] = i;
    v.els.push_back(L.el(i));
  }
  v.d.resize(v.els.size());
  for (int col = 0; col < L.dim(); ++col) v.d[static_cast<std::size_t>(col)] = L.d_col(col);
  return v;
}

namespace {

ComplexView tagged_view(const FiltDGLA& L, BasisTag keep, bool drop_other_rows) {
  ComplexView v;
  std::vector<int> local_of(static_cast<std::size_t>(L.dim()), -1);
  for (int i = 0; i < L.dim(); ++i) {
    if (L.el(i).tag != keep) continue;
    local_of[static_cast<std::size_t>(i)] = static_cast<int>(v.els.size());
    v.ambient.push_back(i);
    v.els.push_back(L.el(i));
  }
  v.d.resize(v.els.size());
  for (std::size_t loc = 0; loc < v.ambient.size(); ++loc) {
    int amb = v.ambient[loc];
    for (const auto& [row, c] : L.d_col(amb)) {
      int lrow = local_of[static_cast<std::size_t>(row)];
      if (lrow < 0) {
        if (!drop_other_rows)
          fail(Error::Kind::Axiom,
               "differential leaves the " + tag_name(keep) + " subspace at " + L.el(amb).label +
                   " -> " + L.el(row).label);
        continue;
      }
      v.d[loc].emplace_back(lrow, c);
    }
  }
  return v;
}

}  // namespace

ComplexView kernel_view(const FiltDGLA& L) { return tagged_view(L, BasisTag::Kernel, false); }

ComplexView quotient_view(const FiltDGLA& L) { return tagged_view(L, BasisTag::Quotient, true); }

std::optional<int> Contraction::h_index_of(const std::string& label) const {
  auto it = hindex_.find(label);
  if (it == hindex_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Contraction::h_indices(int degree) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < hbasis_.size(); ++i)
    if (hbasis_[i].degree == degree) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> Contraction::h_indices(int degree, int weight) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < hbasis_.size(); ++i)
    if (hbasis_[i].degree == degree && hbasis_[i].weight == weight)
      out.push_back(static_cast<int>(i));
  return out;
}

HVec Contraction::zero_h() const {
  return HVec(hbasis_.size(), AlgebraElement(Universe{0, 0}));
}

std::vector<AlgebraElement> Contraction::zero_chain() const {
  return std::vector<AlgebraElement>(view_.els.size(), AlgebraElement(Universe{0, 0}));
}

HVec Contraction::project(const std::vector<AlgebraElement>& chain) const {
  HVec out = zero_h();
  for (const auto& [key, blk] : blocks_) {
    if (blk.hslots.empty()) continue;
    if (blk.identity) {
      for (std::size_t k = 0; k < blk.hslots.size(); ++k)
        out[static_cast<std::size_t>(blk.hslots[k])] = chain[static_cast<std::size_t>(blk.chain[k])];
      continue;
    }
    for (std::size_t r = 0; r < blk.hslots.size(); ++r) {
      AlgebraElement acc{Universe{0, 0}};
      for (std::size_t c = 0; c < blk.chain.size(); ++c) {
        const Rational& m = blk.project_mat.at(static_cast<int>(r), static_cast<int>(c));
        if (m.is_zero()) continue;
        acc += chain[static_cast<std::size_t>(blk.chain[c])].scaled(m);
      }
      out[static_cast<std::size_t>(blk.hslots[r])] = std::move(acc);
    }
  }
  return out;
}

std::vector<AlgebraElement> Contraction::include(const HVec& h) const {
  std::vector<AlgebraElement> out = zero_chain();
  for (const auto& [key, blk] : blocks_) {
    if (blk.hslots.empty()) continue;
    if (blk.identity) {
      for (std::size_t k = 0; k < blk.hslots.size(); ++k)
        out[static_cast<std::size_t>(blk.chain[k])] = h[static_cast<std::size_t>(blk.hslots[k])];
      continue;
    }
    for (std::size_t r = 0; r < blk.chain.size(); ++r) {
      AlgebraElement acc{Universe{0, 0}};
      for (std::size_t c = 0; c < blk.hslots.size(); ++c) {
        const Rational& m = blk.include_mat.at(static_cast<int>(r), static_cast<int>(c));
        if (m.is_zero()) continue;
        acc += h[static_cast<std::size_t>(blk.hslots[c])].scaled(m);
      }
      out[static_cast<std::size_t>(blk.chain[r])] = std::move(acc);
    }
  }
  return out;
}

std::vector<AlgebraElement> Contraction::homotopy(const std::vector<AlgebraElement>& chain) const {
  std::vector<AlgebraElement> out = zero_chain();
  for (const auto& [src_key, hmat] : hmats_) {
    auto src_it = blocks_.find(src_key);
    auto dst_it = blocks_.find(BlockKey{src_key.degree - 1, src_key.weight});
    if (src_it == blocks_.end() || dst_it == blocks_.end()) continue;
    const auto& src = src_it->second.chain;
    const auto& dst = dst_it->second.chain;
    for (std::size_t r = 0; r < dst.size(); ++r) {
      AlgebraElement acc{Universe{0, 0}};
      for (std::size_t c = 0; c < src.size(); ++c) {
        const Rational& m = hmat.at(static_cast<int>(r), static_cast<int>(c));
        if (m.is_zero()) continue;
        acc += chain[static_cast<std::size_t>(src[c])].scaled(m);
      }
      if (!acc.is_zero())
        out[static_cast<std::size_t>(dst[r])] += acc;
    }
  }
  return out;
}

std::string Contraction::hvec_str(const HVec& v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << v[i].str() << ")*[" << hbasis_[i].label << "]";
  }
  if (first) os << "0";
  return os.str();
}

Contraction build_contraction(const ComplexView& view, PivotRule rule) {
  Contraction C;
  C.view_ = view;

  std::map<BlockKey, std::vector<int>> block_members;
  for (int i = 0; i < view.dim(); ++i)
    block_members[BlockKey{view.els[static_cast<std::size_t>(i)].degree,
                           view.els[static_cast<std::size_t>(i)].weight}]
        .push_back(i);

  // Dense matrix of d restricted to a block pair.
  auto block_d = [&](const std::vector<int>& src, const std::vector<int>& dst) {
    Matrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    std::map<int, int> dst_pos;
    for (std::size_t r = 0; r < dst.size(); ++r) dst_pos[dst[r]] = static_cast<int>(r);
    for (std::size_t c = 0; c < src.size(); ++c) {
      for (const auto& [row, k] : view.d[static_cast<std::size_t>(src[c])]) {
        auto it = dst_pos.find(row);
        if (it != dst_pos.end()) m.at(it->second, static_cast<int>(c)) = k;
      }
    }
    return m;
  };

  for (const auto& [key, members] : block_members) {
    Contraction::Block blk;
    blk.key = key;
    blk.chain = members;

    auto prev_it = block_members.find(BlockKey{key.degree - 1, key.weight});
    auto next_it = block_members.find(BlockKey{key.degree + 1, key.weight});
    const std::vector<int> empty;
    const std::vector<int>& prev = prev_it == block_members.end() ? empty : prev_it->second;
    const std::vector<int>& next = next_it == block_members.end() ? empty : next_it->second;

    Matrix d_in = block_d(prev, members);   // (dim) x (prev dim)
    Matrix d_out = block_d(members, next);  // (next dim) x (dim)
    const int dim = static_cast<int>(members.size());

    if (d_in.is_zero() && d_out.is_zero()) {
      // No boundaries in or out: cohomology equals the chain block and the
      // chain labels name the classes.
      blk.identity = true;
      for (std::size_t k = 0; k < members.size(); ++k) {
        int hidx = static_cast<int>(C.hbasis_.size());
        const BasisEl& el = view.els[static_cast<std::size_t>(members[k])];
        C.hbasis_.push_back(HBasisEl{el.label, key.degree, key.weight});
        C.hindex_.emplace(el.label, hidx);
        blk.hslots.push_back(hidx);
      }
      C.blocks_.emplace(key, std::move(blk));
      continue;
    }

    // Z = ker(d_out), B = im(d_in); choose H extending B inside Z and C
    // extending Z to the whole block, then T = [B | H | C].
    std::vector<Vec> zvecs = linalg::kernel_basis(d_out, rule);
    std::vector<Vec> bcand;
    for (int c = 0; c < d_in.cols(); ++c) {
      Vec v(static_cast<std::size_t>(dim));
      for (int r = 0; r < dim; ++r) v[static_cast<std::size_t>(r)] = d_in.at(r, c);
      bcand.push_back(std::move(v));
    }
    std::vector<Vec> span;
    std::vector<int> b_taken = linalg::extend_basis(span, bcand);
    const int bdim = static_cast<int>(span.size());
    std::vector<int> h_taken = linalg::extend_basis(span, zvecs);
    const int hdim = static_cast<int>(span.size()) - bdim;
    std::vector<Vec> ccand;
    std::vector<int> cpos;
    for (int c : linalg::column_order(dim, rule)) {
      Vec v(static_cast<std::size_t>(dim));
      v[static_cast<std::size_t>(c)] = Rational(1);
      ccand.push_back(std::move(v));
      cpos.push_back(c);
    }
    std::vector<int> c_taken = linalg::extend_basis(span, ccand);
    const int cdim = static_cast<int>(span.size()) - bdim - hdim;
    if (bdim + hdim + cdim != dim)
      fail(Error::Kind::Internal, "contraction: block decomposition has wrong dimension");

    Matrix T(dim, dim);
    for (int c = 0; c < dim; ++c)
      for (int r = 0; r < dim; ++r) T.at(r, c) = span[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    Matrix Tinv = linalg::inverse(T);

    blk.include_mat = Matrix(dim, hdim);
    for (int c = 0; c < hdim; ++c)
      for (int r = 0; r < dim; ++r)
        blk.include_mat.at(r, c) = span[static_cast<std::size_t>(bdim + c)][static_cast<std::size_t>(r)];
    blk.project_mat = Matrix(hdim, dim);
    for (int r = 0; r < hdim; ++r)
      for (int c = 0; c < dim; ++c) blk.project_mat.at(r, c) = Tinv.at(bdim + r, c);

    for (int k = 0; k < hdim; ++k) {
      int hidx = static_cast<int>(C.hbasis_.size());
      std::string label = "H.q" + std::to_string(key.degree) + ".w" + std::to_string(key.weight) +
                          "." + std::to_string(k + 1);
      C.hbasis_.push_back(HBasisEl{label, key.degree, key.weight});
      C.hindex_.emplace(label, hidx);
      blk.hslots.push_back(hidx);
    }
    C.blocks_.emplace(key, std::move(blk));
  }

  // Homotopy: on each block, kill the boundary part through the complement of
  // the cycles one degree down. h = C_{q-1} . (d|C)^{-1} . proj_B.
  for (const auto& [key, members] : block_members) {
    auto prev_it = block_members.find(BlockKey{key.degree - 1, key.weight});
    if (prev_it == block_members.end()) continue;
    const std::vector<int>& prev = prev_it->second;
    Matrix d_in = block_d(prev, members);
    if (d_in.is_zero()) continue;

    const int dim = static_cast<int>(members.size());
    const int pdim = static_cast<int>(prev.size());

    // Recompute the decompositions of both blocks with the same rule.
    Matrix d_out_prev = d_in;  // d: prev -> this block
    std::vector<Vec> z_prev = linalg::kernel_basis(d_out_prev, rule);
    auto prevprev_it = block_members.find(BlockKey{key.degree - 2, key.weight});
    const std::vector<int> empty;
    const std::vector<int>& prevprev =
        prevprev_it == block_members.end() ? empty : prevprev_it->second;
    Matrix d_in_prev = block_d(prevprev, prev);
    std::vector<Vec> span_prev;
    std::vector<Vec> bcand_prev;
    for (int c = 0; c < d_in_prev.cols(); ++c) {
      Vec v(static_cast<std::size_t>(pdim));
      for (int r = 0; r < pdim; ++r) v[static_cast<std::size_t>(r)] = d_in_prev.at(r, c);
      bcand_prev.push_back(std::move(v));
    }
    linalg::extend_basis(span_prev, bcand_prev);
    linalg::extend_basis(span_prev, z_prev);
    const int zdim_prev = static_cast<int>(span_prev.size());
    std::vector<Vec> ccand;
    for (int c : linalg::column_order(pdim, rule)) {
      Vec v(static_cast<std::size_t>(pdim));
      v[static_cast<std::size_t>(c)] = Rational(1);
      ccand.push_back(std::move(v));
    }
    linalg::extend_basis(span_prev, ccand);
    std::vector<Vec> cbasis(span_prev.begin() + zdim_prev, span_prev.end());
    const int cdim = static_cast<int>(cbasis.size());
    if (cdim == 0) continue;

    // This block's B/H/C split (same construction as above).
    auto next_it = block_members.find(BlockKey{key.degree + 1, key.weight});
    const std::vector<int>& next = next_it == block_members.end() ? empty : next_it->second;
    Matrix d_out = block_d(members, next);
    std::vector<Vec> span;
    std::vector<Vec> bcand;
    for (int c = 0; c < d_in.cols(); ++c) {
      Vec v(static_cast<std::size_t>(dim));
      for (int r = 0; r < dim; ++r) v[static_cast<std::size_t>(r)] = d_in.at(r, c);
      bcand.push_back(std::move(v));
    }
    linalg::extend_basis(span, bcand);
    const int bdim = static_cast<int>(span.size());
    std::vector<Vec> zvecs = linalg::kernel_basis(d_out, rule);
    linalg::extend_basis(span, zvecs);
    std::vector<Vec> ccand2;
    for (int c : linalg::column_order(dim, rule)) {
      Vec v(static_cast<std::size_t>(dim));
      v[static_cast<std::size_t>(c)] = Rational(1);
      ccand2.push_back(std::move(v));
    }
    linalg::extend_basis(span, ccand2);
    Matrix T(dim, dim);
    for (int c = 0; c < dim; ++c)
      for (int r = 0; r < dim; ++r) T.at(r, c) = span[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    Matrix Tinv = linalg::inverse(T);

    // d maps the prev-block complement C isomorphically onto B; D_CB is the
    // matrix of that map in the chosen bases.
    Matrix D_CB(bdim, cdim);
    for (int c = 0; c < cdim; ++c) {
      Vec img = linalg::mul(d_in, cbasis[static_cast<std::size_t>(c)]);
      Vec coords = linalg::mul(Tinv, img);
      for (int r = 0; r < bdim; ++r) D_CB.at(r, c) = coords[static_cast<std::size_t>(r)];
      for (int r = bdim; r < dim; ++r)
        if (!coords[static_cast<std::size_t>(r)].is_zero())
          fail(Error::Kind::Internal, "contraction: d(C) escaped the boundary subspace");
    }
    Matrix D_CB_inv = linalg::inverse(D_CB);

    // h(e_k) = C . D_CB^{-1} . (B-rows of Tinv) e_k.
    Matrix Brows(bdim, dim);
    for (int r = 0; r < bdim; ++r)
      for (int c = 0; c < dim; ++c) Brows.at(r, c) = Tinv.at(r, c);
    Matrix Cmat(pdim, cdim);
    for (int c = 0; c < cdim; ++c)
      for (int r = 0; r < pdim; ++r) Cmat.at(r, c) = cbasis[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    Matrix hmat = linalg::mul(Cmat, linalg::mul(D_CB_inv, Brows));
    C.hmats_.emplace(key, std::move(hmat));
  }

  return C;
}

HVec project(const Contraction& C, const LieElement& x) {
  return C.project(restrict_to_view(C.complex(), x));
}

LieElement include(const FiltDGLA& L, const Contraction& C, const HVec& h) {
  return extend_from_view(L, C.complex(), C.include(h));
}

LieElement homotopy(const FiltDGLA& L, const Contraction& C, const LieElement& x) {
  return extend_from_view(L, C.complex(), C.homotopy(restrict_to_view(C.complex(), x)));
}

std::vector<AlgebraElement> restrict_to_view(const ComplexView& view, const LieElement& x) {
  std::vector<AlgebraElement> out(view.els.size(), AlgebraElement(Universe{0, 0}));
  for (std::size_t loc = 0; loc < view.ambient.size(); ++loc)
    out[loc] = x.coords[static_cast<std::size_t>(view.ambient[loc])];
  return out;
}

LieElement extend_from_view(const FiltDGLA& L, const ComplexView& view,
                            const std::vector<AlgebraElement>& local) {
  LieElement out = L.zero_element();
  for (std::size_t loc = 0; loc < view.ambient.size(); ++loc)
    out.coords[static_cast<std::size_t>(view.ambient[loc])] = local[loc];
  return out;
}

}  // namespace supersplit
