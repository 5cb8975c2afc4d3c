#include "supersplit/synthetic.hpp"

#include <algorithm>
#include <map>

#include "supersplit/linalg.hpp"

namespace supersplit {

std::uint64_t SeededRng::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int SeededRng::below(int bound) {
  return bound <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(bound));
}

int SeededRng::range(int lo, int hi) { return lo + below(hi - lo + 1); }

Rational SeededRng::small_rational(bool nonzero) {
  static const int nums[] = {-3, -2, -1, 0, 1, 2, 3};
  static const int dens[] = {1, 1, 1, 2, 3};
  int num = nums[below(7)];
  while (nonzero && num == 0) num = nums[below(7)];
  return Rational(num, dens[below(5)]);
}

namespace {

// Small Lie algebras over Q with exact Jacobi, given by ordered structure
// constants [e_a, e_b] = sum c[a][b][k] e_k for a < b.
struct SmallLie {
  int dim = 1;
  // entries: (a, b, k, coeff) for a < b.
  std::vector<std::array<int, 3>> idx;
  std::vector<Rational> coeff;

  void add(int a, int b, int k, Rational c) {
    idx.push_back({a, b, k});
    coeff.push_back(std::move(c));
  }
};

SmallLie make_small_lie(int which) {
  SmallLie g;
  switch (which) {
    case 0:  // abelian, dim 2
      g.dim = 2;
      break;
    case 1:  // solvable: [e0, e1] = e1
      g.dim = 2;
      g.add(0, 1, 1, Rational(1));
      break;
    case 2:  // Heisenberg: [e0, e1] = e2
      g.dim = 3;
      g.add(0, 1, 2, Rational(1));
      break;
    default:  // sl2: [h,e]=2e, [h,f]=-2f, [e,f]=h with (e0,e1,e2)=(h,e,f)
      g.dim = 3;
      g.add(0, 1, 1, Rational(2));
      g.add(0, 2, 2, Rational(-2));
      g.add(1, 2, 0, Rational(1));
      break;
  }
  return g;
}

// Dense structure constants after a random rational change of basis.
struct DenseLie {
  int dim;
  // c[a][b] -> vector over basis
  std::vector<std::vector<linalg::Vec>> c;
};

DenseLie conjugated_lie(const SmallLie& g, SeededRng& rng) {
  using linalg::Matrix;
  const int n = g.dim;
  Matrix S(n, n);
  while (true) {
    for (int r = 0; r < n; ++r)
      for (int cc = 0; cc < n; ++cc) S.at(r, cc) = Rational(rng.range(-2, 2));
    auto rr = linalg::rref(S, linalg::PivotRule::FirstNonzero);
    if (rr.rank == n) break;
  }
  Matrix Sinv = linalg::inverse(S);

  auto bracket_e = [&](int a, int b) {
    linalg::Vec v(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < g.idx.size(); ++t) {
      if (g.idx[t][0] == a && g.idx[t][1] == b) v[static_cast<std::size_t>(g.idx[t][2])] += g.coeff[t];
      if (g.idx[t][0] == b && g.idx[t][1] == a) v[static_cast<std::size_t>(g.idx[t][2])] -= g.coeff[t];
    }
    return v;
  };

  DenseLie out;
  out.dim = n;
  out.c.assign(static_cast<std::size_t>(n),
               std::vector<linalg::Vec>(static_cast<std::size_t>(n),
                                        linalg::Vec(static_cast<std::size_t>(n))));
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      linalg::Vec acc(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        if (S.at(i, k).is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          if (S.at(j, l).is_zero()) continue;
          linalg::Vec br = bracket_e(i, j);
          for (int t = 0; t < n; ++t)
            if (!br[static_cast<std::size_t>(t)].is_zero())
              acc[static_cast<std::size_t>(t)] += S.at(i, k) * S.at(j, l) * br[static_cast<std::size_t>(t)];
        }
      }
      out.c[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = linalg::mul(Sinv, acc);
    }
  }
  return out;
}

// Blockwise random invertible change of basis; keeps every axiom exact while
// scrambling the presentation.
FiltDGLA blockwise_conjugate(const FiltDGLA& L, SeededRng& rng) {
  using linalg::Matrix;
  std::map<std::pair<int, int>, std::vector<int>> blocks;
  for (int i = 0; i < L.dim(); ++i)
    blocks[{L.el(i).degree, L.el(i).weight}].push_back(i);

  std::map<std::pair<int, int>, Matrix> S, Sinv;
  for (const auto& [key, members] : blocks) {
    const int n = static_cast<int>(members.size());
    Matrix s(n, n);
    while (true) {
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) s.at(r, c) = Rational(rng.range(-2, 2));
      auto rr = linalg::rref(s, linalg::PivotRule::FirstNonzero);
      if (rr.rank == n) break;
    }
    Sinv.emplace(key, linalg::inverse(s));
    S.emplace(key, std::move(s));
  }

  std::vector<BasisEl> basis;
  std::vector<int> old_of_new;       // new index -> (block, column)
  std::map<int, std::pair<std::pair<int, int>, int>> new_info;
  std::map<std::pair<int, int>, std::vector<int>> new_members;
  int counter = 0;
  for (const auto& [key, members] : blocks) {
    for (std::size_t k = 0; k < members.size(); ++k) {
      basis.push_back(BasisEl{"g" + std::to_string(key.first) + "w" + std::to_string(key.second) +
                                  "." + std::to_string(k + 1),
                              key.first, key.second, BasisTag::Untagged});
      new_info[counter] = {key, static_cast<int>(k)};
      new_members[key].push_back(counter);
      ++counter;
    }
  }
  FiltDGLA out(basis, L.top_weight());

  // Express an ambient old-basis vector in the new basis.
  auto to_new = [&](const LieElement& x) {
    std::vector<std::pair<int, Rational>> entries;
    for (const auto& [key, members] : blocks) {
      const int n = static_cast<int>(members.size());
      linalg::Vec local(static_cast<std::size_t>(n));
      bool any = false;
      for (int k = 0; k < n; ++k) {
        const AlgebraElement& c = x.coords[static_cast<std::size_t>(members[static_cast<std::size_t>(k)])];
        if (c.is_zero()) continue;
        if (c.term_count() != 1 || !c.terms().begin()->first.is_unit())
          fail(Error::Kind::Internal, "synthetic: non-constant coordinate");
        local[static_cast<std::size_t>(k)] = c.terms().begin()->second;
        any = true;
      }
      if (!any) continue;
      linalg::Vec coords = linalg::mul(Sinv.at(key), local);
      const auto& nm = new_members.at(key);
      for (int k = 0; k < n; ++k)
        if (!coords[static_cast<std::size_t>(k)].is_zero())
          entries.emplace_back(nm[static_cast<std::size_t>(k)], coords[static_cast<std::size_t>(k)]);
    }
    return entries;
  };

  // Old-basis element represented by new basis column k of block `key`.
  auto old_combo = [&](std::pair<int, int> key, int col) {
    LieElement x = L.zero_element();
    const auto& members = blocks.at(key);
    const Matrix& s = S.at(key);
    for (std::size_t i = 0; i < members.size(); ++i)
      x.coords[static_cast<std::size_t>(members[i])] =
          AlgebraElement::constant(Universe{0, 0}, s.at(static_cast<int>(i), col));
    return x;
  };

  for (int fk = 0; fk < out.dim(); ++fk) {
    auto [key, col] = new_info[fk];
    LieElement image = L.d_apply(old_combo(key, col));
    for (const auto& [row, c] : to_new(image)) out.set_d(fk, row, c);
  }
  for (int fa = 0; fa < out.dim(); ++fa) {
    auto [ka, ca] = new_info[fa];
    for (int fb = 0; fb < out.dim(); ++fb) {
      auto [kb, cb] = new_info[fb];
      if (out.el(fa).weight + out.el(fb).weight > L.top_weight()) continue;
      LieElement image = L.bracket(old_combo(ka, ca), old_combo(kb, cb));
      for (const auto& [c, k] : to_new(image)) out.set_bracket(fa, fb, c, k);
    }
  }
  return out;
}

}  // namespace

FiltDGLA synthetic_dgla(std::uint64_t seed, int max_dim, int max_weight) {
  SeededRng rng(seed * 0x9e3779b97f4a7c15ull + 0x51ull);
  const int N = std::min(std::max(max_weight, 2), 3);

  // Bracket-bearing part: small Lie algebra tensored with closed odd
  // generators o1, o2 (degrees 1) and their product.
  int lie_kind = rng.below(4);
  SmallLie g = make_small_lie(lie_kind);
  int w_o1 = 1;
  int w_o2 = rng.below(2) == 0 ? 1 : (N >= 3 ? 2 : 1);

  struct Mono {
    int degree;
    int weight;
    int kind;  // 0 = o1, 1 = o2, 2 = o1o2
  };
  std::vector<Mono> omonos = {{1, w_o1, 0}, {1, w_o2, 1}};
  if (w_o1 + w_o2 <= N) omonos.push_back({2, w_o1 + w_o2, 2});

  // Differential-bearing abelian part: pairs x -> y of matching weight.
  int pairs = 1 + rng.below(2);
  std::vector<int> pair_weights;
  for (int p = 0; p < pairs; ++p) pair_weights.push_back(rng.range(1, std::min(2, N)));

  auto total_dim = [&] {
    return g.dim * static_cast<int>(omonos.size()) + 2 * static_cast<int>(pair_weights.size());
  };
  while (total_dim() > max_dim && pair_weights.size() > 1) pair_weights.pop_back();
  while (total_dim() > max_dim && g.dim > 2) {
    g = make_small_lie(1);  // fall back to the solvable 2-dim algebra
  }
  if (total_dim() > max_dim) omonos.resize(2);

  DenseLie dg = conjugated_lie(g, rng);

  std::vector<BasisEl> basis;
  // Bracket part first: (g_i (x) mono) in mono-major order.
  std::vector<std::pair<int, int>> bracket_part;  // (mono kind, g index)
  for (std::size_t mk = 0; mk < omonos.size(); ++mk)
    for (int gi = 0; gi < g.dim; ++gi) {
      basis.push_back(BasisEl{"L" + std::to_string(mk) + "." + std::to_string(gi),
                              omonos[mk].degree, omonos[mk].weight, BasisTag::Untagged});
      bracket_part.emplace_back(static_cast<int>(mk), gi);
    }
  const int pair_base = static_cast<int>(basis.size());
  for (std::size_t p = 0; p < pair_weights.size(); ++p) {
    basis.push_back(
        BasisEl{"X" + std::to_string(p), 0, pair_weights[p], BasisTag::Untagged});
    basis.push_back(
        BasisEl{"Y" + std::to_string(p), 1, pair_weights[p], BasisTag::Untagged});
  }

  FiltDGLA L(basis, N);
  for (std::size_t p = 0; p < pair_weights.size(); ++p)
    L.set_d(pair_base + 2 * static_cast<int>(p), pair_base + 2 * static_cast<int>(p) + 1,
            Rational(1));

  // [g_i (x) o1, g_j (x) o2] = [g_i, g_j] (x) o1o2 (and the mirror); o1o2
  // products vanish. Both inputs are odd (degree 1), so the graded signs on
  // the A-factor are exactly the o1 o2 = -o2 o1 exchange.
  if (omonos.size() == 3) {
    auto index_of = [&](int mk, int gi) { return mk * g.dim + gi; };
    for (int i = 0; i < g.dim; ++i) {
      for (int j = 0; j < g.dim; ++j) {
        const linalg::Vec& c = dg.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        for (int k = 0; k < g.dim; ++k) {
          if (c[static_cast<std::size_t>(k)].is_zero()) continue;
          // [gi⊗o1, gj⊗o2] = [gi,gj]⊗o1o2
          L.set_bracket(index_of(0, i), index_of(1, j), index_of(2, k),
                        c[static_cast<std::size_t>(k)]);
          // [gj⊗o2, gi⊗o1] = [gj,gi]⊗o2o1 = (-[gi,gj])⊗(-o1o2) = [gi,gj]⊗o1o2
          L.set_bracket(index_of(1, j), index_of(0, i), index_of(2, k),
                        c[static_cast<std::size_t>(k)]);
        }
      }
    }
  }

  return blockwise_conjugate(L, rng);
}

LieElement random_degree0(const FiltDGLA& L, SeededRng& rng) {
  LieElement x = L.zero_element();
  for (int i = 0; i < L.dim(); ++i)
    if (L.el(i).degree == 0)
      x.coords[static_cast<std::size_t>(i)] =
          AlgebraElement::constant(Universe{0, 0}, rng.small_rational());
  return x;
}

LieElement random_degree1(const FiltDGLA& L, SeededRng& rng) {
  LieElement x = L.zero_element();
  for (int i = 0; i < L.dim(); ++i)
    if (L.el(i).degree == 1)
      x.coords[static_cast<std::size_t>(i)] =
          AlgebraElement::constant(Universe{0, 0}, rng.small_rational());
  return x;
}

}  // namespace supersplit
