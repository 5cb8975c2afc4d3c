#include <doctest.h>

#include "oracles.hpp"
#include "supersplit/models.hpp"
#include "supersplit/synthetic.hpp"

using namespace supersplit;

namespace {

AlgebraElement cpoly(long v) { return AlgebraElement::constant(Universe{0, 0}, Rational(v)); }

}  // namespace

TEST_CASE("from_derivations: block dimensions of the worked models") {
  // Elliptic rank three: N = 1, six-dimensional degree-0 and degree-1 blocks.
  HarmonicAlgebra ell = from_derivations(1, 3);
  CHECK(ell.algebra.top_weight() == 1);
  int d0 = 0, d1 = 0;
  for (int i = 0; i < ell.algebra.dim(); ++i) {
    if (ell.algebra.el(i).degree == 0) ++d0;
    if (ell.algebra.el(i).degree == 1) ++d1;
  }
  CHECK(d0 == 6);
  CHECK(d1 == 6);
  // All brackets vanish: no weight-four piece in rank three.
  CHECK(ell.algebra.bracket_table().empty());

  // Rank four over a surface: the weight-4 degree-2 block contains
  // eb1 eb2 Theta v_a for a = 1, 2.
  HarmonicAlgebra ab = from_derivations(2, 4);
  CHECK(ab.algebra.index_of("e12.t1234.v1").has_value());
  CHECK(ab.algebra.index_of("e12.t1234.v2").has_value());
  int w4_deg2 = 0;
  for (int i = 0; i < ab.algebra.dim(); ++i)
    if (ab.algebra.el(i).degree == 2 && ab.algebra.el(i).weight == 2) ++w4_deg2;
  CHECK(w4_deg2 == 2);

  // n = 2: a single weight step and an abelian controller.
  HarmonicAlgebra r2 = from_derivations(1, 2);
  CHECK(r2.algebra.top_weight() == 1);
  CHECK(r2.algebra.bracket_table().empty());

  CHECK_THROWS_AS(from_derivations(4, 3), Error);
  CHECK_THROWS_AS(from_derivations(1, 9), Error);
}

TEST_CASE("validate: positive and negative controls") {
  CHECK(from_derivations(2, 4).algebra.validate().all_pass());
  CHECK(from_derivations(2, 5).algebra.validate().all_pass());

  // Hand-corrupted structure constant: one-sided perturbation.
  FiltDGLA L = from_derivations(2, 4).algebra;
  bool perturbed = false;
  for (const auto& [key, col] : L.bracket_table()) {
    if (!col.empty() && key.first != key.second) {
      L.set_bracket(key.first, key.second, col.front().first, Rational(1));
      perturbed = true;
      break;
    }
  }
  REQUIRE(perturbed);
  ValidationReport rep = L.validate();
  CHECK(!rep.all_pass());
  bool has_witness = false;
  for (const auto& ax : rep.axioms)
    if (!ax.pass && !ax.witness.empty()) has_witness = true;
  CHECK(has_witness);

  // Abelian synthetic algebra passes trivially.
  FiltDGLA ab({{"a", 1, 1, BasisTag::Untagged}, {"b", 2, 1, BasisTag::Untagged}}, 1);
  CHECK(ab.validate().all_pass());
}

TEST_CASE("structure constants round-trip against the derivation bracket") {
  HarmonicAlgebra ha = from_derivations(2, 4);
  const FiltDGLA& L = ha.algebra;
  for (int a = 0; a < L.dim(); ++a) {
    for (int b = 0; b < L.dim(); ++b) {
      if (L.el(a).weight + L.el(b).weight > L.top_weight()) continue;
      DerivationForm direct = bracket(ha.basis_forms[static_cast<std::size_t>(a)],
                                      ha.basis_forms[static_cast<std::size_t>(b)]);
      LieElement table = L.bracket(L.basis_element(a), L.basis_element(b));
      CHECK(ha.realize(table) == direct);
    }
  }
}

TEST_CASE("mc_residual: rank-four mixed class and low-rank linearity") {
  Model model = abelian_surface_rank4();
  LieElement mu = model.make_element(
      {{"x", AlgebraElement::param("u")}, {"y", AlgebraElement::param("v")}});
  LieElement res = mc_residual(model.algebra, mu);
  // Exactly one nonzero coordinate, on eb1 eb2 Theta v1, with value +u*v in
  // this implementation's cup convention (the source convention gives -u*v).
  int omega = *model.algebra.index_of("e12.t1234.v1");
  AlgebraElement uv = mul(AlgebraElement::param("u"), AlgebraElement::param("v"));
  for (std::size_t i = 0; i < res.coords.size(); ++i) {
    if (static_cast<int>(i) == omega)
      CHECK(res.coords[i] == uv);
    else
      CHECK(res.coords[i].is_zero());
  }
  CHECK(mc_residual(model.algebra, model.algebra.zero_element()).is_zero());

  // Any degree-1 element of a rank-3 model is Maurer-Cartan.
  Model ell = elliptic_rank3();
  SeededRng rng(3);
  for (int t = 0; t < 20; ++t)
    CHECK(mc_residual(ell.algebra, random_degree1(ell.algebra, rng)).is_zero());

  CHECK_THROWS_AS(mc_residual(model.algebra, model.make_element({{"D", cpoly(1)}})), Error);
}

TEST_CASE("gauge: closed form against flow and realization oracles") {
  // Trivial cases.
  Model ab4 = abelian_surface_rank4();
  SeededRng rng(17);
  for (int t = 0; t < 10; ++t) {
    LieElement mu = random_degree1(ab4.algebra, rng);
    CHECK(gauge(ab4.algebra, ab4.algebra.zero_element(), mu) == mu);
  }

  // Abelian controller (d = 0, all brackets zero): the formula collapses.
  Model ell = elliptic_rank3();
  for (int t = 0; t < 10; ++t) {
    LieElement mu = random_degree1(ell.algebra, rng);
    LieElement u = random_degree0(ell.algebra, rng);
    CHECK(gauge(ell.algebra, u, mu) == mu);
  }

  // Spec's three-dimensional synthetic algebra: d e0 = e1, [e0, e1] = e2.
  FiltDGLA L3 = oracles::three_dim_example();
  REQUIRE(L3.validate().all_pass());
  AlgebraElement c = AlgebraElement::param("c");
  LieElement u = L3.scale(L3.basis_element(0), c);
  LieElement g = gauge(L3, u, L3.zero_element());
  // gauge(c*e0, 0) = -c*e1 - 1/2 c^2 [e0, e1].
  LieElement expected = L3.zero_element();
  expected.coords[1] = -c;
  expected.coords[2] = mul(c, c).scaled(Rational(-1, 2));
  CHECK(g == expected);
  // Flow oracle on polynomial data.
  CHECK(g == oracles::gauge_flow_oracle(L3, u, L3.zero_element()));
  LieElement mu3 = L3.basis_element(1, Rational(2));
  CHECK(gauge(L3, u, mu3) == oracles::gauge_flow_oracle(L3, u, mu3));

  // Matrix conjugation oracle in the truncated left-regular realization:
  // D + rho(gauge(u, mu)) must equal e^{rho(u)} (D + rho(mu)) e^{-rho(u)}.
  oracles::RegularRealization R = oracles::regular_realization();
  {
    using linalg::Matrix;
    auto rho_of = [&](const LieElement& x) {
      Matrix m(6, 6);
      auto add_scaled = [&](const Matrix& gen, const AlgebraElement& coeff) {
        if (coeff.is_zero()) return;
        REQUIRE(coeff.term_count() == 1);
        Rational k = coeff.terms().begin()->second;
        for (int r = 0; r < 6; ++r)
          for (int cidx = 0; cidx < 6; ++cidx)
            if (!gen.at(r, cidx).is_zero()) m.at(r, cidx) += gen.at(r, cidx) * k;
      };
      add_scaled(R.rho0, x.coords[0]);
      add_scaled(R.rho1, x.coords[1]);
      add_scaled(R.rho2, x.coords[2]);
      return m;
    };
    // Sanity: the realization is a dg homomorphism on the generators.
    // [D, rho(e0)] = rho(e1).
    Matrix de0 = linalg::mul(R.D, R.rho0);
    Matrix e0d = linalg::mul(R.rho0, R.D);
    for (int r = 0; r < 6; ++r)
      for (int cc = 0; cc < 6; ++cc)
        CHECK(de0.at(r, cc) - e0d.at(r, cc) == R.rho1.at(r, cc));
    // [rho(e0), rho(e1)] = rho(e2).
    Matrix ab = linalg::mul(R.rho0, R.rho1);
    Matrix ba = linalg::mul(R.rho1, R.rho0);
    for (int r = 0; r < 6; ++r)
      for (int cc = 0; cc < 6; ++cc)
        CHECK(ab.at(r, cc) - ba.at(r, cc) == R.rho2.at(r, cc));

    LieElement u_num = L3.basis_element(0, Rational(3, 2));
    LieElement mu_num = L3.basis_element(1, Rational(2));
    LieElement g_num = gauge(L3, u_num, mu_num);
    Matrix lhs = R.D;
    {
      Matrix gm = rho_of(g_num);
      for (int r = 0; r < 6; ++r)
        for (int cc = 0; cc < 6; ++cc) lhs.at(r, cc) += gm.at(r, cc);
    }
    Matrix um = rho_of(u_num);
    Matrix neg_um(6, 6);
    for (int r = 0; r < 6; ++r)
      for (int cc = 0; cc < 6; ++cc) neg_um.at(r, cc) = -um.at(r, cc);
    Matrix inner = R.D;
    {
      Matrix mm = rho_of(mu_num);
      for (int r = 0; r < 6; ++r)
        for (int cc = 0; cc < 6; ++cc) inner.at(r, cc) += mm.at(r, cc);
    }
    Matrix rhs = linalg::mul(oracles::matrix_exp(um),
                             linalg::mul(inner, oracles::matrix_exp(neg_um)));
    for (int r = 0; r < 6; ++r)
      for (int cc = 0; cc < 6; ++cc) CHECK(lhs.at(r, cc) == rhs.at(r, cc));
  }

  // Harmonic conjugation oracle: gauged elements act as conjugated operators.
  HarmonicAlgebra ha = from_derivations(2, 4);
  SeededRng rng2(23);
  for (int t = 0; t < 10; ++t) {
    LieElement u2 = random_degree0(ha.algebra, rng2);
    LieElement mu2 = random_degree1(ha.algebra, rng2);
    LieElement g2 = gauge(ha.algebra, u2, mu2);
    CHECK(oracles::conjugation_matches(ha, u2, mu2, g2));
    CHECK(g2 == oracles::gauge_flow_oracle(ha.algebra, u2, mu2));
  }
}

TEST_CASE("gauge preserves Maurer-Cartan and filtration properties hold") {
  SeededRng rng(41);
  for (int t = 0; t < 15; ++t) {
    FiltDGLA L = synthetic_dgla(100 + static_cast<std::uint64_t>(t));
    REQUIRE(L.validate().all_pass());
    LieElement u = random_degree0(L, rng);
    LieElement mc = gauge(L, u, L.zero_element());
    CHECK(mc_residual(L, mc).is_zero());
    LieElement u2 = random_degree0(L, rng);
    CHECK(mc_residual(L, gauge(L, u2, mc)).is_zero());

    // Bianchi: d(R) + [mu, R] = 0 for arbitrary degree-1 mu.
    LieElement mu = random_degree1(L, rng);
    LieElement R = mc_residual(L, mu);
    CHECK(L.add(L.d_apply(R), L.bracket(mu, R)).is_zero());

    // Filtration: mu in F^j forces the residual into F^j and its bracket
    // part into F^{2j}.
    for (int j = 1; j <= L.top_weight(); ++j) {
      LieElement muj = L.zero_element();
      for (int i = 0; i < L.dim(); ++i)
        if (L.el(i).degree == 1 && L.el(i).weight >= j)
          muj.coords[static_cast<std::size_t>(i)] =
              AlgebraElement::constant(Universe{0, 0}, rng.small_rational());
      LieElement res = mc_residual(L, muj);
      auto wmin = L.min_weight_of(res);
      if (wmin) CHECK(*wmin >= j);
      auto wbr = L.min_weight_of(L.bracket(muj, muj));
      if (wbr) CHECK(*wbr >= 2 * j);
    }
  }
}

TEST_CASE("structure-constant JSON round-trip") {
  FiltDGLA L = synthetic_dgla(7);
  std::string text = L.to_json_string();
  FiltDGLA back = FiltDGLA::from_json_string(text);
  CHECK(back.dim() == L.dim());
  CHECK(back.to_json_string() == text);
  SeededRng rng(2);
  for (int t = 0; t < 5; ++t) {
    LieElement x = random_degree1(L, rng);
    LieElement y = random_degree0(L, rng);
    CHECK(L.bracket(y, x) == back.bracket(y, x));
    CHECK(L.d_apply(x) == back.d_apply(x));
  }
  CHECK_THROWS_AS(FiltDGLA::from_json_string("{"), Error);
  CHECK_THROWS_AS(FiltDGLA::from_json_string("{\"basis\": 3}"), Error);
}

TEST_CASE("degree guards") {
  Model ab4 = abelian_surface_rank4();
  LieElement u = ab4.make_element({{"D", cpoly(1)}});
  LieElement mu = ab4.make_element({{"x", cpoly(1)}});
  CHECK_THROWS_AS(gauge(ab4.algebra, mu, mu), Error);   // gauge element degree 1
  CHECK_THROWS_AS(gauge(ab4.algebra, u, u), Error);     // argument degree 0
  CHECK(gauge(ab4.algebra, u, mu) == mu);               // abelian weight-1 x: [u,mu] in w2 though
}
