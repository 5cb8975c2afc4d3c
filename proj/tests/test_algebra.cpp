#include <doctest.h>

#include "oracles.hpp"
#include "supersplit/algebra.hpp"
#include "supersplit/synthetic.hpp"

using namespace supersplit;

namespace {

const Universe u43{4, 3};

AlgebraElement th(std::initializer_list<int> idx) {
  return AlgebraElement::theta_word(u43, std::vector<int>(idx));
}

AlgebraElement random_element(SeededRng& rng, Universe u, int max_terms) {
  AlgebraElement e(u);
  int terms = 1 + rng.below(max_terms);
  for (int t = 0; t < terms; ++t) {
    std::uint32_t tm = static_cast<std::uint32_t>(rng.next()) & ((1u << u.odd_rank) - 1);
    std::uint32_t em = static_cast<std::uint32_t>(rng.next()) & ((1u << u.form_rank) - 1);
    e += AlgebraElement::monomial(u, Monomial(tm, em), rng.small_rational());
  }
  return e;
}

AlgebraElement random_homogeneous_monomial(SeededRng& rng, Universe u) {
  std::uint32_t tm = static_cast<std::uint32_t>(rng.next()) & ((1u << u.odd_rank) - 1);
  std::uint32_t em = static_cast<std::uint32_t>(rng.next()) & ((1u << u.form_rank) - 1);
  return AlgebraElement::monomial(u, Monomial(tm, em), rng.small_rational(true));
}

}  // namespace

TEST_CASE("rational invariants and parsing") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, -4).str() == "1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse(" 5 / 10 ") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK(rational_binomial(4, 2) == Rational(6));
}

TEST_CASE("supercommutative product normal forms") {
  // theta2 * theta1 = -theta1 theta2
  CHECK(th({2, 1}) == -th({1, 2}));
  // square-zero
  CHECK(mul(th({1}), th({1})).is_zero());
  // (t1 t2)(t3 t4) = Theta
  CHECK(mul(th({1, 2}), th({3, 4})) == th({1, 2, 3, 4}));
  // ebar anticommute among themselves and with theta via total parity
  AlgebraElement e1 = AlgebraElement::ebar(u43, 1);
  AlgebraElement e2 = AlgebraElement::ebar(u43, 2);
  CHECK(mul(e1, e2) == -mul(e2, e1));
  CHECK(mul(e1, e1).is_zero());
  CHECK(mul(th({1}), e1) == -mul(e1, th({1})));
}

TEST_CASE("universe mismatch raises") {
  AlgebraElement a = AlgebraElement::theta(Universe{2, 1}, 1);
  AlgebraElement b = AlgebraElement::theta(Universe{3, 1}, 1);
  CHECK_THROWS_AS(mul(a, b), Error);
  // generator-free elements unify with anything
  CHECK(mul(AlgebraElement::param("s"), a) == a.scaled(Rational(1)) * AlgebraElement::param("s"));
}

TEST_CASE("graded commutativity and associativity on random elements") {
  SeededRng rng(7);
  for (int t = 0; t < 200; ++t) {
    Universe u{1 + rng.below(6), 1 + rng.below(2)};
    AlgebraElement a = random_homogeneous_monomial(rng, u);
    AlgebraElement b = random_homogeneous_monomial(rng, u);
    int pa = a.terms().begin()->first.parity();
    int pb = b.terms().begin()->first.parity();
    Rational sgn((pa && pb) ? -1 : 1);
    CHECK(mul(a, b) == mul(b, a).scaled(sgn));
  }
  for (int t = 0; t < 100; ++t) {
    Universe u{1 + rng.below(6), 1 + rng.below(2)};
    AlgebraElement a = random_element(rng, u, 3);
    AlgebraElement b = random_element(rng, u, 3);
    AlgebraElement c = random_element(rng, u, 3);
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
  }
}

TEST_CASE("normal form is idempotent under reserialization") {
  SeededRng rng(11);
  for (int t = 0; t < 50; ++t) {
    AlgebraElement a = random_element(rng, u43, 5);
    AlgebraElement b(u43);
    for (const auto& [m, c] : a.terms()) b.add_term(m, c);
    CHECK(a == b);
  }
}

TEST_CASE("left theta derivative with Koszul sign") {
  // d/dt2 (t1 t2) = -t1
  CHECK(th({1, 2}).theta_derivative_left(2) == -th({1}));
  CHECK(th({1, 2}).theta_derivative_left(1) == th({2}));
  CHECK(th({1, 2}).theta_derivative_left(3).is_zero());
}

TEST_CASE("wedge_m on decomposable tensors") {
  TensorElement x(u43);
  x.add_term(Monomial(0, 0), Monomial(0b11, 0), Rational(1));  // 1 (x) t1t2
  CHECK(wedge_m(0, x) == th({1, 2}));

  TensorElement y(u43);
  y.add_term(Monomial(0b001, 0), Monomial(0b110, 0), Rational(1));  // t1 (x) t2t3
  CHECK(wedge_m(1, y) == th({1, 2, 3}));

  TensorElement z(u43);
  z.add_term(Monomial(0b010, 0), Monomial(0b011, 0), Rational(1));  // t2 (x) t1t2
  CHECK(wedge_m(1, z).is_zero());

  CHECK_THROWS_AS(wedge_m(2, y), Error);  // left degree mismatch
}

TEST_CASE("shuffle coproduct matches the brute-force oracle") {
  // Delta_{0,2}(t1t2) = 1 (x) t1t2
  TensorElement expect(u43);
  expect.add_term(Monomial(0, 0), Monomial(0b11, 0), Rational(1));
  CHECK(shuffle_delta(0, th({1, 2})) == expect);

  // Delta_{1,2}(t1t2t3) = (1/3)(t1 (x) t2t3 - t2 (x) t1t3 + t3 (x) t1t2)
  TensorElement d12 = shuffle_delta(1, th({1, 2, 3}));
  TensorElement want(u43);
  want.add_term(Monomial(0b001, 0), Monomial(0b110, 0), Rational(1, 3));
  want.add_term(Monomial(0b010, 0), Monomial(0b101, 0), Rational(-1, 3));
  want.add_term(Monomial(0b100, 0), Monomial(0b011, 0), Rational(1, 3));
  CHECK(d12 == want);
  CHECK(d12 == oracles::shuffle_oracle(u43, {1, 2, 3}));

  // Delta_{2,2}(Theta): six (2,2)-shuffles, verified against the oracle and
  // against m o Delta = id.
  TensorElement d22 = shuffle_delta(2, th({1, 2, 3, 4}));
  CHECK(d22 == oracles::shuffle_oracle(u43, {1, 2, 3, 4}));
  CHECK(d22.terms().size() == 6);
  CHECK(wedge_m(2, d22) == th({1, 2, 3, 4}));

  CHECK_THROWS_AS(shuffle_delta(1, th({1, 2}) + th({1, 2, 3})), Error);
}

TEST_CASE("m o Delta = id exhaustively for n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    Universe u{n, 1};
    for (int r = 0; r + 2 <= n; ++r) {
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != r + 2) continue;
        AlgebraElement w = AlgebraElement::monomial(u, Monomial(mask, 0), Rational(1));
        CHECK(wedge_m(r, shuffle_delta(r, w)) == w);
        CHECK(shuffle_delta(r, w) == oracles::shuffle_oracle(u, Monomial(mask, 0).theta_indices()));
      }
    }
  }
}

TEST_CASE("shuffle carries ebar factors and parameters on the left slot") {
  AlgebraElement w = mul(mul(th({1, 2, 3}), AlgebraElement::ebar(u43, 2)),
                         AlgebraElement::param("s"));
  TensorElement d = shuffle_delta(1, w);
  AlgebraElement back = wedge_m(1, d);
  CHECK(back == w);
  for (const auto& [key, c] : d.terms()) {
    CHECK(key.first.ebar_degree() == 1);
    CHECK(key.first.params().count("s") == 1);
    CHECK(key.second.generator_free() == false);
    CHECK(key.second.theta_degree() == 2);
    CHECK(key.second.ebar_degree() == 0);
  }
}

TEST_CASE("polynomial parser") {
  AlgebraElement p = AlgebraElement::parse_poly("-3/2*u^2*v + 1 - u");
  AlgebraElement expect =
      AlgebraElement::param("u", 2) * AlgebraElement::param("v").scaled(Rational(-3, 2)) +
      AlgebraElement::constant(Universe{0, 0}, Rational(1)) - AlgebraElement::param("u");
  CHECK(p == expect);
  CHECK(AlgebraElement::parse_poly("0").is_zero());
  CHECK_THROWS_AS(AlgebraElement::parse_poly("u +"), Error);
  CHECK_THROWS_AS(AlgebraElement::parse_poly("^2"), Error);
  CHECK_THROWS_AS(AlgebraElement::parse_poly(""), Error);
}

TEST_CASE("substitution and parameter calculus") {
  AlgebraElement p = AlgebraElement::parse_poly("u*v - 2*u^2");
  CHECK(p.substitute({{"u", Rational(1)}, {"v", Rational(2)}}) ==
        AlgebraElement::constant(Universe{0, 0}, Rational(0)));
  CHECK(p.param_derivative("v") == AlgebraElement::param("u"));
  CHECK(p.param_degree_part(2) == p);
  std::map<std::string, AlgebraElement> sub{{"v", AlgebraElement::param("w", 2)}};
  CHECK(p.substitute(sub) ==
        AlgebraElement::parse_poly("u*w^2 - 2*u^2"));
}
