#include <doctest.h>

#include <fstream>
#include <sstream>

#include "supersplit/models.hpp"
#include "supersplit/synthetic.hpp"

using namespace supersplit;

namespace {

AlgebraElement cpoly(long v) { return AlgebraElement::constant(Universe{0, 0}, Rational(v)); }

std::string fixture_path(const std::string& name) {
  return std::string(SUPERSPLIT_FIXTURES_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("builders pass validation") {
  CHECK(elliptic_rank3().algebra.validate().all_pass());
  CHECK(abelian_surface_rank4().algebra.validate().all_pass());
  CHECK(k3_rank3_abstract().algebra.validate().all_pass());
  CHECK(k3_rank3_abstract(2, 1).algebra.validate().all_pass());
}

TEST_CASE("elliptic builder: named generators and dimensions") {
  Model ell = elliptic_rank3();
  CHECK(ell.algebra.top_weight() == 1);
  for (const char* nm : {"D23", "D31", "D12", "K1", "K2", "K3"})
    CHECK(ell.aliases.count(nm) == 1);
  // D31 = t3 t1 v = -t13.v1
  const auto& d31 = ell.aliases.at("D31");
  REQUIRE(d31.size() == 1);
  CHECK(d31[0].second == Rational(-1));
  CHECK(ell.algebra.el(d31[0].first).label == "t13.v1");
  // Every degree-1 weight-2 element is Maurer-Cartan.
  SeededRng rng(4);
  for (int t = 0; t < 10; ++t)
    CHECK(mc_residual(ell.algebra, random_degree1(ell.algebra, rng)).is_zero());
}

TEST_CASE("abelian surface builder: Omega and the cup product") {
  Model ab4 = abelian_surface_rank4();
  // [eta] cup [xi] realized as eb1 eb2: nonzero product in the model algebra.
  Universe u = *ab4.uni;
  AlgebraElement eta = AlgebraElement::ebar(u, 1);
  AlgebraElement xi = AlgebraElement::ebar(u, 2);
  CHECK(!mul(eta, xi).is_zero());
  // Omega = eb1 eb2 Theta v1 is a basis element; the T^<4> constant block has
  // dimension two.
  CHECK(ab4.aliases.count("Omega") == 1);
  int w2deg0 = 0;
  for (int i = 0; i < ab4.algebra.dim(); ++i)
    if (ab4.algebra.el(i).weight == 2 && ab4.algebra.el(i).degree == 0) ++w2deg0;
  CHECK(w2deg0 == 2);
  // mc_residual of u x + v y has exactly one nonzero coordinate (on Omega).
  LieElement mu = ab4.make_element(
      {{"x", AlgebraElement::param("u")}, {"y", AlgebraElement::param("v")}});
  LieElement res = mc_residual(ab4.algebra, mu);
  int omega = ab4.aliases.at("Omega")[0].first;
  int nonzero = 0;
  for (std::size_t i = 0; i < res.coords.size(); ++i)
    if (!res.coords[i].is_zero()) {
      ++nonzero;
      CHECK(static_cast<int>(i) == omega);
      AlgebraElement uv = mul(AlgebraElement::param("u"), AlgebraElement::param("v"));
      CHECK((res.coords[i] == uv || res.coords[i] == -uv));
    }
  CHECK(nonzero == 1);
}

TEST_CASE("K3 abstract builder") {
  Model k3 = k3_rank3_abstract();
  CHECK(k3.algebra.top_weight() == 1);
  CHECK(k3.algebra.bracket_table().empty());
  int kern = 0, ts = 0, tsl = 0;
  for (int i = 0; i < k3.algebra.dim(); ++i) {
    const BasisEl& e = k3.algebra.el(i);
    if (e.tag == BasisTag::Kernel) ++kern;
    if (e.label.rfind("TS.", 0) == 0) ++ts;
    if (e.label.rfind("TS_L", 0) == 0) ++tsl;
  }
  CHECK(kern == 2);
  CHECK(ts == 20);
  CHECK(tsl == 0);  // input blocks default to dimension zero
  Model k3b = k3_rank3_abstract(3, 1);
  CHECK(k3b.algebra.dim() == k3.algebra.dim() + 4);
  // Attached Kuranishi system is identically zero.
  Contraction C = build_contraction(total_view(k3.algebra), linalg::PivotRule::FirstNonzero);
  CHECK(kuranishi_system(k3.algebra, C).identically_zero());
}

TEST_CASE("relative trivial family ranks") {
  RelativeRankReport rep = relative_trivial_elliptic_ranks();
  CHECK(rep.r0 == 6);
  CHECK(rep.r1 == 6);
  CHECK(rep.r0_split == std::make_pair(3, 3));
  CHECK(rep.r1_split == std::make_pair(3, 3));
}

TEST_CASE("shipped fixtures round-trip through the loader") {
  Model ell = load_model_file(fixture_path("elliptic_rank3.json"));
  CHECK(ell.spec == elliptic_rank3().spec);
  CHECK(ell.algebra.dim() == elliptic_rank3().algebra.dim());

  Model ab4 = load_model_file(fixture_path("abelian_surface_rank4.json"));
  CHECK(ab4.spec == abelian_surface_rank4().spec);

  Model k3 = load_model_file(fixture_path("k3_rank3.json"));
  CHECK(k3.spec == k3_rank3_abstract().spec);

  // load o export = identity on the spec.
  for (const auto& name : builtin_model_names()) {
    Model m = *builtin_model(name);
    Model back = load_model_json(export_model_json(m.spec));
    CHECK(back.spec == m.spec);
  }
  // Exported fixture text matches the shipped files byte for byte.
  CHECK(export_model_json(elliptic_rank3().spec) == slurp(fixture_path("elliptic_rank3.json")));
  CHECK(export_model_json(abelian_surface_rank4().spec) ==
        slurp(fixture_path("abelian_surface_rank4.json")));
  CHECK(export_model_json(k3_rank3_abstract().spec) == slurp(fixture_path("k3_rank3.json")));
}

TEST_CASE("loader rejects malformed input with located errors") {
  // Parse error.
  CHECK_THROWS_AS(load_model_json("{ not json"), Error);
  // Unknown field.
  CHECK_THROWS_AS(load_model_json(R"({"mode":"harmonic","m":1,"n":3,"extra":1})"), Error);
  // Odd exterior weight in the controller.
  CHECK_THROWS_AS(
      load_model_json(
          R"({"mode":"abstract","blocks":[{"label":"B","degree":1,"weight":3,"dim":1,"tag":"quotient"}]})"),
      Error);
  // Size guard.
  CHECK_THROWS_AS(load_model_json(R"({"mode":"harmonic","m":1,"n":9})"), Error);
  // Unknown tag.
  CHECK_THROWS_AS(
      load_model_json(
          R"({"mode":"abstract","blocks":[{"label":"B","degree":1,"weight":2,"dim":1,"tag":"mystery"}]})"),
      Error);
  // Weight-violating bracket entry -> axiom failure with witness.
  try {
    load_model_json(R"({"mode":"abstract","blocks":[
      {"label":"A","degree":1,"weight":2,"dim":1,"tag":"quotient"},
      {"label":"B","degree":1,"weight":2,"dim":1,"tag":"quotient"},
      {"label":"C","degree":2,"weight":2,"dim":1,"tag":"quotient"}],
      "brackets":[{"a":"A.1","b":"B.1","c":"C.1","coeff":"1"}]})");
    FAIL("expected an axiom error");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::Axiom);
    CHECK(std::string(e.what()).find("additive") != std::string::npos);
  }
  // Missing file.
  CHECK_THROWS_AS(load_model_file("/nonexistent/model.json"), Error);
  // Wrong roots and types.
  CHECK_THROWS_AS(load_model_json("[1,2,3]"), Error);
  CHECK_THROWS_AS(load_model_json(R"({"mode":"abstract"})"), Error);
  CHECK_THROWS_AS(load_model_json(R"({"mode":"abstract","blocks":3})"), Error);
  CHECK_THROWS_AS(
      load_model_json(
          R"({"mode":"abstract","blocks":[{"label":"B","degree":1,"weight":2,"dim":-1,"tag":"kernel"}]})"),
      Error);
  // Duplicate labels collide in the basis.
  CHECK_THROWS_AS(
      load_model_json(
          R"({"mode":"abstract","blocks":[
            {"label":"B","degree":1,"weight":2,"dim":1,"tag":"kernel"},
            {"label":"B","degree":1,"weight":2,"dim":1,"tag":"quotient"}]})"),
      Error);
  // Bad rational literal in a bracket.
  CHECK_THROWS_AS(
      load_model_json(
          R"({"mode":"abstract","blocks":[
            {"label":"A","degree":1,"weight":2,"dim":1,"tag":"quotient"},
            {"label":"T","degree":2,"weight":4,"dim":1,"tag":"quotient"}],
            "brackets":[{"a":"A.1","b":"A.1","c":"T.1","coeff":"one"}]})"),
      Error);
}

TEST_CASE("abstract brackets are antisymmetrized and usable") {
  // A tiny valid abstract model with a bracket: two odd inputs and a target
  // of combined weight.
  Model m = load_model_json(R"({"mode":"abstract","blocks":[
    {"label":"A","degree":1,"weight":2,"dim":1,"tag":"quotient"},
    {"label":"B","degree":1,"weight":2,"dim":1,"tag":"kernel"},
    {"label":"T","degree":2,"weight":4,"dim":1,"tag":"quotient"}],
    "brackets":[{"a":"A.1","b":"B.1","c":"T.1","coeff":"1"},
                {"a":"B.1","b":"A.1","c":"T.1","coeff":"1"}]})");
  CHECK(m.algebra.validate().all_pass());
  LieElement mu = m.make_element({{"A", AlgebraElement::param("u")},
                                  {"B", AlgebraElement::param("v")}});
  LieElement res = mc_residual(m.algebra, mu);
  AlgebraElement uv = mul(AlgebraElement::param("u"), AlgebraElement::param("v"));
  CHECK(res.coords[2] == uv);
}

TEST_CASE("mu resolution and errors") {
  Model ell = elliptic_rank3();
  CHECK_THROWS_AS(ell.resolve_label("nope"), Error);
  LieElement mu = ell.make_element({{"ebD31", cpoly(2)}});
  CHECK(mu.coords[static_cast<std::size_t>(*ell.algebra.index_of("e1.t13.v1"))] == cpoly(-2));
}
