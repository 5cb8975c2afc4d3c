#include "supersplit/models.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace supersplit {

using nlohmann::ordered_json;

TowerOptions Model::tower_options(linalg::PivotRule rule) const {
  TowerOptions opt;
  opt.rule = rule;
  opt.odd_rank = uni ? uni->odd_rank : -1;
  opt.named = named;
  opt.slice_param_names = slice_param_names;
  return opt;
}

std::vector<std::pair<int, Rational>> Model::resolve_label(const std::string& label) const {
  auto it = aliases.find(label);
  if (it != aliases.end()) return it->second;
  auto idx = algebra.index_of(label);
  if (!idx) fail(Error::Kind::Usage, "unknown basis label: " + label);
  return {{*idx, Rational(1)}};
}

LieElement Model::make_element(
    const std::vector<std::pair<std::string, AlgebraElement>>& entries) const {
  LieElement x = algebra.zero_element();
  for (const auto& [label, poly] : entries) {
    if (!poly.generator_free())
      fail(Error::Kind::Schema, "coefficient of " + label + " must be a parameter polynomial");
    for (const auto& [idx, c] : resolve_label(label))
      x.coords[static_cast<std::size_t>(idx)] += poly.scaled(c);
  }
  return x;
}

DerivationForm Model::realize(const LieElement& x) const {
  if (!uni) fail(Error::Kind::State, "abstract model has no derivation realization");
  DerivationForm out(*uni);
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i].is_zero()) continue;
    out += basis_forms[i].mul_left(x.coords[i]);
  }
  return out;
}

std::string Model::display_label(const std::string& label) const {
  for (const auto& [name, combo] : aliases) {
    if (combo.size() != 1 || !(combo.front().second == Rational(1))) continue;
    if (algebra.el(combo.front().first).label == label) return name;
  }
  return label;
}

void Model::apply_display_names(KuranishiSystem& system) const {
  for (auto& v : system.variables) v.label = display_label(v.label);
  for (auto& eq : system.equations) eq.target_label = display_label(eq.target_label);
}

namespace {

int require_index(const FiltDGLA& L, const std::string& label) {
  auto idx = L.index_of(label);
  if (!idx) fail(Error::Kind::Internal, "builder referenced a missing basis label: " + label);
  return *idx;
}

}  // namespace

Model harmonic_model(int m, int n) {
  HarmonicAlgebra ha = from_derivations(m, n);
  Model model;
  model.name = "harmonic(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")";
  model.spec.mode = SplitModelSpec::Mode::Harmonic;
  model.spec.m = m;
  model.spec.n = n;
  model.uni = ha.uni;
  model.algebra = std::move(ha.algebra);
  model.basis_forms = std::move(ha.basis_forms);
  return model;
}

Model elliptic_rank3() {
  Model model = harmonic_model(1, 3);
  model.name = "elliptic_rank3";
  model.spec.metadata = "rank-three split model over an elliptic curve";
  const FiltDGLA& L = model.algebra;

  // Weight-two generators in the cyclic naming scheme; D31 = t3t1*v1 picks up
  // a sign against the ascending monomial t13.
  struct Gen {
    const char* name;
    const char* chain;
    int sign;
  };
  const std::vector<Gen> gens = {
      {"D23", "t23.v1", 1}, {"D31", "t13.v1", -1}, {"D12", "t12.v1", 1},
      {"K1", "t123.d1", 1}, {"K2", "t123.d2", 1},  {"K3", "t123.d3", 1},
  };
  for (const auto& g : gens) {
    int idx = require_index(L, g.chain);
    model.aliases[g.name] = {{idx, Rational(g.sign)}};
    int idx1 = require_index(L, std::string("e1.") + g.chain);
    model.aliases[std::string("eb") + g.name] = {{idx1, Rational(g.sign)}};
  }

  // Display bases: quotient classes (ebD23, ebD31, ebD12), kernel classes
  // (ebK1, ebK2, ebK3) at stage 1, and the same pattern in degree 0.
  auto named_set = [&](NamedClassSet::Space space, int degree, const char* prefix,
                       std::initializer_list<const char*> names) {
    NamedClassSet set;
    set.space = space;
    set.block = BlockKey{degree, 1};
    for (const char* nm : names) {
      const auto& combo = model.aliases.at(std::string(prefix) + nm);
      std::vector<std::pair<int, Rational>> chain(combo.begin(), combo.end());
      set.classes.emplace_back(std::string(prefix) + nm, std::move(chain));
    }
    return set;
  };
  model.named.push_back(
      named_set(NamedClassSet::Space::Quotient, 1, "eb", {"D23", "D31", "D12"}));
  model.named.push_back(named_set(NamedClassSet::Space::Kernel, 1, "eb", {"K1", "K2", "K3"}));
  model.named.push_back(named_set(NamedClassSet::Space::Total, 1, "eb",
                                  {"D23", "D31", "D12", "K1", "K2", "K3"}));
  return model;
}

Model abelian_surface_rank4() {
  Model model = harmonic_model(2, 4);
  model.name = "abelian_surface_rank4";
  model.spec.metadata = "rank-four split model over a product of two elliptic curves";
  const FiltDGLA& L = model.algebra;

  int d_idx = require_index(L, "t34.v1");
  int k_idx = require_index(L, "t123.d3");
  int x_idx = require_index(L, "e1.t34.v1");
  int y_idx = require_index(L, "e2.t123.d3");
  int omega_idx = require_index(L, "e12.t1234.v1");

  model.aliases["D"] = {{d_idx, Rational(1)}};
  model.aliases["K"] = {{k_idx, Rational(1)}};
  model.aliases["x"] = {{x_idx, Rational(1)}};
  model.aliases["y"] = {{y_idx, Rational(1)}};
  model.aliases["Omega"] = {{omega_idx, Rational(1)}};

  NamedClassSet h1;
  h1.space = NamedClassSet::Space::Total;
  h1.block = BlockKey{1, 1};
  h1.classes.emplace_back("x", std::vector<std::pair<int, Rational>>{{x_idx, Rational(1)}});
  h1.classes.emplace_back("y", std::vector<std::pair<int, Rational>>{{y_idx, Rational(1)}});
  model.named.push_back(std::move(h1));

  NamedClassSet h2;
  h2.space = NamedClassSet::Space::Total;
  h2.block = BlockKey{2, 2};
  h2.classes.emplace_back("Omega",
                          std::vector<std::pair<int, Rational>>{{omega_idx, Rational(1)}});
  model.named.push_back(std::move(h2));

  model.slice_param_names["x"] = "u";
  model.slice_param_names["y"] = "v";
  return model;
}

Model k3_rank3_abstract(int dim_ts_l, int dim_ts_linv) {
  SplitModelSpec spec;
  spec.mode = SplitModelSpec::Mode::Abstract;
  spec.metadata =
      "rank-three model over an elliptic K3 surface; TS_L and TS_Linv dimensions are input "
      "data (shipped default 0)";
  spec.blocks = {
      {"TS", 1, 2, 20, BasisTag::Quotient},
      {"TS_L", 1, 2, dim_ts_l, BasisTag::Quotient},
      {"TS_Linv", 1, 2, dim_ts_linv, BasisTag::Quotient},
      {"KER", 1, 2, 2, BasisTag::Kernel},
  };
  Model model = build_model(spec);
  model.name = "k3_rank3";
  return model;
}

RelativeRankReport relative_trivial_elliptic_ranks() {
  // Fibre model tensored with H^0 + H^1 of the elliptic base direction: the
  // degree-0 and degree-1 blocks of the fibre controller give the ranks, and
  // the quotient/kernel tags give the projected/residual split.
  Model fibre = elliptic_rank3();
  RelativeRankReport rep;
  for (int i = 0; i < fibre.algebra.dim(); ++i) {
    const BasisEl& e = fibre.algebra.el(i);
    if (e.degree == 0) {
      ++rep.r0;
      (e.tag == BasisTag::Quotient ? rep.r0_split.first : rep.r0_split.second) += 1;
    } else if (e.degree == 1) {
      ++rep.r1;
      (e.tag == BasisTag::Quotient ? rep.r1_split.first : rep.r1_split.second) += 1;
    }
  }
  return rep;
}

Model build_model(const SplitModelSpec& spec) {
  if (spec.mode == SplitModelSpec::Mode::Harmonic) {
    Model model = harmonic_model(spec.m, spec.n);
    model.spec = spec;
    return model;
  }

  std::vector<BasisEl> basis;
  int top = 1;
  for (const auto& b : spec.blocks) {
    if (b.weight_ext < 2 || b.weight_ext % 2 != 0)
      fail(Error::Kind::Schema,
           "block " + b.label + ": controller weight must be even and >= 2");
    if (b.dim < 0) fail(Error::Kind::Schema, "block " + b.label + ": negative dimension");
    if (b.degree < 0 || b.degree > 8)
      fail(Error::Kind::Schema, "block " + b.label + ": degree out of range");
    int w = b.weight_ext / 2;
    top = std::max(top, w);
    for (int k = 1; k <= b.dim; ++k)
      basis.push_back(BasisEl{b.label + "." + std::to_string(k), b.degree, w, b.tag});
  }
  FiltDGLA L(std::move(basis), top);
  for (const auto& br : spec.brackets) {
    auto a = L.index_of(br.a), b = L.index_of(br.b), c = L.index_of(br.c);
    if (!a || !b || !c)
      fail(Error::Kind::Schema, "bracket entry references unknown label (" + br.a + ", " +
                                    br.b + ", " + br.c + ")");
    L.set_bracket(*a, *b, *c, br.coeff);
  }
  L.antisymmetrize();
  ValidationReport rep = L.validate();
  if (!rep.all_pass()) {
    for (const auto& ax : rep.axioms)
      if (!ax.pass)
        fail(Error::Kind::Axiom, "model violates " + ax.name + " at " + ax.witness);
  }

  Model model;
  model.name = "abstract";
  model.spec = spec;
  model.algebra = std::move(L);
  // Dimension-one blocks get their bare label as an alias.
  for (const auto& b : spec.blocks)
    if (b.dim == 1)
      model.aliases[b.label] = {{*model.algebra.index_of(b.label + ".1"), Rational(1)}};
  return model;
}

namespace {

void reject_unknown_fields(const ordered_json& j, std::initializer_list<const char*> allowed,
                           const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed)
      if (it.key() == a) {
        ok = true;
        break;
      }
    if (!ok) fail(Error::Kind::Schema, where + ": unknown field \"" + it.key() + "\"");
  }
}

int get_int(const ordered_json& j, const char* field, const std::string& where) {
  if (!j.contains(field) || !j[field].is_number_integer())
    fail(Error::Kind::Schema, where + ": missing integer field \"" + field + "\"");
  return j[field].get<int>();
}

std::string get_str(const ordered_json& j, const char* field, const std::string& where) {
  if (!j.contains(field) || !j[field].is_string())
    fail(Error::Kind::Schema, where + ": missing string field \"" + field + "\"");
  return j[field].get<std::string>();
}

}  // namespace

Model load_model_json(const std::string& text, const std::string& origin) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Error::Kind::Schema, origin + ": JSON parse error at byte " +
                                  std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) fail(Error::Kind::Schema, origin + ": model must be a JSON object");
  std::string mode = get_str(j, "mode", origin);
  SplitModelSpec spec;
  if (j.contains("metadata")) spec.metadata = get_str(j, "metadata", origin);
  if (mode == "harmonic") {
    reject_unknown_fields(j, {"mode", "m", "n", "metadata"}, origin);
    spec.mode = SplitModelSpec::Mode::Harmonic;
    spec.m = get_int(j, "m", origin);
    spec.n = get_int(j, "n", origin);
    if (spec.m < 1 || spec.m > 3 || spec.n < 1 || spec.n > 8)
      fail(Error::Kind::Schema, origin + ": harmonic mode requires 1<=m<=3, 1<=n<=8");
  } else if (mode == "abstract") {
    reject_unknown_fields(j, {"mode", "blocks", "brackets", "metadata"}, origin);
    spec.mode = SplitModelSpec::Mode::Abstract;
    if (!j.contains("blocks") || !j["blocks"].is_array())
      fail(Error::Kind::Schema, origin + ": abstract mode needs a blocks array");
    for (const auto& b : j["blocks"]) {
      std::string where = origin + " block";
      reject_unknown_fields(b, {"label", "degree", "weight", "dim", "tag"}, where);
      SplitModelSpec::Block blk;
      blk.label = get_str(b, "label", where);
      blk.degree = get_int(b, "degree", where);
      blk.weight_ext = get_int(b, "weight", where);
      blk.dim = get_int(b, "dim", where);
      auto tag = tag_from_name(get_str(b, "tag", where));
      if (!tag) fail(Error::Kind::Schema, where + ": tag must be quotient|kernel|untagged");
      blk.tag = *tag;
      spec.blocks.push_back(std::move(blk));
    }
    if (j.contains("brackets")) {
      if (!j["brackets"].is_array())
        fail(Error::Kind::Schema, origin + ": brackets must be an array");
      for (const auto& e : j["brackets"]) {
        std::string where = origin + " bracket";
        reject_unknown_fields(e, {"a", "b", "c", "coeff"}, where);
        spec.brackets.push_back(SplitModelSpec::Bracket{
            get_str(e, "a", where), get_str(e, "b", where), get_str(e, "c", where),
            Rational::parse(get_str(e, "coeff", where))});
      }
    }
  } else {
    fail(Error::Kind::Schema, origin + ": mode must be \"harmonic\" or \"abstract\"");
  }
  Model model = build_model(spec);
  model.name = origin;
  return model;
}

Model load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Error::Kind::Io, "cannot open model file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_model_json(ss.str(), path);
}

std::string export_model_json(const SplitModelSpec& spec) {
  ordered_json j;
  if (spec.mode == SplitModelSpec::Mode::Harmonic) {
    j["mode"] = "harmonic";
    j["m"] = spec.m;
    j["n"] = spec.n;
  } else {
    j["mode"] = "abstract";
    j["blocks"] = ordered_json::array();
    for (const auto& b : spec.blocks) {
      ordered_json e;
      e["label"] = b.label;
      e["degree"] = b.degree;
      e["weight"] = b.weight_ext;
      e["dim"] = b.dim;
      e["tag"] = tag_name(b.tag);
      j["blocks"].push_back(std::move(e));
    }
    if (!spec.brackets.empty()) {
      j["brackets"] = ordered_json::array();
      for (const auto& br : spec.brackets) {
        ordered_json e;
        e["a"] = br.a;
        e["b"] = br.b;
        e["c"] = br.c;
        e["coeff"] = br.coeff.str();
        j["brackets"].push_back(std::move(e));
      }
    }
  }
  if (!spec.metadata.empty()) j["metadata"] = spec.metadata;
  return j.dump(2) + "\n";
}

std::vector<std::string> builtin_model_names() {
  return {"elliptic_rank3", "abelian_surface_rank4", "k3_rank3"};
}

std::optional<Model> builtin_model(const std::string& name) {
  if (name == "elliptic_rank3") return elliptic_rank3();
  if (name == "abelian_surface_rank4") return abelian_surface_rank4();
  if (name == "k3_rank3") return k3_rank3_abstract();
  return std::nullopt;
}

}  // namespace supersplit
