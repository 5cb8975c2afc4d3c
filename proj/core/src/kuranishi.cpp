#include "supersplit/kuranishi.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace supersplit {

using nlohmann::ordered_json;

LieElement kuranishi_lift(const FiltDGLA& L, const Contraction& C, const HVec& alpha) {
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k].is_zero()) continue;
    if (C.cohomology()[k].degree != 1)
      fail(Error::Kind::Degree, "kuranishi_lift: slice must be degree-1 cohomology");
    if (!alpha[k].generator_free())
      fail(Error::Kind::Schema, "kuranishi_lift: coordinates must be parameter polynomials");
  }
  LieElement ia = include(L, C, alpha);
  LieElement tau = ia;
  for (int iter = 0; iter <= L.top_weight() + 1; ++iter) {
    LieElement next = L.add(
        ia, L.scale(homotopy(L, C, L.bracket(tau, tau)), Rational(-1, 2)));
    if (next == tau) return tau;
    tau = std::move(next);
  }
  fail(Error::Kind::Internal, "kuranishi_lift: fixed point did not stabilize");
}

LieElement kuranishi_curvature(const FiltDGLA& L, const Contraction& C, const HVec& alpha) {
  LieElement tau = kuranishi_lift(L, C, alpha);
  return L.add(L.d_apply(tau), L.scale(L.bracket(tau, tau), Rational(1, 2)));
}

HVec kuranishi_map(const FiltDGLA& L, const Contraction& C, const HVec& alpha) {
  return project(C, kuranishi_curvature(L, C, alpha));
}

bool KuranishiSystem::identically_zero() const {
  for (const auto& eq : equations)
    if (!eq.poly.is_zero()) return false;
  return true;
}

std::string KuranishiSystem::to_json_string() const {
  ordered_json j;
  j["variables"] = ordered_json::array();
  for (const auto& v : variables) {
    ordered_json e;
    e["name"] = v.name;
    e["weight"] = v.weight;
    j["variables"].push_back(std::move(e));
  }
  j["equations"] = ordered_json::array();
  for (const auto& eq : equations) {
    if (eq.poly.is_zero()) continue;
    ordered_json e;
    e["target_label"] = eq.target_label;
    e["target_weight"] = eq.target_weight;
    e["poly"] = ordered_json::array();
    for (const auto& [mono, coeff] : eq.poly.terms()) {
      ordered_json t;
      t["coeff"] = coeff.str();
      ordered_json m = ordered_json::object();
      for (const auto& [name, exp] : mono.params()) m[name] = exp;
      t["monomial"] = std::move(m);
      e["poly"].push_back(std::move(t));
    }
    j["equations"].push_back(std::move(e));
  }
  return j.dump(2);
}

std::string KuranishiSystem::str() const {
  std::ostringstream os;
  os << "variables:";
  for (const auto& v : variables) os << " " << v.name << "(w" << v.weight << ")";
  os << "\n";
  bool any = false;
  for (const auto& eq : equations) {
    if (eq.poly.is_zero()) continue;
    any = true;
    os << "  [" << eq.target_label << "] : " << eq.poly.str() << " = 0\n";
  }
  if (!any) os << "  (identically zero system)\n";
  return os.str();
}

KuranishiSystem kuranishi_system(const FiltDGLA& L, const Contraction& C,
                                 const std::vector<int>& slice_hindices,
                                 const std::vector<std::string>& param_names) {
  KuranishiSystem K;
  HVec alpha = C.zero_h();
  for (std::size_t k = 0; k < slice_hindices.size(); ++k) {
    int h = slice_hindices[k];
    if (h < 0 || h >= C.hdim())
      fail(Error::Kind::Usage, "kuranishi_system: slice index out of range");
    const HBasisEl& el = C.cohomology()[static_cast<std::size_t>(h)];
    if (el.degree != 1)
      fail(Error::Kind::Usage, "kuranishi_system: slice label is not degree-1: " + el.label);
    std::string name =
        k < param_names.size() && !param_names[k].empty() ? param_names[k]
                                                          : "a" + std::to_string(k + 1);
    K.variables.push_back(KuranishiVariable{name, el.label, el.weight, h});
    alpha[static_cast<std::size_t>(h)] = AlgebraElement::param(name);
  }
  HVec kappa = kuranishi_map(L, C, alpha);
  for (int h = 0; h < C.hdim(); ++h) {
    const HBasisEl& el = C.cohomology()[static_cast<std::size_t>(h)];
    if (el.degree != 2) continue;
    K.equations.push_back(
        KuranishiEquation{el.label, el.weight, h, kappa[static_cast<std::size_t>(h)]});
  }
  return K;
}

KuranishiSystem kuranishi_system(const FiltDGLA& L, const Contraction& C) {
  return kuranishi_system(L, C, C.h_indices(1), {});
}

std::vector<WeightComponent> weight_components(const KuranishiSystem& K) {
  std::map<std::string, int> weight_of_param;
  for (const auto& v : K.variables) weight_of_param[v.name] = v.weight;

  std::map<int, WeightComponent> by_weight;
  for (const auto& eq : K.equations) {
    auto& comp = by_weight[eq.target_weight];
    comp.weight = eq.target_weight;
    comp.equations.push_back(eq);
    for (const auto& [mono, coeff] : eq.poly.terms()) {
      int total = 0, pdeg = 0;
      for (const auto& [name, exp] : mono.params()) {
        auto it = weight_of_param.find(name);
        if (it == weight_of_param.end())
          fail(Error::Kind::Internal, "weight_components: unknown parameter " + name);
        if (it->second >= eq.target_weight)
          fail(Error::Kind::Internal,
               "weight_components: triangularity violated — kappa_" +
                   std::to_string(eq.target_weight) + " depends on weight-" +
                   std::to_string(it->second) + " coordinate " + name);
        total += it->second * exp;
        pdeg += exp;
      }
      if (total != eq.target_weight)
        fail(Error::Kind::Internal,
             "weight_components: monomial weight " + std::to_string(total) +
                 " does not match target weight " + std::to_string(eq.target_weight));
      if (pdeg < 2)
        fail(Error::Kind::Internal, "weight_components: monomial of parameter degree < 2");
    }
  }
  std::vector<WeightComponent> out;
  for (auto& [w, comp] : by_weight) out.push_back(std::move(comp));
  return out;
}

bool BracketTable::is_zero() const {
  for (const auto& [tuple, coords] : values)
    for (const auto& c : coords)
      if (!c.is_zero()) return false;
  return true;
}

BracketTable polarize(const KuranishiSystem& K, int r) {
  const int nvars = static_cast<int>(K.variables.size());
  if (r < 2) fail(Error::Kind::Usage, "polarize: arity must be >= 2");
  BracketTable T;
  T.arity = r;
  for (const auto& v : K.variables) T.variable_names.push_back(v.name);
  for (const auto& eq : K.equations) T.target_labels.push_back(eq.target_label);
  if (nvars == 0) return T;

  // kappa_r-part(alpha) = 1/r! * ell_r(alpha, ..., alpha); polarization by
  // iterated partial derivatives evaluated at zero.
  std::vector<int> tuple(static_cast<std::size_t>(r), 0);
  while (true) {
    std::vector<Rational> coords;
    bool nonzero = false;
    for (const auto& eq : K.equations) {
      AlgebraElement part = eq.poly.param_degree_part(r);
      for (int slot = 0; slot < r; ++slot)
        part = part.param_derivative(K.variables[static_cast<std::size_t>(tuple[slot])].name);
      Rational value;
      if (!part.is_zero()) {
        if (part.term_count() != 1 || !part.terms().begin()->first.is_unit())
          fail(Error::Kind::Internal, "polarize: derivative did not reduce to a constant");
        value = part.terms().begin()->second;
      }
      // Weight additivity: inputs of weights j_1..j_r only hit weight sum.
      if (!value.is_zero()) {
        int sum = 0;
        for (int slot = 0; slot < r; ++slot)
          sum += K.variables[static_cast<std::size_t>(tuple[slot])].weight;
        if (sum != eq.target_weight)
          fail(Error::Kind::Internal, "polarize: weight additivity violated at " + eq.target_label);
        nonzero = true;
      }
      coords.push_back(value);
    }
    if (nonzero) T.values.emplace(tuple, std::move(coords));

    // Next sorted tuple (combinations with repetition).
    int slot = r - 1;
    while (slot >= 0 && tuple[static_cast<std::size_t>(slot)] == nvars - 1) --slot;
    if (slot < 0) break;
    int v = ++tuple[static_cast<std::size_t>(slot)];
    for (int s = slot + 1; s < r; ++s) tuple[static_cast<std::size_t>(s)] = v;
  }
  return T;
}

}  // namespace supersplit
