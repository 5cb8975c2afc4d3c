#include "supersplit/hessian.hpp"

#include <sstream>

namespace supersplit {

HessianElement HessianElement::zero(Universe u, int j) {
  HessianElement h;
  h.uni = u;
  h.j = j;
  h.even.assign(static_cast<std::size_t>(u.form_rank), TensorElement(u));
  h.odd.assign(static_cast<std::size_t>(u.odd_rank), TensorElement(u));
  return h;
}

bool HessianElement::is_zero() const {
  for (const auto& t : even)
    if (!t.is_zero()) return false;
  for (const auto& t : odd)
    if (!t.is_zero()) return false;
  return true;
}

std::string HessianElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t a = 0; a < even.size(); ++a) {
    if (even[a].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "v" << (a + 1) << "(x)[" << even[a].str() << "]";
  }
  for (std::size_t g = 0; g < odd.size(); ++g) {
    if (odd[g].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "e^" << (g + 1) << "(x)[" << odd[g].str() << "]";
  }
  if (first) os << "0";
  return os.str();
}

HessianElement hess(const DerivationForm& v, int j) {
  Universe u = v.universe();
  for (const auto& [key, part] : v.weight_parts())
    if (key.second != 2 * j)
      fail(Error::Kind::Degree,
           "hess: derivation is not homogeneous of weight " + std::to_string(2 * j));
  HessianElement out = HessianElement::zero(u, j);
  for (const auto& [dir, coeff] : v.terms()) {
    if (dir.kind == TangentDir::Kind::Even)
      out.even[static_cast<std::size_t>(dir.index - 1)] += shuffle_delta(2 * j - 2, coeff);
    else
      out.odd[static_cast<std::size_t>(dir.index - 1)] += shuffle_delta(2 * j - 1, coeff);
  }
  return out;
}

QuotientElement pi_even(const HessianElement& hx) {
  QuotientElement q = QuotientElement::zero(hx.uni, hx.j);
  for (std::size_t a = 0; a < hx.even.size(); ++a)
    if (!hx.even[a].is_zero()) q.comps[a] = wedge_m(2 * hx.j - 2, hx.even[a]);
  return q;
}

HomElement pi_odd(const HessianElement& hx) {
  HomElement h = HomElement::zero(hx.uni, hx.j);
  if (2 * hx.j + 1 > hx.uni.odd_rank) return h;  // zero map, target sheaf absent
  for (std::size_t g = 0; g < hx.odd.size(); ++g)
    if (!hx.odd[g].is_zero()) h.comps[g] = wedge_m(2 * hx.j - 1, hx.odd[g]);
  return h;
}

HessianElement sec_even(const QuotientElement& q, int j) {
  HessianElement out = HessianElement::zero(q.uni, j);
  for (std::size_t a = 0; a < q.comps.size(); ++a) {
    if (q.comps[a].is_zero()) continue;
    int deg = 0;
    if (!q.comps[a].theta_homogeneous(&deg) || deg != 2 * j)
      fail(Error::Kind::Degree, "sec_even: component must have theta-degree " +
                                    std::to_string(2 * j));
    out.even[a] = shuffle_delta(2 * j - 2, q.comps[a]);
  }
  return out;
}

HessianElement sec_odd(const HomElement& h, int j) {
  HessianElement out = HessianElement::zero(h.uni, j);
  for (std::size_t g = 0; g < h.comps.size(); ++g) {
    if (h.comps[g].is_zero()) continue;
    int deg = 0;
    if (!h.comps[g].theta_homogeneous(&deg) || deg != 2 * j + 1)
      fail(Error::Kind::Degree, "sec_odd: component must have theta-degree " +
                                    std::to_string(2 * j + 1));
    out.odd[g] = shuffle_delta(2 * j - 1, h.comps[g]);
  }
  return out;
}

}  // namespace supersplit
