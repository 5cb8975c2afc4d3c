#include "supersplit/derivation.hpp"

#include <sstream>

namespace supersplit {

DerivationForm DerivationForm::term(const AlgebraElement& coeff, TangentDir dir) {
  DerivationForm d(coeff.universe());
  d.add_term(dir, coeff);
  return d;
}

void DerivationForm::add_term(TangentDir dir, const AlgebraElement& coeff) {
  if (coeff.is_zero()) return;
  if (terms_.empty() && uni_ == Universe{0, 0}) uni_ = coeff.universe();
  auto [it, inserted] = terms_.emplace(dir, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DerivationForm DerivationForm::operator-() const {
  DerivationForm r(uni_);
  for (const auto& [dir, c] : terms_) r.terms_.emplace(dir, -c);
  return r;
}

DerivationForm& DerivationForm::operator+=(const DerivationForm& o) {
  if (!o.is_zero() && !is_zero() && !(uni_ == o.uni_))
    fail(Error::Kind::Universe, "mismatched generator universes");
  if (is_zero()) uni_ = o.uni_;
  for (const auto& [dir, c] : o.terms_) add_term(dir, c);
  return *this;
}

DerivationForm& DerivationForm::operator-=(const DerivationForm& o) {
  return *this += -o;
}

DerivationForm DerivationForm::scaled(const Rational& c) const {
  DerivationForm r(uni_);
  if (c.is_zero()) return r;
  for (const auto& [dir, f] : terms_) r.terms_.emplace(dir, f.scaled(c));
  return r;
}

DerivationForm DerivationForm::mul_left(const AlgebraElement& f) const {
  DerivationForm r(uni_);
  for (const auto& [dir, c] : terms_) r.add_term(dir, mul(f, c));
  return r;
}

AlgebraElement DerivationForm::apply(const AlgebraElement& x) const {
  if (!x.generator_free() && !(x.universe() == uni_) && !is_zero())
    fail(Error::Kind::Universe, "mismatched generator universes");
  AlgebraElement out(uni_);
  for (const auto& [dir, f] : terms_) {
    if (dir.kind == TangentDir::Kind::Even) continue;  // v_a acts by zero
    out += mul(f, x.theta_derivative_left(dir.index));
  }
  return out;
}

std::map<std::pair<int, int>, DerivationForm> DerivationForm::weight_parts() const {
  std::map<std::pair<int, int>, DerivationForm> out;
  for (const auto& [dir, f] : terms_) {
    for (const auto& [bideg, part] : f.bidegree_parts()) {
      int w = bideg.first + dir.weight_shift();
      int q = bideg.second;
      auto key = std::make_pair(q, w);
      auto it = out.find(key);
      if (it == out.end()) it = out.emplace(key, DerivationForm(uni_)).first;
      it->second.add_term(dir, part);
    }
  }
  return out;
}

bool DerivationForm::homogeneous(int* q, int* w) const {
  auto parts = weight_parts();
  if (parts.size() > 1) return false;
  if (parts.empty()) {
    if (q) *q = 0;
    if (w) *w = 0;
    return true;
  }
  if (q) *q = parts.begin()->first.first;
  if (w) *w = parts.begin()->first.second;
  return true;
}

bool DerivationForm::green_controller_ok(std::string* why) const {
  for (const auto& [key, part] : weight_parts()) {
    int w = key.second;
    if (w < 2 || (w % 2) != 0) {
      if (why)
        *why = "term of weight " + std::to_string(w) + " outside the even-weight-(>=2) controller";
      return false;
    }
  }
  return true;
}

std::string DerivationForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [dir, f] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << f.str() << ")*" << dir.str();
  }
  return os.str();
}

DerivationForm bracket(const DerivationForm& d, const DerivationForm& e) {
  if (!d.is_zero() && !e.is_zero() && !(d.universe() == e.universe()))
    fail(Error::Kind::Universe, "mismatched generator universes");
  Universe u = d.is_zero() ? e.universe() : d.universe();
  DerivationForm out(u);
  // Termwise graded commutator; the frame directions commute among
  // themselves, so only coefficient derivatives survive:
  //   [fX, gY] = f (X|>g) Y - (-1)^{p(fX) p(gY)} g (Y|>f) X.
  for (const auto& [dx, fc] : d.terms()) {
    for (const auto& [dy, gc] : e.terms()) {
      for (const auto& [fm, fco] : fc.terms()) {
        AlgebraElement f = AlgebraElement::monomial(u, fm, fco);
        int pf = (fm.parity() + dx.parity()) & 1;
        for (const auto& [gm, gco] : gc.terms()) {
          AlgebraElement g = AlgebraElement::monomial(u, gm, gco);
          int pg = (gm.parity() + dy.parity()) & 1;
          if (dx.kind == TangentDir::Kind::Odd) {
            AlgebraElement dg = g.theta_derivative_left(dx.index);
            if (!dg.is_zero()) out.add_term(dy, mul(f, dg));
          }
          if (dy.kind == TangentDir::Kind::Odd) {
            AlgebraElement df = f.theta_derivative_left(dy.index);
            if (!df.is_zero()) {
              Rational sgn((pf & pg & 1) ? -1 : 1);
              out.add_term(dx, mul(g, df).scaled(-sgn));
            }
          }
        }
      }
    }
  }
  return out;
}

QuotientElement QuotientElement::zero(Universe u, int /*j*/) {
  QuotientElement q;
  q.uni = u;
  q.comps.assign(static_cast<std::size_t>(u.form_rank), AlgebraElement(u));
  return q;
}

bool QuotientElement::is_zero() const {
  for (const auto& c : comps)
    if (!c.is_zero()) return false;
  return true;
}

std::string QuotientElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t a = 0; a < comps.size(); ++a) {
    if (comps[a].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << comps[a].str() << ")(x)v" << (a + 1);
  }
  if (first) os << "0";
  return os.str();
}

HomElement HomElement::zero(Universe u, int /*j*/) {
  HomElement h;
  h.uni = u;
  h.comps.assign(static_cast<std::size_t>(u.odd_rank), AlgebraElement(u));
  return h;
}

bool HomElement::is_zero() const {
  for (const auto& c : comps)
    if (!c.is_zero()) return false;
  return true;
}

std::string HomElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t b = 0; b < comps.size(); ++b) {
    if (comps[b].is_zero()) continue;
    if (!first) os << ", ";
    first = false;
    os << "e" << (b + 1) << " -> " << comps[b].str();
  }
  if (first) os << "0";
  return os.str();
}

QuotientElement rho(const DerivationForm& d, int j) {
  Universe u = d.universe();
  QuotientElement q = QuotientElement::zero(u, j);
  for (const auto& [key, part] : d.weight_parts()) {
    if (key.second != 2 * j)
      fail(Error::Kind::Degree, "rho: derivation is not homogeneous of weight " +
                                    std::to_string(2 * j));
  }
  for (const auto& [dir, c] : d.terms()) {
    if (dir.kind != TangentDir::Kind::Even) continue;
    q.comps[static_cast<std::size_t>(dir.index - 1)] += c;
  }
  return q;
}

DerivationForm kernel_include(const HomElement& h, int j) {
  DerivationForm d(h.uni);
  for (std::size_t b = 0; b < h.comps.size(); ++b) {
    const AlgebraElement& c = h.comps[b];
    if (c.is_zero()) continue;
    int deg = 0;
    if (!c.theta_homogeneous(&deg) || deg != 2 * j + 1)
      fail(Error::Kind::Degree,
           "kernel_include: component must have theta-degree " + std::to_string(2 * j + 1));
    d.add_term(TangentDir::odd(static_cast<int>(b + 1)), c);
  }
  return d;
}

ExpAutomorphism::ExpAutomorphism(DerivationForm u) : u_(std::move(u)) {
  for (const auto& [key, part] : u_.weight_parts()) {
    if (key.first != 0)
      fail(Error::Kind::Degree, "exp_automorphism: nonzero Dolbeault degree");
    if (key.second < 2)
      fail(Error::Kind::Degree, "exp_automorphism: weight must be >= 2 (nilpotency)");
  }
}

AlgebraElement ExpAutomorphism::operator()(const AlgebraElement& x) const {
  AlgebraElement acc = x;
  AlgebraElement cur = x;
  int k = 1;
  const int limit = u_.universe().odd_rank + 2;
  while (true) {
    cur = u_.apply(cur).scaled(Rational(1, k));
    if (cur.is_zero()) break;
    acc += cur;
    if (++k > limit) fail(Error::Kind::Internal, "exp_automorphism: series did not terminate");
  }
  return acc;
}

}  // namespace supersplit
