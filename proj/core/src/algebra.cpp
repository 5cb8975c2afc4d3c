#include "supersplit/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace supersplit {

namespace {

std::vector<int> mask_indices(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i + 1);
  return out;
}

int cmp_index_lists(std::uint32_t a, std::uint32_t b) {
  // Lexicographic comparison of ascending index lists of equal length.
  while (a || b) {
    int la = a ? __builtin_ctz(a) : 1 << 30;
    int lb = b ? __builtin_ctz(b) : 1 << 30;
    if (la != lb) return la < lb ? -1 : 1;
    a &= a - 1;
    b &= b - 1;
  }
  return 0;
}

int cmp_params(const ParamExponents& a, const ParamExponents& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
  }
  if (ia != a.end()) return -1;
  if (ib != b.end()) return 1;
  return 0;
}

}  // namespace

int Monomial::param_degree() const {
  int d = 0;
  for (const auto& [name, e] : params_) d += e;
  return d;
}

std::vector<int> Monomial::theta_indices() const { return mask_indices(theta_); }
std::vector<int> Monomial::ebar_indices() const { return mask_indices(ebar_); }

void Monomial::prune_params() {
  for (auto it = params_.begin(); it != params_.end();) {
    if (it->second < 0) fail(Error::Kind::Schema, "negative parameter exponent");
    if (it->second == 0)
      it = params_.erase(it);
    else
      ++it;
  }
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
  int da = a.theta_degree(), db = b.theta_degree();
  if (da != db) return da < db ? -1 : 1;
  if (int c = cmp_index_lists(a.theta_, b.theta_)) return c;
  da = a.ebar_degree();
  db = b.ebar_degree();
  if (da != db) return da < db ? -1 : 1;
  if (int c = cmp_index_lists(a.ebar_, b.ebar_)) return c;
  return cmp_params(a.params_, b.params_);
}

std::string Monomial::str() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << "*";
    first = false;
  };
  if (theta_) {
    sep();
    for (int i : theta_indices()) os << "t" << i;
  }
  if (ebar_) {
    sep();
    for (int a : ebar_indices()) os << "eb" << a;
  }
  for (const auto& [name, e] : params_) {
    sep();
    os << name;
    if (e != 1) os << "^" << e;
  }
  if (first) os << "1";
  return os.str();
}

int merge_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int inversions = 0;
  std::uint32_t rest = b;
  while (rest) {
    int bit = __builtin_ctz(rest);
    rest &= rest - 1;
    inversions += __builtin_popcount(a >> (bit + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

AlgebraElement AlgebraElement::constant(Universe u, const Rational& c) {
  AlgebraElement e(u);
  e.add_term(Monomial::unit(), c);
  return e;
}

AlgebraElement AlgebraElement::monomial(Universe u, const Monomial& m, const Rational& c) {
  if (m.theta_mask() >> u.odd_rank) fail(Error::Kind::Schema, "theta index out of range");
  if (m.ebar_mask() >> u.form_rank) fail(Error::Kind::Schema, "ebar index out of range");
  AlgebraElement e(u);
  e.add_term(m, c);
  return e;
}

AlgebraElement AlgebraElement::theta(Universe u, int i) {
  if (i < 1 || i > u.odd_rank) fail(Error::Kind::Schema, "theta index out of range");
  return monomial(u, Monomial(1u << (i - 1), 0), Rational(1));
}

AlgebraElement AlgebraElement::theta_word(Universe u, const std::vector<int>& indices) {
  AlgebraElement e = constant(u, Rational(1));
  for (int i : indices) e = mul(e, theta(u, i));
  return e;
}

AlgebraElement AlgebraElement::ebar(Universe u, int a) {
  if (a < 1 || a > u.form_rank) fail(Error::Kind::Schema, "ebar index out of range");
  return monomial(u, Monomial(0, 1u << (a - 1)), Rational(1));
}

AlgebraElement AlgebraElement::ebar_word(Universe u, const std::vector<int>& indices) {
  AlgebraElement e = constant(u, Rational(1));
  for (int a : indices) e = mul(e, ebar(u, a));
  return e;
}

AlgebraElement AlgebraElement::param(const std::string& name, int exponent) {
  ParamExponents p;
  p[name] = exponent;
  AlgebraElement e{Universe{0, 0}};
  e.add_term(Monomial(0, 0, std::move(p)), Rational(1));
  return e;
}

bool AlgebraElement::generator_free() const {
  for (const auto& [m, c] : terms_)
    if (!m.generator_free()) return false;
  return true;
}

Universe join_universe(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.generator_free()) {
    if (!b.generator_free()) return b.universe();
    return a.universe() == Universe{0, 0} ? b.universe() : a.universe();
  }
  if (b.generator_free()) return a.universe();
  if (!(a.universe() == b.universe()))
    fail(Error::Kind::Universe, "mismatched generator universes");
  return a.universe();
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r(uni_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

void AlgebraElement::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  uni_ = join_universe(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  uni_ = join_universe(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.terms_ == b.terms_;
}

AlgebraElement AlgebraElement::scaled(const Rational& c) const {
  AlgebraElement r(uni_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

bool AlgebraElement::theta_homogeneous(int* degree) const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    if (d < 0)
      d = m.theta_degree();
    else if (d != m.theta_degree())
      return false;
  }
  if (degree) *degree = d < 0 ? 0 : d;
  return true;
}

bool AlgebraElement::ebar_homogeneous(int* degree) const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    if (d < 0)
      d = m.ebar_degree();
    else if (d != m.ebar_degree())
      return false;
  }
  if (degree) *degree = d < 0 ? 0 : d;
  return true;
}

int AlgebraElement::max_theta_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.theta_degree());
  return d;
}

int AlgebraElement::max_param_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.param_degree());
  return d;
}

AlgebraElement AlgebraElement::theta_part(int degree) const {
  AlgebraElement r(uni_);
  for (const auto& [m, c] : terms_)
    if (m.theta_degree() == degree) r.terms_.emplace(m, c);
  return r;
}

AlgebraElement AlgebraElement::ebar_part(int degree) const {
  AlgebraElement r(uni_);
  for (const auto& [m, c] : terms_)
    if (m.ebar_degree() == degree) r.terms_.emplace(m, c);
  return r;
}

std::map<std::pair<int, int>, AlgebraElement> AlgebraElement::bidegree_parts() const {
  std::map<std::pair<int, int>, AlgebraElement> out;
  for (const auto& [m, c] : terms_) {
    auto key = std::make_pair(m.theta_degree(), m.ebar_degree());
    auto it = out.find(key);
    if (it == out.end()) it = out.emplace(key, AlgebraElement(uni_)).first;
    it->second.add_term(m, c);
  }
  return out;
}

AlgebraElement AlgebraElement::theta_derivative_left(int beta) const {
  AlgebraElement r(uni_);
  const std::uint32_t bit = 1u << (beta - 1);
  for (const auto& [m, c] : terms_) {
    if (!(m.theta_mask() & bit)) continue;
    int pos = __builtin_popcount(m.theta_mask() & (bit - 1));
    Rational sgn = (pos & 1) ? Rational(-1) : Rational(1);
    r.add_term(Monomial(m.theta_mask() & ~bit, m.ebar_mask(), m.params()), c * sgn);
  }
  return r;
}

AlgebraElement AlgebraElement::param_derivative(const std::string& name) const {
  AlgebraElement r(uni_);
  for (const auto& [m, c] : terms_) {
    auto it = m.params().find(name);
    if (it == m.params().end()) continue;
    ParamExponents p = m.params();
    int e = it->second;
    if (e == 1)
      p.erase(name);
    else
      p[name] = e - 1;
    r.add_term(Monomial(m.theta_mask(), m.ebar_mask(), std::move(p)), c * Rational(e));
  }
  return r;
}

AlgebraElement AlgebraElement::substitute(const std::map<std::string, Rational>& values) const {
  AlgebraElement r(uni_);
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    ParamExponents p;
    for (const auto& [name, e] : m.params()) {
      auto it = values.find(name);
      if (it == values.end()) {
        p[name] = e;
        continue;
      }
      for (int k = 0; k < e; ++k) coeff *= it->second;
    }
    r.add_term(Monomial(m.theta_mask(), m.ebar_mask(), std::move(p)), coeff);
  }
  return r;
}

AlgebraElement AlgebraElement::substitute(
    const std::map<std::string, AlgebraElement>& values) const {
  AlgebraElement r(uni_);
  for (const auto& [m, c] : terms_) {
    AlgebraElement term = AlgebraElement::monomial(
        uni_, Monomial(m.theta_mask(), m.ebar_mask()), c);
    for (const auto& [name, e] : m.params()) {
      auto it = values.find(name);
      if (it == values.end()) {
        term = mul(term, AlgebraElement::param(name, e));
      } else {
        for (int k = 0; k < e; ++k) term = mul(term, it->second);
      }
    }
    r += term;
  }
  return r;
}

AlgebraElement AlgebraElement::param_degree_part(int d) const {
  AlgebraElement r(uni_);
  for (const auto& [m, c] : terms_)
    if (m.param_degree() == d) r.terms_.emplace(m, c);
  return r;
}

std::vector<std::string> AlgebraElement::param_names() const {
  std::vector<std::string> names;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, e] : m.params())
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
  std::sort(names.begin(), names.end());
  return names;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (m.is_unit()) {
      os << a.str();
    } else if (a.is_one()) {
      os << m.str();
    } else {
      os << a.str() << "*" << m.str();
    }
  }
  return os.str();
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  Universe u = join_universe(a, b);
  AlgebraElement r(u);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      // Species order theta-before-ebar: moving the right factor's theta part
      // across the left factor's ebar part costs one Koszul swap per pair.
      int s1 = merge_sign(ma.theta_mask(), mb.theta_mask());
      if (s1 == 0) continue;
      int s2 = merge_sign(ma.ebar_mask(), mb.ebar_mask());
      if (s2 == 0) continue;
      int cross = mb.theta_degree() * ma.ebar_degree();
      int sgn = s1 * s2 * ((cross & 1) ? -1 : 1);
      ParamExponents p = ma.params();
      for (const auto& [name, e] : mb.params()) p[name] += e;
      Monomial m(ma.theta_mask() | mb.theta_mask(), ma.ebar_mask() | mb.ebar_mask(),
                 std::move(p));
      r.add_term(m, ca * cb * Rational(sgn));
    }
  }
  return r;
}

void TensorElement::add_term(const Monomial& left, const Monomial& right, const Rational& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(left, right);
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (terms_.empty()) uni_ = o.uni_;
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorElement TensorElement::scaled(const Rational& c) const {
  TensorElement r(uni_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

std::string TensorElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << k.first.str() << "(x)" << k.second.str();
  }
  return os.str();
}

AlgebraElement wedge_m(int r, const TensorElement& x) {
  AlgebraElement out(x.universe());
  for (const auto& [k, c] : x.terms()) {
    const Monomial& left = k.first;
    const Monomial& right = k.second;
    if (left.theta_degree() != r)
      fail(Error::Kind::Degree, "wedge_m: left slot must have theta-degree " + std::to_string(r));
    if (right.theta_degree() != 2 || right.ebar_degree() != 0 || !right.params().empty())
      fail(Error::Kind::Degree, "wedge_m: right slot must be a pure theta-degree-2 monomial");
    AlgebraElement l = AlgebraElement::monomial(x.universe(), left, c);
    AlgebraElement rr = AlgebraElement::monomial(x.universe(), right, Rational(1));
    out += mul(l, rr);
  }
  return out;
}

TensorElement shuffle_delta(int r, const AlgebraElement& w) {
  if (r < 0) fail(Error::Kind::Degree, "shuffle_delta: negative left degree");
  int deg = 0;
  if (!w.theta_homogeneous(&deg) || (!w.is_zero() && deg != r + 2))
    fail(Error::Kind::Degree, "shuffle_delta: input must be theta-homogeneous of degree r+2");
  TensorElement out(w.universe());
  if (w.is_zero()) return out;
  Rational norm = Rational(1) / rational_binomial(r + 2, 2);
  for (const auto& [m, c] : w.terms()) {
    std::vector<int> idx = m.theta_indices();
    const int k = static_cast<int>(idx.size());  // == r + 2
    for (int p = 0; p < k; ++p) {
      for (int q = p + 1; q < k; ++q) {
        std::uint32_t right = (1u << (idx[p] - 1)) | (1u << (idx[q] - 1));
        std::uint32_t left = m.theta_mask() & ~right;
        // Koszul sign of the shuffle moving positions p < q to the end.
        int sgn = ((p + q + 1) & 1) ? -1 : 1;
        out.add_term(Monomial(left, m.ebar_mask(), m.params()), Monomial(right, 0),
                     c * norm * Rational(sgn));
      }
    }
  }
  return out;
}

namespace {

// Minimal recursive-descent parser for polynomials in commuting parameters.
struct PolyParser {
  const std::string& s;
  size_t i = 0;

  explicit PolyParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }

  bool eat(char c) {
    if (peek(c)) {
      ++i;
      return true;
    }
    return false;
  }

  [[noreturn]] void die(const std::string& why) {
    fail(Error::Kind::Schema, "polynomial parse error at offset " + std::to_string(i) + ": " + why);
  }

  AlgebraElement parse() {
    AlgebraElement acc = parse_term(parse_sign());
    while (true) {
      skip_ws();
      if (i >= s.size()) break;
      if (eat('+'))
        acc += parse_term(1);
      else if (eat('-'))
        acc += parse_term(-1);
      else
        die("expected '+' or '-'");
    }
    return acc;
  }

  int parse_sign() {
    int sgn = 1;
    while (true) {
      if (eat('+')) continue;
      if (eat('-')) {
        sgn = -sgn;
        continue;
      }
      break;
    }
    return sgn;
  }

  AlgebraElement parse_term(int sgn) {
    AlgebraElement acc = AlgebraElement::constant(Universe{0, 0}, Rational(sgn));
    bool any = false;
    while (true) {
      skip_ws();
      if (i >= s.size()) break;
      char c = s[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        acc = mul(acc, AlgebraElement::constant(Universe{0, 0}, parse_rational()));
        any = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name = parse_ident();
        int e = 1;
        if (eat('^')) e = parse_uint();
        acc = mul(acc, AlgebraElement::param(name, e));
        any = true;
      } else {
        break;
      }
      skip_ws();
      if (!eat('*')) break;
    }
    if (!any) die("expected a factor");
    return acc;
  }

  Rational parse_rational() {
    long num = parse_uint();
    if (eat('/')) {
      long den = parse_uint();
      return Rational(num, den);
    }
    return Rational(num);
  }

  long parse_uint() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) die("expected digits");
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v < 0) die("integer literal too large");
      ++i;
    }
    return v;
  }

  std::string parse_ident() {
    std::string name;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
      name.push_back(s[i]);
      ++i;
    }
    if (name.empty()) die("expected identifier");
    return name;
  }
};

}  // namespace

AlgebraElement AlgebraElement::parse_poly(const std::string& text) {
  PolyParser p(text);
  p.skip_ws();
  if (p.i >= text.size()) fail(Error::Kind::Schema, "empty polynomial");
  return p.parse();
}

}  // namespace supersplit
