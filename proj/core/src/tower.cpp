#include "supersplit/tower.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace supersplit {

using linalg::Matrix;
using nlohmann::ordered_json;

std::string Verdict::str() const {
  switch (kind) {
    case VerdictKind::Split: return "SPLIT";
    case VerdictKind::BlockedEven: return "BLOCKED_EVEN(" + std::to_string(stage) + ")";
    case VerdictKind::BlockedOdd: return "BLOCKED_ODD(" + std::to_string(stage) + ")";
    case VerdictKind::BlockedCombined: return "BLOCKED_COMBINED(" + std::to_string(stage) + ")";
  }
  return "SPLIT";
}

bool ClassReport::all_zero() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

std::string ClassReport::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!first) os << ", ";
    first = false;
    os << "[" << basis[i] << "]=" << coords[i].str();
  }
  if (first) os << "(empty)";
  return os.str();
}

ObstructionTower::ObstructionTower(const FiltDGLA& L, TowerOptions options)
    : L_(L), opt_(std::move(options)) {
  tagged_ = true;
  for (const auto& e : L.basis())
    if (e.tag == BasisTag::Untagged) {
      tagged_ = false;
      break;
    }
  total_ = build_contraction(total_view(L), opt_.rule);
  if (tagged_) {
    quotient_ = build_contraction(quotient_view(L), opt_.rule);
    kernel_ = build_contraction(kernel_view(L), opt_.rule);
  }

  for (const auto& set : opt_.named) {
    const Contraction* sub = nullptr;
    const ComplexView* view = nullptr;
    switch (set.space) {
      case NamedClassSet::Space::Total:
        sub = &total_;
        break;
      case NamedClassSet::Space::Quotient:
        if (!quotient_) fail(Error::Kind::Schema, "named classes for untagged algebra");
        sub = &*quotient_;
        break;
      case NamedClassSet::Space::Kernel:
        if (!kernel_) fail(Error::Kind::Schema, "named classes for untagged algebra");
        sub = &*kernel_;
        break;
    }
    view = &sub->complex();
    std::map<int, int> local_of;
    for (std::size_t loc = 0; loc < view->ambient.size(); ++loc)
      local_of[view->ambient[loc]] = static_cast<int>(loc);

    std::vector<int> hidx = sub->h_indices(set.block.degree, set.block.weight);
    const int hdim = static_cast<int>(hidx.size());
    if (hdim == 0) fail(Error::Kind::Schema, "named classes on an empty cohomology block");

    std::vector<linalg::Vec> columns;
    std::vector<std::string> labels;
    for (const auto& [name, chain] : set.classes) {
      std::vector<AlgebraElement> vec(view->els.size(), AlgebraElement(Universe{0, 0}));
      for (const auto& [amb, c] : chain) {
        auto it = local_of.find(amb);
        if (it == local_of.end())
          fail(Error::Kind::Schema, "named class " + name + " uses a chain outside the subspace");
        vec[static_cast<std::size_t>(it->second)] += AlgebraElement::constant(Universe{0, 0}, c);
      }
      HVec h = sub->project(vec);
      linalg::Vec col(static_cast<std::size_t>(hdim));
      for (int k = 0; k < hdim; ++k) {
        const AlgebraElement& e = h[static_cast<std::size_t>(hidx[static_cast<std::size_t>(k)])];
        if (e.is_zero())
          col[static_cast<std::size_t>(k)] = Rational(0);
        else if (e.term_count() == 1 && e.terms().begin()->first.is_unit())
          col[static_cast<std::size_t>(k)] = e.terms().begin()->second;
        else
          fail(Error::Kind::Internal, "named class projection is not constant");
      }
      columns.push_back(std::move(col));
      labels.push_back(name);
    }
    // Complete to a full basis of the block with unit vectors.
    std::vector<linalg::Vec> span = columns;
    std::vector<linalg::Vec> units;
    for (int k = 0; k < hdim; ++k) {
      linalg::Vec v(static_cast<std::size_t>(hdim));
      v[static_cast<std::size_t>(k)] = Rational(1);
      units.push_back(std::move(v));
    }
    std::vector<int> taken = linalg::extend_basis(span, units);
    if (static_cast<int>(span.size()) != hdim)
      fail(Error::Kind::Schema, "named classes are linearly dependent");
    for (int k : taken)
      labels.push_back(
          sub->cohomology()[static_cast<std::size_t>(hidx[static_cast<std::size_t>(k)])].label);
    Matrix M(hdim, hdim);
    for (int c = 0; c < hdim; ++c)
      for (int r = 0; r < hdim; ++r)
        M.at(r, c) = span[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    Display disp;
    disp.labels = std::move(labels);
    disp.to_named = linalg::inverse(M);
    displays_.emplace(
        std::make_pair(static_cast<int>(set.space),
                       std::make_pair(set.block.degree, set.block.weight)),
        std::move(disp));
  }
}

const Contraction& ObstructionTower::quotient() const {
  if (!quotient_) fail(Error::Kind::State, "untagged algebra: no quotient refinement");
  return *quotient_;
}

const Contraction& ObstructionTower::kernel() const {
  if (!kernel_) fail(Error::Kind::State, "untagged algebra: no kernel refinement");
  return *kernel_;
}

StageState ObstructionTower::start(const LieElement& mu) const {
  LieElement r = mc_residual(L_, mu);
  if (!r.is_zero())
    fail(Error::Kind::State,
         "element is not Maurer-Cartan; residual = " + L_.element_str(r));
  StageState s;
  s.stage = 1;
  s.mu = mu;
  return s;
}

LieElement ObstructionTower::leading_term(const StageState& s) const {
  auto minw = L_.min_weight_of(s.mu);
  if (minw && *minw < s.stage)
    fail(Error::Kind::Degree, "representative is not in filtration step " +
                                  std::to_string(s.stage));
  LieElement lead = L_.weight_part(s.mu, s.stage);
  if (!L_.d_apply(lead).is_zero())
    fail(Error::Kind::Internal, "leading term of a Maurer-Cartan element is not d-closed");
  return lead;
}

ClassReport ObstructionTower::render_class(NamedClassSet::Space space, const Contraction& sub,
                                           BlockKey key, const HVec& coords) const {
  std::vector<int> hidx = sub.h_indices(key.degree, key.weight);
  ClassReport rep;
  std::vector<AlgebraElement> local;
  for (int k : hidx) local.push_back(coords[static_cast<std::size_t>(k)]);
  auto it = displays_.find(std::make_pair(static_cast<int>(space),
                                          std::make_pair(key.degree, key.weight)));
  if (it == displays_.end()) {
    for (int k : hidx) rep.basis.push_back(sub.cohomology()[static_cast<std::size_t>(k)].label);
    rep.coords = std::move(local);
    return rep;
  }
  const Display& disp = it->second;
  rep.basis = disp.labels;
  const int n = static_cast<int>(local.size());
  for (int r = 0; r < n; ++r) {
    AlgebraElement acc{Universe{0, 0}};
    for (int c = 0; c < n; ++c) {
      const Rational& m = disp.to_named.at(r, c);
      if (!m.is_zero()) acc += local[static_cast<std::size_t>(c)].scaled(m);
    }
    rep.coords.push_back(std::move(acc));
  }
  return rep;
}

ClassReport ObstructionTower::even_obstruction(const StageState& s) const {
  if (!tagged_) fail(Error::Kind::State, "untagged algebra has no even/odd refinement");
  LieElement lead = leading_term(s);
  auto local = restrict_to_view(quotient_->complex(), lead);
  HVec cls = quotient_->project(local);
  return render_class(NamedClassSet::Space::Quotient, *quotient_, BlockKey{1, s.stage}, cls);
}

StageState ObstructionTower::normalize_even(const StageState& s) const {
  ClassReport cls = even_obstruction(s);
  if (!cls.all_zero())
    fail(Error::Kind::State,
         "normalize_even: projected class does not vanish: " + cls.str());
  LieElement lead = leading_term(s);
  auto local = restrict_to_view(quotient_->complex(), lead);
  auto hq = quotient_->homotopy(local);
  LieElement u = extend_from_view(L_, quotient_->complex(), hq);
  StageState out = s;
  out.normalized_through = s.stage;
  if (!u.is_zero()) {
    out.mu = gauge(L_, u, s.mu);
    out.log.push_back(GaugeLogEntry{s.stage, "normalize-even", u});
    // The gauged leading term must now be kernel-valued.
    LieElement lead2 = L_.weight_part(out.mu, s.stage);
    auto q2 = restrict_to_view(quotient_->complex(), lead2);
    for (const auto& c : q2)
      if (!c.is_zero())
        fail(Error::Kind::Internal, "normalize_even did not clear the quotient part");
  }
  return out;
}

std::optional<ClassReport> ObstructionTower::odd_obstruction(const StageState& s) const {
  if (!tagged_) fail(Error::Kind::State, "untagged algebra has no even/odd refinement");
  if (s.normalized_through < s.stage)
    fail(Error::Kind::State, "odd_obstruction called before even normalization");
  bool absent;
  if (opt_.odd_rank >= 0) {
    absent = 2 * s.stage + 1 > opt_.odd_rank;
  } else {
    absent = true;
    for (const auto& e : kernel_->complex().els)
      if (e.weight == s.stage) {
        absent = false;
        break;
      }
  }
  if (absent) return std::nullopt;
  LieElement lead = leading_term(s);
  auto qpart = restrict_to_view(quotient_->complex(), lead);
  for (const auto& c : qpart)
    if (!c.is_zero())
      fail(Error::Kind::Internal, "odd_obstruction: leading term is not kernel-valued");
  auto local = restrict_to_view(kernel_->complex(), lead);
  HVec cls = kernel_->project(local);
  return render_class(NamedClassSet::Space::Kernel, *kernel_, BlockKey{1, s.stage}, cls);
}

ClassReport ObstructionTower::combined_obstruction(const StageState& s) const {
  LieElement lead = leading_term(s);
  auto local = restrict_to_view(total_.complex(), lead);
  HVec cls = total_.project(local);
  return render_class(NamedClassSet::Space::Total, total_, BlockKey{1, s.stage}, cls);
}

StageState ObstructionTower::advance(const StageState& s) const {
  StageState out = s;
  LieElement lead = leading_term(s);
  if (!lead.is_zero()) {
    LieElement u;
    std::string purpose;
    if (tagged_) {
      auto local = restrict_to_view(kernel_->complex(), lead);
      u = extend_from_view(L_, kernel_->complex(), kernel_->homotopy(local));
      purpose = "advance-odd";
    } else {
      u = homotopy(L_, total_, lead);
      purpose = "advance-combined";
    }
    if (!u.is_zero()) {
      out.mu = gauge(L_, u, s.mu);
      out.log.push_back(GaugeLogEntry{s.stage, purpose, u});
    }
    if (!L_.weight_part(out.mu, s.stage).is_zero())
      fail(Error::Kind::Internal, "advance did not push the representative forward");
  }
  out.stage = s.stage + 1;
  return out;
}

ObstructionReport ObstructionTower::run(const LieElement& mu) const {
  ObstructionReport rep;
  rep.pivot_note = opt_.rule == linalg::PivotRule::FirstNonzero
                       ? "pivot rule: first nonzero, row-major"
                       : "pivot rule: last nonzero, row-major";

  {
    std::vector<int> slice = total_.h_indices(1);
    std::vector<std::string> names;
    for (std::size_t k = 0; k < slice.size(); ++k) {
      const auto& label = total_.cohomology()[static_cast<std::size_t>(slice[k])].label;
      auto it = opt_.slice_param_names.find(label);
      names.push_back(it == opt_.slice_param_names.end() ? std::string() : it->second);
    }
    rep.kuranishi = kuranishi_system(L_, total_, slice, names);
  }

  StageState s = start(mu);
  const int N = L_.top_weight();
  bool blocked = false;
  for (int j = 1; j <= N && !blocked; ++j) {
    s.stage = j;
    rep.leading_terms.emplace_back(j, leading_term(s));
    StageReport stage;
    stage.stage = j;
    if (tagged_) {
      stage.even = even_obstruction(s);
      if (!stage.even->all_zero()) {
        rep.verdict = Verdict{VerdictKind::BlockedEven, j};
        blocked = true;
        rep.stages.push_back(std::move(stage));
        break;
      }
      s = normalize_even(s);
      stage.odd = odd_obstruction(s);
      if (stage.odd && !stage.odd->all_zero()) {
        rep.verdict = Verdict{VerdictKind::BlockedOdd, j};
        blocked = true;
        rep.stages.push_back(std::move(stage));
        break;
      }
    } else {
      stage.combined = combined_obstruction(s);
      if (!stage.combined->all_zero()) {
        rep.verdict = Verdict{VerdictKind::BlockedCombined, j};
        blocked = true;
        rep.stages.push_back(std::move(stage));
        break;
      }
    }
    rep.stages.push_back(std::move(stage));
    s = advance(s);
  }
  if (!blocked) {
    if (!s.mu.is_zero())
      fail(Error::Kind::Internal, "terminal representative is nonzero past the top weight");
    rep.verdict = Verdict{VerdictKind::Split, 0};
  }
  rep.gauge_log = s.log;
  return rep;
}

namespace {

ordered_json class_json(const ClassReport& c) {
  ordered_json j;
  j["basis"] = c.basis;
  ordered_json coords = ordered_json::array();
  for (const auto& v : c.coords) coords.push_back(v.str());
  j["coords"] = std::move(coords);
  return j;
}

}  // namespace

std::string ObstructionReport::to_json_string(const FiltDGLA& L) const {
  ordered_json j;
  j["stages"] = ordered_json::array();
  for (const auto& st : stages) {
    ordered_json s;
    s["j"] = st.stage;
    if (st.even)
      s["even"] = class_json(*st.even);
    if (st.odd)
      s["odd"] = class_json(*st.odd);
    else if (st.even)
      s["odd"] = nullptr;
    if (st.combined) s["combined"] = class_json(*st.combined);
    j["stages"].push_back(std::move(s));
  }
  j["verdict"] = verdict.str();
  j["gauge_log"] = ordered_json::array();
  for (const auto& g : gauge_log) {
    ordered_json e;
    e["stage"] = g.stage;
    e["purpose"] = g.purpose;
    ordered_json coords = ordered_json::array();
    for (std::size_t i = 0; i < g.u.coords.size(); ++i) {
      if (g.u.coords[i].is_zero()) continue;
      coords.push_back(ordered_json::array({L.el(static_cast<int>(i)).label,
                                            g.u.coords[i].str()}));
    }
    e["element"] = std::move(coords);
    j["gauge_log"].push_back(std::move(e));
  }
  j["pivot"] = pivot_note;
  j["kuranishi"] = ordered_json::parse(kuranishi.to_json_string());
  return j.dump(2);
}

std::string ObstructionReport::str(const FiltDGLA& L) const {
  std::ostringstream os;
  for (const auto& st : stages) {
    os << "stage " << st.stage << ":\n";
    if (st.even) os << "  even class: " << st.even->str() << "\n";
    if (st.odd)
      os << "  odd class:  " << st.odd->str() << "\n";
    else if (st.even && st.even->all_zero())
      os << "  odd class:  ABSENT\n";
    if (st.combined) os << "  combined class: " << st.combined->str() << "\n";
  }
  os << "verdict: " << verdict.str() << "\n";
  if (!gauge_log.empty()) {
    os << "gauge log:\n";
    for (const auto& g : gauge_log)
      os << "  stage " << g.stage << " " << g.purpose << ": " << L.element_str(g.u) << "\n";
  }
  os << "kuranishi system:\n" << kuranishi.str();
  os << "(" << pivot_note << ")\n";
  return os.str();
}

}  // namespace supersplit
