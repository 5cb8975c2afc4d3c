// Command-line surface for the splitting-obstruction engine: model
// validation, obstruction towers, Kuranishi systems, and the built-in
// verification blocks.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "supersplit/hessian.hpp"
#include "supersplit/models.hpp"
#include "supersplit/verify.hpp"

namespace {

using namespace supersplit;
using nlohmann::ordered_json;

// Exit-code contract: 0 pass, 1 assertion/verdict failure, 2 I/O,
// 3 non-Maurer-Cartan input, 4 usage.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitIo = 2;
constexpr int kExitNonMc = 3;
constexpr int kExitUsage = 4;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case Error::Kind::Io: return kExitIo;
    case Error::Kind::State: return kExitNonMc;
    case Error::Kind::Usage: return kExitUsage;
    case Error::Kind::Schema: return kExitIo;
    default: return kExitFail;
  }
}

Model resolve_model(const std::string& spec) {
  const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0) {
    std::string name = spec.substr(prefix.size());
    auto m = builtin_model(name);
    if (!m) fail(Error::Kind::Usage, "unknown builtin model: " + name);
    return std::move(*m);
  }
  return load_model_file(spec);
}

std::vector<std::pair<std::string, AlgebraElement>> read_mu_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Error::Kind::Io, "cannot open mu file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  ordered_json j;
  try {
    j = ordered_json::parse(ss.str());
  } catch (const std::exception& e) {
    fail(Error::Kind::Schema, path + ": " + e.what());
  }
  if (!j.is_array()) fail(Error::Kind::Schema, path + ": mu file must be a JSON array");
  std::vector<std::pair<std::string, AlgebraElement>> entries;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      fail(Error::Kind::Schema, path + ": each entry must be [label, polynomial]");
    entries.emplace_back(e[0].get<std::string>(),
                         AlgebraElement::parse_poly(e[1].get<std::string>()));
  }
  return entries;
}

ordered_json hessian_json(const HessianElement& h) {
  ordered_json j;
  auto tensor_json = [](const TensorElement& t) {
    ordered_json arr = ordered_json::array();
    for (const auto& [key, c] : t.terms()) {
      ordered_json e;
      e["coeff"] = c.str();
      e["left"] = key.first.str();
      e["right"] = key.second.str();
      arr.push_back(std::move(e));
    }
    return arr;
  };
  j["even"] = ordered_json::array();
  for (std::size_t a = 0; a < h.even.size(); ++a) {
    if (h.even[a].is_zero()) continue;
    ordered_json e;
    e["dir"] = "v" + std::to_string(a + 1);
    e["tensor"] = tensor_json(h.even[a]);
    j["even"].push_back(std::move(e));
  }
  j["odd"] = ordered_json::array();
  for (std::size_t g = 0; g < h.odd.size(); ++g) {
    if (h.odd[g].is_zero()) continue;
    ordered_json e;
    e["dual"] = "e^" + std::to_string(g + 1);
    e["tensor"] = tensor_json(h.odd[g]);
    j["odd"].push_back(std::move(e));
  }
  return j;
}

int cmd_validate(const std::string& model_spec, bool as_json) {
  Model model = resolve_model(model_spec);
  ValidationReport rep = model.algebra.validate();
  if (as_json) {
    ordered_json j;
    j["model"] = model.name;
    j["axioms"] = ordered_json::array();
    for (const auto& a : rep.axioms) {
      ordered_json e;
      e["name"] = a.name;
      e["pass"] = a.pass;
      if (!a.pass) e["witness"] = a.witness;
      j["axioms"].push_back(std::move(e));
    }
    j["pass"] = rep.all_pass();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "model: " << model.name << "\n" << rep.str();
    std::cout << (rep.all_pass() ? "all axioms pass\n" : "axiom failure\n");
  }
  return rep.all_pass() ? kExitPass : kExitFail;
}

int cmd_tower(const std::string& model_spec, const std::string& mu_path, bool as_json,
              bool with_hessians) {
  Model model = resolve_model(model_spec);
  LieElement mu = model.algebra.zero_element();
  if (!mu_path.empty()) mu = model.make_element(read_mu_file(mu_path));
  ObstructionTower tower(model.algebra, model.tower_options());
  ObstructionReport rep = tower.run(mu);
  model.apply_display_names(rep.kuranishi);

  ordered_json hess_attach = ordered_json::array();
  if (with_hessians && model.uni) {
    // Pure odd Hessian symbols of the per-stage leading terms.
    for (const auto& [j, lead] : rep.leading_terms) {
      if (lead.is_zero()) continue;
      ordered_json e;
      e["j"] = j;
      e["hessian"] = hessian_json(hess(model.realize(lead), j));
      hess_attach.push_back(std::move(e));
    }
  }

  if (as_json) {
    ordered_json j = ordered_json::parse(rep.to_json_string(model.algebra));
    if (with_hessians) j["hessian_symbols"] = std::move(hess_attach);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rep.str(model.algebra);
    if (with_hessians && !hess_attach.empty())
      std::cout << "hessian symbols: " << hess_attach.dump() << "\n";
  }
  return kExitPass;
}

int cmd_kuranishi(const std::string& model_spec, const std::vector<std::string>& slice,
                  bool as_json) {
  Model model = resolve_model(model_spec);
  ObstructionTower tower(model.algebra, model.tower_options());
  const Contraction& C = tower.total();

  std::vector<int> hslice;
  std::vector<std::string> names;
  if (slice.empty()) {
    hslice = C.h_indices(1);
    for (int h : hslice) {
      const std::string& label = C.cohomology()[static_cast<std::size_t>(h)].label;
      auto it = model.slice_param_names.find(model.display_label(label));
      names.push_back(it == model.slice_param_names.end() ? std::string() : it->second);
    }
  } else {
    for (const auto& label : slice) {
      auto combo = model.resolve_label(label);  // throws Usage on unknown label
      if (combo.size() != 1 || !(combo.front().second == Rational(1)))
        fail(Error::Kind::Usage, "slice label must name a single basis class: " + label);
      auto h = C.h_index_of(model.algebra.el(combo.front().first).label);
      if (!h) fail(Error::Kind::Usage, "label is not a cohomology class: " + label);
      hslice.push_back(*h);
      auto it = model.slice_param_names.find(label);
      names.push_back(it == model.slice_param_names.end() ? std::string() : it->second);
    }
  }
  KuranishiSystem K = kuranishi_system(model.algebra, C, hslice, names);
  model.apply_display_names(K);
  if (as_json)
    std::cout << K.to_json_string() << "\n";
  else
    std::cout << K.str();
  return kExitPass;
}

int cmd_verify(const std::string& name, std::uint64_t seed, int max_dim) {
  verify::Options opt;
  opt.seed = seed;
  opt.max_dim = max_dim;
  verify::BlockResult res = verify::run_block(name, opt);
  for (const auto& line : res.lines) {
    std::cout << (line.pass ? "pass" : "FAIL") << "  " << line.name;
    if (!line.pass && !line.detail.empty()) std::cout << "  [" << line.detail << "]";
    std::cout << "\n";
  }
  std::cout << res.block << ": " << (res.pass() ? "OK" : "FAILED") << " ("
            << res.seconds << " s)\n";
  return res.pass() ? kExitPass : kExitFail;
}

int cmd_export_model(const std::string& model_spec, const std::string& out_path) {
  Model model = resolve_model(model_spec);
  std::string text = export_model_json(model.spec);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) fail(Error::Kind::Io, "cannot write: " + out_path);
    out << text;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supersplit: splitting obstruction towers and Kuranishi systems "
               "for split models of complex supermanifolds"};
  app.set_version_flag("--version", "supersplit 0.1.0");
  app.require_subcommand(1);

  std::string model_spec;
  std::string mu_path;
  std::string out_path;
  std::string verify_name;
  std::vector<std::string> slice;
  bool as_json = false;
  bool with_hessians = false;
  std::uint64_t seed = 1;
  int max_dim = 12;

  auto* validate = app.add_subcommand("validate", "check the dg Lie axioms of a model");
  validate->add_option("--model", model_spec, "model path or builtin:NAME")->required();
  validate->add_flag("--json", as_json, "JSON output");

  auto* tower = app.add_subcommand("tower", "run the staged obstruction tower");
  tower->add_option("--model", model_spec, "model path or builtin:NAME")->required();
  tower->add_option("--mu", mu_path, "JSON file with [label, polynomial] pairs");
  tower->add_flag("--json", as_json, "JSON output");
  tower->add_flag("--atiyah", with_hessians, "attach pure odd Hessian symbols");

  auto* kuranishi = app.add_subcommand("kuranishi", "emit the Kuranishi polynomial system");
  kuranishi->add_option("--model", model_spec, "model path or builtin:NAME")->required();
  kuranishi->add_option("--slice", slice, "degree-1 class labels (default: full slice)");
  kuranishi->add_flag("--json", as_json, "JSON output");

  auto* verify = app.add_subcommand("verify", "run a named verification block");
  verify->add_option("name", verify_name, "block name")->required();
  verify->add_option("--seed", seed, "seed for synthetic corpora");
  verify->add_option("--max-dim", max_dim, "synthetic dimension cap");

  auto* exportm = app.add_subcommand("export-model", "write a model description file");
  exportm->add_option("--model", model_spec, "model path or builtin:NAME")->required();
  exportm->add_option("--out", out_path, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(model_spec, as_json);
    if (tower->parsed()) return cmd_tower(model_spec, mu_path, as_json, with_hessians);
    if (kuranishi->parsed()) return cmd_kuranishi(model_spec, slice, as_json);
    if (verify->parsed()) return cmd_verify(verify_name, seed, max_dim);
    if (exportm->parsed()) return cmd_export_model(model_spec, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
