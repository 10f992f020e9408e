#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ramond/algebra.hpp"
#include "ramond/induced.hpp"
#include "ramond/normal_form.hpp"
#include "ramond/verify.hpp"

using namespace ramond;
using nlohmann::ordered_json;

namespace {

struct ModuleOptions {
  std::string module_name = "whittaker";
  std::string phi_text;
  int s = 2;
};

std::map<long, Rational> parse_phi(const std::string& text) {
  std::map<long, Rational> phi;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || item.empty() || item[0] != 'L')
      throw CLI::ValidationError("--phi expects L<m>=<rational>[,...], got: " + item);
    phi[std::stol(item.substr(1, eq - 1))] = parse_rational(item.substr(eq + 1));
  }
  return phi;
}

std::unique_ptr<BModule> make_module(const ModuleOptions& opt) {
  if (opt.module_name == "solvable") return std::make_unique<SolvableModule>();
  const auto phi = parse_phi(opt.phi_text);
  if (opt.module_name == "whittaker") {
    for (const auto& [m, v] : phi)
      if (m > 2 && v != 0)
        return std::make_unique<WhittakerModule>(WhittakerModule::unchecked(phi));
    auto at = [&](long m) { auto it = phi.find(m); return it == phi.end() ? Rational(0) : it->second; };
    return std::make_unique<WhittakerModule>(at(1), at(2));
  }
  if (opt.module_name == "highorder") return std::make_unique<HighOrderModule>(opt.s, phi);
  throw CLI::ValidationError("unknown --module: " + opt.module_name);
}

std::optional<Rational> parse_c_value(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_rational(text);
}

InducedElement eval_c(const InducedElement& w, const std::optional<Rational>& c_value) {
  if (!c_value) return w;
  InducedElement out;
  for (const auto& [key, s] : w.terms()) out.add(key, ScalarPoly(s.eval(*c_value)));
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(out_path);
    f << text << "\n";
  }
}

ordered_json svector_json(const SVector& sv) {
  ordered_json arr = ordered_json::array();
  for (int pos = 1; pos <= sv.max_pos(); ++pos) arr.push_back(sv.value(pos));
  if (arr.empty()) arr.push_back(0);
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic calculator for the N=1 Ramond superalgebra and its induced restricted modules"};
  app.set_config("--config");
  app.require_subcommand(1);
  app.fallthrough();  // let global flags (--seed, --out, --c-value) follow the subcommand

  std::string out_path;
  std::string c_text;
  unsigned seed = 0;
  app.add_option("--out", out_path, "Write the report to this path instead of stdout");
  app.add_option("--c-value", c_text, "Evaluate the symbolic central charge c at p/q");
  app.add_option("--seed", seed, "Seed for randomized suites");

  // bracket
  auto* cmd_bracket = app.add_subcommand("bracket", "Bracket of two generators");
  std::string algebra = "ramond", gen_a, gen_b;
  cmd_bracket->add_option("--algebra", algebra, "ramond or neveu-schwarz")->capture_default_str();
  cmd_bracket->add_option("--a", gen_a, "First generator, e.g. L(2)")->required();
  cmd_bracket->add_option("--b", gen_b, "Second generator, e.g. G(-1)")->required();

  // normal-form
  auto* cmd_nf = app.add_subcommand("normal-form", "PBW normal form of a word");
  std::string word_text, coeff_text = "1";
  cmd_nf->add_option("--word", word_text, "Word, e.g. \"G(0) G(0)\"")->required();
  cmd_nf->add_option("--coeff", coeff_text, "Scalar coefficient")->capture_default_str();

  ModuleOptions mod;
  auto add_module_flags = [&](CLI::App* cmd) {
    cmd->add_option("--module", mod.module_name, "whittaker, highorder, or solvable")
        ->capture_default_str();
    cmd->add_option("--phi", mod.phi_text, "Character values, e.g. L1=0,L2=1");
    cmd->add_option("--s", mod.s, "High-order parameter s")->capture_default_str();
  };

  // act
  auto* cmd_act = app.add_subcommand("act", "Apply a generator to an induced element");
  std::string gen_text, element_text;
  add_module_flags(cmd_act);
  cmd_act->add_option("--g", gen_text, "Generator to apply")->required();
  cmd_act->add_option("--element", element_text, "Induced element literal")->required();

  // probe
  auto* cmd_probe = app.add_subcommand("probe", "Simplicity probe (Theorem 3.4 loop)");
  int r = 2;
  add_module_flags(cmd_probe);
  cmd_probe->add_option("--r", r, "Hypothesis parameter r")->capture_default_str();
  cmd_probe->add_option("--element", element_text, "Induced element literal")->required();

  // annihilator
  auto* cmd_ann = app.add_subcommand("annihilator", "Annihilator space M_b on a truncation");
  int b = 2, window = 6, label_cap = 3;
  long weight_cap = 5;
  add_module_flags(cmd_ann);
  cmd_ann->add_option("--b", b, "Annihilation threshold b")->capture_default_str();
  cmd_ann->add_option("--weight-cap", weight_cap, "Slice weight cap")->capture_default_str();
  cmd_ann->add_option("--window", window, "Constraint index window")->capture_default_str();
  cmd_ann->add_option("--label-cap", label_cap, "Label truncation cap")->capture_default_str();

  // suite
  auto* cmd_suite = app.add_subcommand("suite", "Run a named verification suite");
  std::string suite_name;
  long index_bound = 6;
  int t_param = 2, trials = 50;
  long suite_weight_cap = 5;
  add_module_flags(cmd_suite);
  cmd_suite->add_option("name", suite_name,
                        "jacobi | lemma31 | lemma32_33 | theorem34 | theorem42 | ns-embedding")
      ->required();
  cmd_suite->add_option("--algebra", algebra, "Algebra for the jacobi suite")->capture_default_str();
  cmd_suite->add_option("--bound", index_bound, "Index bound / window")->capture_default_str();
  cmd_suite->add_option("--t", t_param, "Lemma 3.1 parameter t")->capture_default_str();
  cmd_suite->add_option("--r", r, "Hypothesis parameter r")->capture_default_str();
  cmd_suite->add_option("--b", b, "Theorem 4.2 parameter b")->capture_default_str();
  cmd_suite->add_option("--trials", trials, "Random trials")->capture_default_str();
  cmd_suite->add_option("--weight-cap", suite_weight_cap, "Weight cap")->capture_default_str();
  cmd_suite->add_option("--window", window, "Index window")->capture_default_str();
  cmd_suite->add_option("--label-cap", label_cap, "Label truncation cap")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    const auto c_value = parse_c_value(c_text);
    if (cmd_bracket->parsed()) {
      const AlgebraSpec alg =
          algebra == "ramond" ? AlgebraSpec::ramond() : AlgebraSpec::neveu_schwarz();
      const LinearCombo lc = alg.bracket(parse_generator(gen_a), parse_generator(gen_b));
      emit(format_linear_combo(lc), out_path);
      return 0;
    }
    if (cmd_nf->parsed()) {
      NormalElement ne = normal_order(parse_word(word_text), parse_scalar_poly(coeff_text));
      if (c_value) {
        NormalElement evaluated;
        for (const auto& [key, s] : ne.terms())
          evaluated.add(key, ScalarPoly(s.eval(*c_value)));
        ne = evaluated;
      }
      emit(format_normal_element(ne), out_path);
      return 0;
    }
    if (cmd_act->parsed()) {
      const auto module = make_module(mod);
      const InducedElement w = parse_induced(element_text, *module);
      const InducedElement img =
          eval_c(induced_act(parse_generator(gen_text), w, *module), c_value);
      emit(format_induced(img, *module), out_path);
      return 0;
    }
    if (cmd_probe->parsed()) {
      const auto module = make_module(mod);
      const InducedElement w = parse_induced(element_text, *module);
      const ProbeTrace trace = simplicity_probe(w, r, *module);
      ordered_json j;
      j["module"] = module->name();
      j["r"] = r;
      j["element"] = format_induced(w, *module);
      j["steps"] = ordered_json::array();
      for (const auto& step : trace.steps) {
        ordered_json js;
        js["op"] = format_generator(step.applied);
        js["deg_after"] = svector_json(step.deg_after);
        j["steps"].push_back(js);
      }
      j["terminal"] = format_induced(eval_c(trace.terminal, c_value), *module);
      j["falsified"] = trace.falsified;
      if (trace.falsified) j["falsified_detail"] = trace.falsified_detail;
      emit(j.dump(2), out_path);
      return trace.falsified ? 1 : 0;
    }
    if (cmd_ann->parsed()) {
      const auto module = make_module(mod);
      const auto basis = annihilator_space(*module, b, weight_cap, window, label_cap);
      ordered_json j;
      j["module"] = module->name();
      j["b"] = b;
      j["weight_cap"] = weight_cap;
      j["window"] = window;
      j["label_cap"] = label_cap;
      j["dimension"] = basis.size();
      j["basis"] = ordered_json::array();
      for (const auto& vec : basis) j["basis"].push_back(format_induced(vec, *module));
      emit(j.dump(2), out_path);
      return 0;
    }
    // suite
    Report report;
    if (suite_name == "jacobi") {
      const AlgebraSpec alg =
          algebra == "ramond" ? AlgebraSpec::ramond() : AlgebraSpec::neveu_schwarz();
      report = suite_jacobi(alg, index_bound);
    } else if (suite_name == "lemma31") {
      report = suite_lemma31(*make_module(mod), t_param, window, label_cap);
    } else if (suite_name == "lemma32_33") {
      report = suite_lemma32_33(*make_module(mod), r, suite_weight_cap, label_cap);
    } else if (suite_name == "theorem34") {
      report = suite_theorem34(*make_module(mod), r, trials, suite_weight_cap, seed, label_cap);
    } else if (suite_name == "theorem42") {
      report = suite_theorem42(*make_module(mod), b, suite_weight_cap, window, label_cap);
    } else if (suite_name == "ns-embedding") {
      report = search_ns_embedding(index_bound);
    } else {
      std::cerr << "unknown suite: " << suite_name << "\n";
      return 2;
    }
    emit(report.to_json(), out_path);
    std::cerr << report.summary() << "\n";
    return report.passed() ? 0 : 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
