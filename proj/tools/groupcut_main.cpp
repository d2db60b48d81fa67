#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "groupcut/corpus.hpp"
#include "groupcut/gridoracle.hpp"
#include "groupcut/json_io.hpp"
#include "groupcut/svg.hpp"

namespace {

using namespace groupcut;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::string builtin;
  std::string f_str, s_str;
  std::string input_path;
  std::string json_path;
  std::string svg_path;
  std::string what = "function";
  long budget = 0;
  long oversample = 4;
  int count = 100;
  unsigned seed = 1;
};

PwlFunction load_function(const Options& o) {
  if (!o.builtin.empty() && !o.input_path.empty())
    throw std::invalid_argument("use exactly one of --builtin and --input");
  if (!o.builtin.empty()) {
    std::vector<Rat> params;
    if (!o.f_str.empty()) params.push_back(Rat::parse(o.f_str));
    if (!o.s_str.empty()) params.push_back(Rat::parse(o.s_str));
    return make_builtin(o.builtin, params);
  }
  if (o.input_path.empty()) throw std::invalid_argument("need --builtin NAME or --input FILE");
  std::ifstream in(o.input_path);
  if (!in) throw std::invalid_argument("cannot open " + o.input_path);
  Json j = Json::parse(in);
  return function_from_json(j);
}

void write_or_print(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << payload;
}

void emit_json(const Options& o, const Json& j) { write_or_print(o.json_path, j.dump(2)); }

bool audit_log_enabled() {
  const char* v = std::getenv("GROUPCUT_LOG");
  return v && *v;
}

void print_audit(const ClosureResult& cr) {
  if (!audit_log_enabled()) return;
  for (const auto& s : cr.steps) std::cerr << "[closure] " << s << "\n";
}

int cmd_minimality(const Options& o) {
  PwlFunction fn = load_function(o);
  MinimalityReport rep = check_minimality(fn);
  emit_json(o, minimality_to_json(rep));
  return kExitOk;
}

int cmd_closure(const Options& o) {
  PwlFunction fn = load_function(o);
  ClosureResult cr = moves_closure(initial_ensemble(fn), ClosureOptions{o.budget, false});
  print_audit(cr);
  if (cr.budget_exhausted) {
    std::cerr << "closure budget exhausted\n";
    return kExitBudget;
  }
  emit_json(o, presentation_to_json(cr.presentation));
  if (!o.svg_path.empty()) write_or_print(o.svg_path, svg_closure(cr.presentation));
  return kExitOk;
}

int cmd_extremality(const Options& o) {
  PwlFunction fn = load_function(o);
  ExtremalityReport rep = extremality_test(fn, ClosureOptions{o.budget, false});
  if (rep.closure) print_audit(*rep.closure);
  emit_json(o, report_to_json(rep));
  if (!o.svg_path.empty())
    write_or_print(o.svg_path, svg_function(fn, rep.witness ? &*rep.witness : nullptr));
  if (rep.closure && rep.closure->budget_exhausted) return kExitBudget;
  return kExitOk;
}

int cmd_perturbations(const Options& o) {
  PwlFunction fn = load_function(o);
  ExtremalityReport rep = extremality_test(fn, ClosureOptions{o.budget, false});
  if (rep.closure && rep.closure->budget_exhausted) return kExitBudget;
  Json j;
  j["verdict"] = to_string(rep.verdict);
  if (!rep.reason.empty()) j["reason"] = rep.reason;
  Json basis = Json::array();
  if (rep.space) {
    for (const auto& b : rep.space->finite_basis) {
      Json e;
      e["function"] = curve_to_json(b.curve());
      e["epsilon"] = epsilon_for(fn, b).eps.str();
      basis.push_back(std::move(e));
    }
  }
  j["finite_basis"] = std::move(basis);
  Json samples = Json::array();
  if (rep.verdict != Verdict::Unsupported) {
    for (const auto& comp : rep.components) {
      PerturbationFn s = equivariant_sample(comp, Rat(1));
      Json e;
      e["function"] = curve_to_json(s.curve());
      e["epsilon"] = epsilon_for(fn, s).eps.str();
      samples.push_back(std::move(e));
    }
  }
  j["equivariant_samples"] = std::move(samples);
  emit_json(o, j);
  return kExitOk;
}

int cmd_grid_check(const Options& o) {
  PwlFunction fn = load_function(o);
  GridVerdict v = grid_extremality_oracle(fn, o.oversample);
  Json j;
  j["verdict"] = v == GridVerdict::Extreme ? "extreme" : "not_extreme";
  j["oversample"] = o.oversample;
  emit_json(o, j);
  return kExitOk;
}

int cmd_plot(const Options& o) {
  PwlFunction fn = load_function(o);
  std::string payload;
  if (o.what == "function") {
    payload = svg_function(fn);
  } else if (o.what == "complex") {
    payload = svg_complex(fn);
  } else if (o.what == "closure") {
    ClosureResult cr = moves_closure(initial_ensemble(fn), ClosureOptions{o.budget, false});
    print_audit(cr);
    if (cr.budget_exhausted) return kExitBudget;
    payload = svg_closure(cr.presentation);
  } else {
    throw std::invalid_argument("--what must be function, complex, or closure");
  }
  write_or_print(o.svg_path.empty() ? o.json_path : o.svg_path, payload);
  return kExitOk;
}

int cmd_corpus(const Options& o) {
  CorpusOptions co;
  co.seed = o.seed;
  co.count = o.count;
  auto corpus = random_minimal_corpus(co);
  Json results = Json::array();
  int disagreements = 0;
  for (const auto& fn : corpus) {
    ExtremalityReport rep = extremality_test(fn, ClosureOptions{o.budget, false});
    GridVerdict gv = grid_extremality_oracle(fn, o.oversample);
    bool engine_extreme = rep.verdict == Verdict::Extreme;
    bool oracle_extreme = gv == GridVerdict::Extreme;
    if (engine_extreme != oracle_extreme) ++disagreements;
    Json e;
    e["function"] = function_to_json(fn);
    e["engine"] = to_string(rep.verdict);
    e["oracle"] = oracle_extreme ? "extreme" : "not_extreme";
    results.push_back(std::move(e));
  }
  Json j;
  j["count"] = corpus.size();
  j["disagreements"] = disagreements;
  j["results"] = std::move(results);
  emit_json(o, j);
  return disagreements == 0 ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid-free analysis of cut-generating functions: minimality, move closures, "
               "perturbation spaces, extremality"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--builtin", o.builtin, "catalog function name");
    sub->add_option("--f", o.f_str, "parameter f as p/q");
    sub->add_option("--s", o.s_str, "second parameter as p/q");
    sub->add_option("--input", o.input_path, "function JSON file");
    sub->add_option("--budget", o.budget, "closure round budget (0 = automatic)");
    sub->add_option("--json", o.json_path, "output JSON path (default stdout)");
    sub->add_option("--svg", o.svg_path, "output SVG path");
  };

  auto* c_min = app.add_subcommand("minimality", "test the minimality system");
  add_common(c_min);
  auto* c_clo = app.add_subcommand("closure", "compute the reduced moves closure");
  add_common(c_clo);
  auto* c_ext = app.add_subcommand("extremality", "decide extremality");
  add_common(c_ext);
  auto* c_per = app.add_subcommand("perturbations", "emit the perturbation space");
  add_common(c_per);
  auto* c_grid = app.add_subcommand("grid-check", "finite group oracle");
  add_common(c_grid);
  c_grid->add_option("--oversample", o.oversample, "grid refinement factor");
  auto* c_plot = app.add_subcommand("plot", "emit SVG diagrams");
  add_common(c_plot);
  c_plot->add_option("--what", o.what, "function | complex | closure");
  auto* c_cor = app.add_subcommand("corpus", "random corpus agreement run");
  add_common(c_cor);
  c_cor->add_option("--count", o.count, "number of corpus functions");
  c_cor->add_option("--seed", o.seed, "corpus generation seed");
  c_cor->add_option("--oversample", o.oversample, "oracle grid refinement factor");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_min->parsed()) return cmd_minimality(o);
    if (c_clo->parsed()) return cmd_closure(o);
    if (c_ext->parsed()) return cmd_extremality(o);
    if (c_per->parsed()) return cmd_perturbations(o);
    if (c_grid->parsed()) return cmd_grid_check(o);
    if (c_plot->parsed()) return cmd_plot(o);
    if (c_cor->parsed()) return cmd_corpus(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Json::exception& e) {
    std::cerr << "input error: malformed JSON: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
