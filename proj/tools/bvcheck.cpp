// Command-line front end: check, eval, double, gysin and mutate.

#include "bvkit/dual/double.hpp"
#include "bvkit/equivariant/gysin.hpp"
#include "bvkit/io/instance_file.hpp"
#include "bvkit/io/literal.hpp"
#include "bvkit/io/report.hpp"
#include "bvkit/models/models.hpp"
#include "bvkit/opexpr/parser.hpp"
#include "bvkit/structures/check.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace bvkit;

namespace {

enum Exit { ok = 0, validation = 2, relation = 3, no_expected_failure = 4, usage = 64 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string model;
  std::string field;
  bool allow_char_two = false;
  int window = -1;
  int window3 = -1;
  unsigned threads = 1;
  std::string out;
  bool json = false;
  std::string suite = "all";
  std::string expr;
  std::string input;
  std::string save;
  std::string mutation;
};

Instance resolve_model(const Options& o) {
  std::optional<Field> field;
  if (!o.field.empty()) {
    try {
      field = Field::parse(o.field, o.allow_char_two);
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }
  }
  if (auto inst = builtin_model(o.model, field.value_or(Field::rationals()))) return *inst;
  if (std::filesystem::exists(o.model)) {
    Instance inst = load_instance(o.model, o.allow_char_two);
    if (field && !(*field == inst.field)) inst = inst.over_field(*field);
    return inst;
  }
  throw UsageError("'" + o.model + "' is neither a built-in model (sphere:N, sphere-frob:N, trivial, exterior, " +
                   "three-dim) nor an instance file");
}

Window window_for(const Instance& inst, const Options& o) {
  if (o.window < 0 && o.window3 < 0) return default_window(inst);
  if (inst.basis.is_finite()) return {o.window, o.window3 < 0 ? o.window : o.window3};
  const int k = o.window < 0 ? 4 : o.window;
  return {k, o.window3 < 0 ? std::min(k, 3) : o.window3};
}

std::vector<ReportSection> run_suites(const Instance& inst, const std::string& suite, const Window& w,
                                      unsigned threads) {
  std::vector<ReportSection> out;
  auto add = [&](const std::string& title, const std::vector<RelationId>& ids) {
    out.push_back({title, check_structure(inst, ids, w, threads)});
  };
  if (suite == "bvui") {
    add("suite bvui", bvui_full());
  } else if (suite == "frobenius") {
    add("suite frobenius", frobenius_full());
  } else if (suite == "consequences") {
    add("consequences", consequence_suite());
  } else if (suite == "nine") {
    add("nine-term", {RelationId::NineTerm});
  } else if (suite == "all") {
    add(inst.has_counit() ? "suite frobenius" : "suite bvui", inst.has_counit() ? frobenius_full() : bvui_full());
    add("consequences", consequence_suite());
    if (!applicability_problem(builtin_relation(RelationId::NineTerm), inst)) add("nine-term", {RelationId::NineTerm});
  } else if (auto id = relation_from_name(suite)) {
    add("relation " + suite, {*id});
  } else {
    throw UsageError("unknown suite '" + suite + "' (bvui, frobenius, consequences, nine, all or a relation name)");
  }
  return out;
}

int emit(const ReportDocument& doc, const Options& o) {
  std::cout << (o.json ? render_json(doc) : render_text(doc));
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << render_json(doc);
  }
  // Skipped checks are reported but do not decide the exit code, unless
  // nothing ran at all: a run with no executed check certifies nothing.
  const Tally t = tally(doc);
  return t.fail == 0 && t.pass > 0 ? ok : relation;
}

ReportDocument document(const std::string& command, const Instance& inst, const Window& w) {
  return {command, inst.name, inst.field.to_string(), w.describe(), {}, {}};
}

int cmd_check(const Options& o) {
  Instance inst = resolve_model(o);
  Window w = window_for(inst, o);
  ReportDocument doc = document("check", inst, w);
  doc.sections = run_suites(inst, o.suite, w, o.threads);
  return emit(doc, o);
}

int cmd_eval(const Options& o) {
  Instance inst = resolve_model(o);
  Context ctx(inst);
  GradedMap f = resolve(parse_expr(o.expr), ctx);
  Element x = parse_element(o.input, inst.basis, f.source_arity(), inst.field);
  Element y = reduce_into(f(x), inst.field);
  if (o.json) {
    std::cout << "{\"expr\": \"" << print(parse_expr(o.expr)) << "\", \"degree\": " << f.degree()
              << ", \"result\": \"" << y.to_string() << "\"}\n";
  } else {
    std::cout << y.to_string() << "\n";
  }
  return ok;
}

int cmd_double(const Options& o) {
  Instance inst = resolve_model(o);
  Instance d = build_double(inst);
  if (!o.save.empty()) save_instance(d, o.save);
  Window w = window_for(d, o);
  ReportDocument doc = document("double", d, w);
  doc.sections.push_back({"suite frobenius", check_structure(d, frobenius_full(), w, o.threads)});
  if (!o.save.empty()) doc.notes.push_back("double written to " + o.save);
  return emit(doc, o);
}

int cmd_gysin(const Options& o) {
  Instance inst = resolve_model(o);
  Window w = window_for(inst, o);
  if (!inst.gysin) inst = with_gysin(inst, canonical_gysin(inst, w), w);
  ReportDocument doc = document("gysin", inst, w);
  doc.sections.push_back({"gysin axioms", validate_gysin(inst, *inst.gysin, w)});
  std::vector<CheckReport> lie = check_lie_bialgebra(inst, w, o.threads);
  std::vector<CheckReport> transported = check_transported_relations(inst, w, o.threads);
  if (lie[0].status != transported[0].status) {
    doc.notes.push_back("the Jacobi relation for the string bracket and the transported 7-term relation disagree: " +
                        std::string(to_string(lie[0].status)) + " vs " + to_string(transported[0].status));
  }
  doc.sections.push_back({"lie bialgebra", std::move(lie)});
  doc.sections.push_back({"transported relations", std::move(transported)});
  return emit(doc, o);
}

int cmd_mutate(const Options& o) {
  Instance inst = mutate(resolve_model(o), o.mutation);
  Window w = window_for(inst, o);
  ReportDocument doc = document("mutate " + o.mutation, inst, w);
  doc.sections = run_suites(inst, o.suite, w, o.threads);
  std::cout << (o.json ? render_json(doc) : render_text(doc));
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    f << render_json(doc);
  }
  if (tally(doc).fail > 0) {
    if (!o.json) std::cout << "expected failure observed\n";
    return ok;
  }
  std::cerr << "mutation '" << o.mutation << "' did not make any relation fail\n";
  return no_expected_failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checker for BV bialgebra and Frobenius structures"};
  app.require_subcommand(1);
  Options o;
  auto common = [&o](CLI::App* sub, bool model = true) {
    if (model) sub->add_option("model", o.model, "sphere:N, sphere-frob:N, trivial, exterior, three-dim or a file")->required();
    sub->add_option("--field", o.field, "Q or Fp:p");
    sub->add_flag("--diagnostic-char-two", o.allow_char_two, "permit Fp:2, which erases all signs");
    sub->add_option("--window", o.window, "largest basis index per input slot");
    sub->add_option("--window3", o.window3, "largest basis index for relations with three or more inputs");
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--out", o.out, "also write the JSON report to this path");
    sub->add_flag("--json", o.json, "print the JSON report instead of text");
  };

  auto* check = app.add_subcommand("check", "run a relation suite");
  common(check);
  check->add_option("--suite", o.suite, "bvui, frobenius, consequences, nine, all or a relation name");

  auto* eval = app.add_subcommand("eval", "evaluate an operation expression on an element");
  common(eval);
  eval->add_option("--expr", o.expr, "expression, e.g. \"lambda . Delta . mu\"")->required();
  eval->add_option("--input", o.input, "element literal, e.g. \"AU^1 (x) U^1\"");

  auto* dbl = app.add_subcommand("double", "build the double and check the Frobenius suite on it");
  common(dbl);
  dbl->add_option("--save", o.save, "write the double as an instance file");

  auto* gys = app.add_subcommand("gysin", "build Gysin data and check the Lie bialgebra relations");
  common(gys);

  auto* mut = app.add_subcommand("mutate", "perturb a model and expect a relation to fail");
  common(mut);
  mut->add_option("--mutation", o.mutation, "identity, sphere-lambda-flip, sphere-delta-coeff, negate:<map>:<inputs>")
      ->required();
  mut->add_option("--suite", o.suite, "suite to run on the perturbed model");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*check) return cmd_check(o);
    if (*eval) return cmd_eval(o);
    if (*dbl) return cmd_double(o);
    if (*gys) return cmd_gysin(o);
    if (*mut) return cmd_mutate(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return usage;
  } catch (const ValidationError& e) {
    std::cerr << e.what() << "\n";
    return validation;
  } catch (const DoubleError& e) {
    std::cerr << "cannot build the double: " << e.what() << "\n";
    return validation;
  } catch (const GysinError& e) {
    std::cerr << "gysin: " << e.what() << "\n";
    return validation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return validation;
  }
  return usage;
}
