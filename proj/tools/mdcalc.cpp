#include <CLI11.hpp>

#include <iostream>

#include "mdcalc/descent.hpp"
#include "mdcalc/dsl.hpp"
#include "mdcalc/errors.hpp"
#include "mdcalc/io.hpp"
#include "mdcalc/suites.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvariantFailure = 1;
constexpr int kInputError = 2;

struct EvalArgs {
  std::string expr;
  int vars = 1;
  int floor = -10;
  bool json = false;
};

struct CheckArgs {
  std::string suite;
  mdcalc::SuiteConfig cfg;
  bool list = false;
};

struct XmArgs {
  std::string action;
  std::string cm;
  std::string cover;
  std::uint64_t budget = mdcalc::xm::kDefaultBudget;
  bool reps = false;
};

int run_eval(const EvalArgs& a) {
  mdcalc::Operator p = mdcalc::dsl::evaluate(a.expr, {a.vars, a.floor});
  if (a.json) {
    std::cout << mdcalc::io::to_json(p).dump() << "\n";
  } else {
    std::cout << p.to_string() << "\n";
  }
  return kOk;
}

int run_check(const CheckArgs& a) {
  if (a.list || a.suite.empty()) {
    for (const auto& s : mdcalc::suites()) {
      std::cout << s.name << "\t" << s.invariant << "\t" << s.summary << "\n";
    }
    return a.list ? kOk : kInputError;
  }
  mdcalc::SuiteReport r = mdcalc::run_suite(a.suite, a.cfg);
  std::cout << r.to_json().dump() << "\n";
  std::cerr << r.suite << ": " << r.trials << " trials, " << r.failures.size() << " failures, "
            << r.skipped << " skipped (seed " << r.seed << ")\n";
  return r.ok() ? kOk : kInvariantFailure;
}

int run_xm(const XmArgs& a) {
  using namespace mdcalc;
  if (a.action == "validate") {
    xm::CrossedModule cm = io::load_crossed_module(a.cm, false);
    auto report = xm::validate_crossed_module(cm);
    std::cout << io::to_json(report).dump() << "\n";
    return report.ok() ? kOk : kInvariantFailure;
  }
  xm::CrossedModule cm = io::load_crossed_module(a.cm);
  if (a.action == "pi") {
    io::Json j;
    j["pi0"] = io::to_json(xm::pi0(cm));
    j["pi1"] = io::to_json(xm::pi1(cm));
    std::cout << j.dump() << "\n";
    return kOk;
  }
  if (a.action == "shape") {
    std::cout << io::to_json(xm::shape(cm)).dump() << "\n";
    return kOk;
  }
  if (a.cover.empty()) throw Error(ErrorKind::SchemaError, "xm h1 needs --cover");
  xm::Cover cover = io::load_cover(a.cover);
  auto result = xm::classify_h1(cover, cm, a.budget);
  std::cout << io::to_json(result, cover, cm, a.reps).dump() << "\n";
  std::cerr << result.classes.size() << " classes from " << result.valid_data
            << " valid data (search size " << result.search_size << ")\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbol calculus, star structures and finite crossed modules"};
  app.require_subcommand(1);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an operator expression");
  eval_cmd->add_option("--expr", eval.expr, "Expression")->required();
  eval_cmd->add_option("--vars", eval.vars, "Number of variables")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--floor", eval.floor, "Floor for inv, sqrt, unitarize and ad");
  eval_cmd->add_flag("--json", eval.json, "Print the operator as JSON");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run a property suite");
  check_cmd->add_option("suite", check.suite, "Suite name");
  check_cmd->add_flag("--list", check.list, "List suites");
  check_cmd->add_option("--trials", check.cfg.trials, "Trials")->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--seed", check.cfg.seed, "Seed");
  check_cmd->add_option("--vars", check.cfg.vars, "Number of variables")->check(CLI::PositiveNumber);
  check_cmd->add_option("--max-deg", check.cfg.max_deg, "Largest top degree")->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--floor", check.cfg.floor, "Floor");
  check_cmd->add_option("--budget", check.cfg.budget, "H1 search budget");

  XmArgs xm;
  auto* xm_cmd = app.add_subcommand("xm", "Crossed modules and descent");
  xm_cmd->add_option("action", xm.action, "validate, pi, shape or h1")
      ->required()
      ->check(CLI::IsMember({"validate", "pi", "shape", "h1"}));
  xm_cmd->add_option("--cm", xm.cm, "Crossed module JSON file")->required();
  xm_cmd->add_option("--cover", xm.cover, "Cover JSON file");
  xm_cmd->add_option("--budget", xm.budget, "Search budget");
  xm_cmd->add_flag("--reps", xm.reps, "Include class representatives");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*eval_cmd) return run_eval(eval);
    if (*check_cmd) return run_check(check);
    return run_xm(xm);
  } catch (const mdcalc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
