#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "lifter/assertion_parser.hpp"
#include "lifter/batch.hpp"
#include "lifter/context.hpp"
#include "lifter/eval.hpp"
#include "lifter/goal_format.hpp"
#include "lifter/pretty.hpp"
#include "lifter/suggest.hpp"

namespace {

// Exit codes: 0 success (or assertion true), 1 assertion false (check only),
// 2 usage/parse/load errors. Results go to stdout, diagnostics to stderr.
constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct CheckOptions {
  std::string goal_path;
  std::string context_path;
  std::string assertion_path;
  std::string induct;
  bool explain = false;
};

int run_check(const CheckOptions& opt) {
  auto ctx = lifter::ProofContext::load_file(opt.context_path);
  auto goal = lifter::load_goal_file(opt.goal_path, ctx.constant_types());
  auto assertion = lifter::load_assertion_file(opt.assertion_path);
  auto args = lifter::parse_induct(opt.induct, ctx.constant_types(),
                                   goal.frees, "--induct");
  bool result;
  if (opt.explain) {
    std::vector<std::string> trace;
    result = lifter::evaluate_explained(*assertion, goal, ctx, args, trace);
    std::cout << (result ? "true" : "false") << "\n";
    for (const auto& line : trace) std::cout << line << "\n";
  } else {
    result = lifter::evaluate(*assertion, goal, ctx, args);
    std::cout << (result ? "true" : "false") << "\n";
  }
  return result ? kExitTrue : kExitFalse;
}

int run_parse(const std::string& assertion_path) {
  auto assertion = lifter::load_assertion_file(assertion_path);
  std::cout << lifter::ast_tree(*assertion) << "\n"
            << lifter::pretty_print(*assertion) << "\n";
  return kExitTrue;
}

struct SuggestOptions {
  std::string goal_path;
  std::string context_path;
  std::string assertions_dir;
  std::size_t max_ind_terms = 2;
  std::size_t max_arbitrary = 1;
  std::size_t top = 10;
};

int run_suggest(const SuggestOptions& opt) {
  auto ctx = lifter::ProofContext::load_file(opt.context_path);
  auto goal = lifter::load_goal_file(opt.goal_path, ctx.constant_types());
  auto suite = lifter::load_assertion_dir(opt.assertions_dir);
  auto ranked = lifter::suggest(goal, ctx, suite,
                                {opt.max_ind_terms, opt.max_arbitrary});
  std::size_t shown = 0;
  for (const auto& candidate : ranked) {
    if (shown++ >= opt.top) break;
    std::string bits;
    for (const auto& [id, value] : candidate.features) {
      bits += value ? '1' : '0';
    }
    std::cout << "score=" << candidate.score << " bits=" << bits << " "
              << lifter::print_induct(candidate.args) << "\n";
  }
  return kExitTrue;
}

struct BatchOptions {
  std::string corpus_path;
  std::string assertions_dir;
  std::string out_path;
};

int run_batch(const BatchOptions& opt) {
  auto corpus = lifter::load_corpus(opt.corpus_path);
  auto suite = lifter::load_assertion_dir(opt.assertions_dir);
  std::string base_dir =
      std::filesystem::path(opt.corpus_path).parent_path().string();
  auto matrix = lifter::batch_evaluate(corpus, suite, base_dir);
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw lifter::Error("cannot write file: " + opt.out_path);
  out << lifter::to_csv(matrix);
  out.close();
  std::cout << "rows=" << matrix.rows.size()
            << " errors=" << matrix.error_count() << "\n";
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interpreter for the LiFtEr induction-heuristic language"};
  app.require_subcommand(1);

  CheckOptions check_opt;
  auto* check = app.add_subcommand(
      "check", "Evaluate an assertion against a goal and an invocation");
  check->add_option("--goal", check_opt.goal_path, "Goal file")->required();
  check->add_option("--context", check_opt.context_path, "Context file")
      ->required();
  check->add_option("--assertion", check_opt.assertion_path, "Assertion file")
      ->required();
  check->add_option("--induct", check_opt.induct,
                    "Invocation, e.g. \"induct xs ys rule: itrev.induct\"")
      ->required();
  check->add_flag("--explain", check_opt.explain,
                  "Print a witness/counterexample trace");

  std::string parse_path;
  auto* parse = app.add_subcommand("parse", "Parse and pretty-print an "
                                            "assertion");
  parse->add_option("--assertion", parse_path, "Assertion file")->required();

  SuggestOptions suggest_opt;
  auto* suggest = app.add_subcommand(
      "suggest", "Enumerate and rank induct invocations for a goal");
  suggest->add_option("--goal", suggest_opt.goal_path, "Goal file")
      ->required();
  suggest->add_option("--context", suggest_opt.context_path, "Context file")
      ->required();
  suggest
      ->add_option("--assertions-dir", suggest_opt.assertions_dir,
                   "Directory of .lifter files")
      ->required();
  suggest->add_option("--max-ind-terms", suggest_opt.max_ind_terms,
                      "Maximum induction terms per candidate");
  suggest->add_option("--max-arbitrary", suggest_opt.max_arbitrary,
                      "Maximum arbitrary variables per candidate");
  suggest->add_option("--top", suggest_opt.top, "Number of candidates to "
                                                "print");

  BatchOptions batch_opt;
  auto* batch = app.add_subcommand(
      "batch", "Evaluate an assertion suite over a corpus into a CSV matrix");
  batch->add_option("corpus", batch_opt.corpus_path, "Corpus file (JSON lines)")
      ->required();
  batch
      ->add_option("--assertions-dir", batch_opt.assertions_dir,
                   "Directory of .lifter files")
      ->required();
  batch->add_option("--out", batch_opt.out_path, "Output CSV path")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (app.got_subcommand(check)) return run_check(check_opt);
    if (app.got_subcommand(parse)) return run_parse(parse_path);
    if (app.got_subcommand(suggest)) return run_suggest(suggest_opt);
    return run_batch(batch_opt);
  } catch (const lifter::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
