#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <filesystem>

#include "lifter/assertion_parser.hpp"
#include "lifter/batch.hpp"
#include "lifter/context.hpp"
#include "lifter/eval.hpp"
#include "lifter/goal_format.hpp"
#include "lifter/pretty.hpp"
#include "lifter/suggest.hpp"
#include "lifter/term.hpp"

namespace py = pybind11;
using namespace lifter;

namespace {

std::vector<NamedAssertion> to_suite(
    const std::vector<std::pair<std::string, AssertionPtr>>& suite) {
  std::vector<NamedAssertion> out;
  out.reserve(suite.size());
  for (const auto& [id, assertion] : suite) out.push_back({id, assertion});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "LiFtEr interpreter: parse induction-heuristic assertions and "
            "evaluate them against (goal, context, induct invocation) "
            "triples.";

  auto error = py::register_exception<Error>(m, "LifterError");
  py::register_exception<ParseError>(m, "LifterParseError", error.ptr());

  py::class_<SimpleType>(m, "SimpleType")
      .def("__str__", &SimpleType::to_string)
      .def("__repr__",
           [](const SimpleType& t) {
             return "SimpleType('" + t.to_string() + "')";
           })
      .def("__eq__", [](const SimpleType& a, const SimpleType& b) {
        return a == b;
      });

  py::class_<Term, TermPtr>(m, "Term")
      .def("__str__", [](const TermPtr& t) { return print_term(t); })
      .def("__repr__",
           [](const TermPtr& t) { return "Term('" + print_term(t) + "')"; })
      .def("__eq__",
           [](const TermPtr& a, const TermPtr& b) { return *a == *b; })
      .def("is_free", [](const TermPtr& t) { return t->as_free() != nullptr; })
      .def("is_const",
           [](const TermPtr& t) { return t->as_const() != nullptr; });

  py::class_<Occurrence>(m, "Occurrence")
      .def("__str__", &Occurrence::to_string)
      .def("__repr__",
           [](const Occurrence& o) {
             return "Occurrence(" + o.to_string() + ")";
           })
      .def("__eq__", [](const Occurrence& a,
                        const Occurrence& b) { return a == b; })
      .def_property_readonly("steps", [](const Occurrence& o) {
        return o.steps();
      });

  py::class_<Goal>(m, "Goal")
      .def_property_readonly("statement",
                             [](const Goal& g) { return g.statement; })
      .def_property_readonly("frees", [](const Goal& g) {
        std::map<std::string, std::string> out;
        for (const auto& [name, type] : g.frees) {
          out.emplace(name, type.to_string());
        }
        return out;
      });

  py::class_<ProofContext>(m, "ProofContext")
      .def("is_recursive", &ProofContext::is_recursive, py::arg("constant"))
      .def("rules_derived_from", &ProofContext::rules_derived_from,
           py::arg("constant"))
      .def("rule_owner", &ProofContext::rule_owner, py::arg("rule"))
      .def_property_readonly("constant_names", [](const ProofContext& ctx) {
        std::vector<std::string> out;
        for (const auto& [name, def] : ctx.constants()) out.push_back(name);
        return out;
      });

  py::class_<InductArgs>(m, "InductArgs")
      .def("__str__", &print_induct)
      .def("__repr__",
           [](const InductArgs& a) {
             return "InductArgs('" + print_induct(a) + "')";
           })
      .def("__eq__", [](const InductArgs& a,
                        const InductArgs& b) { return a == b; })
      .def_property_readonly(
          "ind_terms", [](const InductArgs& a) { return a.ind_terms; })
      .def_property_readonly(
          "arbitrary", [](const InductArgs& a) { return a.arbitrary; })
      .def_property_readonly("rules",
                             [](const InductArgs& a) { return a.rules; });

  py::class_<Assertion, AssertionPtr>(m, "Assertion")
      .def("pretty", [](const AssertionPtr& a) { return pretty_print(*a); })
      .def("tree", [](const AssertionPtr& a) { return ast_tree(*a); })
      .def("__str__", [](const AssertionPtr& a) { return pretty_print(*a); })
      .def("__eq__", [](const AssertionPtr& a, const AssertionPtr& b) {
        return *a == *b;
      });

  py::class_<Candidate>(m, "Candidate")
      .def_property_readonly("args",
                             [](const Candidate& c) { return c.args; })
      .def_property_readonly("invocation",
                             [](const Candidate& c) {
                               return print_induct(c.args);
                             })
      .def_property_readonly("features",
                             [](const Candidate& c) { return c.features; })
      .def_property_readonly("score",
                             [](const Candidate& c) { return c.score; })
      .def("__repr__", [](const Candidate& c) {
        return "Candidate(score=" + std::to_string(c.score) + ", '" +
               print_induct(c.args) + "')";
      });

  m.def(
      "parse_context",
      [](const std::string& text) { return ProofContext::parse(text); },
      py::arg("text"), "Parse a context document (JSON).");
  m.def(
      "load_context",
      [](const std::string& path) { return ProofContext::load_file(path); },
      py::arg("path"));
  m.def(
      "parse_goal",
      [](const std::string& text, const ProofContext& ctx) {
        return parse_goal_document(text, ctx.constant_types());
      },
      py::arg("text"), py::arg("context"));
  m.def(
      "load_goal",
      [](const std::string& path, const ProofContext& ctx) {
        return load_goal_file(path, ctx.constant_types());
      },
      py::arg("path"), py::arg("context"));
  m.def(
      "parse_assertion",
      [](const std::string& text) { return parse_assertion(text); },
      py::arg("text"));
  m.def(
      "load_assertion",
      [](const std::string& path) { return load_assertion_file(path); },
      py::arg("path"));
  m.def(
      "load_assertion_dir",
      [](const std::string& dir) {
        std::vector<std::pair<std::string, AssertionPtr>> out;
        for (auto& named : load_assertion_dir(dir)) {
          out.emplace_back(named.id, named.assertion);
        }
        return out;
      },
      py::arg("dir"), "(id, assertion) pairs in filename order.");
  m.def(
      "check_scopes",
      [](const AssertionPtr& a) {
        std::vector<std::string> out;
        for (const auto& e : check_scopes(*a)) out.push_back(e.message);
        return out;
      },
      py::arg("assertion"), "Scope violation messages; empty when well-scoped.");
  m.def(
      "parse_induct",
      [](const std::string& text, const Goal& goal, const ProofContext& ctx) {
        return parse_induct(text, ctx.constant_types(), goal.frees);
      },
      py::arg("text"), py::arg("goal"), py::arg("context"));
  m.def(
      "evaluate",
      [](const AssertionPtr& a, const Goal& goal, const ProofContext& ctx,
         const InductArgs& args) { return evaluate(*a, goal, ctx, args); },
      py::arg("assertion"), py::arg("goal"), py::arg("context"),
      py::arg("induct"));
  m.def(
      "explain",
      [](const AssertionPtr& a, const Goal& goal, const ProofContext& ctx,
         const InductArgs& args) {
        std::vector<std::string> trace;
        bool result = evaluate_explained(*a, goal, ctx, args, trace);
        return py::make_tuple(result, trace);
      },
      py::arg("assertion"), py::arg("goal"), py::arg("context"),
      py::arg("induct"), "Returns (result, trace lines).");

  m.def("subterms", &subterms, py::arg("goal"));
  m.def(
      "occurrences_of",
      [](const Goal& goal, const TermPtr& t) {
        return occurrences_of(goal, *t);
      },
      py::arg("goal"), py::arg("term"));
  m.def("resolve", &resolve, py::arg("goal"), py::arg("occurrence"));
  m.def("nth_arg", &nth_arg, py::arg("goal"), py::arg("head_occ"),
        py::arg("n"));
  m.def("head_constant", &head_constant, py::arg("goal"),
        py::arg("occurrence"));
  m.def("free_vars",
        [](const TermPtr& t) {
          std::vector<std::pair<std::string, std::string>> out;
          for (const auto& [name, type] : free_vars(t)) {
            out.emplace_back(name, type.to_string());
          }
          return out;
        },
        py::arg("term"));
  m.def("numb_domain_max", &numb_domain_max, py::arg("goal"),
        py::arg("induct"));
  m.def("pretty_print",
        [](const AssertionPtr& a) { return pretty_print(*a); },
        py::arg("assertion"));

  m.def(
      "enumerate_candidates",
      [](const Goal& goal, const ProofContext& ctx, std::size_t max_ind_terms,
         std::size_t max_arbitrary) {
        return enumerate_candidates(goal, ctx, {max_ind_terms, max_arbitrary});
      },
      py::arg("goal"), py::arg("context"), py::arg("max_ind_terms") = 2,
      py::arg("max_arbitrary") = 1);
  m.def(
      "suggest",
      [](const Goal& goal, const ProofContext& ctx,
         const std::vector<std::pair<std::string, AssertionPtr>>& suite,
         std::size_t max_ind_terms, std::size_t max_arbitrary) {
        return suggest(goal, ctx, to_suite(suite),
                       {max_ind_terms, max_arbitrary});
      },
      py::arg("goal"), py::arg("context"), py::arg("suite"),
      py::arg("max_ind_terms") = 2, py::arg("max_arbitrary") = 1);
  m.def(
      "batch_csv",
      [](const std::string& corpus_path, const std::string& assertions_dir) {
        auto corpus = load_corpus(corpus_path);
        auto suite = load_assertion_dir(assertions_dir);
        std::string base_dir =
            std::filesystem::path(corpus_path).parent_path().string();
        auto matrix = batch_evaluate(corpus, suite, base_dir);
        return py::make_tuple(to_csv(matrix), matrix.rows.size(),
                              matrix.error_count());
      },
      py::arg("corpus_path"), py::arg("assertions_dir"),
      "Returns (csv_text, row_count, error_count).");

#ifdef LIFTER_VERSION
  m.attr("__version__") = LIFTER_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
