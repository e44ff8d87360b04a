#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lifter/ast.hpp"
#include "lifter/context.hpp"
#include "lifter/goal_format.hpp"
#include "lifter/term.hpp"

namespace lifter {

// One induct invocation: ordered induction terms (positions are 1-based and
// meaningful), generalized variables, and rule names.
struct InductArgs {
  std::vector<TermPtr> ind_terms;
  std::vector<TermPtr> arbitrary;  // each a Free
  std::vector<std::string> rules;

  // Validates distinctness and that arbitrary entries are Frees.
  static InductArgs make(std::vector<TermPtr> ind_terms,
                         std::vector<TermPtr> arbitrary,
                         std::vector<std::string> rules);
};

bool operator==(const InductArgs& a, const InductArgs& b);
inline bool operator!=(const InductArgs& a, const InductArgs& b) {
  return !(a == b);
}

// Invocation syntax: induct <trm>* [arbitrary: <trm>+] [rule: <name>+]
// where each <trm> is a goal-format S-expression or a bare free name.
InductArgs parse_induct(std::string_view text, const TypeTable& constants,
                        const TypeTable& frees, const std::string& origin = {});

std::string print_induct(const InductArgs& args);

// Upper bound of the Numb quantifier domain 1..N:
// N = max(max flattened-application argument count over all occurrences in
// the goal, number of induction terms, 1).
std::size_t numb_domain_max(const Goal& goal, const InductArgs& args);

// Value bound to a DSL variable during evaluation.
using Denotation = std::variant<TermPtr, Occurrence, std::string, std::size_t>;

std::string denotation_to_string(const Denotation& d);

// Evaluation environment; bindings extend functionally and lookups of
// unbound variables cannot happen on well-scoped assertions.
class Env {
 public:
  void bind(const LVar& var, Denotation value);
  void unbind_last();
  const Denotation& lookup(const LVar& var) const;  // throws Error if absent

 private:
  std::vector<std::pair<LVar, Denotation>> bindings_;
};

// Truth of a well-scoped assertion against the (goal, context, invocation)
// triple. Quantifier domains: Trm = goal subterms, Rule = invocation rules,
// Ind = induction terms, Arb = arbitrary variables, Numb = 1..numb_domain_max,
// Trm_Occ_Of = occurrences of the bound term. Empty domains make Some false
// and All true.
bool evaluate(const Assertion& assertion, const Goal& goal,
              const ProofContext& ctx, const InductArgs& args);

bool eval_atom(const Assertion::Atom& atom, const Env& env, const Goal& goal,
               const ProofContext& ctx, const InductArgs& args);

// evaluate plus a deterministic witness/counterexample trace: one line per
// quantifier on the decisive path (terms in goal format, occurrences as
// bracketed paths).
bool evaluate_explained(const Assertion& assertion, const Goal& goal,
                        const ProofContext& ctx, const InductArgs& args,
                        std::vector<std::string>& trace);

}  // namespace lifter
