#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lifter/ast.hpp"
#include "lifter/context.hpp"
#include "lifter/eval.hpp"
#include "lifter/term.hpp"

namespace lifter {

struct NamedAssertion {
  std::string id;
  AssertionPtr assertion;
};

struct Limits {
  std::size_t max_ind_terms = 2;  // must be >= 1
  std::size_t max_arbitrary = 1;
};

// Deterministic candidate enumeration: every non-empty ordered selection of
// at most max_ind_terms distinct goal frees, crossed with subsets of the
// remaining frees (size <= max_arbitrary), crossed with no-rule plus each
// rule derived from a recursive constant occurring in the goal. Ordered
// lexicographically by (rule, ind_terms, arbitrary) with shorter selections
// first and no rule before named rules.
std::vector<InductArgs> enumerate_candidates(const Goal& goal,
                                             const ProofContext& ctx,
                                             const Limits& limits);

struct Candidate {
  InductArgs args;
  std::vector<std::pair<std::string, bool>> features;  // (assertion id, value)
  std::size_t score = 0;  // count of true features
};

Candidate score_candidate(const InductArgs& args,
                          std::span<const NamedAssertion> suite,
                          const Goal& goal, const ProofContext& ctx);

// Enumerate, score, and stable-sort by descending score; ties keep
// enumeration order.
std::vector<Candidate> suggest(const Goal& goal, const ProofContext& ctx,
                               std::span<const NamedAssertion> suite,
                               const Limits& limits);

}  // namespace lifter
