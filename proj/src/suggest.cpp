#include "lifter/suggest.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lifter {

namespace {

// Ordered selections of 1..max_len distinct indices, shorter first, each
// length in lexicographic index order.
std::vector<std::vector<std::size_t>> ordered_selections(std::size_t n,
                                                         std::size_t max_len) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> go = [&](std::size_t len) {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      cur.push_back(i);
      go(len);
      cur.pop_back();
      used[i] = false;
    }
  };
  for (std::size_t len = 1; len <= std::min(n, max_len); ++len) go(len);
  return out;
}

// Subsets of the given indices of size 0..max_len, shorter first, each size in
// lexicographic index order.
std::vector<std::vector<std::size_t>> subsets(
    const std::vector<std::size_t>& pool, std::size_t max_len) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t len,
                                                         std::size_t from) {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      go(len, i + 1);
      cur.pop_back();
    }
  };
  for (std::size_t len = 0; len <= std::min(pool.size(), max_len); ++len) {
    go(len, 0);
  }
  return out;
}

// Constants of the goal in first-occurrence order.
std::vector<std::string> goal_constants(const Goal& goal) {
  std::vector<std::string> out;
  std::function<void(const TermPtr&)> go = [&](const TermPtr& t) {
    if (const auto* c = t->as_const()) {
      if (std::find(out.begin(), out.end(), c->name) == out.end()) {
        out.push_back(c->name);
      }
    } else if (const auto* abs = t->as_abs()) {
      go(abs->body);
    } else if (const auto* app = t->as_app()) {
      go(app->fun);
      go(app->arg);
    }
  };
  go(goal.statement);
  return out;
}

}  // namespace

std::vector<InductArgs> enumerate_candidates(const Goal& goal,
                                             const ProofContext& ctx,
                                             const Limits& limits) {
  if (limits.max_ind_terms < 1) {
    throw Error("max_ind_terms must be at least 1");
  }
  std::vector<TermPtr> frees;
  for (const auto& [name, type] : free_vars(goal.statement)) {
    frees.push_back(Term::make_free(name, type));
  }

  // No rule first, then the rules of recursive goal constants by name.
  std::vector<std::optional<std::string>> rule_options = {std::nullopt};
  {
    std::set<std::string> names;
    for (const auto& c : goal_constants(goal)) {
      if (!ctx.is_recursive(c)) continue;
      for (const auto& rule : ctx.rules_derived_from(c)) names.insert(rule);
    }
    for (const auto& name : names) rule_options.emplace_back(name);
  }

  std::vector<InductArgs> out;
  std::set<std::string> seen;
  auto selections = ordered_selections(frees.size(), limits.max_ind_terms);
  for (const auto& rule : rule_options) {
    for (const auto& sel : selections) {
      std::vector<TermPtr> ind_terms;
      std::vector<std::size_t> remaining;
      for (std::size_t i : sel) ind_terms.push_back(frees[i]);
      for (std::size_t i = 0; i < frees.size(); ++i) {
        if (std::find(sel.begin(), sel.end(), i) == sel.end()) {
          remaining.push_back(i);
        }
      }
      for (const auto& arb_sel : subsets(remaining, limits.max_arbitrary)) {
        std::vector<TermPtr> arbitrary;
        for (std::size_t i : arb_sel) arbitrary.push_back(frees[i]);
        std::vector<std::string> rules;
        if (rule) rules.push_back(*rule);
        InductArgs args = InductArgs::make(ind_terms, std::move(arbitrary),
                                           std::move(rules));
        if (seen.insert(print_induct(args)).second) {
          out.push_back(std::move(args));
        }
      }
    }
  }
  return out;
}

Candidate score_candidate(const InductArgs& args,
                          std::span<const NamedAssertion> suite,
                          const Goal& goal, const ProofContext& ctx) {
  Candidate candidate{args, {}, 0};
  for (const auto& named : suite) {
    bool value = evaluate(*named.assertion, goal, ctx, args);
    candidate.features.emplace_back(named.id, value);
    if (value) ++candidate.score;
  }
  return candidate;
}

std::vector<Candidate> suggest(const Goal& goal, const ProofContext& ctx,
                               std::span<const NamedAssertion> suite,
                               const Limits& limits) {
  std::vector<Candidate> out;
  for (const auto& args : enumerate_candidates(goal, ctx, limits)) {
    out.push_back(score_candidate(args, suite, goal, ctx));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.score > b.score;
                   });
  return out;
}

}  // namespace lifter
