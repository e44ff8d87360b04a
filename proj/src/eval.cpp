#include "lifter/eval.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace lifter {

namespace {

bool contains_term(const std::vector<TermPtr>& terms, const Term& t) {
  for (const auto& u : terms) {
    if (*u == t) return true;
  }
  return false;
}

}  // namespace

InductArgs InductArgs::make(std::vector<TermPtr> ind_terms,
                            std::vector<TermPtr> arbitrary,
                            std::vector<std::string> rules) {
  for (std::size_t i = 0; i < ind_terms.size(); ++i) {
    for (std::size_t j = i + 1; j < ind_terms.size(); ++j) {
      if (*ind_terms[i] == *ind_terms[j]) {
        throw Error("duplicate induction term '" + print_term(ind_terms[i]) +
                    "'");
      }
    }
  }
  for (std::size_t i = 0; i < arbitrary.size(); ++i) {
    if (!arbitrary[i]->as_free()) {
      throw Error("arbitrary entry '" + print_term(arbitrary[i]) +
                  "' is not a free variable");
    }
    for (std::size_t j = i + 1; j < arbitrary.size(); ++j) {
      if (*arbitrary[i] == *arbitrary[j]) {
        throw Error("duplicate arbitrary variable '" +
                    print_term(arbitrary[i]) + "'");
      }
    }
  }
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i + 1; j < rules.size(); ++j) {
      if (rules[i] == rules[j]) {
        throw Error("duplicate rule '" + rules[i] + "'");
      }
    }
  }
  return InductArgs{std::move(ind_terms), std::move(arbitrary),
                    std::move(rules)};
}

bool operator==(const InductArgs& a, const InductArgs& b) {
  auto term_lists_equal = [](const std::vector<TermPtr>& xs,
                             const std::vector<TermPtr>& ys) {
    if (xs.size() != ys.size()) return false;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (*xs[i] != *ys[i]) return false;
    }
    return true;
  };
  return term_lists_equal(a.ind_terms, b.ind_terms) &&
         term_lists_equal(a.arbitrary, b.arbitrary) && a.rules == b.rules;
}

// ---------------------------------------------------------------------------
// Invocation syntax

namespace {

struct RawToken {
  std::string text;
  int col = 0;  // 1-based
};

// Splits on whitespace at paren depth 0, keeping parenthesized chunks whole.
std::vector<RawToken> split_invocation(std::string_view text,
                                       const std::string& origin) {
  std::vector<RawToken> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (text[i] == '(') {
      int depth = 0;
      while (i < text.size()) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        ++i;
        if (depth == 0) break;
      }
      if (depth != 0) {
        throw ParseError("unbalanced parentheses in invocation",
                         {1, static_cast<int>(start) + 1}, origin);
      }
    } else {
      while (i < text.size() &&
             !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '(') {
        ++i;
      }
    }
    out.push_back({std::string(text.substr(start, i - start)),
                   static_cast<int>(start) + 1});
  }
  return out;
}

}  // namespace

InductArgs parse_induct(std::string_view text, const TypeTable& constants,
                        const TypeTable& frees, const std::string& origin) {
  auto tokens = split_invocation(text, origin);
  if (tokens.empty() || tokens[0].text != "induct") {
    throw ParseError("invocation must start with 'induct'",
                     {1, tokens.empty() ? 1 : tokens[0].col}, origin);
  }
  enum class Section { Ind, Arb, Rule };
  Section section = Section::Ind;
  std::vector<TermPtr> ind_terms;
  std::vector<TermPtr> arbitrary;
  std::vector<std::string> rules;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const RawToken& tok = tokens[i];
    if (tok.text == "arbitrary:") {
      if (section != Section::Ind) {
        throw ParseError("'arbitrary:' must come once, before 'rule:'",
                         {1, tok.col}, origin);
      }
      section = Section::Arb;
      continue;
    }
    if (tok.text == "rule:") {
      if (section == Section::Rule) {
        throw ParseError("duplicate 'rule:' section", {1, tok.col}, origin);
      }
      section = Section::Rule;
      continue;
    }
    switch (section) {
      case Section::Ind:
      case Section::Arb: {
        TermPtr t = parse_term(tok.text, constants, frees, {1, tok.col},
                               origin);
        (section == Section::Ind ? ind_terms : arbitrary).push_back(t);
        break;
      }
      case Section::Rule:
        rules.push_back(tok.text);
        break;
    }
  }
  if (section == Section::Arb && arbitrary.empty()) {
    throw ParseError("'arbitrary:' needs at least one variable", {1, 1},
                     origin);
  }
  if (section == Section::Rule && rules.empty()) {
    throw ParseError("'rule:' needs at least one rule name", {1, 1}, origin);
  }
  try {
    return InductArgs::make(std::move(ind_terms), std::move(arbitrary),
                            std::move(rules));
  } catch (const Error& e) {
    throw ParseError(e.what(), {1, 1}, origin);
  }
}

std::string print_induct(const InductArgs& args) {
  std::string out = "induct";
  for (const auto& t : args.ind_terms) out += " " + print_term(t);
  if (!args.arbitrary.empty()) {
    out += " arbitrary:";
    for (const auto& t : args.arbitrary) out += " " + print_term(t);
  }
  if (!args.rules.empty()) {
    out += " rule:";
    for (const auto& r : args.rules) out += " " + r;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

std::size_t numb_domain_max(const Goal& goal, const InductArgs& args) {
  std::size_t max_arity = 0;
  std::function<void(const TermPtr&)> go = [&](const TermPtr& t) {
    for (const auto& child : flat_children(t)) go(child);
    if (t->as_app()) {
      max_arity = std::max(max_arity, flatten_app(t).args.size());
    }
  };
  go(goal.statement);
  return std::max({max_arity, args.ind_terms.size(), std::size_t{1}});
}

void Env::bind(const LVar& var, Denotation value) {
  bindings_.emplace_back(var, std::move(value));
}

void Env::unbind_last() { bindings_.pop_back(); }

const Denotation& Env::lookup(const LVar& var) const {
  for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it) {
    if (it->first == var) return it->second;
  }
  throw Error("unbound variable " + to_string(var) +
              " during evaluation (assertion not well-scoped?)");
}

std::string denotation_to_string(const Denotation& d) {
  if (const auto* t = std::get_if<TermPtr>(&d)) return print_term(*t);
  if (const auto* o = std::get_if<Occurrence>(&d)) return o->to_string();
  if (const auto* s = std::get_if<std::string>(&d)) return *s;
  return std::to_string(std::get<std::size_t>(d));
}

namespace {

struct EvalState {
  const Goal& goal;
  const ProofContext& ctx;
  const InductArgs& args;
  std::vector<TermPtr> trm_domain;  // subterms(goal), computed once
  std::size_t numb_max = 1;

  EvalState(const Goal& g, const ProofContext& c, const InductArgs& a)
      : goal(g), ctx(c), args(a), trm_domain(subterms(g)),
        numb_max(numb_domain_max(g, a)) {}

  std::vector<Denotation> domain_of(Domain domain) const {
    std::vector<Denotation> out;
    switch (domain) {
      case Domain::Trm:
        out.assign(trm_domain.begin(), trm_domain.end());
        break;
      case Domain::Rule:
        out.assign(args.rules.begin(), args.rules.end());
        break;
      case Domain::Ind:
        out.assign(args.ind_terms.begin(), args.ind_terms.end());
        break;
      case Domain::Arb:
        out.assign(args.arbitrary.begin(), args.arbitrary.end());
        break;
      case Domain::Numb:
        for (std::size_t n = 1; n <= numb_max; ++n) out.emplace_back(n);
        break;
    }
    return out;
  }

  bool atom(const Assertion::Atom& atom, const Env& env) const {
    auto term_at = [&](const LVar& v) {
      return std::get<TermPtr>(env.lookup(v));
    };
    auto occ_at = [&](const LVar& v) {
      return std::get<Occurrence>(env.lookup(v));
    };
    auto numb_at = [&](const LVar& v) {
      return std::get<std::size_t>(env.lookup(v));
    };
    switch (atom.kind) {
      case AtomKind::IsRuleOf: {
        auto c = head_constant(goal, occ_at(atom.args[1]));
        if (!c) return false;
        auto rules = ctx.rules_derived_from(*c);
        const auto& rule = std::get<std::string>(env.lookup(atom.args[0]));
        return std::find(rules.begin(), rules.end(), rule) != rules.end();
      }
      case AtomKind::IsRecursiveCnst: {
        auto c = head_constant(goal, occ_at(atom.args[0]));
        return c && ctx.is_recursive(*c);
      }
      case AtomKind::IsNthArgOf: {
        auto arg = nth_arg(goal, occ_at(atom.args[2]), numb_at(atom.args[1]));
        return arg && *arg == occ_at(atom.args[0]);
      }
      case AtomKind::IsNthInd: {
        std::size_t n = numb_at(atom.args[1]);
        return n >= 1 && n <= args.ind_terms.size() &&
               *args.ind_terms[n - 1] == *term_at(atom.args[0]);
      }
      case AtomKind::IsSameAs:
        return *term_at(atom.args[0]) == *term_at(atom.args[1]);
      case AtomKind::IsFreeVar:
        return resolve(goal, occ_at(atom.args[0]))->as_free() != nullptr;
      case AtomKind::IsInArbitrary:
        return contains_term(args.arbitrary, *term_at(atom.args[0]));
    }
    return false;
  }

  bool eval(const Assertion& a, Env& env) const {
    if (const auto* lit = std::get_if<Assertion::BoolLit>(&a.node())) {
      return lit->value;
    }
    if (const auto* n = std::get_if<Assertion::Not>(&a.node())) {
      return !eval(*n->body, env);
    }
    if (const auto* c = std::get_if<Assertion::Conn>(&a.node())) {
      switch (c->kind) {
        case Assertion::ConnKind::And:
          return eval(*c->lhs, env) && eval(*c->rhs, env);
        case Assertion::ConnKind::Or:
          return eval(*c->lhs, env) || eval(*c->rhs, env);
        case Assertion::ConnKind::Imply:
          return !eval(*c->lhs, env) || eval(*c->rhs, env);
      }
    }
    if (const auto* q = std::get_if<Assertion::Quant>(&a.node())) {
      return quantify(q->pol, domain_of(q->domain), q->var, *q->body, env);
    }
    if (const auto* q = std::get_if<Assertion::QuantOcc>(&a.node())) {
      const auto& t = std::get<TermPtr>(env.lookup(q->term_var));
      std::vector<Denotation> occs;
      for (auto& occ : occurrences_of(goal, *t)) occs.emplace_back(occ);
      return quantify(q->pol, occs, q->occ_var, *q->body, env);
    }
    return atom(std::get<Assertion::Atom>(a.node()), env);
  }

  bool quantify(Polarity pol, const std::vector<Denotation>& domain,
                const LVar& var, const Assertion& body, Env& env) const {
    for (const auto& value : domain) {
      env.bind(var, value);
      bool r = eval(body, env);
      env.unbind_last();
      if (pol == Polarity::Some && r) return true;
      if (pol == Polarity::All && !r) return false;
    }
    return pol == Polarity::All;  // vacuous truth on empty domains
  }
};

}  // namespace

bool evaluate(const Assertion& assertion, const Goal& goal,
              const ProofContext& ctx, const InductArgs& args) {
  EvalState state(goal, ctx, args);
  Env env;
  return state.eval(assertion, env);
}

bool eval_atom(const Assertion::Atom& atom, const Env& env, const Goal& goal,
               const ProofContext& ctx, const InductArgs& args) {
  EvalState state(goal, ctx, args);
  return state.atom(atom, env);
}

// ---------------------------------------------------------------------------
// Explained evaluation: same semantics, plus one trace line per quantifier on
// the decisive path. Some-true and All-false descend into the deciding
// element; the opposite outcomes report the domain size and stop.

namespace {

struct TraceState {
  EvalState base;
  std::vector<std::string> trace;

  TraceState(const Goal& g, const ProofContext& c, const InductArgs& a)
      : base(g, c, a) {}

  void line(int depth, const std::string& text) {
    trace.push_back(std::string(static_cast<std::size_t>(depth) * 2, ' ') +
                    text);
  }

  bool eval(const Assertion& a, Env& env, int depth) {
    if (const auto* lit = std::get_if<Assertion::BoolLit>(&a.node())) {
      return lit->value;
    }
    if (const auto* n = std::get_if<Assertion::Not>(&a.node())) {
      return !eval(*n->body, env, depth);
    }
    if (const auto* c = std::get_if<Assertion::Conn>(&a.node())) {
      switch (c->kind) {
        case Assertion::ConnKind::And: {
          // On failure only the first false operand is decisive.
          bool lhs = eval(*c->lhs, env, depth);
          if (!lhs) return false;
          return eval(*c->rhs, env, depth);
        }
        case Assertion::ConnKind::Or: {
          bool lhs = eval(*c->lhs, env, depth);
          if (lhs) return true;
          return eval(*c->rhs, env, depth);
        }
        case Assertion::ConnKind::Imply: {
          bool lhs = eval(*c->lhs, env, depth);
          if (!lhs) return true;  // antecedent trace already explains it
          return eval(*c->rhs, env, depth);
        }
      }
    }
    if (const auto* q = std::get_if<Assertion::Quant>(&a.node())) {
      return quantify(quant_name(q->pol, q->domain), q->pol,
                      base.domain_of(q->domain), q->var, *q->body, env, depth);
    }
    if (const auto* q = std::get_if<Assertion::QuantOcc>(&a.node())) {
      const auto& t = std::get<TermPtr>(env.lookup(q->term_var));
      std::vector<Denotation> occs;
      for (auto& occ : occurrences_of(base.goal, *t)) occs.emplace_back(occ);
      return quantify(q->pol == Polarity::Some ? "Some_Trm_Occ_Of"
                                               : "All_Trm_Occ_Of",
                      q->pol, occs, q->occ_var, *q->body, env, depth);
    }
    return base.atom(std::get<Assertion::Atom>(a.node()), env);
  }

  bool quantify(const std::string& name, Polarity pol,
                const std::vector<Denotation>& domain, const LVar& var,
                const Assertion& body, Env& env, int depth) {
    std::string head = name + " " + to_string(var);
    for (const auto& value : domain) {
      env.bind(var, value);
      std::size_t mark = trace.size();
      bool r = eval(body, env, depth + 1);
      env.unbind_last();
      if (pol == Polarity::Some && r) {
        trace.insert(trace.begin() + static_cast<std::ptrdiff_t>(mark),
                     std::string(static_cast<std::size_t>(depth) * 2, ' ') +
                         head + " := " + denotation_to_string(value));
        return true;
      }
      if (pol == Polarity::All && !r) {
        trace.insert(trace.begin() + static_cast<std::ptrdiff_t>(mark),
                     std::string(static_cast<std::size_t>(depth) * 2, ' ') +
                         head + " := fails for " +
                         denotation_to_string(value));
        return false;
      }
      trace.resize(mark);  // this element was not decisive
    }
    if (pol == Polarity::Some) {
      line(depth, head + " := no witness (" + std::to_string(domain.size()) +
                      " candidates)");
      return false;
    }
    line(depth, head + " := holds for all (" + std::to_string(domain.size()) +
                    " candidates)");
    return true;
  }
};

}  // namespace

bool evaluate_explained(const Assertion& assertion, const Goal& goal,
                        const ProofContext& ctx, const InductArgs& args,
                        std::vector<std::string>& trace) {
  TraceState state(goal, ctx, args);
  Env env;
  bool result = state.eval(assertion, env, 0);
  trace = std::move(state.trace);
  return result;
}

}  // namespace lifter
