#include "testgen.hpp"

#include <algorithm>

namespace testgen {

using namespace lifter;

std::size_t Rng::below(std::size_t n) {
  return n == 0 ? 0 : std::uniform_int_distribution<std::size_t>(0, n - 1)(
                          engine_);
}

std::size_t Rng::range(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

bool Rng::chance(double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(engine_) < p;
}

namespace {

Signature build_signature() {
  Signature sig;
  auto a = SimpleType::var("a");
  auto b = SimpleType::var("b");
  auto c = SimpleType::var("c");
  auto z = SimpleType::var("z");
  auto nat = SimpleType::con("nat");
  auto alist = SimpleType::con("list", {a});

  sig.constants.emplace("eq", SimpleType::fun(a, SimpleType::fun(a, SimpleType::con("bool"))));
  sig.constants.emplace("c0", nat);
  sig.constants.emplace("d0", alist);
  sig.constants.emplace("f1", SimpleType::fun(a, z));
  sig.constants.emplace("g2", SimpleType::fun(a, SimpleType::fun(b, z)));
  sig.constants.emplace("h3",
                        SimpleType::fun(a, SimpleType::fun(b, SimpleType::fun(c, z))));
  sig.constants.emplace("rec1", SimpleType::fun(a, a));
  sig.constants.emplace("rec2", SimpleType::fun(a, SimpleType::fun(b, z)));
  sig.constants.emplace("id1", SimpleType::fun(a, a));

  sig.frees = {
      {"x1", nat},
      {"x2", alist},
      {"x3", SimpleType::var("v")},
      {"x4", nat},
  };

  auto free_v = Term::make_free("v", a);
  auto cnst = [&](const char* name) {
    return Term::make_const(name, sig.constants.at(name));
  };
  auto eq_of = [&](TermPtr lhs, TermPtr rhs) {
    return Term::make_app(cnst("eq"), {std::move(lhs), std::move(rhs)});
  };

  std::vector<ConstDef> defs;
  defs.push_back({"eq", sig.constants.at("eq"), {}, {}, false});
  defs.push_back({"c0", sig.constants.at("c0"), {}, {}, false});
  defs.push_back({"d0", sig.constants.at("d0"), {}, {}, false});
  defs.push_back({"f1", sig.constants.at("f1"), {}, {}, false});
  defs.push_back({"g2", sig.constants.at("g2"), {}, {}, false});
  defs.push_back({"h3", sig.constants.at("h3"), {}, {}, false});
  // rec1 v = rec1 v: syntactically self-referential, hence recursive.
  defs.push_back({"rec1",
                  sig.constants.at("rec1"),
                  {eq_of(Term::make_app(cnst("rec1"), {free_v}),
                         Term::make_app(cnst("rec1"), {free_v}))},
                  {"rec1.induct"},
                  false});
  defs.push_back({"rec2",
                  sig.constants.at("rec2"),
                  {eq_of(Term::make_app(cnst("rec2"), {free_v, free_v}),
                         Term::make_app(cnst("rec2"), {free_v, free_v}))},
                  {"rec2.induct", "rec2.cases"},
                  false});
  // id1 v = v: not recursive.
  defs.push_back({"id1",
                  sig.constants.at("id1"),
                  {eq_of(Term::make_app(cnst("id1"), {free_v}), free_v)},
                  {"id1.cases"},
                  false});
  sig.context = ProofContext::from_defs(std::move(defs));
  return sig;
}

}  // namespace

const Signature& signature() {
  static const Signature sig = build_signature();
  return sig;
}

namespace {

struct TermGen {
  Rng& rng;
  bool allow_abs;
  std::size_t binder_depth = 0;

  TermPtr atom() {
    const Signature& sig = signature();
    if (allow_abs && binder_depth > 0 && rng.chance(0.3)) {
      return Term::make_bound(rng.below(binder_depth));
    }
    if (rng.chance(0.5)) {
      const auto& [name, type] = rng.pick(sig.frees);
      return Term::make_free(name, type);
    }
    static const std::vector<std::string> atoms = {"c0", "d0", "rec1", "id1"};
    const auto& name = rng.pick(atoms);
    return Term::make_const(name, sig.constants.at(name));
  }

  // Budget counts nodes of the flattened tree.
  TermPtr gen(std::size_t budget) {
    if (budget <= 1) return atom();
    if (allow_abs && rng.chance(0.15)) {
      ++binder_depth;
      TermPtr body = gen(budget - 1);
      --binder_depth;
      return Term::make_abs("v" + std::to_string(binder_depth),
                            SimpleType::var("a"), body);
    }
    const Signature& sig = signature();
    static const std::vector<std::pair<std::string, std::size_t>> heads = {
        {"f1", 1}, {"rec1", 1}, {"id1", 1},
        {"g2", 2}, {"rec2", 2}, {"eq", 2},
        {"h3", 3},
    };
    const auto& [name, arity] = rng.pick(heads);
    std::size_t argc = std::min({arity, budget - 2, std::size_t{3}});
    if (argc == 0) return atom();
    TermPtr head = Term::make_const(name, sig.constants.at(name));
    std::size_t remaining = budget - 2;  // application node + head leaf
    std::vector<TermPtr> args;
    for (std::size_t i = 0; i < argc; ++i) {
      std::size_t slots_left = argc - i - 1;
      std::size_t share = remaining > slots_left
                              ? rng.range(1, remaining - slots_left)
                              : 1;
      args.push_back(gen(share));
      remaining -= std::min(share, remaining);
    }
    return Term::make_app(std::move(head), args);
  }
};

}  // namespace

TermPtr gen_term(Rng& rng, std::size_t max_nodes, bool allow_abs) {
  TermGen gen{rng, allow_abs};
  for (int attempt = 0; attempt < 8; ++attempt) {
    TermPtr t = gen.gen(rng.range(1, max_nodes));
    if (flat_node_count(t) <= max_nodes) return t;
  }
  return gen.atom();
}

Goal gen_goal(Rng& rng, std::size_t max_nodes, bool allow_abs) {
  TermPtr statement = gen_term(rng, max_nodes, allow_abs);
  std::map<std::string, SimpleType> table;
  for (const auto& [name, type] : free_vars(statement)) {
    table.emplace(name, type);
  }
  return Goal::make(statement, std::move(table));
}

InductArgs gen_args(Rng& rng, const Goal& goal) {
  auto pool = subterms(goal);
  std::vector<TermPtr> ind_terms;
  std::size_t want = rng.below(4);
  for (std::size_t i = 0; i < want && !pool.empty(); ++i) {
    TermPtr t = pool[rng.below(pool.size())];
    bool dup = false;
    for (const auto& u : ind_terms) dup = dup || *u == *t;
    if (!dup) ind_terms.push_back(t);
  }
  if (rng.chance(0.2)) {
    // A term that may not occur in the goal at all.
    ind_terms.push_back(Term::make_free("zz", SimpleType::con("nat")));
  }

  std::vector<TermPtr> arbitrary;
  for (const auto& [name, type] : free_vars(goal.statement)) {
    if (rng.chance(0.3)) arbitrary.push_back(Term::make_free(name, type));
  }

  std::vector<std::string> rules;
  static const std::vector<std::string> rule_pool = {
      "rec1.induct", "rec2.induct", "rec2.cases", "id1.cases", "ghost.rule"};
  for (const auto& rule : rule_pool) {
    if (rng.chance(0.25)) rules.push_back(rule);
  }
  return InductArgs::make(std::move(ind_terms), std::move(arbitrary),
                          std::move(rules));
}

LVar GenScope::fresh(VarKind kind) {
  LVar var{kind, next_id[static_cast<int>(kind)]++};
  bound.push_back(var);
  return var;
}

namespace {

std::vector<LVar> bound_of_kind(const GenScope& scope, VarKind kind) {
  std::vector<LVar> out;
  for (const auto& var : scope.bound) {
    if (var.kind == kind) out.push_back(var);
  }
  return out;
}

AssertionPtr gen_atom(Rng& rng, const GenScope& scope) {
  auto trms = bound_of_kind(scope, VarKind::Trm);
  auto occs = bound_of_kind(scope, VarKind::TrmOcc);
  auto rules = bound_of_kind(scope, VarKind::Rule);
  auto numbs = bound_of_kind(scope, VarKind::Numb);

  std::vector<AtomKind> options;
  if (!rules.empty() && !occs.empty()) options.push_back(AtomKind::IsRuleOf);
  if (!occs.empty()) {
    options.push_back(AtomKind::IsRecursiveCnst);
    options.push_back(AtomKind::IsFreeVar);
  }
  if (!occs.empty() && !numbs.empty()) options.push_back(AtomKind::IsNthArgOf);
  if (!trms.empty() && !numbs.empty()) options.push_back(AtomKind::IsNthInd);
  if (!trms.empty()) {
    options.push_back(AtomKind::IsSameAs);
    options.push_back(AtomKind::IsInArbitrary);
  }
  if (options.empty()) return Assertion::literal(rng.chance(0.5));

  AtomKind kind = rng.pick(options);
  std::vector<LVar> args;
  for (VarKind k : atom_arg_kinds(kind)) {
    switch (k) {
      case VarKind::Trm: args.push_back(rng.pick(trms)); break;
      case VarKind::TrmOcc: args.push_back(rng.pick(occs)); break;
      case VarKind::Rule: args.push_back(rng.pick(rules)); break;
      case VarKind::Numb: args.push_back(rng.pick(numbs)); break;
    }
  }
  return Assertion::atom(kind, std::move(args));
}

}  // namespace

AssertionPtr gen_assertion_in_scope(Rng& rng, GenScope& scope,
                                    std::size_t depth,
                                    const AssertionConfig& config) {
  if (depth == 0) {
    return rng.chance(0.7) ? gen_atom(rng, scope)
                           : Assertion::literal(rng.chance(0.5));
  }
  enum { kLeaf, kNot, kConn, kQuant, kQuantOcc };
  std::vector<int> options = {kLeaf, kNot, kConn, kConn};
  bool can_quant = scope.quant_depth < config.max_quant_depth;
  if (can_quant) {
    options.push_back(kQuant);
    options.push_back(kQuant);
    if (!bound_of_kind(scope, VarKind::Trm).empty()) {
      options.push_back(kQuantOcc);
    }
  }
  switch (rng.pick(options)) {
    case kLeaf:
      return gen_atom(rng, scope);
    case kNot:
      return Assertion::negation(
          gen_assertion_in_scope(rng, scope, depth - 1, config));
    case kConn: {
      static const std::vector<Assertion::ConnKind> kinds = {
          Assertion::ConnKind::And, Assertion::ConnKind::Or,
          Assertion::ConnKind::Imply};
      auto lhs = gen_assertion_in_scope(rng, scope, depth - 1, config);
      auto rhs = gen_assertion_in_scope(rng, scope, depth - 1, config);
      return Assertion::conn(rng.pick(kinds), std::move(lhs), std::move(rhs));
    }
    case kQuant: {
      static const std::vector<Domain> domains = {
          Domain::Trm, Domain::Rule, Domain::Ind, Domain::Arb, Domain::Numb};
      Domain domain = rng.pick(domains);
      Polarity pol = rng.chance(0.5) ? Polarity::Some : Polarity::All;
      LVar var = scope.fresh(domain_var_kind(domain));
      ++scope.quant_depth;
      auto body = gen_assertion_in_scope(rng, scope, depth - 1, config);
      --scope.quant_depth;
      scope.bound.pop_back();
      return Assertion::quant(pol, domain, var, std::move(body));
    }
    default: {
      auto trms = bound_of_kind(scope, VarKind::Trm);
      LVar term_var = rng.pick(trms);
      Polarity pol = rng.chance(0.5) ? Polarity::Some : Polarity::All;
      LVar occ_var = scope.fresh(VarKind::TrmOcc);
      ++scope.quant_depth;
      auto body = gen_assertion_in_scope(rng, scope, depth - 1, config);
      --scope.quant_depth;
      scope.bound.pop_back();
      return Assertion::quant_occ_of(pol, occ_var, term_var, std::move(body));
    }
  }
}

AssertionPtr gen_assertion(Rng& rng, const AssertionConfig& config) {
  GenScope scope;
  return gen_assertion_in_scope(rng, scope, rng.range(1, config.max_depth),
                                config);
}

}  // namespace testgen
