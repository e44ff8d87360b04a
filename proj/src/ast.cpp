#include "lifter/ast.hpp"

#include <algorithm>
#include <array>

namespace lifter {

std::string_view var_kind_name(VarKind kind) {
  switch (kind) {
    case VarKind::Trm: return "Trm";
    case VarKind::TrmOcc: return "Trm_Occ";
    case VarKind::Rule: return "Rule";
    case VarKind::Numb: return "Numb";
  }
  return "";
}

std::string to_string(const LVar& var) {
  return std::string(var_kind_name(var.kind)) + " " + std::to_string(var.id);
}

VarKind domain_var_kind(Domain domain) {
  switch (domain) {
    case Domain::Trm:
    case Domain::Ind:
    case Domain::Arb: return VarKind::Trm;
    case Domain::Rule: return VarKind::Rule;
    case Domain::Numb: return VarKind::Numb;
  }
  return VarKind::Trm;
}

std::string quant_name(Polarity pol, Domain domain) {
  std::string out = pol == Polarity::Some ? "Some_" : "All_";
  switch (domain) {
    case Domain::Trm: return out + "Trm";
    case Domain::Rule: return out + "Rule";
    case Domain::Ind: return out + "Ind";
    case Domain::Arb: return out + "Arb";
    case Domain::Numb: return out + "Numb";
  }
  return out;
}

std::string_view atom_name(AtomKind kind) {
  switch (kind) {
    case AtomKind::IsRuleOf: return "Is_Rule_Of";
    case AtomKind::IsRecursiveCnst: return "Is_Recursive_Cnst";
    case AtomKind::IsNthArgOf: return "Is_Nth_Arg_Of";
    case AtomKind::IsNthInd: return "Is_Nth_Ind";
    case AtomKind::IsSameAs: return "Is_Same_As";
    case AtomKind::IsFreeVar: return "Is_Free_Var";
    case AtomKind::IsInArbitrary: return "Is_In_Arbitrary";
  }
  return "";
}

namespace {
constexpr std::array kRuleOccKinds = {VarKind::Rule, VarKind::TrmOcc};
constexpr std::array kOccKind = {VarKind::TrmOcc};
constexpr std::array kOccNumbOccKinds = {VarKind::TrmOcc, VarKind::Numb,
                                         VarKind::TrmOcc};
constexpr std::array kTrmNumbKinds = {VarKind::Trm, VarKind::Numb};
constexpr std::array kTrmTrmKinds = {VarKind::Trm, VarKind::Trm};
constexpr std::array kTrmKind = {VarKind::Trm};
}  // namespace

std::span<const VarKind> atom_arg_kinds(AtomKind kind) {
  switch (kind) {
    case AtomKind::IsRuleOf: return kRuleOccKinds;
    case AtomKind::IsRecursiveCnst: return kOccKind;
    case AtomKind::IsNthArgOf: return kOccNumbOccKinds;
    case AtomKind::IsNthInd: return kTrmNumbKinds;
    case AtomKind::IsSameAs: return kTrmTrmKinds;
    case AtomKind::IsFreeVar: return kOccKind;
    case AtomKind::IsInArbitrary: return kTrmKind;
  }
  return {};
}

bool atom_is_infix(AtomKind kind) {
  return kind == AtomKind::IsRuleOf || kind == AtomKind::IsNthInd ||
         kind == AtomKind::IsSameAs;
}

AssertionPtr Assertion::literal(bool value, SourcePos pos) {
  return std::make_shared<Assertion>(BoolLit{value}, pos);
}

AssertionPtr Assertion::negation(AssertionPtr body, SourcePos pos) {
  return std::make_shared<Assertion>(Not{std::move(body)}, pos);
}

AssertionPtr Assertion::conn(ConnKind kind, AssertionPtr lhs, AssertionPtr rhs,
                             SourcePos pos) {
  return std::make_shared<Assertion>(Conn{kind, std::move(lhs), std::move(rhs)},
                                     pos);
}

AssertionPtr Assertion::quant(Polarity pol, Domain domain, LVar var,
                              AssertionPtr body, SourcePos pos) {
  return std::make_shared<Assertion>(Quant{pol, domain, var, std::move(body)},
                                     pos);
}

AssertionPtr Assertion::quant_occ_of(Polarity pol, LVar occ_var, LVar term_var,
                                     AssertionPtr body, SourcePos pos) {
  return std::make_shared<Assertion>(
      QuantOcc{pol, occ_var, term_var, std::move(body)}, pos);
}

AssertionPtr Assertion::atom(AtomKind kind, std::vector<LVar> args,
                             SourcePos pos) {
  return std::make_shared<Assertion>(Atom{kind, std::move(args)}, pos);
}

bool operator==(const Assertion& a, const Assertion& b) {
  if (a.node().index() != b.node().index()) return false;
  if (const auto* x = std::get_if<Assertion::BoolLit>(&a.node())) {
    return x->value == std::get<Assertion::BoolLit>(b.node()).value;
  }
  if (const auto* x = std::get_if<Assertion::Not>(&a.node())) {
    return *x->body == *std::get<Assertion::Not>(b.node()).body;
  }
  if (const auto* x = std::get_if<Assertion::Conn>(&a.node())) {
    const auto& y = std::get<Assertion::Conn>(b.node());
    return x->kind == y.kind && *x->lhs == *y.lhs && *x->rhs == *y.rhs;
  }
  if (const auto* x = std::get_if<Assertion::Quant>(&a.node())) {
    const auto& y = std::get<Assertion::Quant>(b.node());
    return x->pol == y.pol && x->domain == y.domain && x->var == y.var &&
           *x->body == *y.body;
  }
  if (const auto* x = std::get_if<Assertion::QuantOcc>(&a.node())) {
    const auto& y = std::get<Assertion::QuantOcc>(b.node());
    return x->pol == y.pol && x->occ_var == y.occ_var &&
           x->term_var == y.term_var && *x->body == *y.body;
  }
  const auto& x = std::get<Assertion::Atom>(a.node());
  const auto& y = std::get<Assertion::Atom>(b.node());
  return x.kind == y.kind && x.args == y.args;
}

namespace {

struct ScopeChecker {
  std::vector<LVar> bound;
  std::vector<ScopeError> errors;

  bool is_bound(const LVar& var) const {
    return std::find(bound.begin(), bound.end(), var) != bound.end();
  }

  void use(const LVar& var, SourcePos pos) {
    if (!is_bound(var)) {
      errors.push_back({"unbound variable " + to_string(var), pos});
    }
  }

  // Returns whether the binding was pushed (shadowing still pushes so the
  // body does not double-report uses of the rebound variable).
  void bind(const LVar& var, SourcePos pos) {
    if (is_bound(var)) {
      errors.push_back({"rebinding of in-scope variable " + to_string(var),
                        pos});
    }
    bound.push_back(var);
  }

  void visit(const Assertion& a) {
    if (std::get_if<Assertion::BoolLit>(&a.node())) return;
    if (const auto* n = std::get_if<Assertion::Not>(&a.node())) {
      visit(*n->body);
      return;
    }
    if (const auto* c = std::get_if<Assertion::Conn>(&a.node())) {
      visit(*c->lhs);
      visit(*c->rhs);
      return;
    }
    if (const auto* q = std::get_if<Assertion::Quant>(&a.node())) {
      VarKind expected = domain_var_kind(q->domain);
      if (q->var.kind != expected) {
        errors.push_back(
            {quant_name(q->pol, q->domain) + " must bind a " +
                 std::string(var_kind_name(expected)) + " variable, got " +
                 to_string(q->var),
             a.pos()});
      }
      bind(q->var, a.pos());
      visit(*q->body);
      bound.pop_back();
      return;
    }
    if (const auto* q = std::get_if<Assertion::QuantOcc>(&a.node())) {
      if (q->occ_var.kind != VarKind::TrmOcc) {
        errors.push_back({"occurrence quantifiers must bind a Trm_Occ "
                          "variable, got " +
                              to_string(q->occ_var),
                          a.pos()});
      }
      if (q->term_var.kind != VarKind::Trm) {
        errors.push_back({"occurrence quantifiers range over a Trm variable, "
                          "got " +
                              to_string(q->term_var),
                          a.pos()});
      } else {
        use(q->term_var, a.pos());
      }
      bind(q->occ_var, a.pos());
      visit(*q->body);
      bound.pop_back();
      return;
    }
    const auto& atom = std::get<Assertion::Atom>(a.node());
    auto kinds = atom_arg_kinds(atom.kind);
    if (atom.args.size() != kinds.size()) {
      errors.push_back(
          {std::string(atom_name(atom.kind)) + " takes " +
               std::to_string(kinds.size()) + " arguments, got " +
               std::to_string(atom.args.size()),
           a.pos()});
      return;
    }
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      if (atom.args[i].kind != kinds[i]) {
        errors.push_back(
            {"argument " + std::to_string(i + 1) + " of " +
                 std::string(atom_name(atom.kind)) + " must have kind " +
                 std::string(var_kind_name(kinds[i])) + ", got " +
                 to_string(atom.args[i]),
             a.pos()});
      } else {
        use(atom.args[i], a.pos());
      }
    }
  }
};

}  // namespace

std::vector<ScopeError> check_scopes(const Assertion& assertion) {
  ScopeChecker checker;
  checker.visit(assertion);
  return std::move(checker.errors);
}

}  // namespace lifter
