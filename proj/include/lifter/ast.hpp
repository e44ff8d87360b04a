#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lifter/error.hpp"

namespace lifter {

enum class VarKind { Trm, TrmOcc, Rule, Numb };

std::string_view var_kind_name(VarKind kind);  // "Trm", "Trm_Occ", ...

// A DSL variable such as Trm 1 or Numb 2. The numeral is an identifier, not
// a value: Numb 1 may well denote a number other than 1.
struct LVar {
  VarKind kind;
  unsigned id = 0;
  auto operator<=>(const LVar&) const = default;
};

std::string to_string(const LVar& var);  // "Trm_Occ 2"

enum class Polarity { Some, All };

// Quantifier domains. Trm/Ind/Arb all bind variables of kind Trm; they differ
// only in the set ranged over (goal subterms, induction terms, arbitrary
// variables).
enum class Domain { Trm, Rule, Ind, Arb, Numb };

VarKind domain_var_kind(Domain domain);
std::string quant_name(Polarity pol, Domain domain);  // "Some_Trm", "All_Ind"

enum class AtomKind {
  IsRuleOf,         // Rule r Is_Rule_Of Trm_Occ o
  IsRecursiveCnst,  // Is_Recursive_Cnst (Trm_Occ o)
  IsNthArgOf,       // Is_Nth_Arg_Of (Trm_Occ o2, Numb n, Trm_Occ o1)
  IsNthInd,         // Trm t Is_Nth_Ind Numb n
  IsSameAs,         // Trm t1 Is_Same_As Trm t2
  IsFreeVar,        // Is_Free_Var (Trm_Occ o)
  IsInArbitrary,    // Is_In_Arbitrary (Trm t)
};

std::string_view atom_name(AtomKind kind);            // "Is_Rule_Of"
std::span<const VarKind> atom_arg_kinds(AtomKind kind);
bool atom_is_infix(AtomKind kind);

class Assertion;
using AssertionPtr = std::shared_ptr<Assertion>;

// LiFtEr assertion AST. Nodes carry the source position they were parsed at
// (unknown for programmatically built trees); positions are ignored by
// structural equality.
class Assertion {
 public:
  struct BoolLit {
    bool value;
  };
  struct Not {
    AssertionPtr body;
  };
  enum class ConnKind { And, Or, Imply };
  struct Conn {
    ConnKind kind;
    AssertionPtr lhs;
    AssertionPtr rhs;
  };
  struct Quant {
    Polarity pol;
    Domain domain;
    LVar var;
    AssertionPtr body;
  };
  // Some_Trm_Occ_Of / All_Trm_Occ_Of: occ_var ranges over the occurrences of
  // the term already bound to term_var.
  struct QuantOcc {
    Polarity pol;
    LVar occ_var;
    LVar term_var;
    AssertionPtr body;
  };
  struct Atom {
    AtomKind kind;
    std::vector<LVar> args;
  };
  using Node = std::variant<BoolLit, Not, Conn, Quant, QuantOcc, Atom>;

  explicit Assertion(Node node, SourcePos pos = {})
      : node_(std::move(node)), pos_(pos) {}

  const Node& node() const { return node_; }
  SourcePos pos() const { return pos_; }

  static AssertionPtr literal(bool value, SourcePos pos = {});
  static AssertionPtr negation(AssertionPtr body, SourcePos pos = {});
  static AssertionPtr conn(ConnKind kind, AssertionPtr lhs, AssertionPtr rhs,
                           SourcePos pos = {});
  static AssertionPtr quant(Polarity pol, Domain domain, LVar var,
                            AssertionPtr body, SourcePos pos = {});
  static AssertionPtr quant_occ_of(Polarity pol, LVar occ_var, LVar term_var,
                                   AssertionPtr body, SourcePos pos = {});
  static AssertionPtr atom(AtomKind kind, std::vector<LVar> args,
                           SourcePos pos = {});

 private:
  Node node_;
  SourcePos pos_;
};

bool operator==(const Assertion& a, const Assertion& b);
inline bool operator!=(const Assertion& a, const Assertion& b) {
  return !(a == b);
}

struct ScopeError {
  std::string message;
  SourcePos pos;
};

// Validates the well-scoped invariant: every variable use is bound by an
// enclosing quantifier of the matching kind, quantifiers bind the kind their
// domain dictates, and no in-scope (kind, id) pair is rebound. Returns the
// violations instead of throwing so programmatic trees can be inspected.
std::vector<ScopeError> check_scopes(const Assertion& assertion);

}  // namespace lifter
