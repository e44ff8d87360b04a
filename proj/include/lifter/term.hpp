#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lifter/type.hpp"

namespace lifter {

class Term;
using TermPtr = std::shared_ptr<Term>;

// HOL-style applicative terms. Bound variables are nameless indices into the
// enclosing Abs chain; the Abs name hint is display-only and does not take
// part in structural equality. Terms are immutable once built.
class Term {
 public:
  struct Const {
    std::string name;
    SimpleType type;
  };
  struct Free {
    std::string name;
    SimpleType type;
  };
  struct Bound {
    std::size_t index;
  };
  struct Abs {
    std::string name_hint;
    SimpleType var_type;
    TermPtr body;
  };
  struct App {
    TermPtr fun;
    TermPtr arg;
  };
  using Node = std::variant<Const, Free, Bound, Abs, App>;

  explicit Term(Node node) : node_(std::move(node)) {}

  static TermPtr make_const(std::string name, SimpleType type);
  static TermPtr make_free(std::string name, SimpleType type);
  static TermPtr make_bound(std::size_t index);
  static TermPtr make_abs(std::string name_hint, SimpleType var_type,
                          TermPtr body);
  static TermPtr make_app(TermPtr fun, TermPtr arg);
  // Left-associated application of head to args.
  static TermPtr make_app(TermPtr head, const std::vector<TermPtr>& args);

  const Node& node() const { return node_; }
  const Const* as_const() const { return std::get_if<Const>(&node_); }
  const Free* as_free() const { return std::get_if<Free>(&node_); }
  const Bound* as_bound() const { return std::get_if<Bound>(&node_); }
  const Abs* as_abs() const { return std::get_if<Abs>(&node_); }
  const App* as_app() const { return std::get_if<App>(&node_); }
  bool is_atom() const { return !as_app() && !as_abs(); }

 private:
  Node node_;
};

bool operator==(const Term& a, const Term& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }

// Head and ordered argument list of a curried application; the head is never
// an App. Atoms flatten to themselves with no arguments.
struct FlatApp {
  TermPtr head;
  std::vector<TermPtr> args;
};
FlatApp flatten_app(const TermPtr& t);

// A path into the flattened view of a term: at an application with head h and
// arguments a1..ak, step 0 selects h and step i selects ai; at an Abs, step 0
// selects the body; atoms have no children. Ordering is lexicographic.
class Occurrence {
 public:
  Occurrence() = default;
  explicit Occurrence(std::vector<std::size_t> steps)
      : steps_(std::move(steps)) {}

  const std::vector<std::size_t>& steps() const { return steps_; }
  bool is_root() const { return steps_.empty(); }
  std::size_t depth() const { return steps_.size(); }
  Occurrence child(std::size_t step) const;
  // Parent path plus last step; nullopt for the root.
  std::optional<std::pair<Occurrence, std::size_t>> split_last() const;

  std::string to_string() const;  // "[1,0]"

  auto operator<=>(const Occurrence&) const = default;

 private:
  std::vector<std::size_t> steps_;
};

// A proof goal: one statement over a table of declared free variables.
struct Goal {
  TermPtr statement;
  std::map<std::string, SimpleType> frees;

  // Validates that every Free in the statement is declared with an equal type.
  static Goal make(TermPtr statement, std::map<std::string, SimpleType> frees);
};

// Children of t in the flattened addressing scheme, indexed by path step.
std::vector<TermPtr> flat_children(const TermPtr& t);

// Distinct subterms of the goal statement in first-occurrence pre-order,
// including the statement itself and all atoms; descends under Abs.
std::vector<TermPtr> subterms(const Goal& goal);

// All paths whose resolved subterm equals t, in lexicographic order.
std::vector<Occurrence> occurrences_of(const Goal& goal, const Term& t);

// Subterm at the given path; throws Error on an out-of-range step.
TermPtr resolve(const Goal& goal, const Occurrence& occ);

// If head_occ addresses the head symbol of a flattened application with k
// arguments (path of the form p+[0]) and 1 <= n <= k, the path of the nth
// argument; nullopt otherwise.
std::optional<Occurrence> nth_arg(const Goal& goal, const Occurrence& head_occ,
                                  std::size_t n);

// Name of the constant at occ, if the resolved subterm is a Const.
std::optional<std::string> head_constant(const Goal& goal,
                                         const Occurrence& occ);

// Distinct free variables in pre-order of first occurrence.
std::vector<std::pair<std::string, SimpleType>> free_vars(const TermPtr& t);

// Number of nodes of the flattened tree (equals the number of valid paths).
std::size_t flat_node_count(const TermPtr& t);

// Canonical goal-format rendering: atoms print as their symbol, applications
// as (h a1 ... ak) with no redundant parentheses. Binder terms fall outside
// the file format and print in a display-only lambda notation.
std::string print_term(const TermPtr& t);

}  // namespace lifter
