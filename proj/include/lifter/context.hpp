#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lifter/goal_format.hpp"
#include "lifter/term.hpp"

namespace lifter {

// The distinguished equality constant that heads defining equations.
inline constexpr std::string_view kEqualityConst = "eq";

struct ConstDef {
  std::string name;
  SimpleType type;
  std::vector<TermPtr> equations;  // each an eq-headed statement
  std::vector<std::string> derived_rules;
  bool recursive = false;  // computed from the equations, never authored
};

// Syntactic recursion check: some equation's right-hand side mentions the
// constant itself. Mutual recursion is not chased.
bool recursion_from_equations(const std::string& name,
                              std::span<const TermPtr> equations);

// Definition database standing in for the proof state: per-constant defining
// equations, recursion flags and derived induction-rule provenance.
// Immutable after construction.
class ProofContext {
 public:
  ProofContext() = default;

  // Parses the JSON context document (see the shipped fixtures for the
  // shape). Equation variables are implicitly universally quantified frees;
  // their types are inferred positionally from the constant's declared type,
  // with a per-equation "vars" override map for nested patterns.
  static ProofContext parse(std::string_view text,
                            const std::string& origin = {});
  static ProofContext load_file(const std::string& path);

  // Programmatic construction; recomputes recursion flags and validates the
  // equation shape and rule uniqueness invariants.
  static ProofContext from_defs(std::vector<ConstDef> defs);

  // False for constants without a definition (library primitives).
  bool is_recursive(const std::string& name) const;

  // Derived rules of the constant, empty for unknown constants.
  std::vector<std::string> rules_derived_from(const std::string& name) const;

  // Owning constant of a rule name, if any.
  std::optional<std::string> rule_owner(const std::string& rule) const;

  const ConstDef* find(const std::string& name) const;
  const std::map<std::string, ConstDef>& constants() const {
    return constants_;
  }
  const std::map<std::string, std::string>& rule_index() const {
    return rule_index_;
  }

  TypeTable constant_types() const;

 private:
  std::map<std::string, ConstDef> constants_;
  std::map<std::string, std::string> rule_index_;  // rule name -> constant
};

}  // namespace lifter
