#pragma once

#include <memory>
#include <string>
#include <vector>

namespace lifter {

struct TypeFlat;

// Simple HOL-style types: type variables ('a), applied type constructors
// (nat, 'a list, ('a, 'b) pair) and right-nested function types
// ('a list => 'a list). Values are immutable and cheap to copy.
class SimpleType {
 public:
  enum class Kind { Var, Con, Fun };

  static SimpleType var(std::string name);
  static SimpleType con(std::string name, std::vector<SimpleType> args = {});
  static SimpleType fun(SimpleType domain, SimpleType codomain);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_con() const { return kind() == Kind::Con; }
  bool is_fun() const { return kind() == Kind::Fun; }

  // Var: name without the leading tick. Con: constructor name.
  const std::string& name() const;
  const std::vector<SimpleType>& con_args() const;
  const SimpleType& fun_domain() const;
  const SimpleType& fun_codomain() const;

  // Unfolds right-nested function arrows: 'a => 'b => 'c gives
  // params ['a, 'b] and result 'c. Non-function types have no params.
  TypeFlat flatten() const;

  // Rebuilds params[i] => ... => result.
  static SimpleType unflatten(const std::vector<SimpleType>& params,
                              SimpleType result);

  std::string to_string() const;

  friend bool operator==(const SimpleType& a, const SimpleType& b);
  friend bool operator!=(const SimpleType& a, const SimpleType& b) {
    return !(a == b);
  }

 private:
  struct Node;
  explicit SimpleType(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TypeFlat {
  std::vector<SimpleType> params;
  SimpleType result;
};

}  // namespace lifter
