#include "lifter/type.hpp"

#include <utility>

namespace lifter {

struct SimpleType::Node {
  Kind kind;
  std::string name;              // Var, Con
  std::vector<SimpleType> args;  // Con arguments; Fun stores {domain, codomain}
};

SimpleType SimpleType::var(std::string name) {
  return SimpleType(std::make_shared<const Node>(
      Node{Kind::Var, std::move(name), {}}));
}

SimpleType SimpleType::con(std::string name, std::vector<SimpleType> args) {
  return SimpleType(std::make_shared<const Node>(
      Node{Kind::Con, std::move(name), std::move(args)}));
}

SimpleType SimpleType::fun(SimpleType domain, SimpleType codomain) {
  return SimpleType(std::make_shared<const Node>(
      Node{Kind::Fun, {}, {std::move(domain), std::move(codomain)}}));
}

SimpleType::Kind SimpleType::kind() const { return node_->kind; }

const std::string& SimpleType::name() const { return node_->name; }

const std::vector<SimpleType>& SimpleType::con_args() const {
  return node_->args;
}

const SimpleType& SimpleType::fun_domain() const { return node_->args[0]; }

const SimpleType& SimpleType::fun_codomain() const { return node_->args[1]; }

TypeFlat SimpleType::flatten() const {
  TypeFlat flat{{}, *this};
  while (flat.result.is_fun()) {
    flat.params.push_back(flat.result.fun_domain());
    flat.result = flat.result.fun_codomain();
  }
  return flat;
}

SimpleType SimpleType::unflatten(const std::vector<SimpleType>& params,
                                 SimpleType result) {
  for (auto it = params.rbegin(); it != params.rend(); ++it) {
    result = fun(*it, std::move(result));
  }
  return result;
}

bool operator==(const SimpleType& a, const SimpleType& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case SimpleType::Kind::Var:
      return a.name() == b.name();
    case SimpleType::Kind::Con: {
      if (a.name() != b.name()) return false;
      const auto& xs = a.con_args();
      const auto& ys = b.con_args();
      if (xs.size() != ys.size()) return false;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] == ys[i])) return false;
      }
      return true;
    }
    case SimpleType::Kind::Fun:
      return a.fun_domain() == b.fun_domain() &&
             a.fun_codomain() == b.fun_codomain();
  }
  return false;
}

namespace {

// Postfix constructor arguments need parentheses when they are themselves
// function types: ('a => 'b) list.
std::string print_postfix_arg(const SimpleType& t) {
  if (t.is_fun()) return "(" + t.to_string() + ")";
  return t.to_string();
}

}  // namespace

std::string SimpleType::to_string() const {
  switch (kind()) {
    case Kind::Var:
      return "'" + name();
    case Kind::Con: {
      const auto& args = con_args();
      if (args.empty()) return name();
      if (args.size() == 1) return print_postfix_arg(args[0]) + " " + name();
      std::string out = "(";
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) out += ", ";
        out += args[i].to_string();
      }
      return out + ") " + name();
    }
    case Kind::Fun: {
      std::string dom = fun_domain().is_fun()
                            ? "(" + fun_domain().to_string() + ")"
                            : fun_domain().to_string();
      return dom + " => " + fun_codomain().to_string();
    }
  }
  return {};
}

}  // namespace lifter
