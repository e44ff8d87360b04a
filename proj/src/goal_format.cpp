#include "lifter/goal_format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

namespace lifter {

namespace {

// Character cursor with 1-based line/column tracking, starting at base.
class Cursor {
 public:
  Cursor(std::string_view text, SourcePos base, std::string origin)
      : text_(text), pos_(base), origin_(std::move(origin)) {}

  bool done() const { return index_ >= text_.size(); }
  char peek() const { return text_[index_]; }
  SourcePos pos() const { return pos_; }
  const std::string& origin() const { return origin_; }

  char advance() {
    char c = text_[index_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.col = 1;
    } else {
      ++pos_.col;
    }
    return c;
  }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) {
      advance();
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, pos_, origin_);
  }

 private:
  std::string_view text_;
  std::size_t index_ = 0;
  SourcePos pos_;
  std::string origin_;
};

bool is_symbol_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')';
}

Sexpr read_one(Cursor& cur) {
  cur.skip_ws();
  if (cur.done()) cur.fail("unexpected end of input");
  Sexpr node;
  node.pos = cur.pos();
  if (cur.peek() == '(') {
    cur.advance();
    node.leaf = false;
    while (true) {
      cur.skip_ws();
      if (cur.done()) cur.fail("unbalanced parentheses: missing ')'");
      if (cur.peek() == ')') {
        cur.advance();
        break;
      }
      node.items.push_back(read_one(cur));
    }
    if (node.items.empty()) {
      throw ParseError("empty application '()'", node.pos, cur.origin());
    }
    return node;
  }
  if (cur.peek() == ')') cur.fail("unbalanced parentheses: unexpected ')'");
  while (!cur.done() && is_symbol_char(cur.peek())) {
    node.symbol += cur.advance();
  }
  return node;
}

}  // namespace

Sexpr read_sexpr(std::string_view text, SourcePos base,
                 const std::string& origin) {
  Cursor cur(text, base, origin);
  Sexpr node = read_one(cur);
  cur.skip_ws();
  if (!cur.done()) cur.fail("trailing input after expression");
  return node;
}

// ---------------------------------------------------------------------------
// Type syntax

namespace {

class TypeParser {
 public:
  TypeParser(std::string_view text, SourcePos base, std::string origin)
      : cur_(text, base, std::move(origin)) {}

  SimpleType parse() {
    SimpleType t = parse_fun();
    cur_.skip_ws();
    if (!cur_.done()) cur_.fail("trailing input after type");
    return t;
  }

 private:
  // type := posttype ('=>' type)?   (right-associative)
  SimpleType parse_fun() {
    SimpleType lhs = parse_postfix();
    cur_.skip_ws();
    if (try_arrow()) return SimpleType::fun(std::move(lhs), parse_fun());
    return lhs;
  }

  bool try_arrow() {
    if (cur_.done() || cur_.peek() != '=') return false;
    cur_.advance();
    if (cur_.done() || cur_.peek() != '>') cur_.fail("expected '>' after '='");
    cur_.advance();
    return true;
  }

  // posttype := primary name*   where each name wraps as a constructor
  SimpleType parse_postfix() {
    cur_.skip_ws();
    if (cur_.done()) cur_.fail("expected a type");

    std::vector<SimpleType> prefix_args;
    SimpleType t = SimpleType::con("", {});
    bool have = false;
    if (cur_.peek() == '(') {
      SourcePos open = cur_.pos();
      cur_.advance();
      prefix_args.push_back(parse_fun());
      cur_.skip_ws();
      while (!cur_.done() && cur_.peek() == ',') {
        cur_.advance();
        prefix_args.push_back(parse_fun());
        cur_.skip_ws();
      }
      if (cur_.done() || cur_.peek() != ')') {
        throw ParseError("unbalanced parentheses in type", open,
                         origin());
      }
      cur_.advance();
      if (prefix_args.size() == 1) {
        t = prefix_args[0];  // parenthesized type
        have = true;
        prefix_args.clear();
      }
    } else if (cur_.peek() == '\'') {
      cur_.advance();
      std::string name = read_name("type variable name");
      t = SimpleType::var(std::move(name));
      have = true;
    } else {
      std::string name = read_name("type name");
      t = SimpleType::con(std::move(name), {});
      have = true;
    }

    if (!prefix_args.empty()) {
      // ('a, 'b) pair: a constructor name must follow.
      cur_.skip_ws();
      std::string name = read_name("type constructor after '(...)'");
      t = SimpleType::con(std::move(name), std::move(prefix_args));
      have = true;
    }
    (void)have;

    // Postfix constructor chain: 'a list list.
    while (true) {
      cur_.skip_ws();
      if (cur_.done() || !is_name_start(cur_.peek())) break;
      std::string name = read_name("type constructor");
      t = SimpleType::con(std::move(name), {std::move(t)});
    }
    return t;
  }

  static bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '.' || c == '\'';
  }

  std::string read_name(const std::string& what) {
    cur_.skip_ws();
    if (cur_.done() || !is_name_start(cur_.peek())) {
      cur_.fail("expected " + what);
    }
    std::string name;
    while (!cur_.done() && is_name_char(cur_.peek())) name += cur_.advance();
    return name;
  }

  const std::string& origin() const { return cur_.origin(); }

  Cursor cur_;
};

}  // namespace

SimpleType parse_type(std::string_view text, SourcePos base,
                      const std::string& origin) {
  return TypeParser(text, base, origin).parse();
}

// ---------------------------------------------------------------------------
// Elaboration

namespace {

// Type fit used at parse time only: type variables act as wildcards on either
// side, everything else must agree structurally. No unification.
bool type_fits(const SimpleType& expected, const SimpleType& actual) {
  if (expected.is_var() || actual.is_var()) return true;
  if (expected.is_con() && actual.is_con()) {
    if (expected.name() != actual.name()) return false;
    const auto& xs = expected.con_args();
    const auto& ys = actual.con_args();
    if (xs.size() != ys.size()) return false;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!type_fits(xs[i], ys[i])) return false;
    }
    return true;
  }
  if (expected.is_fun() && actual.is_fun()) {
    return type_fits(expected.fun_domain(), actual.fun_domain()) &&
           type_fits(expected.fun_codomain(), actual.fun_codomain());
  }
  return false;
}

struct Elaborated {
  TermPtr term;
  SimpleType type;
};

Elaborated elaborate_rec(const Sexpr& sexpr, const TypeTable& constants,
                         const TypeTable& frees, const std::string& origin) {
  if (sexpr.leaf) {
    if (auto it = constants.find(sexpr.symbol); it != constants.end()) {
      return {Term::make_const(sexpr.symbol, it->second), it->second};
    }
    if (auto it = frees.find(sexpr.symbol); it != frees.end()) {
      return {Term::make_free(sexpr.symbol, it->second), it->second};
    }
    throw ParseError("unknown symbol '" + sexpr.symbol + "'", sexpr.pos,
                     origin);
  }
  if (sexpr.items.size() < 2) {
    throw ParseError("application needs at least one argument", sexpr.pos,
                     origin);
  }
  Elaborated head = elaborate_rec(sexpr.items[0], constants, frees, origin);
  auto flat = head.type.flatten();
  std::size_t argc = sexpr.items.size() - 1;
  if (flat.params.size() < argc) {
    throw ParseError("'" + print_term(head.term) + "' of type " +
                         head.type.to_string() + " applied to " +
                         std::to_string(argc) + " arguments",
                     sexpr.pos, origin);
  }
  std::vector<TermPtr> args;
  args.reserve(argc);
  for (std::size_t i = 0; i < argc; ++i) {
    Elaborated arg =
        elaborate_rec(sexpr.items[i + 1], constants, frees, origin);
    if (!type_fits(flat.params[i], arg.type)) {
      throw ParseError("argument " + std::to_string(i + 1) + " of '" +
                           print_term(head.term) + "' has type " +
                           arg.type.to_string() + ", expected " +
                           flat.params[i].to_string(),
                       sexpr.items[i + 1].pos, origin);
    }
    args.push_back(std::move(arg.term));
  }
  std::vector<SimpleType> rest(flat.params.begin() +
                                   static_cast<std::ptrdiff_t>(argc),
                               flat.params.end());
  return {Term::make_app(std::move(head.term), args),
          SimpleType::unflatten(rest, flat.result)};
}

}  // namespace

TermPtr elaborate_term(const Sexpr& sexpr, const TypeTable& constants,
                       const TypeTable& frees, const std::string& origin) {
  return elaborate_rec(sexpr, constants, frees, origin).term;
}

TermPtr parse_term(std::string_view text, const TypeTable& constants,
                   const TypeTable& frees, SourcePos base,
                   const std::string& origin) {
  return elaborate_term(read_sexpr(text, base, origin), constants, frees,
                        origin);
}

// ---------------------------------------------------------------------------
// Goal files

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Goal parse_goal_document(std::string_view text, const TypeTable& constants,
                         const std::string& origin) {
  std::map<std::string, SimpleType> frees;
  TermPtr statement;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view raw = text.substr(
        start, end == std::string_view::npos ? std::string_view::npos
                                             : end - start);
    ++line_no;
    std::string_view line = trim(raw);
    if (!line.empty()) {
      if (line.substr(0, 5) == "free ") {
        if (statement) {
          throw ParseError("free declaration after the goal line",
                           {line_no, 1}, origin);
        }
        std::string_view rest = trim(line.substr(5));
        std::size_t sep = rest.find("::");
        if (sep == std::string_view::npos) {
          throw ParseError("expected 'free <name> :: <type>'", {line_no, 1},
                           origin);
        }
        std::string name{trim(rest.substr(0, sep))};
        if (name.empty()) {
          throw ParseError("missing free variable name", {line_no, 1}, origin);
        }
        if (frees.count(name)) {
          throw ParseError("duplicate free variable '" + name + "'",
                           {line_no, 1}, origin);
        }
        if (constants.count(name)) {
          throw ParseError("free variable '" + name +
                               "' collides with a declared constant",
                           {line_no, 1}, origin);
        }
        frees.emplace(name, parse_type(rest.substr(sep + 2), {line_no, 1},
                                       origin));
      } else if (line.substr(0, 5) == "goal " || line == "goal") {
        if (statement) {
          throw ParseError("multiple goal lines", {line_no, 1}, origin);
        }
        std::size_t body_off = raw.find("goal") + 4;
        statement = parse_term(
            raw.substr(body_off), constants, frees,
            {line_no, static_cast<int>(body_off) + 1}, origin);
      } else {
        throw ParseError("expected a 'free' declaration or the 'goal' line",
                         {line_no, 1}, origin);
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (!statement) {
    throw ParseError("missing goal line", {line_no, 1}, origin);
  }
  return Goal::make(std::move(statement), std::move(frees));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Goal load_goal_file(const std::string& path, const TypeTable& constants) {
  return parse_goal_document(read_text_file(path), constants, path);
}

}  // namespace lifter
