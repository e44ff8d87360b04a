#include "lifter/assertion_parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <vector>

#include "lifter/goal_format.hpp"

namespace lifter {

namespace {

enum class Tok { LParen, RParen, Comma, Semicolon, Number, Name, End };

struct Token {
  Tok kind;
  std::string text;
  unsigned long number = 0;
  SourcePos pos;
};

// Replaces (* ... *) comments with spaces, keeping newlines so positions
// survive. Comments do not nest.
std::string strip_comments(std::string_view text, const std::string& origin) {
  std::string out(text);
  std::size_t i = 0;
  int line = 1, col = 1;
  auto bump = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < out.size()) {
    if (out[i] == '(' && i + 1 < out.size() && out[i + 1] == '*') {
      SourcePos open{line, col};
      bool closed = false;
      while (i < out.size()) {
        if (out[i] == '*' && i + 1 < out.size() && out[i + 1] == ')') {
          bump(out[i]);
          out[i++] = ' ';
          bump(out[i]);
          out[i++] = ' ';
          closed = true;
          break;
        }
        char c = out[i];
        bump(c);
        if (c != '\n') out[i] = ' ';
        ++i;
      }
      if (!closed) {
        throw ParseError("unterminated comment", open, origin);
      }
      continue;
    }
    bump(out[i]);
    ++i;
  }
  return out;
}

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex(std::string_view text, const std::string& origin) {
  std::string cleaned = strip_comments(text, origin);
  std::vector<Token> tokens;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&]() {
    if (cleaned[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < cleaned.size()) {
    char c = cleaned[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    SourcePos pos{line, col};
    if (c == '(') {
      tokens.push_back({Tok::LParen, "(", 0, pos});
      advance();
    } else if (c == ')') {
      tokens.push_back({Tok::RParen, ")", 0, pos});
      advance();
    } else if (c == ',') {
      tokens.push_back({Tok::Comma, ",", 0, pos});
      advance();
    } else if (c == ';') {
      tokens.push_back({Tok::Semicolon, ";", 0, pos});
      advance();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (i < cleaned.size() &&
             std::isdigit(static_cast<unsigned char>(cleaned[i]))) {
        digits += cleaned[i];
        advance();
      }
      if (digits.size() > 9) {
        throw ParseError("numeral too large", pos, origin);
      }
      tokens.push_back({Tok::Number, digits, std::stoul(digits), pos});
    } else if (is_name_start(c)) {
      std::string name;
      while (i < cleaned.size() && is_name_char(cleaned[i])) {
        name += cleaned[i];
        advance();
      }
      tokens.push_back({Tok::Name, name, 0, pos});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", pos,
                       origin);
    }
  }
  tokens.push_back({Tok::End, "", 0, {line, col}});
  return tokens;
}

const std::map<std::string, std::pair<Polarity, Domain>, std::less<>>
    kQuantNames = {
        {"Some_Trm", {Polarity::Some, Domain::Trm}},
        {"All_Trm", {Polarity::All, Domain::Trm}},
        {"Some_Rule", {Polarity::Some, Domain::Rule}},
        {"All_Rule", {Polarity::All, Domain::Rule}},
        {"Some_Ind", {Polarity::Some, Domain::Ind}},
        {"All_Ind", {Polarity::All, Domain::Ind}},
        {"Some_Arb", {Polarity::Some, Domain::Arb}},
        {"All_Arb", {Polarity::All, Domain::Arb}},
        {"Some_Numb", {Polarity::Some, Domain::Numb}},
        {"All_Numb", {Polarity::All, Domain::Numb}},
};

const std::map<std::string, Polarity, std::less<>> kOccQuantNames = {
    {"Some_Trm_Occ_Of", Polarity::Some},
    {"All_Trm_Occ_Of", Polarity::All},
};

const std::map<std::string, VarKind, std::less<>> kVarKindNames = {
    {"Trm", VarKind::Trm},
    {"Trm_Occ", VarKind::TrmOcc},
    {"Rule", VarKind::Rule},
    {"Numb", VarKind::Numb},
};

const std::map<std::string, AtomKind, std::less<>> kPrefixAtomNames = {
    {"Is_Recursive_Cnst", AtomKind::IsRecursiveCnst},
    {"Is_Nth_Arg_Of", AtomKind::IsNthArgOf},
    {"Is_Free_Var", AtomKind::IsFreeVar},
    {"Is_In_Arbitrary", AtomKind::IsInArbitrary},
};

const std::map<std::string, AtomKind, std::less<>> kInfixAtomNames = {
    {"Is_Rule_Of", AtomKind::IsRuleOf},
    {"Is_Nth_Ind", AtomKind::IsNthInd},
    {"Is_Same_As", AtomKind::IsSameAs},
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string origin)
      : tokens_(std::move(tokens)), origin_(std::move(origin)) {}

  AssertionPtr parse() {
    AssertionPtr expr = parse_expr();
    expect(Tok::Semicolon, "expected ';' after the assertion");
    expect(Tok::End, "trailing input after ';'");
    if (auto errors = check_scopes(*expr); !errors.empty()) {
      std::string joined;
      for (const auto& e : errors) {
        if (!joined.empty()) joined += "; ";
        joined += e.message;
      }
      throw ParseError(joined, errors.front().pos, origin_);
    }
    return expr;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  const Token& get() { return tokens_[index_++]; }

  [[noreturn]] void fail(const std::string& message, const Token& tok) const {
    throw ParseError(message, tok.pos, origin_);
  }

  const Token& expect(Tok kind, const std::string& message) {
    if (peek().kind != kind) fail(message, peek());
    return get();
  }

  bool at_name(std::string_view name) const {
    return peek().kind == Tok::Name && peek().text == name;
  }

  // Precedence: Not > And > Or > Imply; Imply right-assoc, And/Or left.
  AssertionPtr parse_expr() { return parse_imply(); }

  AssertionPtr parse_imply() {
    AssertionPtr lhs = parse_or();
    if (at_name("Imply")) {
      SourcePos pos = get().pos;
      return Assertion::conn(Assertion::ConnKind::Imply, std::move(lhs),
                             parse_imply(), pos);
    }
    return lhs;
  }

  AssertionPtr parse_or() {
    AssertionPtr lhs = parse_and();
    while (at_name("Or")) {
      SourcePos pos = get().pos;
      lhs = Assertion::conn(Assertion::ConnKind::Or, std::move(lhs),
                            parse_and(), pos);
    }
    return lhs;
  }

  AssertionPtr parse_and() {
    AssertionPtr lhs = parse_unary();
    while (at_name("And")) {
      SourcePos pos = get().pos;
      lhs = Assertion::conn(Assertion::ConnKind::And, std::move(lhs),
                            parse_unary(), pos);
    }
    return lhs;
  }

  AssertionPtr parse_unary() {
    if (at_name("Not")) {
      SourcePos pos = get().pos;
      return Assertion::negation(parse_unary(), pos);
    }
    return parse_primary();
  }

  AssertionPtr parse_primary() {
    const Token& tok = peek();
    if (tok.kind == Tok::LParen) {
      get();
      AssertionPtr inner = parse_expr();
      expect(Tok::RParen, "expected ')'");
      return inner;
    }
    if (tok.kind != Tok::Name) {
      fail("expected an assertion expression", tok);
    }
    if (tok.text == "True" || tok.text == "False") {
      SourcePos pos = get().pos;
      return Assertion::literal(tok.text == "True", pos);
    }
    if (auto it = kQuantNames.find(tok.text); it != kQuantNames.end()) {
      SourcePos pos = get().pos;
      auto [pol, domain] = it->second;
      expect(Tok::LParen, "expected '(' after quantifier");
      LVar var = parse_var(domain_var_kind(domain),
                           quant_name(pol, domain) + " binds");
      expect(Tok::Comma, "expected ','");
      AssertionPtr body = parse_expr();
      expect(Tok::RParen, "expected ')'");
      return Assertion::quant(pol, domain, var, std::move(body), pos);
    }
    if (auto it = kOccQuantNames.find(tok.text); it != kOccQuantNames.end()) {
      SourcePos pos = get().pos;
      std::string name = tok.text;
      expect(Tok::LParen, "expected '(' after quantifier");
      LVar occ_var = parse_var(VarKind::TrmOcc, name + " binds");
      expect(Tok::Comma, "expected ','");
      LVar term_var = parse_var(VarKind::Trm, name + " ranges over");
      expect(Tok::Comma, "expected ','");
      AssertionPtr body = parse_expr();
      expect(Tok::RParen, "expected ')'");
      return Assertion::quant_occ_of(it->second, occ_var, term_var,
                                     std::move(body), pos);
    }
    if (auto it = kPrefixAtomNames.find(tok.text);
        it != kPrefixAtomNames.end()) {
      SourcePos pos = get().pos;
      AtomKind kind = it->second;
      auto kinds = atom_arg_kinds(kind);
      expect(Tok::LParen, "expected '(' after atom");
      std::vector<LVar> args;
      for (std::size_t i = 0; i < kinds.size(); ++i) {
        if (i > 0) expect(Tok::Comma, "expected ','");
        args.push_back(parse_var(
            kinds[i], "argument " + std::to_string(i + 1) + " of " +
                          std::string(atom_name(kind)) + " expects"));
      }
      expect(Tok::RParen, "expected ')'");
      return Assertion::atom(kind, std::move(args), pos);
    }
    if (kVarKindNames.count(tok.text)) {
      // Infix atom: <var> Is_Rule_Of/Is_Nth_Ind/Is_Same_As <var>.
      SourcePos pos = tok.pos;
      LVar lhs = parse_any_var();
      const Token& op = peek();
      if (op.kind != Tok::Name || !kInfixAtomNames.count(op.text)) {
        fail("expected Is_Rule_Of, Is_Nth_Ind or Is_Same_As after " +
                 to_string(lhs),
             op);
      }
      AtomKind kind = kInfixAtomNames.at(get().text);
      auto kinds = atom_arg_kinds(kind);
      check_var_kind(lhs, kinds[0],
                     "left operand of " + std::string(atom_name(kind)) +
                         " expects",
                     pos);
      LVar rhs = parse_var(kinds[1], "right operand of " +
                                         std::string(atom_name(kind)) +
                                         " expects");
      return Assertion::atom(kind, {lhs, rhs}, pos);
    }
    fail("unknown quantifier or atom name '" + tok.text + "'", tok);
  }

  LVar parse_any_var() {
    const Token& tok = peek();
    if (tok.kind != Tok::Name || !kVarKindNames.count(tok.text)) {
      fail("expected a variable (Trm, Trm_Occ, Rule or Numb)", tok);
    }
    VarKind kind = kVarKindNames.at(get().text);
    const Token& num = expect(Tok::Number, "expected a variable numeral");
    return LVar{kind, static_cast<unsigned>(num.number)};
  }

  void check_var_kind(const LVar& var, VarKind expected,
                      const std::string& what, SourcePos pos) {
    if (var.kind != expected) {
      throw ParseError(what + " a " + std::string(var_kind_name(expected)) +
                           " variable, got " + to_string(var),
                       pos, origin_);
    }
  }

  LVar parse_var(VarKind expected, const std::string& what) {
    SourcePos pos = peek().pos;
    LVar var = parse_any_var();
    check_var_kind(var, expected, what, pos);
    return var;
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  std::string origin_;
};

}  // namespace

AssertionPtr parse_assertion(std::string_view text, const std::string& origin) {
  return Parser(lex(text, origin), origin).parse();
}

AssertionPtr load_assertion_file(const std::string& path) {
  return parse_assertion(read_text_file(path), path);
}

}  // namespace lifter
