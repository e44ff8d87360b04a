#include <doctest.h>

#include <string>

#include "lifter/assertion_parser.hpp"
#include "lifter/pretty.hpp"
#include "fixtures.hpp"
#include "testgen.hpp"

using namespace lifter;

namespace {

using CK = Assertion::ConnKind;

AssertionPtr lit(bool v) { return Assertion::literal(v); }

}  // namespace

TEST_CASE("smallest programs") {
  CHECK(*parse_assertion("True;") == *lit(true));
  CHECK(*parse_assertion("  False ;") == *lit(false));
  CHECK(pretty_print(*lit(true)) == "True;");
  CHECK(pretty_print(*Assertion::conn(CK::And, lit(true), lit(false))) ==
        "True And False;");
}

TEST_CASE("the shipped rule/argument-order assertion parses") {
  auto a = load_assertion_file(
      testfix::path("heuristics/heuristic_rule_arg_order.lifter"));
  const auto* conn = std::get_if<Assertion::Conn>(&a->node());
  REQUIRE(conn != nullptr);
  CHECK(conn->kind == CK::Imply);

  // Antecedent: Some_Rule (Rule 1, True).
  const auto* antecedent = std::get_if<Assertion::Quant>(&conn->lhs->node());
  REQUIRE(antecedent != nullptr);
  CHECK(antecedent->pol == Polarity::Some);
  CHECK(antecedent->domain == Domain::Rule);
  CHECK(antecedent->var == LVar{VarKind::Rule, 1});
  CHECK(*antecedent->body == *lit(true));

  CHECK(check_scopes(*a).empty());

  SUBCASE("pretty print round trips and is idempotent") {
    std::string printed = pretty_print(*a);
    auto b = parse_assertion(printed);
    CHECK(*b == *a);
    CHECK(pretty_print(*b) == printed);
  }
}

TEST_CASE("the shipped structural assertion parses and round trips") {
  auto a = load_assertion_file(
      testfix::path("heuristics/heuristic_structural.lifter"));
  CHECK(check_scopes(*a).empty());
  std::string printed = pretty_print(*a);
  CHECK(*parse_assertion(printed) == *a);
}

TEST_CASE("connective precedence and associativity") {
  // Not > And > Or > Imply.
  CHECK(*parse_assertion("Not True And False;") ==
        *Assertion::conn(CK::And, Assertion::negation(lit(true)), lit(false)));
  CHECK(*parse_assertion("True Or False And True;") ==
        *Assertion::conn(CK::Or, lit(true),
                         Assertion::conn(CK::And, lit(false), lit(true))));
  CHECK(*parse_assertion("True And False Or True;") ==
        *Assertion::conn(CK::Or,
                         Assertion::conn(CK::And, lit(true), lit(false)),
                         lit(true)));
  CHECK(*parse_assertion("True Imply False Or True;") ==
        *Assertion::conn(CK::Imply, lit(true),
                         Assertion::conn(CK::Or, lit(false), lit(true))));

  // Imply is right-associative; And/Or left-associative.
  CHECK(*parse_assertion("True Imply False Imply True;") ==
        *Assertion::conn(CK::Imply, lit(true),
                         Assertion::conn(CK::Imply, lit(false), lit(true))));
  CHECK(*parse_assertion("True And False And True;") ==
        *Assertion::conn(CK::And,
                         Assertion::conn(CK::And, lit(true), lit(false)),
                         lit(true)));
  CHECK(*parse_assertion("True Or False Or True;") ==
        *Assertion::conn(CK::Or,
                         Assertion::conn(CK::Or, lit(true), lit(false)),
                         lit(true)));

  // Parentheses override.
  CHECK(*parse_assertion("(True Imply False) Imply True;") ==
        *Assertion::conn(CK::Imply,
                         Assertion::conn(CK::Imply, lit(true), lit(false)),
                         lit(true)));
  CHECK(*parse_assertion("Not (True And False);") ==
        *Assertion::negation(Assertion::conn(CK::And, lit(true), lit(false))));
}

TEST_CASE("comments are stripped") {
  CHECK(*parse_assertion("(* leading *) True (* inner *) ;") == *lit(true));
  CHECK_THROWS_AS(parse_assertion("(* unterminated True;"), ParseError);
}

TEST_CASE("parser error reporting") {
  SUBCASE("syntax errors carry positions") {
    try {
      parse_assertion("True And\n  Garbage;", "test.lifter");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.pos().line == 2);
      CHECK(e.origin() == "test.lifter");
      CHECK(std::string(e.what()).find("Garbage") != std::string::npos);
    }
  }

  SUBCASE("unknown names are rejected") {
    CHECK_THROWS_AS(parse_assertion("Some_Thing (Trm 1, True);"), ParseError);
  }

  SUBCASE("missing semicolon") {
    CHECK_THROWS_AS(parse_assertion("True"), ParseError);
    CHECK_THROWS_AS(parse_assertion("True; False;"), ParseError);
  }

  SUBCASE("kind mismatch in a quantifier") {
    try {
      parse_assertion("Some_Rule (Trm 1, True);");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("Trm 1") != std::string::npos);
    }
  }

  SUBCASE("kind mismatch in an infix atom") {
    CHECK_THROWS_AS(parse_assertion(
                        "Some_Rule (Rule 1, Rule 1 Is_Nth_Ind Numb 1);"),
                    ParseError);
  }

  SUBCASE("unbound variable") {
    try {
      parse_assertion("Some_Trm (Trm 1, Trm 1 Is_Nth_Ind Numb 1);");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("Numb 1") != std::string::npos);
    }
  }

  SUBCASE("shadowing is rejected") {
    CHECK_THROWS_AS(parse_assertion("Some_Trm (Trm 1, Some_Trm (Trm 1, True));"),
                    ParseError);
  }
}

TEST_CASE("check_scopes on programmatic trees") {
  SUBCASE("two unbound variables give two errors") {
    auto atom = Assertion::atom(AtomKind::IsNthInd,
                                {LVar{VarKind::Trm, 5}, LVar{VarKind::Numb, 1}});
    auto errors = check_scopes(*atom);
    CHECK(errors.size() == 2);
  }

  SUBCASE("domain/kind mismatch") {
    auto bad = Assertion::quant(Polarity::Some, Domain::Rule,
                                LVar{VarKind::Trm, 1}, lit(true));
    CHECK(check_scopes(*bad).size() == 1);
  }

  SUBCASE("Ind and Arb bind Trm variables") {
    auto ok = Assertion::quant(
        Polarity::All, Domain::Ind, LVar{VarKind::Trm, 2},
        Assertion::atom(AtomKind::IsInArbitrary, {LVar{VarKind::Trm, 2}}));
    CHECK(check_scopes(*ok).empty());
  }

  SUBCASE("wrong atom arity") {
    auto bad = Assertion::atom(AtomKind::IsNthInd, {LVar{VarKind::Trm, 1}});
    CHECK(check_scopes(*bad).size() == 1);
  }

  SUBCASE("disjoint scopes may reuse an id") {
    auto a = Assertion::conn(
        CK::And,
        Assertion::quant(Polarity::Some, Domain::Trm, LVar{VarKind::Trm, 1},
                         lit(true)),
        Assertion::quant(Polarity::Some, Domain::Trm, LVar{VarKind::Trm, 1},
                         lit(true)));
    CHECK(check_scopes(*a).empty());
  }
}

TEST_CASE("parse/pretty round trip on random well-scoped assertions") {
  testgen::Rng rng(100);
  for (int i = 0; i < 1000; ++i) {
    auto a = testgen::gen_assertion(rng, {6, 3});
    REQUIRE(check_scopes(*a).empty());
    std::string printed = pretty_print(*a);
    CAPTURE(printed);
    auto back = parse_assertion(printed);
    CHECK(*back == *a);
    CHECK(pretty_print(*back) == printed);
  }
}
