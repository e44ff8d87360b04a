#include <doctest.h>

#include <algorithm>

#include "lifter/goal_format.hpp"
#include "lifter/term.hpp"
#include "oracle.hpp"
#include "fixtures.hpp"
#include "testgen.hpp"

using namespace lifter;

namespace {

Occurrence occ(std::vector<std::size_t> steps) {
  return Occurrence(std::move(steps));
}

}  // namespace

TEST_CASE("simple types: structure, flatten, printing") {
  auto t = parse_type("'a list => 'a list => 'a list");
  auto flat = t.flatten();
  CHECK(flat.params.size() == 2);
  CHECK(flat.params[0] == parse_type("'a list"));
  CHECK(flat.result == parse_type("'a list"));
  CHECK(SimpleType::unflatten(flat.params, flat.result) == t);
  CHECK(t.to_string() == "'a list => 'a list => 'a list");

  CHECK(parse_type("'a") == SimpleType::var("a"));
  CHECK(parse_type("nat").flatten().params.empty());
  CHECK(parse_type("('a => 'b) list").to_string() == "('a => 'b) list");
  CHECK(parse_type("('a, 'b) pair").to_string() == "('a, 'b) pair");
  CHECK(parse_type("'a list list").to_string() == "'a list list");
  CHECK(parse_type("'a => ('b => 'c)") == parse_type("'a => 'b => 'c"));
  CHECK(parse_type("('a => 'b) => 'c") != parse_type("'a => 'b => 'c"));

  CHECK_THROWS_AS(parse_type("=>"), ParseError);
  CHECK_THROWS_AS(parse_type("('a, 'b)"), ParseError);  // needs a constructor
  CHECK_THROWS_AS(parse_type("'a list extra ("), ParseError);
}

TEST_CASE("goal format: parsing and structure of the itrev goal") {
  const Goal& goal = testfix::itrev_goal();
  auto flat = flatten_app(goal.statement);
  const auto* head = flat.head->as_const();
  REQUIRE(head != nullptr);
  CHECK(head->name == "eq");
  CHECK(flat.args.size() == 2);

  SUBCASE("atomic goal") {
    TypeTable consts = testfix::itrev_context().constant_types();
    Goal atom = parse_goal_document("free xs :: 'a list\ngoal xs", consts);
    const auto* f = atom.statement->as_free();
    REQUIRE(f != nullptr);
    CHECK(f->name == "xs");
    CHECK(subterms(atom).size() == 1);
  }

  SUBCASE("flattening is left-associated") {
    TypeTable frees = {{"x", SimpleType::var("a")},
                       {"y", SimpleType::var("b")}};
    TermPtr nested = parse_term("((g2 x) y)", testgen::signature().constants,
                                frees);
    TermPtr flatform = parse_term("(g2 x y)", testgen::signature().constants,
                                  frees);
    CHECK(*nested == *flatform);
    auto fa = flatten_app(nested);
    CHECK(fa.args.size() == 2);
  }

  SUBCASE("errors") {
    TypeTable consts = testfix::itrev_context().constant_types();
    TypeTable frees = goal.frees;
    CHECK_THROWS_AS(parse_term("(eq xs", consts, frees), ParseError);
    CHECK_THROWS_AS(parse_term("(eq xs zs)", consts, frees), ParseError);
    // xs is not a function.
    CHECK_THROWS_AS(parse_term("(xs ys)", consts, frees), ParseError);
    // rev expects 'a list, x4/nat free below.
    TypeTable nat_free = {{"n", SimpleType::con("nat")}};
    CHECK_THROWS_AS(parse_term("(rev n)", consts, nat_free), ParseError);
    CHECK_THROWS_AS(parse_goal_document("free xs :: 'a list\n", consts),
                    ParseError);
    CHECK_THROWS_AS(
        parse_goal_document("free xs :: 'a list\nfree xs :: nat\ngoal xs",
                            consts),
        ParseError);
    CHECK_THROWS_AS(
        parse_goal_document("goal xs\nfree xs :: 'a list", consts),
        ParseError);
  }
}

TEST_CASE("subterms: distinct pre-order collection") {
  const Goal& goal = testfix::itrev_goal();
  auto subs = subterms(goal);

  // eq, itrev, append, rev, xs, ys, the statement and the three compound
  // applications; xs is collected once despite two occurrences.
  CHECK(subs.size() == 10);
  CHECK(*subs.front() == *goal.statement);

  auto contains = [&](const TermPtr& t) {
    return std::any_of(subs.begin(), subs.end(),
                       [&](const TermPtr& u) { return *u == *t; });
  };
  CHECK(contains(Term::make_const("itrev", parse_type("'a list => 'a list => 'a list"))));
  CHECK(contains(Term::make_free("xs", parse_type("'a list"))));
  CHECK(contains(resolve(goal, occ({2, 1}))));  // (rev xs)

  // Matches the oracle's naive collection.
  auto naive = oracle::subterm_list(goal);
  REQUIRE(naive.size() == subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) CHECK(*naive[i] == *subs[i]);
}

TEST_CASE("occurrences and resolution on the itrev goal") {
  const Goal& goal = testfix::itrev_goal();
  TermPtr xs = Term::make_free("xs", parse_type("'a list"));
  TermPtr itrev = Term::make_const("itrev",
                                   parse_type("'a list => 'a list => 'a list"));

  auto xs_occs = occurrences_of(goal, *xs);
  REQUIRE(xs_occs.size() == 2);
  CHECK(xs_occs[0] == occ({1, 1}));
  CHECK(xs_occs[1] == occ({2, 1, 1}));

  auto itrev_occs = occurrences_of(goal, *itrev);
  REQUIRE(itrev_occs.size() == 1);
  CHECK(itrev_occs[0] == occ({1, 0}));

  TermPtr ghost = Term::make_free("zz", parse_type("nat"));
  CHECK(occurrences_of(goal, *ghost).empty());

  CHECK(*resolve(goal, occ({})) == *goal.statement);
  CHECK(*resolve(goal, occ({1, 0})) == *itrev);
  CHECK_THROWS_AS(resolve(goal, occ({9})), Error);

  SUBCASE("occurrence/resolve round trip") {
    for (const auto& t : subterms(goal)) {
      for (const auto& o : occurrences_of(goal, *t)) {
        CHECK(*resolve(goal, o) == *t);
      }
    }
  }

  SUBCASE("partition: occurrence counts sum to the flat node count") {
    std::size_t total = 0;
    for (const auto& t : subterms(goal)) {
      total += occurrences_of(goal, *t).size();
    }
    CHECK(total == flat_node_count(goal.statement));
    CHECK(flat_node_count(goal.statement) == 12);
  }
}

TEST_CASE("nth_arg addresses flattened application arguments") {
  const Goal& goal = testfix::itrev_goal();
  CHECK(nth_arg(goal, occ({1, 0}), 1) == occ({1, 1}));
  CHECK(nth_arg(goal, occ({1, 0}), 2) == occ({1, 2}));
  CHECK(nth_arg(goal, occ({1, 0}), 3) == std::nullopt);  // itrev has 2 args
  CHECK(nth_arg(goal, occ({1, 1}), 1) == std::nullopt);  // not a head
  CHECK(nth_arg(goal, occ({}), 1) == std::nullopt);      // root is no head
  CHECK(nth_arg(goal, occ({1, 0}), 0) == std::nullopt);  // 1-based

  SUBCASE("step 0 under a binder is a body, not a head") {
    auto a = SimpleType::var("a");
    TermPtr abs = Term::make_abs("x", a, Term::make_bound(0));
    Goal g = Goal::make(abs, {});
    CHECK(resolve(g, occ({0}))->as_bound() != nullptr);
    CHECK(nth_arg(g, occ({0}), 1) == std::nullopt);
  }
}

TEST_CASE("head_constant and free_vars") {
  const Goal& goal = testfix::itrev_goal();
  CHECK(head_constant(goal, occ({1, 0})) == "itrev");
  CHECK(head_constant(goal, occ({1, 1})) == std::nullopt);  // Free xs
  CHECK(head_constant(goal, occ({})) == std::nullopt);      // an application

  auto frees = free_vars(goal.statement);
  REQUIRE(frees.size() == 2);
  CHECK(frees[0].first == "xs");
  CHECK(frees[1].first == "ys");

  CHECK(free_vars(Term::make_const("c0", SimpleType::con("nat"))).empty());
  auto a = SimpleType::var("a");
  CHECK(free_vars(Term::make_abs("x", a, Term::make_bound(0))).empty());
}

TEST_CASE("goal table invariant is validated") {
  TermPtr xs = Term::make_free("xs", parse_type("'a list"));
  CHECK_THROWS_AS(Goal::make(xs, {}), Error);
  CHECK_THROWS_AS(Goal::make(xs, {{"xs", parse_type("nat")}}), Error);
  CHECK_NOTHROW(Goal::make(xs, {{"xs", parse_type("'a list")}}));
}

TEST_CASE("randomized term-model properties against the path oracle") {
  testgen::Rng rng(20240811);
  for (int i = 0; i < 300; ++i) {
    Goal goal = testgen::gen_goal(rng, 15, /*allow_abs=*/true);

    // Round trip and partition.
    std::size_t total = 0;
    for (const auto& t : subterms(goal)) {
      for (const auto& o : occurrences_of(goal, *t)) {
        CHECK(*resolve(goal, o) == *t);
      }
      total += occurrences_of(goal, *t).size();
    }
    CHECK(total == flat_node_count(goal.statement));

    // nth_arg agrees with exhaustive path enumeration.
    for (const auto& path : oracle::all_paths(goal.statement)) {
      Occurrence o{path};
      TermPtr at = resolve(goal, o);
      if (!at->as_app()) continue;
      auto k = flatten_app(at).args.size();
      Occurrence head = o.child(0);
      for (std::size_t n = 1; n <= k + 1; ++n) {
        auto got = nth_arg(goal, head, n);
        if (n <= k) {
          REQUIRE(got.has_value());
          CHECK(*got == o.child(n));
        } else {
          CHECK(!got.has_value());
        }
      }
    }
  }
}

TEST_CASE("print/parse round trip on random format-range terms") {
  testgen::Rng rng(7);
  const auto& sig = testgen::signature();
  TypeTable frees;
  for (const auto& [name, type] : sig.frees) frees.emplace(name, type);
  for (int i = 0; i < 500; ++i) {
    TermPtr t = testgen::gen_term(rng, 12, /*allow_abs=*/false);
    TermPtr back = parse_term(print_term(t), sig.constants, frees);
    CHECK(*back == *t);
  }
}
