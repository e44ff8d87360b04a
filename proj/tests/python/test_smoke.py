"""Smoke tests for the Python bindings, run against the build-tree module."""

import os
import sys

import lifter


def fixture(name):
    return os.path.join(os.environ["LIFTER_FIXTURES"], name)


def main():
    ctx = lifter.load_context(fixture("itrev_context.json"))
    assert ctx.is_recursive("itrev")
    assert ctx.is_recursive("rev")
    assert not ctx.is_recursive("eq")
    assert ctx.rules_derived_from("itrev") == ["itrev.induct"]
    assert ctx.rule_owner("rev.induct") == "rev"

    goal = lifter.load_goal(fixture("itrev.goal"), ctx)
    assert sorted(goal.frees) == ["xs", "ys"]
    assert str(goal.statement) == "(eq (itrev xs ys) (append (rev xs) ys))"

    subs = lifter.subterms(goal)
    assert len(subs) == 10
    xs = [t for t in subs if str(t) == "xs"]
    assert len(xs) == 1
    occs = lifter.occurrences_of(goal, xs[0])
    assert [str(o) for o in occs] == ["[1,1]", "[2,1,1]"]
    assert str(lifter.resolve(goal, occs[0])) == "xs"
    assert lifter.head_constant(goal, occs[0]) is None

    assertion = lifter.load_assertion(
        fixture("heuristics/heuristic_rule_arg_order.lifter")
    )
    assert assertion.tree().splitlines()[0] == "Imply"
    reparsed = lifter.parse_assertion(assertion.pretty())
    assert reparsed == assertion
    assert lifter.check_scopes(assertion) == []

    prf2 = lifter.parse_induct("induct xs ys rule: itrev.induct", goal, ctx)
    prf1 = lifter.parse_induct("induct xs arbitrary: ys", goal, ctx)
    swapped = lifter.parse_induct("induct ys xs rule: itrev.induct", goal, ctx)
    assert lifter.evaluate(assertion, goal, ctx, prf2) is True
    assert lifter.evaluate(assertion, goal, ctx, prf1) is True
    assert lifter.evaluate(assertion, goal, ctx, swapped) is False

    ok, trace = lifter.explain(assertion, goal, ctx, prf2)
    assert ok is True
    assert any("itrev.induct" in line for line in trace)

    assert lifter.numb_domain_max(goal, prf2) == 2

    suite = lifter.load_assertion_dir(fixture("heuristics"))
    assert [name for name, _ in suite] == [
        "heuristic_rule_arg_order",
        "heuristic_structural",
    ]
    ranked = lifter.suggest(goal, ctx, suite, max_ind_terms=2, max_arbitrary=1)
    assert len(ranked) == 18
    by_invocation = {c.invocation: c for c in ranked}
    best = by_invocation["induct xs ys rule: itrev.induct"]
    assert best.score == 2
    assert best.score > by_invocation["induct ys xs rule: itrev.induct"].score

    csv_text, rows, errors = lifter.batch_csv(
        fixture("corpus/itrev.jsonl"), fixture("heuristics")
    )
    assert rows == 5 and errors == 0
    assert csv_text.splitlines()[0] == (
        "id,label,heuristic_rule_arg_order,heuristic_structural,error"
    )

    try:
        lifter.parse_assertion("Some_Trm (Trm 1")
    except lifter.LifterParseError:
        pass
    else:
        raise AssertionError("expected LifterParseError")

    print("python smoke: ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
