"""Interpreter for the LiFtEr induction-heuristic assertion language.

The heavy lifting lives in the compiled extension module; this package
re-exports its public surface.
"""

from ._core import (  # noqa: F401
    Assertion,
    Candidate,
    Goal,
    InductArgs,
    LifterError,
    LifterParseError,
    Occurrence,
    ProofContext,
    SimpleType,
    Term,
    __version__,
    batch_csv,
    check_scopes,
    enumerate_candidates,
    evaluate,
    explain,
    free_vars,
    head_constant,
    load_assertion,
    load_assertion_dir,
    load_context,
    load_goal,
    nth_arg,
    numb_domain_max,
    occurrences_of,
    parse_assertion,
    parse_context,
    parse_goal,
    parse_induct,
    pretty_print,
    resolve,
    subterms,
    suggest,
)

__all__ = [
    "Assertion",
    "Candidate",
    "Goal",
    "InductArgs",
    "LifterError",
    "LifterParseError",
    "Occurrence",
    "ProofContext",
    "SimpleType",
    "Term",
    "__version__",
    "batch_csv",
    "check_scopes",
    "enumerate_candidates",
    "evaluate",
    "explain",
    "free_vars",
    "head_constant",
    "load_assertion",
    "load_assertion_dir",
    "load_context",
    "load_goal",
    "nth_arg",
    "numb_domain_max",
    "occurrences_of",
    "parse_assertion",
    "parse_context",
    "parse_goal",
    "parse_induct",
    "pretty_print",
    "resolve",
    "subterms",
    "suggest",
]
