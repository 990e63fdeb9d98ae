"""
Built-in instances with known answers. Each one recomputes its answers from
scratch and reports one check per expected value.

Instances are registered under their name, and `EXAMPLE_LABELS` maps the
published example labels (E-Ex2, Ex-LCP, ...) onto those names.
"""
from typing import Dict

from sympiso.problems.classical import ExtensionTables, NonMonomialIsometry, SympVsMon
from sympiso.problems.problem import Problem
from sympiso.problems.quantum import LcpThreeQubit, NotLuFourQubit

REFERENCE_PROBLEMS: Dict[str, Problem] = {
    problem.name: problem for problem in (NonMonomialIsometry(), SympVsMon(), ExtensionTables(),
                                          LcpThreeQubit(), NotLuFourQubit())
}

EXAMPLE_LABELS: Dict[str, str] = {problem.label: problem.name for problem in REFERENCE_PROBLEMS.values()}


def find_problem(key: str) -> Problem:
    """Look up an instance by name or by example label."""
    return REFERENCE_PROBLEMS[EXAMPLE_LABELS.get(key, key)]
