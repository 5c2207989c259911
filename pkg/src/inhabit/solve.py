"""Parse, elaborate and search, collecting printed solutions."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .frontend import elaborate, extract, format_term
from .search import DEFAULT_CONFIG, StopSearch, iddfs


class Timeout(Exception):
    pass


@dataclass
class SolveResult:
    solutions: list = field(default_factory=list)
    terms: list = field(default_factory=list)
    iterations: int = 0
    nodes: int = 0
    wall: float = 0.0
    timed_out: bool = False

    @property
    def solved(self):
        return bool(self.solutions)


def solve(problem, count=1, timeout=None, config=DEFAULT_CONFIG, max_iterations=None,
          on_iteration=None, unique=True, on_solution=None):
    """Search for up to ``count`` inhabitants of ``problem``'s goal.

    Solutions found again by a later deepening pass are skipped when
    ``unique`` is set.  ``on_iteration(k, entropy, capacity, nodes)`` runs
    before each pass; ``on_solution(elab, state, term)`` on each new solution.
    """
    elab = elaborate(problem)
    state = elab.state
    result = SolveResult()
    seen = set()
    started = time.monotonic()
    deadline = None if timeout is None else started + timeout

    def cb():
        term = extract(elab, state)
        text = format_term(term)
        if unique and text in seen:
            return
        seen.add(text)
        result.solutions.append(text)
        result.terms.append(term)
        if on_solution is not None:
            on_solution(elab, state, term)
        if len(result.solutions) >= count:
            raise StopSearch

    def step(nodes):
        result.nodes = nodes
        if deadline is not None and time.monotonic() > deadline:
            raise Timeout

    def iteration(k, entropy, capacity):
        result.iterations = k
        if on_iteration is not None:
            on_iteration(k, entropy, capacity, result.nodes)

    try:
        iddfs(state, elab.root, cb, step, config, on_iteration=iteration,
              max_iterations=max_iterations)
    except Timeout:
        result.timed_out = True
    result.wall = time.monotonic() - started
    return result, elab
