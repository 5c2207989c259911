"""Term enumeration: domains, hole selection, budgeted DFS and iterative deepening."""

from dataclasses import dataclass

from ._backend import kernel

Searcher = kernel.Searcher
domain = kernel.domain


class StopSearch(Exception):
    """Raised from a callback or step hook to end the search."""


@dataclass(frozen=True)
class SearchConfig:
    entropy_start: float = 1000.0
    entropy_factor: float = 3.0
    extend: int = 4
    branch_factor: float = 5.0
    rigid_factor: float = 1.0


DEFAULT_CONFIG = SearchConfig()


def _nothing(*args):
    pass


def next_mvar(state, m, config=DEFAULT_CONFIG):
    return kernel.next_mvar(state, m, config.branch_factor, config.rigid_factor)


def dfs(state, root, cb, step=_nothing, entropy=1000.0, pos=None, config=DEFAULT_CONFIG):
    """One budgeted depth-first pass; returns the :class:`Searcher` used."""
    searcher = Searcher(state, root, cb, step, config.branch_factor, config.rigid_factor)
    searcher.dfs(float(entropy), state.capacity() if pos is None else pos)
    return searcher


def iddfs(state, root, cb, step=_nothing, config=DEFAULT_CONFIG, on_iteration=None,
          max_iterations=None):
    """Repeat :func:`dfs` with a growing budget and store capacity.

    Each iteration extends the store by ``config.extend`` slots, then searches
    with the current entropy, then multiplies the entropy by
    ``config.entropy_factor``.  ``on_iteration(k, entropy, capacity)`` is
    called before the ``k``-th pass.  Runs until :class:`StopSearch` is raised
    by a hook or ``max_iterations`` passes have run.
    """
    start = state.capacity()
    entropy = float(config.entropy_start)
    searcher = Searcher(state, root, cb, step, config.branch_factor, config.rigid_factor)
    iteration = 0
    try:
        while max_iterations is None or iteration < max_iterations:
            state.extend(config.extend)
            iteration += 1
            if on_iteration is not None:
                on_iteration(iteration, entropy, state.capacity())
            searcher.dfs(entropy, start)
            entropy *= config.entropy_factor
    except StopSearch:
        pass
    searcher.iterations = iteration
    return searcher


__all__ = [
    "Searcher", "StopSearch", "SearchConfig", "DEFAULT_CONFIG",
    "domain", "next_mvar", "dfs", "iddfs",
]
