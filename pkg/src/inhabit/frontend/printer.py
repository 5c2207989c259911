"""Read a complete solution out of the store and render it in surface syntax."""

from __future__ import annotations

from ..store import InternalError
from .surface import TYPE, App, Lam

_RESERVED = {TYPE, "fun", "def", "goal", "_"}


def freshen(names, visible):
    """Rename ``names`` so none shadows a visible name or repeats in the block."""
    out = []
    taken = set(visible)
    for name in names:
        candidate = name
        i = 1
        while candidate in taken or candidate in _RESERVED:
            candidate = f"{name}{i}"
            i += 1
        taken.add(candidate)
        out.append(candidate)
    return tuple(out)


def _extract(assignments, m, frames, visible):
    assn = assignments[m.id]
    if assn is None:
        raise InternalError(f"solution is incomplete at ?{m.id}")
    names = ()
    if m.names:
        names = freshen(m.names, visible)
        frames = (names, frames)
        visible = visible | set(names)
    node = frames
    for _ in range(assn.debruijn):
        node = node[1]
    head = node[0][assn.index]
    body = App(head, tuple(_extract(assignments, a, frames, visible) for a in assn.args))
    return Lam(names, body) if names else body


def extract(elab, state=None):
    """The named term currently assigned under ``elab.root``."""
    state = state or elab.state
    names = tuple(elab.global_names)
    return _extract(state.assignments, elab.root, (names, None), frozenset(names))


def format_term(t):
    if isinstance(t, Lam):
        return f"fun {' '.join(t.names)} => {format_term(t.body)}"
    if not t.args:
        return t.head
    parts = [t.head]
    for a in t.args:
        s = format_term(a)
        parts.append(f"({s})" if isinstance(a, Lam) or a.args else s)
    return " ".join(parts)


def format_type(pi):
    """Render a telescope; anonymous binders print as plain arrows."""
    parts = []
    for name, ty in pi.binders:
        inner = format_type(ty)
        if name == "_":
            parts.append(f"({inner})" if ty.binders else inner)
        else:
            parts.append(f"({name} : {inner})")
    parts.append(format_term(pi.output))
    return " -> ".join(parts)


def format_problem(problem):
    lines = [f"def {name} : {format_type(ty)}" for name, ty in problem.constants]
    lines.append(f"goal {problem.goal[0]} : {format_type(problem.goal[1])}")
    return "\n".join(lines) + "\n"


def print_solution(elab, state=None):
    return format_term(extract(elab, state))
