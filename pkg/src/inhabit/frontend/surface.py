"""Named surface syntax shared by the parser, elaborator and printer."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

# Binder name of an anonymous arrow; it can never be referenced.
ANONYMOUS = "_"
TYPE = "Type"


@dataclass(frozen=True)
class App:
    head: str
    args: tuple[Term, ...] = ()


@dataclass(frozen=True)
class Lam:
    names: tuple[str, ...]
    body: App


Term = Union[App, Lam]


@dataclass(frozen=True)
class Pi:
    """A telescope ``(x1 : T1) -> ... -> (xn : Tn) -> output``."""

    binders: tuple[tuple[str, Pi], ...]
    output: App

    @property
    def arity(self) -> int:
        return len(self.binders)


TYPE_PI = Pi((), App(TYPE))


@dataclass(frozen=True)
class Problem:
    constants: tuple[tuple[str, Pi], ...]
    goal: tuple[str, Pi]
    name: str = ""

    @property
    def goal_type(self) -> Pi:
        return self.goal[1]
