"""Constraint-suspending equality and typing judgments.

A judgment body is a callable taking a :class:`JudgmentState`.  It either
raises :class:`Violation`, or returns after appending a constraint for every
place it got stuck on an unassigned metavariable.
"""

from dataclasses import dataclass, field

from ._backend import kernel

Violation = kernel.Violation
JudgmentState = kernel.JudgmentState
Constraint = kernel.Constraint
Other = kernel.Other
fresh = kernel.fresh
request_assignment = kernel.request_assignment
term_eq = kernel.term_eq
whnf_eq = kernel.whnf_eq
check = kernel.check
rigid_true = kernel.rigid_true
rigid_false = kernel.rigid_false


def rigid_other(t, args):
    return Other(t, args)


@dataclass
class JudgmentOutcome:
    ok: bool
    pending: list = field(default_factory=list)
    counter: int = 0

    @property
    def status(self):
        return "ok" if self.ok else "violated"


def run_judgment(body, assignments, start=0):
    st = JudgmentState(assignments, start)
    try:
        body(st)
    except Violation:
        return JudgmentOutcome(False, [], st.counter)
    return JudgmentOutcome(True, st.pending, st.counter)


__all__ = [
    "Violation", "JudgmentState", "Constraint", "Other", "JudgmentOutcome",
    "fresh", "request_assignment", "term_eq", "whnf_eq", "check",
    "rigid_true", "rigid_false", "rigid_other", "run_judgment",
]
