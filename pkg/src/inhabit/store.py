"""Global mutable solver state: assignments and per-metavariable constraint stacks."""

from ._backend import kernel

MVar = kernel.MVar
Assignment = kernel.Assignment
SolverState = kernel.SolverState
InternalError = kernel.InternalError


def snapshot(state):
    """A comparable copy of ``state``; constraints are compared by identity."""
    return (
        list(state.assignments),
        [tuple(id(c) for c in stack) for stack in state.constraints],
    )


__all__ = ["MVar", "Assignment", "SolverState", "InternalError", "snapshot"]
