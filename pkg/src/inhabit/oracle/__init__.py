"""Reference checker and brute-force enumerator over named terms.

Nothing here touches the metavariable store or the explicit-substitution
machinery: terms are plain named trees, substitution is capture-avoiding and
hereditary (it β-reduces as it goes), and every judgment is a direct
structural recursion.  Results are meant to be compared against the solver.
"""

from __future__ import annotations

import itertools

from ..frontend.printer import freshen
from ..frontend.surface import ANONYMOUS, TYPE, App, Lam, Pi, Problem

__all__ = [
    "OracleError", "OracleScopeError", "OracleStatementError",
    "oracle_check", "oracle_enumerate", "oracle_inhabited", "oracle_iter", "alpha_eq", "subst", "signature",
]

TYPE_TYPE = Pi((), App(TYPE))

# Internal names are "<base>%<n>"; '%' never occurs in parsed identifiers'
# display forms we emit.
_SEP = "%"
_counter = itertools.count()


class OracleError(Exception):
    pass


class OracleScopeError(OracleError):
    """The term mentions a name that is not in scope."""


class OracleStatementError(OracleError):
    """The problem statement itself is ill-typed."""


class _Reject(Exception):
    """Ill-typed or ill-shaped; turned into ``False`` at the boundary."""


def _fresh(name):
    return f"{name.split(_SEP, 1)[0]}{_SEP}{next(_counter)}"


def _base(name):
    base = name.split(_SEP, 1)[0]
    return "a" if base == ANONYMOUS else base


# -- substitution -------------------------------------------------------------


def free_vars(x):
    if isinstance(x, App):
        out = {x.head}
        for a in x.args:
            out |= free_vars(a)
        return out
    if isinstance(x, Lam):
        return free_vars(x.body) - set(x.names)
    out = set()
    bound = set()
    for name, ty in x.binders:
        out |= free_vars(ty) - bound
        bound.add(name)
    return out | (free_vars(x.output) - bound)


def _enter(names, sigma):
    """Drop shadowed keys and rename binders that would capture."""
    sigma = {k: v for k, v in sigma.items() if k not in names}
    if not sigma:
        return tuple(names), sigma
    avoid = set()
    for v in sigma.values():
        avoid |= free_vars(v)
    renamed = []
    for name in names:
        if name in avoid:
            new = _fresh(name)
            sigma[name] = App(new)
            renamed.append(new)
        else:
            renamed.append(name)
    return tuple(renamed), sigma


def apply(value, args):
    """Apply a normal form to normal arguments, reducing any redex created."""
    if isinstance(value, App):
        return App(value.head, value.args + tuple(args))
    if len(args) != len(value.names):
        raise _Reject("partial application of a lambda")
    return subst(value.body, dict(zip(value.names, args)))


def subst(x, sigma):
    """Simultaneous capture-avoiding substitution of normal forms for names."""
    if not sigma:
        return x
    if isinstance(x, App):
        args = tuple(subst(a, sigma) for a in x.args)
        value = sigma.get(x.head)
        return App(x.head, args) if value is None else apply(value, args)
    if isinstance(x, Lam):
        names, inner = _enter(x.names, sigma)
        return Lam(names, subst(x.body, inner))
    binders = []
    for name, ty in x.binders:
        ty = subst(ty, sigma)
        (name,), sigma = _enter((name,), sigma)
        binders.append((name, ty))
    return Pi(tuple(binders), subst(x.output, sigma))


def alpha_eq(x, y, left=None, right=None):
    left = left or {}
    right = right or {}
    if type(x) is not type(y):
        return False
    if isinstance(x, App):
        if left.get(x.head, x.head) != right.get(y.head, y.head):
            return False
        return len(x.args) == len(y.args) and all(
            alpha_eq(a, b, left, right) for a, b in zip(x.args, y.args)
        )
    if isinstance(x, Lam):
        if len(x.names) != len(y.names):
            return False
        left, right = _bind(x.names, y.names, left, right)
        return alpha_eq(x.body, y.body, left, right)
    if len(x.binders) != len(y.binders):
        return False
    for (nx, tx), (ny, ty) in zip(x.binders, y.binders):
        if not alpha_eq(tx, ty, left, right):
            return False
        left, right = _bind((nx,), (ny,), left, right)
    return alpha_eq(x.output, y.output, left, right)


def _bind(xs, ys, left, right):
    left = dict(left)
    right = dict(right)
    for a, b in zip(xs, ys):
        level = ("#", len(left) + len(right))
        left[a] = level
        right[b] = level
    return left, right


# -- checking -------------------------------------------------------------------

# A context is a tuple of blocks, innermost last; a block is a tuple of
# (name, type).  Internal names are unique, so lookups never see shadowing.


def _lookup(ctx, name):
    for block in reversed(ctx):
        for n, ty in block:
            if n == name:
                return ty
    raise OracleScopeError(f"unbound identifier {name!r}")


def _open(ctx, ty, names):
    """Enter ``ty``'s binders under ``names``; returns the new context and output."""
    sigma = {}
    block = []
    for (bn, bty), name in zip(ty.binders, names):
        block.append((name, subst(bty, sigma)))
        sigma[bn] = App(name)
    output = subst(ty.output, sigma)
    return (ctx + (tuple(block),) if block else ctx), output


def _check(ctx, t, ty):
    """Check ``t`` against ``ty``; returns its eta-long normal form."""
    if isinstance(t, Lam):
        names, body = tuple(t.names), t.body
    else:
        names, body = (), t
    if len(names) > len(ty.binders):
        raise _Reject("too many binders")
    extra = tuple(_fresh("eta") for _ in ty.binders[len(names):])
    if extra:
        body = App(body.head, body.args + tuple(App(e) for e in extra))
    names += extra
    internal = tuple(_fresh(n) for n in names)
    body = subst(body, {n: App(u) for n, u in zip(names, internal)})
    inner, output = _open(ctx, ty, internal)
    body = _infer(inner, body, output)
    return Lam(internal, body) if internal else body


def _infer(ctx, app, expected):
    head_ty = _lookup(ctx, app.head)
    if len(app.args) != len(head_ty.binders):
        raise _Reject(f"{app.head!r} is not fully applied")
    sigma = {}
    args = []
    for (bn, bty), a in zip(head_ty.binders, app.args):
        a = _check(ctx, a, subst(bty, sigma))
        sigma[bn] = a
        args.append(a)
    if not alpha_eq(subst(head_ty.output, sigma), expected):
        raise _Reject("type mismatch")
    return App(app.head, tuple(args))


def _check_type(ctx, pi):
    binders = []
    block = []
    sigma = {}
    for bn, bty in pi.binders:
        bty = _check_type(ctx + (tuple(block),), subst(bty, sigma))
        name = _fresh(bn)
        block.append((name, bty))
        binders.append((name, bty))
        sigma[bn] = App(name)
    inner = ctx + (tuple(block),) if block else ctx
    output = _check(inner, subst(pi.output, sigma), TYPE_TYPE)
    return Pi(tuple(binders), output)


def signature(problem: Problem):
    """The global context block and the checked goal type."""
    block = [(TYPE, TYPE_TYPE)]
    for name, ty in problem.constants:
        try:
            block.append((name, _check_type((tuple(block),), ty)))
        except _Reject as e:
            raise OracleStatementError(f"the type of {name!r} is ill-typed: {e}") from None
    ctx = (tuple(block),)
    try:
        goal = _check_type(ctx, problem.goal[1])
    except _Reject as e:
        raise OracleStatementError(f"the goal is ill-typed: {e}") from None
    return ctx, goal


def _scope(t, bound):
    if isinstance(t, Lam):
        _scope(t.body, bound | set(t.names))
        return
    if t.head not in bound or t.head == ANONYMOUS:
        raise OracleScopeError(f"unbound identifier {t.head!r}")
    for a in t.args:
        _scope(a, bound)


def oracle_check(problem: Problem, term) -> bool:
    """Whether the closed surface ``term`` inhabits the goal of ``problem``."""
    _scope(term, {TYPE} | {name for name, _ in problem.constants})
    ctx, goal = signature(problem)
    try:
        _check(ctx, term, goal)
    except _Reject:
        return False
    return True


# -- enumeration ------------------------------------------------------------------


def _generate(ctx, ty, size):
    names = tuple(_fresh(bn) for bn, _ in ty.binders)
    inner, output = _open(ctx, ty, names)
    for body in _generate_app(inner, output, size):
        yield Lam(names, body) if names else body


def _generate_app(ctx, expected, size):
    for block in reversed(ctx):
        for name, head_ty in block:
            if len(head_ty.binders) < size:
                yield from _generate_args(ctx, name, head_ty, 0, {}, (), size - 1, expected)


def _generate_args(ctx, head, head_ty, i, sigma, args, budget, expected):
    binders = head_ty.binders
    if i == len(binders):
        if budget == 0 and alpha_eq(subst(head_ty.output, sigma), expected):
            yield App(head, args)
        return
    bn, bty = binders[i]
    arg_ty = subst(bty, sigma)
    later = len(binders) - i - 1
    sizes = [budget] if later == 0 else range(1, budget - later + 1)
    for s in sizes:
        for a in _generate(ctx, arg_ty, s):
            yield from _generate_args(
                ctx, head, head_ty, i + 1, {**sigma, bn: a}, args + (a,), budget - s, expected
            )


def _present(t, env, visible):
    """Replace internal names by readable ones that shadow nothing in scope."""
    if isinstance(t, Lam):
        names = freshen(tuple(_base(n) for n in t.names), visible)
        env = {**env, **dict(zip(t.names, names))}
        return Lam(names, _present(t.body, env, visible | set(names)))
    return App(env.get(t.head, t.head), tuple(_present(a, env, visible) for a in t.args))


def oracle_iter(problem: Problem, max_nodes: int):
    """Lazy form of ``oracle_enumerate``."""
    ctx, goal = signature(problem)
    visible = frozenset(n for n, _ in ctx[0])
    for size in range(1, max_nodes + 1):
        for t in _generate(ctx, goal, size):
            yield _present(t, {}, visible)


def oracle_enumerate(problem: Problem, max_nodes: int) -> list:
    """All eta-long normal inhabitants with at most ``max_nodes`` application
    nodes, smallest first, heads tried innermost binder block first."""
    return list(oracle_iter(problem, max_nodes))


def oracle_inhabited(problem: Problem, max_nodes: int) -> bool:
    """Whether ``oracle_enumerate`` would be nonempty, stopping at the first term."""
    return next(oracle_iter(problem, max_nodes), None) is not None


def size(t) -> int:
    """Number of application nodes."""
    if isinstance(t, Lam):
        return size(t.body)
    return 1 + sum(size(a) for a in t.args)
