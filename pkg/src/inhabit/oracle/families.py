"""Generated problem families for the soundness, completeness and differential suites."""

from __future__ import annotations

import itertools
import math
import random

from ..frontend.parser import parse
from ..frontend.surface import App, Lam
from . import oracle_enumerate

SORTS = ("A", "B")


def _arrow(t):
    """Render a type: a tuple ``(*inputs, output)`` whose inputs are sorts or
    nested tuples of the same form."""
    return " -> ".join(x if isinstance(x, str) else f"({_arrow(x)})" for x in t)


def constant_types(max_arity=2):
    """Every first-order type over the two sorts, smallest arity first."""
    out = []
    for arity in range(max_arity + 1):
        out.extend(itertools.product(SORTS, repeat=arity + 1))
    return out


def binder_types():
    """Goal binder types: sorts, unary functions between sorts, and functions
    taking one such unary function (these force a lambda argument)."""
    second = [((x, y), z) for x, y, z in itertools.product(SORTS, repeat=3)]
    return constant_types(1) + second


def tiny_problem(consts, binders, output):
    """Text of one member: the sorts, then ``consts`` as ``c0, c1, ...``, then
    a goal whose binders have the types ``binders``."""
    lines = [f"def {s} : Type" for s in SORTS]
    lines += [f"def c{i} : {_arrow(t)}" for i, t in enumerate(consts)]
    parts = [f"(x{i} : {_arrow(t)})" for i, t in enumerate(binders)]
    parts.append(output)
    lines.append(f"goal g : {' -> '.join(parts)}")
    return "\n".join(lines) + "\n"


def min_size(consts, binders, output):
    """Size of the smallest inhabitant, or ``inf``.

    A least fixed point over pairs (sorts bound by enclosing lambdas, sort):
    each head costs one node plus its arguments, and a function-typed
    argument ``X -> Y`` costs a ``Y`` with an extra ``X`` in scope.
    """
    heads = list(consts) + list(binders)
    envs = [frozenset(c) for n in range(len(SORTS) + 1)
            for c in itertools.combinations(SORTS, n)]
    best = {(env, s): math.inf for env in envs for s in SORTS}

    def cost(env, t):
        if isinstance(t, str):
            return best[env, t]
        *xs, y = t
        return best[env | frozenset(xs), y]

    changed = True
    while changed:
        changed = False
        for env in envs:
            for t in heads + [(x,) for x in env]:
                *args, out = t
                c = 1 + sum(cost(env, a) for a in args)
                if c < best[env, out]:
                    best[env, out] = c
                    changed = True
    return best[frozenset(), output]


def _order(t):
    return 0 if isinstance(t, str) else max((_order(x) + 1 for x in t[:-1]), default=0)


def tiny_family(max_constants=3, max_binders=2, max_heads=4, max_size=4, higher_order_heads=3):
    """Members of the tiny-signature family.

    Constant sets are drawn without repetition from every type of arity at
    most two, goal binders are multisets over ``binder_types()``, at most
    ``max_heads`` of the two together; binders taking a function appear only
    when there are at most ``higher_order_heads``.  The output is the sort
    ``A`` (``B`` is its mirror image).  Members whose smallest inhabitant
    exceeds ``max_size`` nodes are left out.  Yields ``(text, min_size)``.
    """
    menu = constant_types(2)
    goals = binder_types()
    for n in range(max_constants + 1):
        for consts in itertools.combinations(menu, n):
            for k in range(min(max_binders, max_heads - n) + 1):
                for binders in itertools.combinations_with_replacement(goals, k):
                    if n + k > higher_order_heads and any(_order(b) > 1 for b in binders):
                        continue
                    size = min_size(consts, binders, "A")
                    if size == math.inf or size <= max_size:
                        yield tiny_problem(consts, binders, "A"), size


# -- dependent signatures for differential checking -----------------------------

DEPENDENT_SIGNATURE = """\
def A : Type
def P : A -> Type
def a : A
def b : A
def f : A -> A
def p : (x : A) -> P x
def g : (x : A) -> P x -> P (f x)
def twice : (h : A -> A) -> A -> A
def K : (X : Type) -> (Y : X -> Type) -> (x : X) -> Y x -> Type
def Eq : A -> A -> Type
def refl : (x : A) -> Eq x x
def J : (x : A) -> (M : (y : A) -> Eq x y -> Type) -> M x (refl x) -> (y : A) -> (e : Eq x y) -> M y e
"""

DEPENDENT_GOALS = (
    "Type",
    "A",
    "P a",
    "P (f b)",
    "(x : A) -> P (f x)",
    "(X : Type) -> X -> X",
    "(h : A -> A) -> A",
    "(x : A) -> Eq x x",
    "(M : A -> Type) -> M a -> Type",
    "(e : Eq a b) -> Type",
    "(Q : (x : A) -> P x -> Type) -> Type",
)


def dependent_problems():
    return [
        parse(DEPENDENT_SIGNATURE + f"goal t{i} : {goal}\n", name=f"t{i}")
        for i, goal in enumerate(DEPENDENT_GOALS)
    ]


def _shape(pi):
    return tuple(_shape(ty) for _, ty in pi.binders)


def _scope_shapes(problem):
    """Name -> shape for the globals; binders are added while walking."""
    return {name: _shape(ty) for name, ty in problem.constants} | {"Type": ()}


def _binder_shapes(problem, term):
    """Attach the shapes of lambda-bound names by following the goal type."""
    shapes = _scope_shapes(problem)
    out = {}

    def walk(t, pi, env):
        names = t.names if isinstance(t, Lam) else ()
        body = t.body if isinstance(t, Lam) else t
        env = dict(env)
        for name, (_, ty) in zip(names, pi.binders):
            env[name] = ty
        out[id(body)] = env
        head_ty = env.get(body.head)
        if head_ty is None:
            head_ty = dict(problem.constants).get(body.head)
        if head_ty is None:
            return
        for a, (_, ty) in zip(body.args, head_ty.binders):
            walk(a, ty, env)

    walk(term, problem.goal_type, {})
    return shapes, out


def _replace(term, path, head):
    body = term.body if isinstance(term, Lam) else term
    if not path:
        new = App(head, body.args)
    else:
        i = path[0]
        args = list(body.args)
        args[i] = _replace(args[i], path[1:], head)
        new = App(body.head, tuple(args))
    return Lam(term.names, new) if isinstance(term, Lam) else new


def mutations(problem, term):
    """Terms that differ from ``term`` in exactly one head, replaced by another
    name in scope of the same shape, so elaboration still succeeds."""
    shapes, envs = _binder_shapes(problem, term)
    results = []

    def walk(t, path):
        body = t.body if isinstance(t, Lam) else t
        env = envs.get(id(body), {})
        local = {n: _shape(ty) for n, ty in env.items()}
        scope = {**shapes, **local}
        mine = scope.get(body.head)
        for name, shape in scope.items():
            if name != body.head and shape == mine:
                results.append(_replace(term, path, name))
        for i, a in enumerate(body.args):
            walk(a, path + (i,))

    walk(term, ())
    return results


def differential_pairs(count=500, max_nodes=6, seed=0):
    """``count`` (problem, term) pairs: half enumerated inhabitants, half
    single-head mutations of them."""
    rng = random.Random(seed)
    positives = []
    for problem in dependent_problems():
        for term in oracle_enumerate(problem, max_nodes):
            positives.append((problem, term))
    half = count // 2
    chosen = rng.sample(positives, min(half, len(positives)))
    negatives = []
    for problem, term in chosen:
        muts = mutations(problem, term)
        if muts:
            negatives.append((problem, rng.choice(muts)))
    while len(negatives) < count - len(chosen):
        problem, term = rng.choice(positives)
        muts = mutations(problem, term)
        if muts:
            negatives.append((problem, rng.choice(muts)))
    return chosen + negatives[: count - len(chosen)]
