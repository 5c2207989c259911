"""Turn a parsed problem into solver state: type-metavariables, the root hole, and
the initial typing constraint."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..judgment import JudgmentOutcome, check, fresh, run_judgment
from ..store import Assignment, InternalError, MVar, SolverState
from ..syntax import Term, Typ, TypeMVar, Vars, cons_list, typ_inputs, typ_output
from .surface import ANONYMOUS, TYPE, TYPE_PI, App, Lam, Pi, Problem

GLOBAL_BLOCK = 0
ANONYMOUS_DISPLAY = "a"


class ElaborationError(Exception):
    pass


@dataclass
class Elaborated:
    problem: Problem
    state: SolverState
    root: MVar
    goal_type: TypeMVar
    global_type: TypeMVar
    global_es: tuple
    global_names: tuple
    outcome: JudgmentOutcome
    constraints: list = field(default_factory=list)
    start: int = 0
    scope: tuple = field(default=None, repr=False)

    @property
    def goal(self):
        return Typ(self.goal_type, self.global_es)


class _Frame:
    __slots__ = ("names", "pis", "visible")

    def __init__(self, names, pis, visible):
        self.names = names
        self.pis = pis
        self.visible = visible


def _display(name):
    return ANONYMOUS_DISPLAY if name == ANONYMOUS else name


def _lookup(scope, name):
    debruijn = 0
    node = scope
    while node is not None:
        frame = node[0]
        for i in range(frame.visible - 1, -1, -1):
            if frame.names[i] == name:
                return debruijn, i, frame.pis[i]
        node = node[1]
        debruijn += 1
    raise ElaborationError(f"unbound identifier {name!r}")


class _Elaborator:
    def __init__(self, first_id=0):
        self.next_id = first_id
        self.assigned = []
        self.eta = 0

    def new_mvar(self, names):
        m = MVar(self.next_id, None, names)
        self.next_id += 1
        return m

    def pi(self, pi, scope):
        if pi.binders:
            names = tuple(n for n, _ in pi.binders)
            pis = tuple(t for _, t in pi.binders)
            inputs = tuple(
                self.pi(t, (_Frame(names, pis, i), scope)) for i, t in enumerate(pis)
            )
            out_scope = (_Frame(names, pis, len(names)), scope)
        else:
            inputs = ()
            out_scope = scope
        display = tuple(_display(n) for n, _ in pi.binders)
        out = self.new_mvar(display)
        self.assigned.append((out, self.app(pi.output, out_scope)))
        return TypeMVar(inputs, out, display)

    def app(self, app, scope):
        debruijn, index, head_pi = _lookup(scope, app.head)
        if len(app.args) != head_pi.arity:
            raise ElaborationError(
                f"{app.head!r} expects {head_pi.arity} arguments, got {len(app.args)}"
            )
        args = tuple(
            self.arg(a, head_pi.binders[i][1], scope) for i, a in enumerate(app.args)
        )
        return Assignment(debruijn, index, args)

    def arg(self, term, expected, scope):
        """Elaborate ``term`` at an input of type ``expected``, eta-expanding
        under-applied heads to the input's arity."""
        if isinstance(term, Lam):
            names, body = term.names, term.body
        else:
            names, body = (), term
        binders = expected.binders
        if len(names) > len(binders):
            raise ElaborationError(
                f"lambda binds {len(names)} variables where {len(binders)} are expected"
            )
        extra = []
        for _ in binders[len(names):]:
            self.eta += 1
            extra.append(f"\0eta{self.eta}")
        internal = tuple(names) + tuple(extra)
        display = tuple(names) + tuple(_display(n) for n, _ in binders[len(names):])
        if extra:
            body = App(body.head, body.args + tuple(App(x) for x in extra))
        m = self.new_mvar(display)
        if binders:
            pis = tuple(t for _, t in binders)
            scope = (_Frame(internal, pis, len(internal)), scope)
        self.assigned.append((m, self.app(body, scope)))
        return m


def _global_depth(es):
    d = 0
    while es is not None:
        block = es[0]
        if block.__class__ is Vars and block.id == GLOBAL_BLOCK:
            return d
        es = es[1]
        d += 1
    raise InternalError("explicit substitution has no global block")


def _wellformed(ty, st, scratch):
    """Check that every input and the output of ``ty`` has type ``Type``."""
    mvar = ty.mvar
    if mvar.inputs:
        inputs = typ_inputs(ty, fresh(st, ty))
        for i in range(len(inputs)):
            _wellformed(inputs[i], st, scratch)
    depth = _global_depth(ty.es) + (1 if mvar.names else 0)
    sort_out = MVar(len(scratch), None, mvar.names)
    scratch.append(Assignment(depth, 0, ()))
    check(typ_output(ty), Typ(TypeMVar(mvar.inputs, sort_out, mvar.names), ty.es), st)


def _check_statement(state, types, global_es):
    scratch = list(state.assignments)
    for name, tm in types:
        out = run_judgment(lambda st: _wellformed(Typ(tm, global_es), st, scratch), scratch, 1)
        if not out.ok:
            raise ElaborationError(f"the type of {name!r} is ill-typed")
        if out.pending:
            raise InternalError("statement check got stuck on a metavariable")


def elaborate(problem, term=None, check_statement=True):
    """Elaborate ``problem``; with ``term`` the root is that (fully assigned) term.

    Without ``term`` the returned state holds the initial constraints, ready
    for search.
    """
    el = _Elaborator()
    names = (TYPE,) + tuple(n for n, _ in problem.constants)
    pis = (TYPE_PI,) + tuple(t for _, t in problem.constants)
    type_tms = [el.pi(pis[i], (_Frame(names, pis, max(i, 1)), None)) for i in range(len(pis))]
    global_scope = (_Frame(names, pis, len(names)), None)
    goal_tm = el.pi(problem.goal_type, global_scope)
    global_tm = TypeMVar(tuple(type_tms), None, names)
    lctx = (goal_tm, (global_tm, None)) if goal_tm.inputs else (global_tm, None)

    if term is None:
        root = el.new_mvar(goal_tm.names)
    else:
        root = el.arg(term, problem.goal_type, global_scope)
    root.lctx = lctx

    state = SolverState()
    state.extend(el.next_id)
    for m, assn in el.assigned:
        state.assign(m, assn)

    global_es = cons_list([Vars(GLOBAL_BLOCK, typ_inputs(Typ(global_tm, None), Vars(GLOBAL_BLOCK)))])
    if check_statement:
        named = list(zip(names[1:], type_tms[1:])) + [(problem.goal[0], goal_tm)]
        _check_statement(state, named, global_es)

    goal = Typ(goal_tm, global_es)
    outcome = run_judgment(lambda st: check(Term(root, global_es), goal, st), state.assignments, GLOBAL_BLOCK + 1)
    result = Elaborated(problem, state, root, goal_tm, global_tm, global_es, names, outcome,
                        start=state.capacity(), scope=global_scope)
    if term is None:
        if not outcome.ok:
            raise ElaborationError("the goal statement is ill-typed")
        state.push(outcome.pending)
        result.constraints = list(outcome.pending)
    return result


def add_term(elab, term, ty):
    """Allocate the closed surface ``term`` in ``elab``'s store, elaborated
    against the surface type ``ty``; returns its root metavariable.

    Lets tests and tools build fully assigned terms next to a problem.  The
    root's local context holds only the globals, so it is not a search target.
    """
    state = elab.state
    el = _Elaborator(state.capacity())
    root = el.arg(term, ty, elab.scope)
    root.lctx = (elab.global_type, None)
    state.extend(el.next_id - state.capacity())
    for m, assn in el.assigned:
        state.assign(m, assn)
    return root
