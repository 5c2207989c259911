"""Hot core of the solver.

Everything the search touches per node lives here so that the same source can
be compiled (``_ckernel.pyx`` includes this file verbatim) or imported as plain
Python.  The public modules ``store``, ``syntax``, ``judgment`` and ``search``
re-export from whichever build ``_backend`` selected.

Persistent lists (explicit substitutions, local contexts) are cons cells:
``(head, tail)`` with ``None`` as the empty list.
"""


class InternalError(Exception):
    """Broken solver invariant; never a property of the problem being solved."""


class Violation(Exception):
    """A checking obligation failed."""


# ---------------------------------------------------------------------------
# Store


class MVar:
    """Reference to one slot of the assignment store.

    ``lctx`` lists the type-metavariables whose inputs may head this term,
    innermost first.  ``names`` are binder names, used for display only, and
    their count is the number of binders of the term.
    """

    __slots__ = ("id", "lctx", "names")

    def __init__(self, id, lctx=None, names=()):
        self.id = id
        self.lctx = lctx
        self.names = names

    def __repr__(self):
        return f"?{self.id}"


class Assignment:
    __slots__ = ("debruijn", "index", "args")

    def __init__(self, debruijn, index, args=()):
        self.debruijn = debruijn
        self.index = index
        self.args = args

    def __eq__(self, other):
        if not isinstance(other, Assignment):
            return NotImplemented
        return (
            self.debruijn == other.debruijn
            and self.index == other.index
            and self.args == other.args
        )

    def __hash__(self):
        return hash((self.debruijn, self.index, tuple(m.id for m in self.args)))

    def __repr__(self):
        return f"Assignment({self.debruijn}, {self.index}, {list(self.args)!r})"


class SolverState:
    """Assignments plus, per metavariable, the stack of constraints stuck on it."""

    __slots__ = ("assignments", "constraints")

    def __init__(self):
        self.assignments = []
        self.constraints = []

    def capacity(self):
        return len(self.assignments)

    def extend(self, size):
        self.assignments.extend([None] * size)
        self.constraints.extend([] for _ in range(size))

    def assign(self, m, assignment):
        if m.id >= len(self.assignments):
            raise InternalError(f"metavariable {m.id} beyond capacity {len(self.assignments)}")
        self.assignments[m.id] = assignment

    def push(self, cs):
        stacks = self.constraints
        for c in cs:
            stacks[c.stuck.id].append(c)

    def pop(self, cs):
        stacks = self.constraints
        for c in cs:
            stack = stacks[c.stuck.id]
            if not stack:
                raise InternalError(f"pop from empty constraint stack of ?{c.stuck.id}")
            stack.pop()

    def process(self, mode, cs):
        if mode == "push":
            self.push(cs)
        elif mode == "pop":
            self.pop(cs)
        else:
            raise ValueError(f"unknown mode {mode!r}")

    def run(self, computation):
        """Evaluate a read-only computation on the current assignments.

        Returns ``None`` when it raises :class:`Violation`.
        """
        try:
            return computation(self.assignments)
        except Violation:
            return None


# ---------------------------------------------------------------------------
# Syntax


class TypeMVar:
    __slots__ = ("inputs", "output", "names")

    def __init__(self, inputs, output, names):
        self.inputs = inputs
        self.output = output
        self.names = names

    def __repr__(self):
        return f"TypeMVar({len(self.inputs)} inputs, output={self.output!r})"


class Vars:
    """A block of fresh variables; ``types`` is a :class:`Types` or ``None``."""

    __slots__ = ("id", "types")

    def __init__(self, id, types=None):
        self.id = id
        self.types = types

    def __repr__(self):
        return f"Vars({self.id}, typed={self.types is not None})"


class Terms:
    """Terms sharing one explicit substitution; also usable as a block."""

    __slots__ = ("mvars", "es")

    def __init__(self, mvars, es):
        self.mvars = mvars
        self.es = es

    def __len__(self):
        return len(self.mvars)

    def __getitem__(self, i):
        return Term(self.mvars[i], self.es)


class Types:
    __slots__ = ("mvars", "es")

    def __init__(self, mvars, es):
        self.mvars = mvars
        self.es = es

    def __len__(self):
        return len(self.mvars)

    def __getitem__(self, i):
        return Typ(self.mvars[i], self.es)


class Term:
    __slots__ = ("mvar", "es")

    def __init__(self, mvar, es):
        self.mvar = mvar
        self.es = es

    def __repr__(self):
        return f"Term({self.mvar!r})"


class Typ:
    __slots__ = ("mvar", "es")

    def __init__(self, mvar, es):
        self.mvar = mvar
        self.es = es


class WHNF:
    """``head`` is the pair (block id, index within block)."""

    __slots__ = ("head", "type", "args")

    def __init__(self, head, type, args):
        self.head = head
        self.type = type
        self.args = args

    def __repr__(self):
        return f"WHNF({self.head}, {len(self.args.mvars)} args)"


def es_get(es, debruijn):
    node = es
    while debruijn:
        if node is None:
            break
        node = node[1]
        debruijn -= 1
    if node is None:
        raise InternalError("de Bruijn index out of range of explicit substitution")
    return node[0]


def typ_inputs(ty, args):
    mvar = ty.mvar
    if not mvar.inputs:
        return Types(mvar.inputs, ty.es)
    return Types(mvar.inputs, (args, ty.es))


def typ_output(ty):
    return Term(ty.mvar.output, ty.es)


# ---------------------------------------------------------------------------
# Suspension


class JudgmentState:
    """Fresh-block counter and pending constraints of one judgment run."""

    __slots__ = ("assignments", "counter", "pending")

    def __init__(self, assignments, counter):
        self.assignments = assignments
        self.counter = counter
        self.pending = []


class Constraint:
    """A suspended reduction to weak head normal form.

    Resuming re-requests ``stuck`` and continues the reduction of the term
    whose head it is, under ``es``, handing the result to ``k``.  Fresh blocks
    made after resumption count up from ``counter``.
    """

    __slots__ = ("stuck", "es", "rigid", "k", "counter")

    def __init__(self, stuck, es, rigid, k, counter):
        self.stuck = stuck
        self.es = es
        self.rigid = rigid
        self.k = k
        self.counter = counter

    def resume(self, assignments):
        st = JudgmentState(assignments, self.counter)
        _whnf(self.stuck, self.es, self.rigid, st, self.k)
        return st.pending

    # The public name for the stored continuation.
    continuation = resume

    def __repr__(self):
        return f"Constraint(stuck={self.stuck!r})"


def _whnf(mvar, es, rigid, st, k):
    # ``es`` already holds the arguments for ``mvar``'s binders.
    assignments = st.assignments
    while True:
        assn = assignments[mvar.id]
        if assn is None:
            st.pending.append(Constraint(mvar, es, rigid, k, st.counter))
            return
        block = es_get(es, assn.debruijn)
        args = Terms(assn.args, es)
        if block.__class__ is Vars:
            types = block.types
            if types is None:
                head_type = None
            else:
                head_type = Typ(types.mvars[assn.index], types.es)
            k(st, WHNF((block.id, assn.index), head_type, args))
            return
        mvar = block.mvars[assn.index]
        es = (args, block.es) if mvar.names else block.es


def term_apply(t, args, rigid, st, k):
    """Apply ``t`` to the block ``args`` and reduce to weak head normal form.

    ``k(st, whnf)`` receives the result.  If an unassigned metavariable blocks
    the reduction, the rest of the computation is parked as a constraint in
    ``st.pending`` instead.
    """
    mvar = t.mvar
    _whnf(mvar, (args, t.es) if mvar.names else t.es, rigid, st, k)


def request_assignment(m, rigid, st, k):
    assn = st.assignments[m.id]
    if assn is None:
        st.pending.append(_RequestConstraint(m, rigid, k, st.counter))
        return
    k(st, assn)


class _RequestConstraint(Constraint):
    __slots__ = ()

    def __init__(self, stuck, rigid, k, counter):
        Constraint.__init__(self, stuck, None, rigid, k, counter)

    def resume(self, assignments):
        st = JudgmentState(assignments, self.counter)
        request_assignment(self.stuck, self.rigid, st, self.k)
        return st.pending

    continuation = resume


# ---------------------------------------------------------------------------
# Rigidity predicates


def rigid_true(assignments):
    return True


def rigid_false(assignments):
    return False


def _discard(st, w):
    pass


class Other:
    """Rigid when ``term`` applied to ``args`` reaches a head without suspending."""

    __slots__ = ("term", "args")

    def __init__(self, term, args):
        self.term = term
        self.args = args

    def __call__(self, assignments):
        st = JudgmentState(assignments, 0)
        term_apply(self.term, self.args, rigid_true, st, _discard)
        return not st.pending


# ---------------------------------------------------------------------------
# Judgments


def fresh(st, ty=None):
    n = st.counter
    st.counter = n + 1
    if ty is None:
        return Vars(n)
    return Vars(n, typ_inputs(ty, Vars(n)))


def whnf_eq(w1, w2, st):
    if w1.head != w2.head:
        raise Violation
    a1 = w1.args
    a2 = w2.args
    es1 = a1.es
    es2 = a2.es
    for m1, m2 in zip(a1.mvars, a2.mvars):
        term_eq(Term(m1, es1), Term(m2, es2), st)


def term_eq(t1, t2, st):
    vars = fresh(st)

    def with_left(st, w1):
        term_apply(t2, vars, rigid_true, st, lambda st, w2: whnf_eq(w1, w2, st))

    term_apply(t1, vars, Other(t2, vars), st, with_left)


def check(t, ty, st):
    vars = fresh(st, ty)

    def with_head(st, w):
        head_type = w.type
        if head_type is None:
            raise InternalError(f"head {w.head} has no type")
        args = w.args
        inputs = typ_inputs(head_type, args)
        es = args.es
        ies = inputs.es
        for m, tm in zip(args.mvars, inputs.mvars):
            check(Term(m, es), Typ(tm, ies), st)
        expected = typ_output(ty)

        def with_actual(st, w1):
            term_apply(expected, vars, rigid_true, st, lambda st, w2: whnf_eq(w1, w2, st))

        term_apply(typ_output(head_type), args, Other(expected, vars), st, with_actual)

    term_apply(t, vars, rigid_false, st, with_head)


# ---------------------------------------------------------------------------
# Search


def domain(state, m, pos):
    """Candidate assignments of ``m`` whose stuck constraints all resume cleanly.

    Returns a list of ``(assignment, constraints)``.  ``m`` is left assigned to
    the last candidate tried.
    """
    result = []
    assignments = state.assignments
    capacity = len(assignments)
    stuck = state.constraints[m.id]
    lctx = m.lctx
    node = lctx
    debruijn = 0
    while node is not None:
        block_type = node[0]
        index = 0
        for head_type in block_type.inputs:
            inputs = head_type.inputs
            if pos + len(inputs) <= capacity:
                args = tuple([
                    MVar(pos + k, (inp, lctx) if inp.inputs else lctx, inp.names)
                    for k, inp in enumerate(inputs)
                ])
                assn = Assignment(debruijn, index, args)
                assignments[m.id] = assn
                try:
                    produced = []
                    for c in stuck:
                        produced.extend(c.resume(assignments))
                except Violation:
                    pass
                else:
                    result.append((assn, produced))
            index += 1
        node = node[1]
        debruijn += 1
    return result


def next_mvar(state, m, branch=5.0, rigid_factor=1.0):
    """Pick the hole to refine next and predict the entropy still needed.

    Returns ``((mvar, rigid) or None, predicted)``.
    """
    assn = state.assignments[m.id]
    if assn is not None:
        best = None
        predicted = 1.0
        for s in assn.args:
            cand, e = next_mvar(state, s, branch, rigid_factor)
            # Keep the earlier pick only if strictly greater: some > none, rigid > flexible.
            if best is None or not (cand is None or (best[1] and not cand[1])):
                best = cand
            predicted *= e
        return best, predicted
    assignments = state.assignments
    rigid = False
    for c in state.constraints[m.id]:
        if c.rigid(assignments):
            rigid = True
            break
    return (m, rigid), (rigid_factor if rigid else branch)


class Searcher:
    """Depth-first search over assignments with an entropy budget.

    ``cb()`` is called whenever the term under ``root`` is complete and
    ``step(nodes)`` on every visited node.  Either may raise to stop the
    search; the store is restored while unwinding.
    """

    def __init__(self, state, root, cb, step, branch=5.0, rigid_factor=1.0):
        self.state = state
        self.root = root
        self.cb = cb
        self.step = step
        self.branch = branch
        self.rigid_factor = rigid_factor
        self.nodes = 0

    def dfs(self, entropy, pos):
        state = self.state
        self.nodes += 1
        self.step(self.nodes)
        chosen, predicted = next_mvar(state, self.root, self.branch, self.rigid_factor)
        if chosen is None:
            self.cb()
            return
        if entropy < predicted:
            return
        m = chosen[0]
        entries = domain(state, m, pos)
        assignments = state.assignments
        try:
            if entries:
                child = entropy / len(entries)
                for assn, cs in entries:
                    assignments[m.id] = assn
                    state.push(cs)
                    try:
                        self.dfs(child, pos + len(assn.args))
                    finally:
                        state.pop(cs)
        finally:
            assignments[m.id] = None
