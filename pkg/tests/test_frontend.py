import pytest
from hypothesis import given, settings, strategies as st

from helpers import CANTOR_PROOF, CORPUS, EQ_TRANS_PROOF, elab_text, load
from inhabit.frontend import (
    App, ElaborationError, Lam, ParseError, Pi, ScopeError, elaborate, format_problem,
    format_term, parse, parse_term,
)
from inhabit.frontend.printer import freshen
from inhabit.oracle import alpha_eq, oracle_check
from inhabit.oracle.families import tiny_family
from inhabit.solve import solve


def test_parse_identity():
    p = parse("goal id : (A : Type) -> (a : A) -> A")
    assert p.constants == ()
    name, ty = p.goal
    assert name == "id"
    assert ty == Pi((("A", Pi((), App("Type"))), ("a", Pi((), App("A")))), App("A"))


def test_parse_cantor_hypotheses_are_goal_binders():
    p = load("cantor")
    assert p.constants == ()
    names = [n for n, _ in p.goal_type.binders]
    assert names == ["A", "f", "f_inv", "Eq", "Not", "False", "f_surj", "P_ne_Not_P"]


def test_dangling_arrow_position():
    with pytest.raises(ParseError) as e:
        parse("goal x : (A : Type) ->")
    assert (e.value.line, e.value.column) == (1, 21)
    assert str(e.value).startswith("1:21:")


@pytest.mark.parametrize("text, message", [
    ("def A : Type\ndef A : Type\ngoal g : A", "duplicate name"),
    ("goal g : (x : A) -> x", "unbound identifier 'A'"),
    ("def A : Type\n", "missing goal"),
    ("def Type : Type\ngoal g : Type", "cannot be declared"),
    ("goal g : Type\ndef A : Type", "after the goal"),
    ("goal g : Type )", "expected 'def' or 'goal'"),
    ("goal g : (A : Type) -> (fun x => A)", "lambda is not a type"),
])
def test_parse_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse(text)


def test_unbound_identifier_is_a_scope_error():
    with pytest.raises(ScopeError):
        parse("goal g : Foo")


@pytest.mark.parametrize("text, where", [
    ("goal g : (x : Foo) -> x", "1:15"),
    ("def A : Type\ngoal g : (x : A) -> y", "2:21"),
    ("def A : A\ngoal g : A", "1:9"),
    ("def A : Type\ndef P : A -> Type\ngoal g : (x : A) -> P z", "3:23"),
])
def test_scope_errors_carry_positions(text, where):
    with pytest.raises(ScopeError, match=f"^{where}: unbound identifier"):
        parse(text)


def test_binders_scope_over_the_codomain_only():
    parse("def A : Type\ndef P : A -> Type\ngoal g : (x : A) -> (p : P x) -> P x")
    with pytest.raises(ScopeError, match="1:15"):
        parse("goal g : (x : x) -> Type")


def test_arrows_associate_right_and_application_left():
    p = parse("def A : Type\ndef f : A -> A -> A\ngoal g : A -> A -> A")
    ty = p.goal_type
    assert [n for n, _ in ty.binders] == ["_", "_"] and ty.output == App("A")
    assert parse_term("f a b") == parse_term("(f a) b") == App("f", (App("a"), App("b")))


def test_grouped_binders_and_unicode():
    p = parse("goal g : (A B : Type) → A → B")
    q = parse("goal g : (A : Type) -> (B : Type) -> (_ : A) -> B")
    assert p == q
    assert parse_term("λ x ↦ f x") == parse_term("fun x => f x") == Lam(("x",), App("f", (App("x"),)))


def test_elaborate_identity():
    e = elab_text("goal id : (A : Type) -> (a : A) -> A")
    lctx = []
    node = e.root.lctx
    while node is not None:
        lctx.append(node[0])
        node = node[1]
    assert len(lctx) == 2
    assert len(e.constraints) == 1 and e.constraints[0].stuck is e.root


def test_elaborate_empty_goal_telescope():
    e = elab_text("goal t : Type")
    assert e.root.lctx[1] is None and e.root.lctx[0] is e.global_type


def test_ill_typed_statement():
    with pytest.raises(ElaborationError):
        elab_text("def A : Type\ndef a : A\ngoal g : (x : a) -> A")
    with pytest.raises(ElaborationError, match="expects 1 arguments"):
        elab_text("def A : Type\ndef P : A -> Type\ngoal g : P")


@pytest.mark.parametrize("path", CORPUS, ids=lambda p: p.stem)
def test_bundled_problem_invariants(path):
    p = load(path.stem)
    # Format stability.
    assert parse(format_problem(p)) == parse(format_problem(parse(format_problem(p))))
    assert parse(format_problem(p)).goal == p.goal
    e = elaborate(p)
    # Dense ids: every slot but the root is an elaborated subterm.
    assert e.state.capacity() == e.root.id + 1
    assert [i for i, a in enumerate(e.state.assignments) if a is None] == [e.root.id]
    assert len(e.constraints) == 1 and e.constraints[0].stuck is e.root


def test_print_identity():
    result, _ = solve(parse("goal id : (A : Type) -> (a : A) -> A"))
    assert result.solutions == ["fun A a => a"]


def test_cantor_matches_known_proof():
    result, _ = solve(load("cantor"), timeout=60)
    assert alpha_eq(parse_term(result.solutions[0]), parse_term(CANTOR_PROOF))


def test_eq_trans_matches_known_proof():
    result, _ = solve(load("eq_trans"), timeout=60)
    assert alpha_eq(parse_term(result.solutions[0]), parse_term(EQ_TRANS_PROOF))


def test_shadowed_names_are_freshened():
    p = parse("def A : Type\ndef h : ((a : A) -> A) -> A\n"
              "goal g : (a : A) -> (k : (a : A) -> A) -> A")
    result, _ = solve(p, count=6, max_iterations=3)
    assert "fun a k => k (k (k (h (fun a1 => a1))))" in result.solutions
    for text in result.solutions:
        assert oracle_check(p, parse_term(text))


def test_freshen():
    assert freshen(("a", "a", "b"), {"a"}) == ("a1", "a2", "b")
    assert freshen(("Type",), set()) == ("Type1",)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(list(tiny_family(max_constants=2, max_binders=2))), st.integers(1, 4))
def test_printed_solutions_round_trip(member, count):
    text, _ = member
    p = parse(text)
    result, _ = solve(p, count=count, max_iterations=3)
    for printed in result.solutions:
        term = parse_term(printed)
        assert format_term(term) == printed
        out = elaborate(p, term).outcome
        assert out.ok and not out.pending
        assert oracle_check(p, term)


@given(st.sampled_from([t for t, _ in tiny_family(max_constants=2)]))
def test_problem_format_round_trip(text):
    p = parse(text)
    assert parse(format_problem(p)) == p
