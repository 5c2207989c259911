"""Parser for problem files and solution terms.

    file     := { decl } goal
    decl     := "def" IDENT ":" type
    goal     := "goal" IDENT ":" type
    type     := "(" IDENT+ ":" type ")" "->" type | app [ "->" type ]
    app      := atom { atom }
    atom     := IDENT | "Type" | "(" type ")" | "fun" IDENT+ "=>" app

``->``/``→``, ``=>``/``↦`` and ``fun``/``λ`` are interchangeable; ``--`` starts
a line comment.
"""

from __future__ import annotations

import re

from .surface import ANONYMOUS, TYPE, App, Lam, Pi, Problem

KEYWORDS = {"def", "goal", "fun", "λ"}

_TOKEN = re.compile(
    r"(?P<comment>--[^\n]*)"
    r"|(?P<arrow>->|→)"
    r"|(?P<fat>=>|↦)"
    r"|(?P<lp>\()"
    r"|(?P<rp>\))"
    r"|(?P<colon>:)"
    r"|(?P<ws>\s+)"
    r"|(?P<ident>(?:(?!->|=>)[^\s():→↦λ])+|λ)"
)


class ParseError(Exception):
    def __init__(self, message, line=0, column=0):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class Token:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind, text, line, column):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column

    def __repr__(self):
        return f"Token({self.kind}, {self.text!r}, {self.line}:{self.column})"


def tokenize(text):
    tokens = []
    pos = 0
    line = 1
    line_start = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            tok_text = m.group()
            if kind == "ident" and tok_text in KEYWORDS:
                kind = "fun" if tok_text in ("fun", "λ") else tok_text
            tokens.append(Token(kind, tok_text, line, pos - line_start + 1))
        chunk = m.group()
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class ScopeError(ParseError):
    pass


class Parser:
    """Recursive-descent parser.  With ``globals`` set, identifiers are
    resolved as they are read and unbound ones are reported in place."""

    def __init__(self, text, globals=None):
        self.tokens = tokenize(text)
        self.pos = 0
        self.globals = globals
        self.bound = []

    def peek(self, offset=0):
        i = min(self.pos + offset, len(self.tokens) - 1)
        return self.tokens[i]

    def next(self):
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ParseError(message, tok.line, tok.column)

    def expect(self, kind, what=None):
        tok = self.peek()
        if tok.kind != kind:
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            raise self.error(f"expected {what or kind}, found {found}")
        return self.next()

    def ident(self):
        return self.expect("ident", "identifier").text

    # -- types ------------------------------------------------------------

    def _binder_group_ahead(self):
        if self.peek().kind != "lp":
            return False
        i = 1
        while self.peek(i).kind == "ident":
            i += 1
        return i > 1 and self.peek(i).kind == "colon"

    def parse_type(self):
        """Returns a :class:`Pi`, or a bare term when no arrow was seen."""
        if self._binder_group_ahead():
            self.next()
            names = []
            while self.peek().kind == "ident":
                names.append(self.next().text)
            self.expect("colon", "':'")
            domain = self.as_type(self.parse_type(), self.peek())
            self.expect("rp", "')'")
            arrow = self.expect("arrow", "'->'")
            self.bound.extend(names)
            rest = self.parse_codomain(arrow)
            del self.bound[len(self.bound) - len(names):]
            return Pi(tuple((n, domain) for n in names) + rest.binders, rest.output)
        start = self.peek()
        left = self.parse_app()
        if self.peek().kind == "arrow":
            arrow = self.next()
            domain = self.as_type(left, start)
            rest = self.parse_codomain(arrow)
            return Pi(((ANONYMOUS, domain),) + rest.binders, rest.output)
        return left

    def parse_codomain(self, arrow):
        if not self._atom_ahead():
            raise self.error("dangling '->'", arrow)
        return self.parse_type_required()

    def parse_type_required(self):
        tok = self.peek()
        return self.as_type(self.parse_type(), tok)

    def as_type(self, x, tok):
        if isinstance(x, Pi):
            return x
        if isinstance(x, App):
            return Pi((), x)
        raise self.error("a lambda is not a type", tok)

    # -- terms ------------------------------------------------------------

    def _atom_ahead(self):
        return self.peek().kind in ("ident", "lp", "fun")

    def parse_app(self):
        tok = self.peek()
        if not self._atom_ahead():
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            raise self.error(f"expected a term, found {found}")
        head = self.parse_atom()
        args = []
        while self._atom_ahead():
            arg_tok = self.peek()
            arg = self.parse_atom()
            if isinstance(arg, Pi):
                raise self.error("a function type cannot be an argument", arg_tok)
            args.append(arg)
        if not args:
            return head
        if isinstance(head, Pi):
            raise self.error("a function type cannot be applied", tok)
        if isinstance(head, Lam):
            raise self.error("a lambda cannot be applied", tok)
        return App(head.head, head.args + tuple(args))

    def parse_atom(self):
        tok = self.peek()
        if tok.kind == "ident":
            self.next()
            self.resolve(tok)
            return App(tok.text)
        if tok.kind == "lp":
            self.next()
            inner = self.parse_type()
            self.expect("rp", "')'")
            if isinstance(inner, Pi) and not inner.binders:
                return inner.output
            return inner
        if tok.kind == "fun":
            self.next()
            names = []
            while self.peek().kind == "ident":
                names.append(self.next().text)
            if not names:
                raise self.error("expected a binder name")
            self.expect("fat", "'=>'")
            body_tok = self.peek()
            self.bound.extend(names)
            body = self.parse_app()
            del self.bound[len(self.bound) - len(names):]
            if not isinstance(body, App):
                raise self.error("the body of a lambda must be an application", body_tok)
            return Lam(tuple(names), body)
        raise self.error(f"unexpected {tok.text!r}" if tok.kind != "eof" else "unexpected end of input")

    def resolve(self, tok):
        if self.globals is None:
            return
        name = tok.text
        if name == ANONYMOUS or (name not in self.globals and name not in self.bound):
            raise ScopeError(f"unbound identifier {name!r}", tok.line, tok.column)

    # -- files ------------------------------------------------------------

    def parse_problem(self, name=""):
        constants = []
        seen = {}
        goal = None
        self.globals = {TYPE}
        while self.peek().kind != "eof":
            tok = self.peek()
            if tok.kind not in ("def", "goal"):
                raise self.error(f"expected 'def' or 'goal', found {tok.text!r}")
            if goal is not None:
                raise self.error("declarations after the goal", tok)
            self.next()
            name_tok = self.peek()
            ident = self.ident()
            self.expect("colon", "':'")
            ty = self.parse_type_required()
            if tok.kind == "goal":
                goal = (ident, ty)
                continue
            if ident == TYPE or ident == ANONYMOUS:
                raise self.error(f"{ident!r} cannot be declared", name_tok)
            if ident in seen:
                raise self.error(f"duplicate name {ident!r}", name_tok)
            seen[ident] = ty
            constants.append((ident, ty))
            self.globals.add(ident)
        if goal is None:
            raise self.error("missing goal")
        return Problem(tuple(constants), goal, name)


def parse(text, name=""):
    return Parser(text).parse_problem(name)


def parse_term(text):
    p = Parser(text)
    tok = p.peek()
    t = p.parse_type()
    if isinstance(t, Pi):
        raise p.error("expected a term, found a function type", tok)
    p.expect("eof", "end of input")
    return t
