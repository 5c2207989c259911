"""Terms, types and explicit substitutions, with reduction to weak head normal form."""

from ._backend import kernel

TypeMVar = kernel.TypeMVar
Vars = kernel.Vars
Terms = kernel.Terms
Types = kernel.Types
Term = kernel.Term
Typ = kernel.Typ
WHNF = kernel.WHNF
term_apply = kernel.term_apply
typ_inputs = kernel.typ_inputs
typ_output = kernel.typ_output
es_get = kernel.es_get


def es_push(block, es):
    return (block, es)


def es_list(es):
    out = []
    while es is not None:
        out.append(es[0])
        es = es[1]
    return out


def cons_list(items):
    """Build a persistent list whose first element is ``items[0]``."""
    out = None
    for item in reversed(items):
        out = (item, out)
    return out


__all__ = [
    "TypeMVar", "Vars", "Terms", "Types", "Term", "Typ", "WHNF",
    "term_apply", "typ_inputs", "typ_output", "es_get", "es_push", "es_list", "cons_list",
]
