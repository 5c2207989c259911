from .elaborate import Elaborated, ElaborationError, add_term, elaborate
from .parser import ParseError, ScopeError, parse, parse_term
from .printer import extract, format_problem, format_term, format_type, print_solution
from .surface import App, Lam, Pi, Problem

__all__ = [
    "App", "Lam", "Pi", "Problem", "Elaborated", "add_term", "ElaborationError", "ParseError", "ScopeError",
    "elaborate", "extract", "format_problem", "format_term", "format_type", "parse",
    "parse_term", "print_solution",
]
