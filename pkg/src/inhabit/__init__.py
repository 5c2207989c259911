"""Inhabitation and unification solver for dependent type theory."""

import sys

from ._backend import NAME as BACKEND

# Judgments recurse once per continuation step.
if sys.getrecursionlimit() < 20000:
    sys.setrecursionlimit(20000)

__version__ = "0.1.0"
