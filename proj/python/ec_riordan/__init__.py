"""Elliptic curves, Riordan arrays and lattice paths, with exact rational arithmetic.

Rationals are returned as fractions.Fraction; arguments accept int, Fraction
or "p/q" strings.
"""

from ._core import *  # noqa: F401,F403
from ._core import EcrError, Curve

__all__ = [name for name in dir() if not name.startswith("_")]
