"""Exact finite-ring engine: constructors, invariants, ring-class predicates
and a registry of executable checks for the n-Delta-U ring classes."""

__version__ = "0.1.0"

from .errors import RingLabError  # noqa: E402
from .expr import eval_expr, parse_ring_expr  # noqa: E402
from .ring import FiniteRing, Subset  # noqa: E402

__all__ = ["FiniteRing", "RingLabError", "Subset", "__version__", "eval_expr", "parse_ring_expr"]
