"""Exact primitive-cohomology invariants of S^1 x Y_f from fibration data."""

from . import exactla, fibration, graphlink, surfaces, wang
from .errors import FibersymError

__version__ = "0.1.0"

__all__ = ["FibersymError", "exactla", "fibration", "graphlink", "surfaces", "wang"]
