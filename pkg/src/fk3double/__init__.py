"""Exact-arithmetic workbench for the graded modules of a 5184-dimensional
Drinfeld double built on the rank-3 Nichols algebra over S3."""

from __future__ import annotations

from .scalars import Scalar, ZERO, ONE, ZETA, ZETA2

__version__ = "0.1.0"

__all__ = ["Scalar", "ZERO", "ONE", "ZETA", "ZETA2", "__version__"]
