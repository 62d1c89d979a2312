"""Exception types shared across the package.

Plain ``ValueError`` is used for ordinary domain errors (bad n, k, gamma,
shape mismatches).  The classes here cover resource limits and numerical
failure modes that callers may want to catch separately.
"""

from __future__ import annotations


class WalkError(Exception):
    """Base class for package-specific runtime failures."""


class VertexCapError(WalkError):
    """Brute-force construction refused: the vertex count exceeds the cap."""

    def __init__(self, n_vertices: int, cap: int):
        self.n_vertices = n_vertices
        self.cap = cap
        super().__init__(
            f"J(n,k) has {n_vertices} vertices, above the configured cap {cap}; "
            f"raise the cap to force brute-force construction"
        )


class ConvergenceError(WalkError):
    """Iterative eigensolver hit its sweep limit before reaching tolerance."""

    def __init__(self, message: str, residual: float):
        self.residual = residual
        super().__init__(f"{message} (off-diagonal residual {residual:.3e})")


class SearchBracketError(WalkError):
    """Root bracketing failed: no sign change after the allowed expansions."""


class SingularPivotError(WalkError):
    """A closed-form eigenvector expression hit a vanishing denominator."""
