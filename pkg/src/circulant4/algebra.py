"""Pointwise algebra of the circulant metric and the shift affinor.

The metric at a point is the symmetric circulant 4x4 matrix with first row
(A, B, C, B).  The affinor q acts on tangent vectors by the cyclic
component shift (qx)^i = x^{i+1 mod 4}, so q^4 is the identity exactly.
Everything in this module is a pure function of its arguments.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

__all__ = [
    "CirculantCoeffs",
    "Q_MATRIX",
    "as_vector4",
    "apply_q",
    "metric_matrix",
    "metric_det_closed",
    "metric_eigenvalues",
    "is_admissible",
    "inner",
    "qbase_predicate",
    "qbase_polynomial",
    "det_qorbit",
]

# Affinor matrix Q[i, j]: (qx)^i = Q[i, j] x^j, i.e. row i has a 1 in
# column (i+1) mod 4.
Q_MATRIX = np.roll(np.eye(4, dtype=np.int64), -1, axis=0)


class CirculantCoeffs(NamedTuple):
    """Metric generators (A, B, C) at a point; first row of g is (A, B, C, B)."""

    a: float
    b: float
    c: float

    def admissible(self) -> bool:
        return is_admissible(self)


def as_vector4(x) -> np.ndarray:
    """Validate and convert to a float (4,) array; rejects NaN/Inf."""
    v = np.asarray(x, dtype=float)
    if v.shape != (4,):
        raise ValueError(f"expected 4 components, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector components must be finite")
    return v


def apply_q(x, k: int = 1) -> np.ndarray:
    """Apply the shift affinor k times: (q^k x)^i = x^{i+k mod 4}.

    Exact (a pure reindexing, no arithmetic); k is reduced mod 4.
    """
    v = as_vector4(x)
    return np.roll(v, -(k % 4))


def metric_matrix(c: CirculantCoeffs) -> np.ndarray:
    """Assemble the symmetric circulant metric with first row (A, B, C, B)."""
    a, b, cc = c
    row = [a, b, cc, b]
    return np.array([[row[(j - i) % 4] for j in range(4)] for i in range(4)])


def metric_det_closed(c: CirculantCoeffs) -> float:
    """det g = (A-C)^2 ((A+C)^2 - 4B^2), the circulant closed form."""
    a, b, cc = c
    return (a - cc) ** 2 * ((a + cc) ** 2 - 4 * b**2)


def metric_eigenvalues(c: CirculantCoeffs) -> np.ndarray:
    """Eigenvalues {A+2B+C, A-2B+C, A-C, A-C} of the circulant metric.

    The Fourier basis diagonalizes every circulant matrix; the double
    eigenvalue A-C belongs to the plane spanned by (1,0,-1,0), (0,1,0,-1).
    """
    a, b, cc = c
    return np.array([a + 2 * b + cc, a - 2 * b + cc, a - cc, a - cc])


def is_admissible(c: CirculantCoeffs) -> bool:
    """Strict chain 0 < B < C < A (sufficient for positive definiteness)."""
    a, b, cc = c
    return bool(0.0 < b < cc < a)


def inner(c: CirculantCoeffs, x, y) -> float:
    """Bilinear form g(x, y) = g_ij x^i y^j for the metric generated by c."""
    g = metric_matrix(c)
    return float(as_vector4(x) @ g @ as_vector4(y))


def qbase_polynomial(x) -> float:
    """Independence polynomial of the q-orbit of x.

    ((x1-x3)^2 + (x2-x4)^2)(x1 - x2 + x3 - x4)(x1 + x2 + x3 + x4);
    nonzero exactly when {x, qx, q^2 x, q^3 x} is a basis.  Equals
    +-det_qorbit(x): the three factors are the values of the polynomial
    x1 + x2 t + x3 t^2 + x4 t^3 at the fourth roots of unity (the pair at
    +-i contributing the squared modulus).
    """
    v = as_vector4(x)
    x1, x2, x3, x4 = v
    return ((x1 - x3) ** 2 + (x2 - x4) ** 2) * (x1 - x2 + x3 - x4) * (x1 + x2 + x3 + x4)


def qbase_predicate(x) -> bool:
    """True iff the orbit {x, qx, q^2 x, q^3 x} spans the tangent space."""
    return bool(qbase_polynomial(x) != 0.0)


def det_qorbit(x) -> float:
    """Determinant of the 4x4 matrix with rows x, qx, q^2 x, q^3 x."""
    v = as_vector4(x)
    rows = np.stack([np.roll(v, -k) for k in range(4)])
    return float(np.linalg.det(rows))
