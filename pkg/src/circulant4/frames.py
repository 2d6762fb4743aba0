"""Orthonormal q-frames {x, qx, q^2 x, q^3 x}.

Two constructions are provided:

* ``spectral_frame`` builds the seed from the Fourier eigenstructure of the
  circulant metric and is valid for every admissible coefficient triple.
* ``closed_form_frame`` evaluates the direct radical formulas (x^4 = 0,
  x^2 and the x^1 + x^3 / x^1 * x^3 system) literally and reports what they
  produce, including their Gram residual and any domain failure.  It never
  asserts success; it is an audit artifact, not the supported construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .algebra import CirculantCoeffs, apply_q, as_vector4, is_admissible, metric_matrix

__all__ = [
    "QFrame",
    "FrameResidual",
    "ClosedFormFrameReport",
    "spectral_frame",
    "closed_form_frame",
    "verify_frame",
]


@dataclass(frozen=True)
class QFrame:
    """A seed vector together with its q-iterates and the metric coefficients."""

    seed: np.ndarray
    vectors: np.ndarray  # rows: seed, q seed, q^2 seed, q^3 seed
    coeffs: CirculantCoeffs


@dataclass(frozen=True)
class FrameResidual:
    """Gram matrix of a q-orbit and its max entrywise deviation from identity."""

    gram: np.ndarray
    max_deviation: float


@dataclass(frozen=True)
class ClosedFormFrameReport:
    """Literal evaluation of the radical construction, with residual audit.

    status is one of "ok", "negative_discriminant", "sqrt_domain_failure",
    "residual_exceeds_tolerance".  candidate is present exactly when the
    formulas stay in the real domain.
    """

    x2: float
    sum_x1_x3: float
    prod_x1_x3: float
    discriminant: float
    candidate: Optional[np.ndarray]
    residual: Optional[FrameResidual]
    status: str


def verify_frame(c: CirculantCoeffs, seed) -> FrameResidual:
    """Gram matrix of {seed, q seed, q^2 seed, q^3 seed} under g(c)."""
    v = as_vector4(seed)
    orbit = np.stack([apply_q(v, k) for k in range(4)])
    gram = orbit @ metric_matrix(c) @ orbit.T
    return FrameResidual(gram=gram, max_deviation=float(np.max(np.abs(gram - np.eye(4)))))


def spectral_frame(c: CirculantCoeffs) -> QFrame:
    """Orthonormal q-frame seed from the Fourier eigenplanes of g.

    The seed mixes the three metric eigenspaces with weights chosen so that
    g(x, x) = 1 and g(x, qx) = g(x, q^2 x) = 0; q-invariance of g then
    forces the whole 4x4 Gram matrix to be the identity.
    """
    c = CirculantCoeffs(*c)
    if not is_admissible(c):
        raise ValueError(f"coefficients {tuple(c)} violate 0 < B < C < A")
    a, b, cc = c
    lam0 = 4.0 * (a + cc + 2.0 * b)
    lam2 = 4.0 * (a + cc - 2.0 * b)
    alpha = 1.0 / (2.0 * math.sqrt(lam0))
    beta = 1.0 / (2.0 * math.sqrt(lam2))
    s = 1.0 / (2.0 * math.sqrt(a - cc))
    seed = (
        alpha * np.array([1.0, 1.0, 1.0, 1.0])
        + beta * np.array([1.0, -1.0, 1.0, -1.0])
        + s * np.array([1.0, 0.0, -1.0, 0.0])
    )
    orbit = np.stack([apply_q(seed, k) for k in range(4)])
    return QFrame(seed=seed, vectors=orbit, coeffs=c)


def closed_form_frame(c: CirculantCoeffs, tol: float = 1e-9) -> ClosedFormFrameReport:
    """Evaluate the radical construction verbatim and audit the result.

    Sets x^4 = 0, takes x^2 and x^1 + x^3 from the shared radical
    expression, x^1 * x^3 from the companion quotient, and solves
    t^2 - (x^1 + x^3) t + x^1 x^3 = 0.  The discriminant is computed
    directly as (x^1+x^3)^2 - 4 x^1 x^3 (the printed closed form for it is
    not well-formed).  x^1 takes the larger root.  Domain failures are
    statuses, not exceptions, so batch sweeps survive them.
    """
    c = CirculantCoeffs(*c)
    if not is_admissible(c):
        raise ValueError(f"coefficients {tuple(c)} violate 0 < B < C < A")
    a, b, cc = c
    r_minus = a + b - 2.0 * cc
    r_plus = a + b + 2.0 * cc
    if r_minus <= 0.0 or r_plus <= 0.0:
        return ClosedFormFrameReport(
            x2=math.nan, sum_x1_x3=math.nan, prod_x1_x3=math.nan,
            discriminant=math.nan, candidate=None, residual=None,
            status="sqrt_domain_failure",
        )
    sq_minus = math.sqrt(r_minus)
    sq_plus = math.sqrt(r_plus)
    x2 = (sq_minus - sq_plus) / (2.0 * sq_minus * sq_plus)
    sum13 = (sq_minus - sq_plus) / (2.0 * sq_minus * sq_plus)
    prod13 = (2.0 * b**2 - cc**2 - a * cc) / (2.0 * (a - cc) * sq_minus * sq_plus)
    disc = sum13**2 - 4.0 * prod13
    if disc < 0.0:
        return ClosedFormFrameReport(
            x2=x2, sum_x1_x3=sum13, prod_x1_x3=prod13, discriminant=disc,
            candidate=None, residual=None, status="negative_discriminant",
        )
    root = math.sqrt(disc)
    x1 = 0.5 * (sum13 + root)
    x3 = 0.5 * (sum13 - root)
    candidate = np.array([x1, x2, x3, 0.0])
    residual = verify_frame(c, candidate)
    status = "ok" if residual.max_deviation <= tol else "residual_exceeds_tolerance"
    return ClosedFormFrameReport(
        x2=x2, sum_x1_x3=sum13, prod_x1_x3=prod13, discriminant=disc,
        candidate=candidate, residual=residual, status=status,
    )
