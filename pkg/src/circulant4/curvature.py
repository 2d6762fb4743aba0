"""Levi-Civita connection and curvature of the circulant metric.

The core routines work on raw arrays (g, dg, ddg) where

    g[i, j]        metric components,
    dg[a, i, j]    = d_a g_ij,
    ddg[a, b, i, j] = d_a d_b g_ij,

so they can be exercised against arbitrary metrics in tests.  The public
wrappers take a coefficient-field spec and a chart point and pull the
derivative data out of the field jet: every entry of g is one of A, B, C,
selected by the circulant offset (j - i) mod 4.

Sign convention: the (0,4) tensor is oriented so that the sectional
curvature R(x,y,x,y) / (g(x,x)g(y,y) - g(x,y)^2) of a round sphere is
positive (checked in the test suite against a product metric containing a
unit 2-sphere).  All verified identities are equalities and zeros, hence
independent of this choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

import numpy as np

from .algebra import Q_MATRIX, as_vector4, qbase_polynomial, qbase_predicate
from .fields import FieldFamilySpec, FieldJet, eval_jet

__all__ = [
    "CurvatureTensor",
    "SectionalReport",
    "metric_derivatives",
    "christoffel_core",
    "riemann_core",
    "christoffel",
    "nabla_q_residual",
    "riemann",
    "sectional",
    "q_section_curvatures",
    "identity_suite",
    "q_invariance_residual",
    "symmetry_residuals",
    "random_qbase_seeds",
]

# g_{ij} carries field A, B or C according to the circulant offset:
# offsets 0 -> A, 1 -> B, 2 -> C, 3 -> B, as rows (A,B,C) of the jet.
_OFFSET_TO_FIELD = np.array([0, 1, 2, 1])
_IDX = np.arange(4)
_FIELD_OF_ENTRY = _OFFSET_TO_FIELD[(_IDX[None, :] - _IDX[:, None]) % 4]  # (4,4)


def metric_derivatives(jet: FieldJet) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Assemble (g, dg, ddg) arrays from a coefficient-field jet."""
    values = np.array(jet.value)
    g = values[_FIELD_OF_ENTRY]
    dg = jet.grads[_FIELD_OF_ENTRY].transpose(2, 0, 1)
    ddg = jet.hessians[_FIELD_OF_ENTRY].transpose(2, 3, 0, 1)
    return g, dg, ddg


def christoffel_core(g: np.ndarray, dg: np.ndarray) -> np.ndarray:
    """Gamma[k, i, j] = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij)."""
    ginv = np.linalg.inv(g)
    bracket = np.einsum("ijl->lij", dg) + np.einsum("jil->lij", dg) - dg
    return 0.5 * np.einsum("kl,lij->kij", ginv, bracket)


def _christoffel_derivative(g: np.ndarray, dg: np.ndarray, ddg: np.ndarray) -> np.ndarray:
    """dGamma[a, k, i, j] = d_a Gamma^k_ij from second metric derivatives."""
    ginv = np.linalg.inv(g)
    dginv = -np.einsum("km,amn,nl->akl", ginv, dg, ginv)
    bracket = np.einsum("ijl->lij", dg) + np.einsum("jil->lij", dg) - dg
    dbracket = (
        np.einsum("aijl->alij", ddg) + np.einsum("ajil->alij", ddg) - ddg
    )
    return 0.5 * (
        np.einsum("akl,lij->akij", dginv, bracket)
        + np.einsum("kl,alij->akij", ginv, dbracket)
    )


def riemann_core(g: np.ndarray, dg: np.ndarray, ddg: np.ndarray) -> np.ndarray:
    """(0,4) curvature r[i, j, k, l], sphere-positive orientation."""
    gamma = christoffel_core(g, dg)
    dgamma = _christoffel_derivative(g, dg, ddg)
    upper = (
        np.einsum("jmik->ijkm", dgamma)
        - np.einsum("imjk->ijkm", dgamma)
        + np.einsum("mjn,nik->ijkm", gamma, gamma)
        - np.einsum("min,njk->ijkm", gamma, gamma)
    )
    return np.einsum("lm,ijkm->ijkl", g, upper)


@dataclass(frozen=True)
class CurvatureTensor:
    """(0,4) Riemann tensor components R(d_i, d_j, d_k, d_l) at a point."""

    r: np.ndarray

    def contract(self, x, y, z, u) -> float:
        return float(
            np.einsum(
                "ijkl,i,j,k,l->", self.r,
                as_vector4(x), as_vector4(y), as_vector4(z), as_vector4(u),
            )
        )


@dataclass(frozen=True)
class SectionalReport:
    """Sectional curvatures of the six q-sections of a seed vector.

    Order: {x,qx}, {x,q2x}, {q3x,x}, {qx,q2x}, {qx,q3x}, {q2x,q3x}.
    equality_residual is the max pairwise spread of mu1, mu3, mu4, mu6;
    zero_residual is max(|mu2|, |mu5|).
    """

    mu: np.ndarray
    denominators: np.ndarray
    equality_residual: float
    zero_residual: float


def symmetry_residuals(r: np.ndarray) -> Dict[str, float]:
    """Max residuals of the four classical Riemann symmetries."""
    return {
        "antisym_first_pair": float(np.max(np.abs(r + r.transpose(1, 0, 2, 3)))),
        "antisym_last_pair": float(np.max(np.abs(r + r.transpose(0, 1, 3, 2)))),
        "pair_symmetry": float(np.max(np.abs(r - r.transpose(2, 3, 0, 1)))),
        "first_bianchi": float(
            np.max(np.abs(r + r.transpose(1, 2, 0, 3) + r.transpose(2, 0, 1, 3)))
        ),
    }


def christoffel(spec: FieldFamilySpec, p) -> np.ndarray:
    """Christoffel symbols Gamma[k, i, j] of g at a chart point."""
    g, dg, _ = metric_derivatives(eval_jet(spec, p))
    return christoffel_core(g, dg)


def nabla_q_residual(spec: FieldFamilySpec, p) -> float:
    """Max component of the covariant derivative of the affinor.

    (nabla_i q)_j^k = Gamma^k_im q_j^m - Gamma^m_ij q_m^k; the affinor has
    constant components, so there is no partial-derivative term.
    """
    gamma = christoffel(spec, p)
    q = Q_MATRIX.astype(float)
    term1 = np.einsum("kim,jm->ijk", gamma, q)
    term2 = np.einsum("mij,mk->ijk", gamma, q)
    return float(np.max(np.abs(term1 - term2)))


def riemann(spec: FieldFamilySpec, p) -> CurvatureTensor:
    """(0,4) Riemann tensor of g at a chart point."""
    g, dg, ddg = metric_derivatives(eval_jet(spec, p))
    return CurvatureTensor(r=riemann_core(g, dg, ddg))


def _section_denominator(g: np.ndarray, x: np.ndarray, y: np.ndarray) -> float:
    return float((x @ g @ x) * (y @ g @ y) - (x @ g @ y) ** 2)


def sectional(spec: FieldFamilySpec, p, x, y, denom_tol: float = 1e-12) -> float:
    """Sectional curvature of the 2-section spanned by x and y."""
    jet = eval_jet(spec, p)
    g, dg, ddg = metric_derivatives(jet)
    x = as_vector4(x)
    y = as_vector4(y)
    denom = _section_denominator(g, x, y)
    scale = float((x @ g @ x) * (y @ g @ y))
    if denom <= denom_tol * max(1.0, abs(scale)):
        raise ValueError(f"degenerate 2-section: Gram determinant {denom} below tolerance")
    r = riemann_core(g, dg, ddg)
    num = float(np.einsum("ijkl,i,j,k,l->", r, x, y, x, y))
    return num / denom


def q_section_curvatures(spec: FieldFamilySpec, p, x) -> SectionalReport:
    """Sectional curvatures of the six sections spanned by q-iterates of x."""
    x = as_vector4(x)
    if not qbase_predicate(x):
        raise ValueError("seed vector does not generate a q-base (independence polynomial is zero)")
    jet = eval_jet(spec, p)
    g, dg, ddg = metric_derivatives(jet)
    r = riemann_core(g, dg, ddg)
    v = [np.roll(x, -k) for k in range(4)]
    pairs = [(v[0], v[1]), (v[0], v[2]), (v[3], v[0]), (v[1], v[2]), (v[1], v[3]), (v[2], v[3])]
    mu = np.empty(6)
    denoms = np.empty(6)
    for idx, (a, b) in enumerate(pairs):
        denoms[idx] = _section_denominator(g, a, b)
        mu[idx] = np.einsum("ijkl,i,j,k,l->", r, a, b, a, b) / denoms[idx]
    equal_group = mu[[0, 2, 3, 5]]
    equality = float(np.max(equal_group) - np.min(equal_group))
    zero = float(max(abs(mu[1]), abs(mu[4])))
    return SectionalReport(mu=mu, denominators=denoms, equality_residual=equality, zero_residual=zero)


def identity_suite(spec: FieldFamilySpec, p, x) -> Dict[str, float]:
    """Residuals of the curvature identities behind the q-section equalities.

    The identities fall into six groups: two reference equalities, four
    vanishing components, two equality chains tying mixed components to
    R(x,qx,x,qx), three more vanishing components, a mixed chain with one
    extra zero, and the final pair of diagonal equalities.  Each residual
    is |LHS - RHS| (or |value| for a zero claim) normalized by
    max(1, |R(x,qx,x,qx)|).
    """
    x = as_vector4(x)
    if not qbase_predicate(x):
        raise ValueError("seed vector does not generate a q-base (independence polynomial is zero)")
    jet = eval_jet(spec, p)
    g, dg, ddg = metric_derivatives(jet)
    r = riemann_core(g, dg, ddg)
    v = [np.roll(x, -k) for k in range(4)]

    def rr(a, b, c, d) -> float:
        return float(np.einsum("ijkl,i,j,k,l->", r, v[a], v[b], v[c], v[d]))

    rho = rr(0, 1, 0, 1)
    norm = max(1.0, abs(rho))
    res: Dict[str, float] = {}

    def equal(name, lhs, rhs):
        res[name] = abs(lhs - rhs) / norm

    def zero(name, value):
        res[name] = abs(value) / norm

    # a) diagonal equality and the first vanishing diagonal
    equal("a_diag_q3", rho, rr(0, 3, 0, 3))
    zero("a_diag_q2", rr(0, 2, 0, 2))
    # b) four mixed components that vanish
    zero("b_mixed_1", rr(0, 1, 0, 2))
    zero("b_mixed_2", rr(0, 2, 1, 2))
    zero("b_mixed_3", rr(0, 3, 2, 0))
    zero("b_mixed_4", rr(0, 3, 1, 3))
    # c) chain -R(x,qx,x,q3x) = R(x,qx,qx,q2x) = R(x,qx,q2x,q3x) = rho
    equal("c_chain_1", -rr(0, 1, 0, 3), rr(0, 1, 1, 2))
    equal("c_chain_2", rr(0, 1, 1, 2), rr(0, 1, 2, 3))
    equal("c_chain_3", rr(0, 1, 2, 3), rho)
    # d) three more vanishing mixed components
    zero("d_mixed_1", rr(0, 2, 1, 3))
    zero("d_mixed_2", rr(0, 2, 2, 3))
    zero("d_mixed_3", rr(1, 2, 1, 3))
    # e) chain through shifted sections, plus one vanishing component
    equal("e_chain_1", -rr(0, 3, 1, 2), -rr(0, 3, 2, 3))
    equal("e_chain_2", -rr(0, 3, 2, 3), rr(1, 2, 2, 3))
    equal("e_chain_3", rr(1, 2, 2, 3), rho)
    zero("e_zero", rr(1, 3, 2, 3))
    # f) last vanishing diagonal and the remaining diagonal equalities
    zero("f_diag_zero", rr(1, 3, 1, 3))
    equal("f_diag_1", rr(1, 2, 1, 2), rr(2, 3, 2, 3))
    equal("f_diag_2", rr(2, 3, 2, 3), rho)
    return res


def q_invariance_residual(spec: FieldFamilySpec, p, vectors: Sequence) -> float:
    """Max normalized |R(x,y,q^k z,q^k u) - R(x,y,z,u)| over k = 1, 2, 3."""
    x, y, z, u = (as_vector4(v) for v in vectors)
    jet = eval_jet(spec, p)
    g, dg, ddg = metric_derivatives(jet)
    r = riemann_core(g, dg, ddg)
    base = float(np.einsum("ijkl,i,j,k,l->", r, x, y, z, u))
    norm = max(1.0, abs(base))
    worst = 0.0
    for k in (1, 2, 3):
        val = float(np.einsum("ijkl,i,j,k,l->", r, x, y, np.roll(z, -k), np.roll(u, -k)))
        worst = max(worst, abs(val - base) / norm)
    return worst


def random_qbase_seeds(rng: np.random.Generator, n: int, min_poly: float = 1e-3) -> np.ndarray:
    """Rejection-sample seeds from the unit cube away from degenerate orbits."""
    seeds = []
    while len(seeds) < n:
        x = rng.uniform(-1.0, 1.0, size=4)
        if abs(qbase_polynomial(x)) >= min_poly:
            seeds.append(x)
    return np.stack(seeds)
