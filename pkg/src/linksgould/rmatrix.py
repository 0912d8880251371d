"""Crossing matrices, caps and cups for the four-dimensional gl(2|1) family.

The symbolic matrices are the production path. :func:`numeric_projector_check`
rebuilds sigma in floating point from the projectors onto the two extreme
summands of V (x) V and compares it with :func:`build_sigma`.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .ring import ONE, Y, RingElem, Y_SQUARED, mono
from .tensor import Tensor


class ConsistencyFailure(AssertionError):
    """A built-in identity failed; the hard-coded matrices are wrong."""


class DomainError(ValueError):
    """Parameters outside the region where the numeric check is defined."""


#: Parity of the basis states |1>..|4> (0-based here).
GRADING = (0, 1, 1, 0)

Q = mono(1, 0)
P = mono(0, 1)


@functools.cache
def build_sigma() -> Tensor:
    """The positive crossing ``sigma^{a c}_{b d}`` as a 16x16 matrix."""
    y2 = RingElem(Y_SQUARED)
    entries = {
        (1, 1): mono(0, -2),
        (2, 5): mono(0, -1),
        (3, 9): mono(0, -1),
        (4, 13): ONE,
        (5, 2): mono(0, -1),
        (5, 5): mono(0, -2) - 1,
        (6, 6): -ONE,
        (7, 7): mono(2, 0) - 1,
        (7, 10): mono(1, 0, -1),
        (7, 13): mono(1, 0, -1) * Y,
        (8, 14): mono(1, 1),
        (9, 3): mono(0, -1),
        (9, 9): mono(0, -2) - 1,
        (10, 7): mono(1, 0, -1),
        (10, 13): Y,
        (11, 11): -ONE,
        (12, 15): mono(1, 1),
        (13, 4): ONE,
        (13, 7): mono(1, 0, -1) * Y,
        (13, 10): Y,
        (13, 13): y2,
        (14, 8): mono(1, 1),
        (14, 14): mono(2, 2) - 1,
        (15, 12): mono(1, 1),
        (15, 15): mono(2, 2) - 1,
        (16, 16): mono(2, 2),
    }
    return Tensor.from_entries(2, 2, entries)


@functools.cache
def build_sigma_inv() -> Tensor:
    """The negative crossing; checked against :func:`build_sigma` on build."""
    y2 = RingElem(Y_SQUARED)
    entries = {
        (1, 1): mono(0, 2),
        (2, 2): mono(0, 2) - 1,
        (2, 5): mono(0, 1),
        (3, 3): mono(0, 2) - 1,
        (3, 9): mono(0, 1),
        (4, 4): y2 * mono(-2, 0),
        (4, 7): Y * mono(-1, 0),
        (4, 10): Y * mono(-2, 0, -1),
        (4, 13): ONE,
        (5, 2): mono(0, 1),
        (6, 6): -ONE,
        (7, 4): Y * mono(-1, 0),
        (7, 10): mono(-1, 0, -1),
        (8, 8): mono(-2, -2) - 1,
        (8, 14): mono(-1, -1),
        (9, 3): mono(0, 1),
        (10, 4): Y * mono(-2, 0, -1),
        (10, 7): mono(-1, 0, -1),
        (10, 10): mono(-2, 0) - 1,
        (11, 11): -ONE,
        (12, 12): mono(-2, -2) - 1,
        (12, 15): mono(-1, -1),
        (13, 4): ONE,
        (14, 8): mono(-1, -1),
        (15, 12): mono(-1, -1),
        (16, 16): mono(-2, -2),
    }
    inv = Tensor.from_entries(2, 2, entries)
    sigma, eye = build_sigma(), Tensor.identity(2)
    if sigma @ inv != eye or inv @ sigma != eye:
        raise ConsistencyFailure("sigma * sigma^-1 is not the identity")
    return inv


@dataclass(frozen=True)
class CapsCups:
    """Horizontal half-loops. ``omega_*`` are caps, ``mho_*`` are cups."""

    omega_plus: Tensor
    omega_minus: Tensor
    mho_plus: Tensor
    mho_minus: Tensor


@functools.cache
def build_caps_cups() -> CapsCups:
    eye = [ONE] * 4
    return CapsCups(
        omega_plus=Tensor.diagonal(eye, n_up=0, n_low=2, capcup=True),
        omega_minus=Tensor.diagonal(
            [mono(0, -2), mono(-2, -2, -1), mono(0, -2, -1), mono(-2, -2)],
            n_up=0, n_low=2, capcup=True),
        mho_plus=Tensor.diagonal(eye, n_up=2, n_low=0, capcup=True),
        mho_minus=Tensor.diagonal(
            [mono(0, 2), mono(2, 2, -1), mono(0, 2, -1), mono(2, 2)],
            n_up=2, n_low=0, capcup=True),
    )


def ungrade(graded: np.ndarray, degrees=GRADING) -> np.ndarray:
    """Multiply ``A^{ij}_{kl}`` by ``(-1)^([k]([j]+[l]))`` (16x16 array, 0-based)."""
    out = np.array(graded, copy=True)
    for i in range(4):
        for j in range(4):
            for k in range(4):
                for l in range(4):
                    if degrees[k] * (degrees[j] + degrees[l]) % 2:
                        out[4 * i + j, 4 * k + l] *= -1
    return out


def _qbracket(x: float, q: float) -> float:
    return (q**x - q**-x) / (q - 1 / q)


def _ket(*terms: tuple[float, int, int]) -> np.ndarray:
    v = np.zeros(16)
    for coeff, i, j in terms:
        v[4 * (i - 1) + (j - 1)] += coeff
    return v


def _projector_bases(q: float, a: float) -> tuple[list, list]:
    """Coefficient lists ``(theta, x, y)`` for the bases of V_1 and V_3."""
    n1 = (q**a + q**-a) ** -0.5
    n3 = (q ** (a + 1) + q ** (-a - 1)) ** -0.5
    b2a1 = _qbracket(2 * a + 1, q) ** -0.5
    ra, ra1 = math.sqrt(_qbracket(a, q)), math.sqrt(_qbracket(a + 1, q))
    h = q**0.5
    v1 = [
        [(1.0, 1, 1)],
        [(n1 * q ** (a / 2), 1, 2), (n1 * q ** (-a / 2), 2, 1)],
        [(n1 * q ** (a / 2), 1, 3), (n1 * q ** (-a / 2), 3, 1)],
        [
            (n1 * b2a1 * ra1 * q**a, 1, 4),
            (n1 * b2a1 * ra1 * q**-a, 4, 1),
            (n1 * b2a1 * ra * h, 2, 3),
            (-n1 * b2a1 * ra / h, 3, 2),
        ],
    ]
    v3 = [
        [
            (n3 * b2a1 * ra * q ** (a + 1), 4, 1),
            (n3 * b2a1 * ra * q ** (-a - 1), 1, 4),
            (n3 * b2a1 * ra1 / h, 3, 2),
            (-n3 * b2a1 * ra1 * h, 2, 3),
        ],
        [(n3 * q ** ((a + 1) / 2), 4, 2), (n3 * q ** (-(a + 1) / 2), 2, 4)],
        [(n3 * q ** ((a + 1) / 2), 4, 3), (n3 * q ** (-(a + 1) / 2), 3, 4)],
        [(1.0, 4, 4)],
    ]
    return v1, v3


def _graded_projector(basis: list) -> np.ndarray:
    """``sum |psi><psi|`` with graded duals and the graded product rule."""
    g = [None, *GRADING]  # 1-based lookup
    out = np.zeros((16, 16))
    for terms in basis:
        ket = _ket(*terms)
        # the dual picks up (-1)^([x][y]) on each term
        bra = _ket(*[((-1) ** (g[x] * g[y]) * c, x, y) for c, x, y in terms])
        for i in range(1, 5):
            for j in range(1, 5):
                kij = ket[4 * (i - 1) + j - 1]
                if not kij:
                    continue
                for k in range(1, 5):
                    for l in range(1, 5):
                        bkl = bra[4 * (k - 1) + l - 1]
                        if bkl:
                            # (|i>(x)|j>)(<k|(x)<l|) = (-1)^([j][k]) e_ik (x) e_jl
                            out[4 * (i - 1) + j - 1, 4 * (k - 1) + l - 1] += (
                                (-1) ** (g[j] * g[k]) * kij * bkl
                            )
    return out


def projector_sigma(q: float, alpha: float) -> np.ndarray:
    """Ungraded sigma assembled from the V_1 and V_3 projectors."""
    v1, v3 = _projector_bases(q, alpha)
    p1, p3 = _graded_projector(v1), _graded_projector(v3)
    sigma = (1 + q ** (-2 * alpha)) * p1 + (1 + q ** (2 * alpha + 2)) * p3 - np.eye(16)
    return ungrade(sigma)


def numeric_projector_check(q: float, alpha: float, tol: float = 1e-9) -> bool:
    """Compare :func:`projector_sigma` with :func:`build_sigma` at ``p = q**alpha``."""
    if not (q > 0 and alpha > 0) or q == 1:
        raise DomainError(f"need q > 0, q != 1 and alpha > 0; got q={q}, alpha={alpha}")
    p = q**alpha
    # Y = q^(1/2) (q - 1/q) ([alpha]_q [alpha + 1]_q)^(1/2): the root carries the sign of q - 1
    y = math.copysign(math.sqrt(Y_SQUARED.evaluate(q, p)), q - 1)
    symbolic = build_sigma().evaluate(q, p, y).real
    diff = np.max(np.abs(projector_sigma(q, alpha) - symbolic))
    return bool(diff <= tol)
