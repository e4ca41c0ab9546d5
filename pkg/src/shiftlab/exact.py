"""Exact shift-enabled test for integer shift matrices.

For a symmetric matrix the minimal polynomial is the square-free part of
the characteristic polynomial, so ``p_S == m_S`` iff ``p_S`` is square-free.
Both steps run in arbitrary-precision integers: the characteristic
polynomial by the Faddeev–LeVerrier recurrence (every division by ``k`` is
exact), square-freeness by a subresultant remainder sequence for
``gcd(p, p')``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd

import numpy as np

from .errors import DimensionTooLargeError, NonIntegerEntriesError, ShiftLabError
from .graph import Graph
from .shift import ShiftKind, ShiftMatrix, build_shift
from .spectral import Reason, ShiftEnabledVerdict

__all__ = [
    "MAX_EXACT_DIM",
    "IntPolynomial",
    "char_poly_exact",
    "poly_gcd",
    "is_squarefree",
    "is_shift_enabled_exact",
]

MAX_EXACT_DIM = 64

_INTEGER_KINDS = frozenset(
    {
        ShiftKind.ADJACENCY,
        ShiftKind.LAPLACIAN,
        ShiftKind.SIGNLESS_LAPLACIAN,
        ShiftKind.SIGNED_LAPLACIAN,
    }
)


@dataclass(frozen=True)
class IntPolynomial:
    """Monic integer polynomial, coefficients from the leading term down."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        if not coeffs or coeffs[0] != 1:
            raise ShiftLabError("IntPolynomial must be monic")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = 0
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def derivative(self) -> tuple[int, ...]:
        d = self.degree
        return tuple(c * (d - i) for i, c in enumerate(self.coefficients[:-1]))


def _integer_matrix(s: ShiftMatrix):
    if s.kind not in _INTEGER_KINDS:
        raise NonIntegerEntriesError(f"{s.kind.value} matrices are not integer valued")
    E = s.entries
    R = np.rint(E)
    if not np.array_equal(E, R):
        raise NonIntegerEntriesError("shift matrix has non-integer entries (weighted graph?)")
    return R.astype(np.int64).astype(object)


def char_poly_exact(s: ShiftMatrix) -> IntPolynomial:
    """``det(lambda I - S)`` with exact integer coefficients.

    Faddeev–LeVerrier: ``M_1 = I``, ``c_{n-k} = -tr(S M_k) / k``,
    ``M_{k+1} = S M_k + c_{n-k} I``.
    """
    A = _integer_matrix(s)
    n = A.shape[0]
    coeffs = [1]
    identity = np.identity(n, dtype=np.int64).astype(object)
    M = identity.copy()
    for k in range(1, n + 1):
        AM = A.dot(M)
        c, rem = divmod(-sum(AM.diagonal()), k)
        if rem:
            raise ArithmeticError("Faddeev-LeVerrier division was not exact")
        coeffs.append(c)
        if k < n:
            M = AM
            for i in range(n):
                M[i, i] += c
    return IntPolynomial(tuple(coeffs))


# ---------------------------------------------------------------------------
# integer polynomial arithmetic on coefficient lists (leading term first)


def _strip(p):
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def _is_zero(p):
    return len(p) == 1 and p[0] == 0


def _content(p):
    return reduce(gcd, p, 0)


def _primitive(p):
    c = _content(p)
    if c == 0:
        return list(p)
    if p[0] < 0:
        c = -c
    return [x // c for x in p]


def _prem(f, g):
    """Pseudo-remainder of ``lc(g)^(deg f - deg g + 1) * f`` by ``g``."""
    dg = len(g) - 1
    lg = g[0]
    r = list(f)
    step = len(f) - len(g) + 1
    while not _is_zero(r) and len(r) - 1 >= dg:
        lr = r[0]
        r = [lg * x for x in r]
        for i, b in enumerate(g):
            r[i] -= lr * b
        r = _strip(r[1:] or [0])
        step -= 1
    if step > 0:
        scale = lg**step
        r = [scale * x for x in r]
    return r


def poly_gcd(f, g) -> list[int]:
    """Primitive gcd over Q[x] of two integer polynomials (subresultant PRS)."""
    A, B = _strip(list(f)), _strip(list(g))
    if len(B) > len(A):
        A, B = B, A
    if _is_zero(B):
        return _primitive(A)
    A, B = _primitive(A), _primitive(B)
    g_, h = 1, 1
    while True:
        delta = len(A) - len(B)
        R = _prem(A, B)
        if _is_zero(R):
            return _primitive(B)
        if len(R) == 1:
            return [1]
        A = B
        div = g_ * h**delta
        B = [x // div for x in R]
        g_ = A[0]
        if delta == 0:
            pass
        elif delta == 1:
            h = g_
        else:
            h = g_**delta // h ** (delta - 1)


def is_squarefree(p: IntPolynomial) -> bool:
    """True iff ``p`` has no repeated complex root, i.e. ``gcd(p, p')`` is constant."""
    if p.degree <= 1:
        return True
    return len(poly_gcd(p.coefficients, p.derivative())) == 1


def is_shift_enabled_exact(g: Graph, kind=ShiftKind.LAPLACIAN) -> ShiftEnabledVerdict:
    """Tolerance-free verdict for integer-valued shift matrices (``n <= 64``)."""
    kind = ShiftKind.parse(kind)
    if g.n > MAX_EXACT_DIM:
        raise DimensionTooLargeError(
            f"exact test is limited to n <= {MAX_EXACT_DIM}, got n={g.n}"
        )
    if kind not in _INTEGER_KINDS:
        raise NonIntegerEntriesError(f"{kind.value} matrices are not integer valued")
    p = char_poly_exact(build_shift(g, kind))
    return ShiftEnabledVerdict(is_squarefree(p), Reason.EXACT_SQUARE_FREE)
