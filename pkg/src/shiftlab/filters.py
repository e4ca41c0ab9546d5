"""Linear shift-invariant filters: commutation, polynomial fitting, counterexamples."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DoesNotCommuteError,
    IsShiftEnabledError,
    NonSymmetricKindError,
    NotRepresentableError,
    ShiftLabError,
)
from .shift import ShiftMatrix
from .spectral import DEFAULT_TOL

__all__ = [
    "FilterFit",
    "commutes",
    "fit_filter_polynomial",
    "apply_polynomial",
    "commuting_witness",
]


def _entries(s):
    if isinstance(s, ShiftMatrix):
        return s.entries
    return np.asarray(s, dtype=float)


def _symmetric_entries(s):
    if isinstance(s, ShiftMatrix) and not s.is_symmetric_kind:
        raise NonSymmetricKindError("symmetrize the transition matrix first")
    return _entries(s)


def commutes(h, s, tol: float = DEFAULT_TOL) -> bool:
    """``||HS - SH||_inf <= tol * (1 + ||H||_inf * ||S||_inf)``."""
    H = np.asarray(h, dtype=float)
    S = _entries(s)
    if H.shape != S.shape or H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ShiftLabError(f"dimension mismatch: {H.shape} vs {S.shape}")
    inf = np.inf
    lhs = np.linalg.norm(H @ S - S @ H, inf)
    return bool(lhs <= tol * (1.0 + np.linalg.norm(H, inf) * np.linalg.norm(S, inf)))


@dataclass(frozen=True)
class FilterFit:
    """``H ~= sum_k coefficients[k] * S**k``; ``residual`` is the inf-norm error."""

    coefficients: np.ndarray
    residual: float


def apply_polynomial(coefficients, s) -> np.ndarray:
    """Evaluate ``sum_k c_k S^k`` by Horner's rule."""
    S = _entries(s)
    out = np.zeros_like(S)
    eye = np.identity(S.shape[0])
    for c in reversed(list(coefficients)):
        out = out @ S + c * eye
    return out


def _clusters(values, tol_abs):
    groups = [[0]]
    for i in range(1, values.size):
        if values[i] - values[i - 1] <= tol_abs:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def _leja_order(x):
    # Leja ordering keeps Newton divided differences well conditioned
    remaining = list(range(x.size))
    first = max(remaining, key=lambda i: abs(x[i]))
    order = [first]
    remaining.remove(first)
    prod = np.abs(x - x[first])
    while remaining:
        nxt = max(remaining, key=lambda i: prod[i])
        order.append(nxt)
        remaining.remove(nxt)
        prod = prod * np.abs(x - x[nxt])
    return np.array(order, dtype=int)


def _newton_monomial(x, y):
    """Monomial coefficients (ascending) of the interpolant through ``(x, y)``."""
    order = _leja_order(x)
    x, a = x[order], y[order].astype(float)
    m = x.size
    for j in range(1, m):
        a[j:] = (a[j:] - a[j - 1 : -1]) / (x[j:] - x[: m - j])
    poly = np.array([a[-1]])
    for k in range(m - 2, -1, -1):
        # poly * (t - x_k) + a_k
        shifted = np.concatenate([[0.0], poly])
        shifted[:-1] -= x[k] * poly
        shifted[0] += a[k]
        poly = shifted
    return poly


def fit_filter_polynomial(h, s, tol: float = DEFAULT_TOL) -> FilterFit:
    """Express a commuting filter as a polynomial in a symmetric shift matrix.

    Diagonalize ``S = Q diag(lam) Q^T`` and read the filter's frequency
    response from the diagonal of ``Q^T H Q``. Eigenvalues closer than
    ``tol * max(1, |lam|_max)`` are one repeated eigenvalue; on such an
    eigenspace the filter must act as a scalar, otherwise
    :class:`NotRepresentableError` is raised. The coefficients (lowest degree
    first, padded to length ``n``) interpolate the response in Newton form.
    """
    H = np.asarray(h, dtype=float)
    S = _symmetric_entries(s)
    if not commutes(H, S, tol):
        raise DoesNotCommuteError("filter does not commute with the shift matrix")
    n = S.shape[0]
    lam, Q = np.linalg.eigh(S)
    B = Q.T @ H @ Q
    scale = max(1.0, float(np.max(np.abs(lam))))
    block_tol = tol * (1.0 + np.linalg.norm(H, np.inf))
    points, response = [], []
    for idx in _clusters(lam, tol * scale):
        block = B[np.ix_(idx, idx)]
        mu = float(np.trace(block)) / len(idx)
        if len(idx) > 1 and np.max(np.abs(block - mu * np.identity(len(idx)))) > block_tol:
            value = float(lam[idx].mean())
            raise NotRepresentableError(
                f"filter is not scalar on the {len(idx)}-dimensional eigenspace of {value:.9g}",
                eigenvalue=value,
                eigenspace=Q[:, idx].copy(),
            )
        points.append(float(lam[idx].mean()))
        response.append(mu)
    coeffs = np.zeros(n)
    fitted = _newton_monomial(np.array(points), np.array(response))
    coeffs[: fitted.size] = fitted
    residual = float(np.linalg.norm(H - apply_polynomial(coeffs, S), np.inf))
    return FilterFit(coeffs, residual)


def commuting_witness(s, tol_rel: float = DEFAULT_TOL) -> np.ndarray:
    """A symmetric filter commuting with ``S`` that is no polynomial in ``S``.

    Takes the two eigenvectors ``u, v`` of the closest eigenvalue pair and
    returns ``u v^T + v u^T``. Requires that pair to be a repeated eigenvalue.
    """
    S = _symmetric_entries(s)
    lam, Q = np.linalg.eigh(S)
    if lam.size < 2:
        raise IsShiftEnabledError("a 1x1 shift matrix is always shift-enabled")
    gaps = np.diff(lam)
    i = int(np.argmin(gaps))
    scale = max(1.0, float(np.max(np.abs(lam))))
    if gaps[i] > tol_rel * scale:
        raise IsShiftEnabledError("all eigenvalues are distinct; no witness exists")
    U, _ = np.linalg.qr(Q[:, [i, i + 1]])
    u, v = U[:, 0], U[:, 1]
    return np.outer(u, v) + np.outer(v, u)
