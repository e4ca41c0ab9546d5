"""Spectra and the floating-point shift-enabled decision.

A real symmetric shift matrix is shift-enabled exactly when its
eigenvalues are pairwise distinct. Numerically, "distinct" means every
consecutive gap of the sorted spectrum exceeds ``tol_rel * max(1, |lambda|_max)``.
Collisions in unweighted graphs are algebraic (the computed gap is at
rounding level), so the default ``1e-8`` sits comfortably between LAPACK
backward error and genuine gaps; :mod:`shiftlab.exact` cross-checks it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import NonSymmetricKindError, NotLaplacianSpectrumError, ShiftLabError
from .graph import Graph, _check_lattice, is_connected
from .shift import (
    ShiftKind,
    ShiftMatrix,
    build_shift,
    check_shift_preconditions,
    symmetrize_transition,
)

__all__ = [
    "DEFAULT_TOL",
    "Spectrum",
    "Reason",
    "ShiftEnabledVerdict",
    "eigenvalues_symmetric",
    "spectrum_from_values",
    "is_shift_enabled",
    "ring_lattice_spectrum",
    "complement_spectrum",
]

DEFAULT_TOL = 1e-8

# kinds with one forced eigenvalue per component (0 for D-W and its
# normalization, 1 for D^-1 W), so a disconnected graph repeats it
_COMPONENT_EIGENVALUE_KINDS = frozenset(
    {ShiftKind.LAPLACIAN, ShiftKind.NORMALIZED_LAPLACIAN, ShiftKind.TRANSITION}
)


@dataclass(frozen=True, eq=False)
class Spectrum:
    values: np.ndarray
    min_gap: float
    scale: float
    gap_index: int | None = None  # values[gap_index], values[gap_index+1] are closest

    def __len__(self):
        return self.values.size

    def closest_pair(self):
        if self.gap_index is None:
            return None
        i = self.gap_index
        return (i, i + 1), (float(self.values[i]), float(self.values[i + 1]))

    def is_simple(self, tol_rel: float = DEFAULT_TOL) -> bool:
        return self.min_gap > tol_rel * self.scale


def spectrum_from_values(values) -> Spectrum:
    vals = np.sort(np.asarray(values, dtype=float))
    vals.flags.writeable = False
    scale = max(1.0, float(np.max(np.abs(vals)))) if vals.size else 1.0
    if vals.size < 2:
        return Spectrum(vals, float("inf"), scale)
    gaps = np.diff(vals)
    i = int(np.argmin(gaps))
    return Spectrum(vals, float(gaps[i]), scale, i)


def eigenvalues_symmetric(s: ShiftMatrix) -> Spectrum:
    """All eigenvalues of a symmetric shift matrix, ascending (LAPACK ``syevd``)."""
    if not s.is_symmetric_kind:
        raise NonSymmetricKindError(
            "transition matrices must be passed through symmetrize_transition first"
        )
    return spectrum_from_values(np.linalg.eigvalsh(s.entries))


class Reason(enum.Enum):
    DISCONNECTED = "disconnected"
    REPEATED_EIGENVALUE = "repeated eigenvalue"
    DISTINCT_SPECTRUM = "distinct spectrum"
    EXACT_SQUARE_FREE = "exact square-free test"


@dataclass(frozen=True)
class ShiftEnabledVerdict:
    enabled: bool
    reason: Reason
    tolerance_used: float | None = None
    gap: float | None = None
    pair: tuple[int, int] | None = None
    value: float | None = None
    spectrum: Spectrum | None = None

    def __post_init__(self):
        if self.enabled and self.reason not in (Reason.DISTINCT_SPECTRUM, Reason.EXACT_SQUARE_FREE):
            raise ValueError(f"an enabled verdict cannot carry reason {self.reason}")

    def __bool__(self):
        return self.enabled

    def describe(self) -> str:
        head = "shift-enabled" if self.enabled else "not shift-enabled"
        if self.reason is Reason.REPEATED_EIGENVALUE:
            return f"{head}: repeated eigenvalue {self.value:.9g} (gap {self.gap:.3g})"
        return f"{head}: {self.reason.value}"


def _symmetric_shift(g, kind):
    s = build_shift(g, kind)
    if s.kind is ShiftKind.TRANSITION:
        s = symmetrize_transition(s)
    return s


def is_shift_enabled(
    g: Graph, kind=ShiftKind.LAPLACIAN, tol_rel: float = DEFAULT_TOL, connected: bool | None = None
) -> ShiftEnabledVerdict:
    """Decide whether ``g`` is shift-enabled for the given shift matrix.

    Shift-matrix preconditions are checked first (their errors propagate).
    Disconnected graphs are rejected without an eigensolve for the kinds
    whose spectrum repeats an eigenvalue per component. ``connected`` lets a
    caller that already knows the answer skip the traversal.
    """
    if not tol_rel > 0:
        raise ShiftLabError(f"tol_rel must be positive, got {tol_rel}")
    kind = check_shift_preconditions(g, kind)
    if kind in _COMPONENT_EIGENVALUE_KINDS and g.n > 1:
        if connected is None:
            connected = is_connected(g)
        if not connected:
            return ShiftEnabledVerdict(False, Reason.DISCONNECTED, tol_rel)
    spec = eigenvalues_symmetric(_symmetric_shift(g, kind))
    if spec.is_simple(tol_rel):
        return ShiftEnabledVerdict(True, Reason.DISTINCT_SPECTRUM, tol_rel, spec.min_gap, spectrum=spec)
    (i, j), (a, b) = spec.closest_pair()
    return ShiftEnabledVerdict(
        False,
        Reason.REPEATED_EIGENVALUE,
        tol_rel,
        gap=spec.min_gap,
        pair=(i, j),
        value=0.5 * (a + b),
        spectrum=spec,
    )


def ring_lattice_spectrum(n: int, k_half: int) -> Spectrum:
    """Closed-form Laplacian spectrum of the circulant ring lattice.

    The adjacency eigenvalues are ``2 * sum_{t=1..k} cos(2 pi t j / n)`` for
    ``j = 0..n-1``; the lattice is ``2k``-regular, so the Laplacian ones are
    ``2k`` minus those. Indices ``j`` and ``n - j`` give equal values.
    """
    _check_lattice(n, k_half)
    j = np.arange(n)[:, None]
    t = np.arange(1, k_half + 1)[None, :]
    adj = 2.0 * np.cos(2.0 * np.pi * ((t * j) % n) / n).sum(axis=1)
    return spectrum_from_values(2.0 * k_half - adj)


def complement_spectrum(spec: Spectrum, n: int, tol_rel: float = DEFAULT_TOL) -> Spectrum:
    """Laplacian spectrum of the complement predicted from a connected graph's.

    The single zero stays, every other eigenvalue maps to ``n - lambda``.
    """
    vals = np.asarray(spec.values)
    if vals.size != n:
        raise NotLaplacianSpectrumError(f"spectrum has {vals.size} values, expected {n}")
    zero = np.abs(vals) <= tol_rel * spec.scale
    count = int(zero.sum())
    if count == 0:
        raise NotLaplacianSpectrumError("no zero eigenvalue: not a Laplacian spectrum")
    if count > 1:
        raise NotLaplacianSpectrumError(
            f"{count} zero eigenvalues: the graph is disconnected"
        )
    rest = vals[~zero]
    return spectrum_from_values(np.concatenate([[0.0], n - rest]))
