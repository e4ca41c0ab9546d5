"""Graph shift matrices."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import IsolatedVertexError, SignedInputError, WrongKindError
from .graph import Graph

__all__ = [
    "ShiftKind",
    "ShiftMatrix",
    "check_shift_preconditions",
    "build_shift",
    "symmetrize_transition",
]


class ShiftKind(enum.Enum):
    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"
    NORMALIZED_LAPLACIAN = "normalized"
    SIGNLESS_LAPLACIAN = "signless"
    TRANSITION = "transition"
    SIGNED_LAPLACIAN = "signed"

    @classmethod
    def parse(cls, value) -> ShiftKind:
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        for kind in cls:
            if key in (kind.value, kind.name.lower()):
                return kind
        names = ", ".join(k.value for k in cls)
        raise ValueError(f"unknown shift kind {value!r} (choose from {names})")


@dataclass(frozen=True, eq=False)
class ShiftMatrix:
    """Dense shift matrix tagged with its kind.

    ``symmetrized`` marks a transition matrix replaced by its symmetric
    similarity transform; ``degrees`` is kept for transition matrices so the
    transform can be formed later.
    """

    kind: ShiftKind
    entries: np.ndarray
    symmetrized: bool = False
    degrees: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        self.entries.flags.writeable = False

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def is_symmetric_kind(self) -> bool:
        return self.kind is not ShiftKind.TRANSITION or self.symmetrized

    def to_text(self) -> str:
        """Row-major debug dump (not a stable format)."""
        return "\n".join(" ".join(f"{x:.17g}" for x in row) for row in self.entries)


def _mirror_upper(M):
    # copy the upper triangle over the lower so symmetry is exact
    return np.triu(M) + np.triu(M, 1).T


def _require_positive_degrees(d, kind):
    if np.any(d == 0):
        k = int(np.flatnonzero(d == 0)[0])
        raise IsolatedVertexError(f"{kind.value} matrix undefined: vertex {k} has degree 0")


_NONNEGATIVE_KINDS = frozenset(
    {ShiftKind.LAPLACIAN, ShiftKind.NORMALIZED_LAPLACIAN, ShiftKind.TRANSITION}
)


def check_shift_preconditions(g: Graph, kind) -> ShiftKind:
    """Raise the error :func:`build_shift` would raise, without building."""
    kind = ShiftKind.parse(kind)
    if kind in _NONNEGATIVE_KINDS and g.has_negative_weights():
        raise SignedInputError(
            f"{kind.value} matrix needs nonnegative weights; use the signed Laplacian"
        )
    if kind in (ShiftKind.NORMALIZED_LAPLACIAN, ShiftKind.TRANSITION):
        _require_positive_degrees(g.degrees(), kind)
    return kind


def build_shift(g: Graph, kind) -> ShiftMatrix:
    """Dense shift matrix of ``g``.

    ========================  ================================
    adjacency                 W
    laplacian                 D - W
    normalized                D^-1/2 (D - W) D^-1/2
    signless                  D + W
    transition                D^-1 W
    signed                    D_abs - W,  D_abs = diag(sum |w|)
    ========================  ================================
    """
    kind = check_shift_preconditions(g, kind)
    W = g.weight_matrix()

    if kind is ShiftKind.ADJACENCY:
        return ShiftMatrix(kind, W)
    if kind is ShiftKind.SIGNED_LAPLACIAN:
        return ShiftMatrix(kind, np.diag(np.abs(W).sum(axis=1)) - W)

    d = W.sum(axis=1)
    if kind is ShiftKind.LAPLACIAN:
        return ShiftMatrix(kind, np.diag(d) - W)
    if kind is ShiftKind.SIGNLESS_LAPLACIAN:
        return ShiftMatrix(kind, np.diag(d) + W)

    _require_positive_degrees(d, kind)
    if kind is ShiftKind.TRANSITION:
        return ShiftMatrix(kind, W / d[:, None], degrees=d)
    s = 1.0 / np.sqrt(d)
    L = np.diag(d) - W
    return ShiftMatrix(kind, _mirror_upper(s[:, None] * L * s[None, :]))


def symmetrize_transition(t: ShiftMatrix) -> ShiftMatrix:
    """Replace ``T = D^-1 W`` by the similar symmetric matrix ``D^-1/2 W D^-1/2``."""
    if t.kind is not ShiftKind.TRANSITION or t.symmetrized or t.degrees is None:
        raise WrongKindError(f"expected an unsymmetrized transition matrix, got {t.kind.value}")
    d = t.degrees
    W = t.entries * d[:, None]
    s = 1.0 / np.sqrt(d)
    return ShiftMatrix(
        ShiftKind.TRANSITION,
        _mirror_upper(s[:, None] * W * s[None, :]),
        symmetrized=True,
        degrees=d,
    )
