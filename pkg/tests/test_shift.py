import numpy as np
import pytest

from conftest import complete, cycle, path, star
from shiftlab import (
    Exponential,
    Graph,
    IsolatedVertexError,
    ShiftKind,
    SignedInputError,
    SignedUnit,
    WrongKindError,
    apply_weights,
    build_shift,
    gen_er_gnm,
    symmetrize_transition,
)


def test_path_laplacian():
    L = build_shift(path(3), "laplacian").entries
    assert np.array_equal(L, [[1, -1, 0], [-1, 2, -1], [0, -1, 1]])


def test_adjacency_and_signless():
    g = path(3)
    A = build_shift(g, ShiftKind.ADJACENCY).entries
    Q = build_shift(g, ShiftKind.SIGNLESS_LAPLACIAN).entries
    assert np.array_equal(A, [[0, 1, 0], [1, 0, 1], [0, 1, 0]])
    assert np.array_equal(Q, np.diag([1, 2, 1]) + A)


def test_star_normalized_laplacian():
    N = build_shift(star(3), "normalized").entries
    assert np.allclose(np.diag(N), 1.0)
    assert np.allclose(N[0, 1:], -1 / np.sqrt(3))
    assert np.array_equal(N, N.T)


def test_signed_laplacian_of_signed_edge():
    g = Graph(3, [(0, 1, -1.0), (1, 2, 1.0)])
    S = build_shift(g, "signed").entries
    assert np.array_equal(S, [[1, 1, 0], [1, 2, -1], [0, -1, 1]])


@pytest.mark.parametrize("kind", ["laplacian", "normalized", "transition"])
def test_nonnegative_kinds_reject_signs(kind):
    with pytest.raises(SignedInputError):
        build_shift(Graph(3, [(0, 1, -1.0), (1, 2, 1.0)]), kind)


@pytest.mark.parametrize("kind", ["normalized", "transition"])
def test_isolated_vertex_rejected(kind):
    with pytest.raises(IsolatedVertexError):
        build_shift(Graph(3, [(0, 1)]), kind)


def test_unknown_kind():
    with pytest.raises(ValueError):
        build_shift(path(3), "bogus")


def test_row_sums(rng):
    for seed in range(50):
        g = apply_weights(gen_er_gnm(12, 30, seed), Exponential(1.0), seed)
        W = g.weight_matrix()
        d = W.sum(axis=1)
        L = build_shift(g, "laplacian").entries
        assert np.allclose(L.sum(axis=1), 0.0, atol=1e-12)
        if np.all(d > 0):
            T = build_shift(g, "transition").entries
            assert np.allclose(T.sum(axis=1), 1.0)
            N = build_shift(g, "normalized").entries
            assert np.allclose(N @ np.sqrt(d), 0.0, atol=1e-12)


def test_laplacians_are_psd():
    for seed in range(100):
        g = apply_weights(gen_er_gnm(10, 20, seed), Exponential(2.0), seed)
        for kind in ("laplacian", "signless"):
            assert np.linalg.eigvalsh(build_shift(g, kind).entries).min() > -1e-10
        signed = apply_weights(g, SignedUnit(), seed)
        assert np.linalg.eigvalsh(build_shift(signed, "signed").entries).min() > -1e-10


def test_signed_equals_laplacian_on_positive_weights():
    for seed in range(30):
        g = apply_weights(gen_er_gnm(10, 25, seed), Exponential(1.0), seed)
        assert np.array_equal(build_shift(g, "signed").entries, build_shift(g, "laplacian").entries)


def test_symmetric_kinds_are_exactly_symmetric():
    for seed in range(30):
        g = apply_weights(gen_er_gnm(14, 60, seed), Exponential(0.3), seed)
        if np.any(g.degrees() == 0):
            continue
        for kind in ShiftKind:
            s = build_shift(g, kind)
            if kind is ShiftKind.TRANSITION:
                s = symmetrize_transition(s)
            assert np.array_equal(s.entries, s.entries.T)


def test_symmetrized_transition_is_similar():
    for seed in range(30):
        g = apply_weights(gen_er_gnm(10, 30, seed), Exponential(1.0), seed)
        if np.any(g.degrees() == 0):
            continue
        T = build_shift(g, "transition")
        sym = symmetrize_transition(T)
        direct = np.sort(np.linalg.eigvals(T.entries).real)
        assert np.allclose(np.linalg.eigvalsh(sym.entries), direct, atol=1e-10)


def test_symmetrize_only_transition():
    with pytest.raises(WrongKindError):
        symmetrize_transition(build_shift(cycle(4), "laplacian"))
    sym = symmetrize_transition(build_shift(cycle(4), "transition"))
    with pytest.raises(WrongKindError):
        symmetrize_transition(sym)


def test_entries_read_only():
    s = build_shift(complete(3), "adjacency")
    with pytest.raises(ValueError):
        s.entries[0, 0] = 1.0
    assert s.n == 3
    assert s.to_text().splitlines()[0] == "0 1 1"
