import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete, cycle, path
from shiftlab import (
    Exponential,
    Gaussian,
    Graph,
    ShiftLabError,
    SignedUnit,
    UnitWeight,
    apply_weights,
    complement,
    components,
    gen_ba,
    gen_balanced_signed,
    gen_er_gnm,
    gen_er_gnp,
    gen_ws,
    is_balanced,
    is_connected,
    ring_lattice,
    sign_by_partition,
)
from shiftlab.graph import derive_seed, make_rng


def assert_canonical(g):
    u, v, w = g.heads, g.tails, g.weights
    assert np.all(u < v)
    assert np.all(v < g.n) and np.all(u >= 0)
    key = u * g.n + v
    assert np.all(np.diff(key) > 0)
    assert np.all(w != 0)


# --- Graph type -----------------------------------------------------------


def test_graph_canonicalizes_edges():
    g = Graph(4, [(3, 1, 2.0), (0, 2)])
    assert g.edges == ((0, 2, 1.0), (1, 3, 2.0))
    assert g == Graph(4, [(0, 2, 1.0), (1, 3, 2.0)])
    assert hash(g) == hash(Graph(4, [(1, 3, 2.0), (2, 0)]))


@pytest.mark.parametrize(
    "edges",
    [[(0, 0)], [(0, 1), (1, 0)], [(0, 5)], [(0, 1, 0.0)], [(0, 1, float("nan"))]],
)
def test_graph_rejects_non_simple(edges):
    with pytest.raises(ShiftLabError):
        Graph(3, edges)


def test_graph_is_immutable():
    g = path(3)
    with pytest.raises(ValueError):
        g.weights[0] = 5.0


# --- ER ------------------------------------------------------------------


def test_gnp_extremes():
    assert gen_er_gnp(5, 0.0, 1).num_edges == 0
    assert gen_er_gnp(5, 1.0, 1) == complete(5)


def test_gnp_edge_count_six_sigma():
    pairs = math.comb(50, 2)
    mean, sd = pairs * 0.5, math.sqrt(pairs * 0.25)
    lo, hi = math.ceil(mean - 6 * sd), math.floor(mean + 6 * sd)
    assert (lo, hi) == (508, 717)
    assert lo <= gen_er_gnp(50, 0.5, 12345).num_edges <= hi


@pytest.mark.parametrize("p", [-0.1, 1.5])
def test_gnp_rejects_probability(p):
    with pytest.raises(ShiftLabError):
        gen_er_gnp(5, p, 0)


def test_gnm_examples():
    assert gen_er_gnm(5, 0, 3).num_edges == 0
    assert gen_er_gnm(5, 10, 3) == complete(5)
    for seed in range(20):
        assert gen_er_gnm(50, 100, seed).num_edges == 100
    with pytest.raises(ShiftLabError):
        gen_er_gnm(5, 11, 0)


def test_gnm_is_uniform_over_pairs():
    # every pair is picked with probability m / C(n, 2)
    counts = np.zeros((6, 6))
    trials = 3000
    for seed in range(trials):
        g = gen_er_gnm(6, 5, seed)
        counts[g.heads, g.tails] += 1
    freq = counts[np.triu_indices(6, 1)] / trials
    assert np.allclose(freq, 5 / 15, atol=0.04)


# --- WS ------------------------------------------------------------------


def test_ws_beta_zero_is_ring_lattice():
    assert gen_ws(6, 1, 0.0, 9) == cycle(6)
    g = gen_ws(20, 2, 0.0, 9)
    assert g.num_edges == 40
    assert np.all(g.degrees() == 4)
    assert g == ring_lattice(20, 2)


def test_ws_full_rewiring_keeps_edge_count():
    variances = []
    for seed in range(10):
        g = gen_ws(20, 2, 1.0, seed)
        assert g.num_edges == 40
        variances.append(g.degrees().var())
    assert max(variances) > 0


@pytest.mark.parametrize("args", [(20, 0, 0.5), (20, 10, 0.5), (20, 2, -0.1), (20, 2, 1.5), (2, 1, 0.0)])
def test_ws_rejects_parameters(args):
    with pytest.raises(ShiftLabError):
        gen_ws(*args, 0)


def test_ws_saturated_vertices_keep_edges():
    # k_half = (n-1)/2 is complete: nothing can be rewired
    assert gen_ws(7, 3, 1.0, 4) == complete(7)


# --- BA ------------------------------------------------------------------


def test_ba_tree():
    g = gen_ba(50, 1, 1, 3)
    assert g.num_edges == 49
    assert is_connected(g)


def test_ba_large_seed_set_is_disconnected():
    g = gen_ba(50, 25, 1, 3)
    assert g.num_edges == 25
    assert not is_connected(g)


def test_ba_edge_count():
    assert gen_ba(10, 2, 2, 0).num_edges == 16


@pytest.mark.parametrize("args", [(10, 2, 3), (10, 11, 1), (10, 2, 0)])
def test_ba_rejects_parameters(args):
    with pytest.raises(ShiftLabError):
        gen_ba(*args, 0)


def test_ba_prefers_high_degree():
    # vertex 0 of a BA tree collects far more than the uniform-attachment share
    hub = np.mean([gen_ba(30, 1, 1, s).degrees()[0] for s in range(300)])
    uniform = sum(1 / t for t in range(1, 30))  # expected degree with uniform choice
    assert hub > 1.3 * uniform


# --- weights and signs -----------------------------------------------------


def test_apply_weights_examples():
    k3 = complete(3)
    assert apply_weights(k3, UnitWeight(), 0) == k3
    w = apply_weights(k3, Exponential(10), 5).weights
    assert np.all(w > 0) and w.size == 3
    signed = apply_weights(path(3), SignedUnit(), 5).weights
    assert set(signed.tolist()) <= {1.0, -1.0}


def test_weighted_topology_unchanged():
    g = gen_er_gnm(15, 40, 2)
    h = apply_weights(g, Gaussian(0.0, 1.0), 3)
    assert np.array_equal(g.heads, h.heads) and np.array_equal(g.tails, h.tails)
    assert h.has_negative_weights()


def test_gaussian_zero_draws_are_resampled():
    class Stub:
        def __init__(self):
            self.calls = 0

        def normal(self, loc, scale, size):
            self.calls += 1
            return np.zeros(size) if self.calls == 1 else np.full(size, 2.0)

    assert np.all(Gaussian(0, 1).sample(Stub(), 4) == 2.0)


@pytest.mark.parametrize("bad", [lambda: Exponential(0), lambda: Gaussian(0, -1)])
def test_weight_distribution_invariants(bad):
    with pytest.raises(ShiftLabError):
        bad()


def test_sign_by_partition_examples():
    tri = sign_by_partition(complete(3), [True, True, False])
    assert tri.edges == ((0, 1, 1.0), (0, 2, -1.0), (1, 2, -1.0))
    assert np.prod(tri.weights) > 0 and is_balanced(tri)
    edge = sign_by_partition(Graph(2, [(0, 1)]), [True, False])
    assert edge.edges == ((0, 1, -1.0),) and is_balanced(edge)


def test_balanced_generator():
    for seed in range(200):
        g = gen_balanced_signed(20, 60, seed)
        assert g.num_edges == 60
        assert is_balanced(g)


def test_is_balanced_examples():
    assert is_balanced(complete(3))
    assert not is_balanced(complete(3).with_weights([1.0, 1.0, -1.0]))


def _on_cycle(g, k):
    # edge k lies on a cycle iff its endpoints stay connected without it
    keep = np.ones(g.num_edges, dtype=bool)
    keep[k] = False
    h = Graph.from_arrays(g.n, g.heads[keep], g.tails[keep], g.weights[keep])
    _, labels = components(h)
    return labels[g.heads[k]] == labels[g.tails[k]]


def test_flipping_a_cycle_edge_unbalances(rng):
    checked = 0
    for seed in range(100):
        g = gen_balanced_signed(10, 18, seed)
        for k in range(g.num_edges):
            if _on_cycle(g, k):
                w = g.weights.copy()
                w[k] = -w[k]
                assert not is_balanced(g.with_weights(w))
                checked += 1
                break
    assert checked > 50


# --- connectivity -----------------------------------------------------------


def test_is_connected_examples():
    assert not is_connected(Graph(2))
    assert is_connected(complete(5))
    assert not is_connected(Graph(4, [(0, 1), (1, 2)]))
    assert is_connected(Graph(1))


def _reachability_connected(g):
    n = g.n
    A = (g.weight_matrix() != 0).astype(np.int64)
    R = np.linalg.matrix_power(np.identity(n, dtype=np.int64) + A, max(n - 1, 1))
    return bool(np.all(R > 0))


def test_is_connected_matches_reachability_matrix(rng):
    for _ in range(3000):
        n = int(rng.integers(1, 8))
        m = int(rng.integers(0, n * (n - 1) // 2 + 1))
        g = gen_er_gnm(n, m, rng)
        if rng.random() < 0.3 and g.num_edges:
            g = apply_weights(g, SignedUnit(), rng)
        assert is_connected(g) == _reachability_connected(g)


# --- complement -------------------------------------------------------------


def test_complement_examples():
    assert complement(complete(5)).num_edges == 0
    assert complement(path(3)).edges == ((0, 2, 1.0),)


def test_complement_rejects_weighted():
    with pytest.raises(ShiftLabError):
        complement(apply_weights(complete(3), SignedUnit(), 1).with_weights([1, 1, -1]))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 12), st.data())
def test_complement_involution(n, data):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    g = Graph(n, chosen)
    c = complement(g)
    assert g.num_edges + c.num_edges == n * (n - 1) // 2
    assert complement(c) == g


# --- generator invariants over many seeds ----------------------------------


def test_generators_fuzz_invariants():
    rng = np.random.default_rng(7)
    for seed in range(2500):
        n = int(rng.integers(3, 13))
        m = int(rng.integers(0, n * (n - 1) // 2 + 1))
        g = gen_er_gnm(n, m, seed)
        assert g.num_edges == m
        assert_canonical(g)
        assert_canonical(gen_er_gnp(n, float(rng.random()), seed))
        k = int(rng.integers(1, (n - 1) // 2 + 1))
        g = gen_ws(n, k, float(rng.random()), seed)
        assert g.num_edges == n * k
        assert_canonical(g)
        m0 = int(rng.integers(1, n + 1))
        mm = int(rng.integers(1, m0 + 1))
        g = gen_ba(n, m0, mm, seed)
        assert g.num_edges == (n - m0) * mm
        assert_canonical(g)


@pytest.mark.parametrize(
    "make",
    [
        lambda s: gen_er_gnp(30, 0.3, s),
        lambda s: gen_er_gnm(30, 100, s),
        lambda s: gen_ws(30, 3, 0.4, s),
        lambda s: gen_ba(30, 3, 2, s),
        lambda s: gen_balanced_signed(30, 80, s),
        lambda s: apply_weights(gen_er_gnm(30, 100, s), Exponential(2.0), s),
    ],
)
def test_generators_deterministic(make):
    for seed in (0, 1, 2**64 - 1):
        assert make(seed) == make(seed)
    assert make(derive_seed(5, 1, 2)) == make(derive_seed(5, 1, 2))
    assert make(3) != make(4)


def test_seed_range():
    with pytest.raises(ShiftLabError):
        make_rng(-1)
    with pytest.raises(ShiftLabError):
        make_rng(2**64)
