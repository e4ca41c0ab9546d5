"""Undirected weighted simple graphs, random generators and structural predicates.

Every generator takes an explicit ``seed`` which may be a non-negative
integer below 2**64, a :class:`numpy.random.SeedSequence` or an already
constructed :class:`numpy.random.Generator`. Integer seeds and seed
sequences always reproduce the same graph.
"""

from __future__ import annotations

import operator
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .errors import ShiftLabError

__all__ = [
    "Graph",
    "WeightDistribution",
    "UnitWeight",
    "Exponential",
    "Gaussian",
    "SignedUnit",
    "make_rng",
    "derive_seed",
    "gen_er_gnp",
    "gen_er_gnm",
    "gen_ws",
    "ring_lattice",
    "gen_ba",
    "apply_weights",
    "sign_by_partition",
    "gen_balanced_signed",
    "components",
    "is_connected",
    "complement",
    "is_balanced",
]

_SEED_LIMIT = 2**64


def make_rng(seed) -> np.random.Generator:
    """Turn a seed-like value into a PCG64 generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    if isinstance(seed, np.random.SeedSequence):
        return np.random.default_rng(seed)
    seed = operator.index(seed)
    if not 0 <= seed < _SEED_LIMIT:
        raise ShiftLabError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.default_rng(seed)


def derive_seed(seed: int, *keys: int) -> np.random.SeedSequence:
    """Independent stream for ``(seed, *keys)``.

    Streams depend only on the key tuple, never on how many numbers other
    streams consumed, which keeps parallel runs order independent.
    """
    seed = operator.index(seed)
    if not 0 <= seed < _SEED_LIMIT:
        raise ShiftLabError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.SeedSequence(entropy=seed, spawn_key=tuple(int(k) for k in keys))


class Graph:
    """Undirected simple graph on vertices ``0..n-1`` with nonzero edge weights.

    Edges are stored canonically (``u < v``, lexicographically sorted), so
    two graphs with the same weighted edge set compare equal. Instances are
    immutable.

    >>> g = Graph(3, [(1, 0), (1, 2, -1.0)])
    >>> g.edges
    ((0, 1, 1.0), (1, 2, -1.0))
    """

    __slots__ = ("_n", "_u", "_v", "_w")

    def __init__(self, n: int, edges=()):
        n = operator.index(n)
        if n < 1:
            raise ShiftLabError(f"vertex count must be positive, got {n}")
        rows = [tuple(e) for e in edges]
        for e in rows:
            if len(e) not in (2, 3):
                raise ShiftLabError(f"edge must be (u, v) or (u, v, w), got {e!r}")
        u = np.array([operator.index(e[0]) for e in rows], dtype=np.int64)
        v = np.array([operator.index(e[1]) for e in rows], dtype=np.int64)
        w = np.array([float(e[2]) if len(e) == 3 else 1.0 for e in rows], dtype=float)
        self._init_arrays(n, u, v, w)

    @classmethod
    def from_arrays(cls, n, u, v, w=None) -> Graph:
        """Build from parallel endpoint/weight arrays (validated)."""
        g = cls.__new__(cls)
        u = np.asarray(u, dtype=np.int64).ravel()
        v = np.asarray(v, dtype=np.int64).ravel()
        w = np.ones(u.shape, dtype=float) if w is None else np.asarray(w, dtype=float).ravel()
        g._init_arrays(operator.index(n), u, v, w)
        return g

    @classmethod
    def _canonical(cls, n, u, v, w=None) -> Graph:
        # caller guarantees u < v, lexicographic order, no duplicates
        g = cls.__new__(cls)
        if w is None:
            w = np.ones(u.shape)
        for arr in (u, v, w):
            arr.flags.writeable = False
        g._n, g._u, g._v, g._w = n, u, v, w
        return g

    def _init_arrays(self, n, u, v, w):
        if n < 1:
            raise ShiftLabError(f"vertex count must be positive, got {n}")
        if not (u.shape == v.shape == w.shape):
            raise ShiftLabError("endpoint and weight arrays differ in length")
        if u.size:
            if u.min() < 0 or v.min() < 0 or u.max() >= n or v.max() >= n:
                raise ShiftLabError(f"edge endpoint outside 0..{n - 1}")
            if np.any(u == v):
                k = int(np.flatnonzero(u == v)[0])
                raise ShiftLabError(f"self-loop at vertex {int(u[k])}")
            if not np.all(np.isfinite(w)):
                raise ShiftLabError("edge weights must be finite")
            if np.any(w == 0.0):
                raise ShiftLabError("edge weights must be nonzero")
            lo, hi = np.minimum(u, v), np.maximum(u, v)
            key = lo * n + hi
            order = np.argsort(key, kind="stable")
            key = key[order]
            if np.any(key[1:] == key[:-1]):
                k = int(np.flatnonzero(key[1:] == key[:-1])[0])
                raise ShiftLabError(
                    f"duplicate edge {int(key[k] // n)}-{int(key[k] % n)}"
                )
            u, v, w = lo[order], hi[order], w[order].copy()
        else:
            u = np.zeros(0, dtype=np.int64)
            v = np.zeros(0, dtype=np.int64)
            w = np.zeros(0, dtype=float)
        for arr in (u, v, w):
            arr.flags.writeable = False
        self._n, self._u, self._v, self._w = n, u, v, w

    @property
    def n(self) -> int:
        return self._n

    @property
    def num_edges(self) -> int:
        return int(self._u.size)

    @property
    def heads(self) -> np.ndarray:
        """Smaller endpoint of each edge (read-only)."""
        return self._u

    @property
    def tails(self) -> np.ndarray:
        """Larger endpoint of each edge (read-only)."""
        return self._v

    @property
    def weights(self) -> np.ndarray:
        return self._w

    @property
    def edges(self) -> tuple:
        return tuple(
            (int(a), int(b), float(c)) for a, b, c in zip(self._u, self._v, self._w)
        )

    def is_unweighted(self) -> bool:
        return bool(np.all(self._w == 1.0))

    def has_negative_weights(self) -> bool:
        return bool(np.any(self._w < 0))

    def weight_matrix(self) -> np.ndarray:
        """Dense symmetric weight matrix W."""
        W = np.zeros((self._n, self._n))
        W[self._u, self._v] = self._w
        W[self._v, self._u] = self._w
        return W

    def degrees(self, absolute: bool = False) -> np.ndarray:
        """Weighted degree of every vertex; ``absolute`` sums ``|w|``."""
        w = np.abs(self._w) if absolute else self._w
        d = np.zeros(self._n)
        np.add.at(d, self._u, w)
        np.add.at(d, self._v, w)
        return d

    def neighbors(self) -> list[list[tuple[int, float]]]:
        adj = [[] for _ in range(self._n)]
        for a, b, c in zip(self._u.tolist(), self._v.tolist(), self._w.tolist()):
            adj[a].append((b, c))
            adj[b].append((a, c))
        return adj

    def with_weights(self, weights) -> Graph:
        """Same topology, new weights (aligned with :attr:`edges`)."""
        w = np.array(weights, dtype=float).ravel()
        if w.shape != self._u.shape:
            raise ShiftLabError(f"expected {self.num_edges} weights, got {w.size}")
        if not np.all(np.isfinite(w)) or np.any(w == 0.0):
            raise ShiftLabError("edge weights must be finite and nonzero")
        return Graph._canonical(self._n, self._u, self._v, w)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._n == other._n
            and np.array_equal(self._u, other._u)
            and np.array_equal(self._v, other._v)
            and np.array_equal(self._w, other._w)
        )

    def __hash__(self):
        return hash((self._n, self._u.tobytes(), self._v.tobytes(), self._w.tobytes()))

    def __repr__(self):
        return f"Graph(n={self._n}, num_edges={self.num_edges})"


# ---------------------------------------------------------------------------
# weight distributions


class WeightDistribution:
    """Edge-weight law. Subclasses implement :meth:`sample`."""

    label = "?"

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        raise NotImplementedError


@dataclass(frozen=True)
class UnitWeight(WeightDistribution):
    label = "unit"

    def sample(self, rng, size):
        return np.ones(size)


@dataclass(frozen=True)
class Exponential(WeightDistribution):
    """Density ``rate * exp(-rate * x)`` on ``x > 0``."""

    rate: float = 1.0

    def __post_init__(self):
        if not self.rate > 0:
            raise ShiftLabError(f"exponential rate must be positive, got {self.rate}")

    @property
    def label(self):
        return f"exponential({self.rate:g})"

    def sample(self, rng, size):
        return _nonzero_draws(lambda k: rng.exponential(1.0 / self.rate, k), size)


@dataclass(frozen=True)
class Gaussian(WeightDistribution):
    """Normal weights; negative draws yield signed graphs."""

    mean: float = 0.0
    std: float = 1.0

    def __post_init__(self):
        if not self.std > 0:
            raise ShiftLabError(f"gaussian std must be positive, got {self.std}")

    @property
    def label(self):
        return f"gaussian({self.mean:g},{self.std:g})"

    def sample(self, rng, size):
        return _nonzero_draws(lambda k: rng.normal(self.mean, self.std, k), size)


@dataclass(frozen=True)
class SignedUnit(WeightDistribution):
    """Weights +1 or -1, each with probability 1/2."""

    label = "signed"

    def sample(self, rng, size):
        return np.where(rng.random(size) < 0.5, 1.0, -1.0)


def _nonzero_draws(draw, size):
    # an exact 0.0 would silently delete the edge
    out = draw(size)
    bad = np.flatnonzero(out == 0.0)
    while bad.size:
        out[bad] = draw(bad.size)
        bad = bad[out[bad] == 0.0]
    return out


# ---------------------------------------------------------------------------
# generators


@lru_cache(maxsize=64)
def _pair_index(n):
    iu, iv = np.triu_indices(n, 1)
    iu.flags.writeable = False
    iv.flags.writeable = False
    return iu, iv


def gen_er_gnp(n: int, p_edge: float, seed) -> Graph:
    """Erdős–Rényi G(n, p): each pair is an edge independently with prob ``p_edge``."""
    if n < 1:
        raise ShiftLabError(f"n must be >= 1, got {n}")
    if not 0.0 <= p_edge <= 1.0:
        raise ShiftLabError(f"edge probability must lie in [0, 1], got {p_edge}")
    rng = make_rng(seed)
    iu, iv = _pair_index(n)
    keep = rng.random(iu.size) < p_edge
    return Graph._canonical(n, iu[keep], iv[keep])


def gen_er_gnm(n: int, m: int, seed) -> Graph:
    """Erdős–Rényi G(n, m): ``m`` distinct pairs drawn uniformly without replacement."""
    if n < 1:
        raise ShiftLabError(f"n must be >= 1, got {n}")
    total = comb(n, 2)
    if not 0 <= m <= total:
        raise ShiftLabError(f"edge count must lie in [0, {total}] for n={n}, got {m}")
    rng = make_rng(seed)
    iu, iv = _pair_index(n)
    pick = np.sort(rng.choice(total, size=m, replace=False))
    return Graph._canonical(n, iu[pick], iv[pick])


def _check_lattice(n, k_half):
    if n < 3:
        raise ShiftLabError(f"ring lattice needs n >= 3, got {n}")
    if not 1 <= k_half <= (n - 1) // 2:
        raise ShiftLabError(
            f"neighbors per side must lie in [1, {(n - 1) // 2}] for n={n}, got {k_half}"
        )


def ring_lattice(n: int, k_half: int) -> Graph:
    """Circulant graph joining each vertex to ``k_half`` neighbors on each side."""
    _check_lattice(n, k_half)
    base = np.arange(n)
    u = np.concatenate([base] * k_half)
    v = np.concatenate([(base + j) % n for j in range(1, k_half + 1)])
    return Graph.from_arrays(n, u, v)


def gen_ws(n: int, k_half: int, beta: float, seed) -> Graph:
    """Watts–Strogatz small-world graph.

    Starts from :func:`ring_lattice` (degree ``2 * k_half``) and rewires the
    far endpoint of each lattice edge with probability ``beta`` to a vertex
    chosen uniformly among those that keep the graph simple. An edge whose
    near endpoint is already adjacent to everything is left in place, so the
    edge count is always ``n * k_half``.
    """
    _check_lattice(n, k_half)
    if not 0.0 <= beta <= 1.0:
        raise ShiftLabError(f"rewiring probability must lie in [0, 1], got {beta}")
    rng = make_rng(seed)
    adj = [set() for _ in range(n)]
    for j in range(1, k_half + 1):
        for u in range(n):
            v = (u + j) % n
            adj[u].add(v)
            adj[v].add(u)
    coins = rng.random((k_half, n))
    for j in range(1, k_half + 1):
        for u in range(n):
            if coins[j - 1, u] >= beta:
                continue
            v = (u + j) % n
            if len(adj[u]) >= n - 1:
                continue
            free = [x for x in range(n) if x != u and x not in adj[u]]
            w = free[int(rng.integers(len(free)))]
            adj[u].discard(v)
            adj[v].discard(u)
            adj[u].add(w)
            adj[w].add(u)
    pairs = [(u, x) for u in range(n) for x in adj[u] if u < x]
    return Graph(n, pairs)


def gen_ba(n: int, m0: int, m: int, seed) -> Graph:
    """Barabási–Albert preferential attachment.

    ``m0`` initial vertices start isolated. Each later vertex links to ``m``
    distinct earlier vertices drawn with probability proportional to
    ``degree + 1``, giving exactly ``(n - m0) * m`` edges.
    """
    if not 1 <= m <= m0 <= n:
        raise ShiftLabError(f"need 1 <= m <= m0 <= n, got n={n}, m0={m0}, m={m}")
    rng = make_rng(seed)
    deg = np.zeros(n)
    total = (n - m0) * m
    u = np.empty(total, dtype=np.int64)
    v = np.empty(total, dtype=np.int64)
    k = 0
    for t in range(m0, n):
        weight = deg[:t] + 1.0
        targets = rng.choice(t, size=m, replace=False, p=weight / weight.sum())
        u[k : k + m] = targets
        v[k : k + m] = t
        k += m
        deg[targets] += 1.0
        deg[t] += m
    return Graph.from_arrays(n, u, v)


def apply_weights(g: Graph, dist: WeightDistribution, seed) -> Graph:
    """Resample every edge weight independently from ``dist``; topology is kept."""
    rng = make_rng(seed)
    return g.with_weights(dist.sample(rng, g.num_edges))


def sign_by_partition(g: Graph, side) -> Graph:
    """Weight +1 inside each side of the bipartition, -1 across it.

    ``side`` is a length-``n`` boolean (or 0/1) array marking membership of
    one of the two vertex sets.
    """
    side = np.asarray(side, dtype=bool)
    if side.shape != (g.n,):
        raise ShiftLabError(f"partition must have length {g.n}")
    same = side[g.heads] == side[g.tails]
    return g.with_weights(np.where(same, 1.0, -1.0))


def gen_balanced_signed(n: int, m: int, seed) -> Graph:
    """Balanced ±1 signed graph on a G(n, m) topology with a random bipartition."""
    rng = make_rng(seed)
    g = gen_er_gnm(n, m, rng)
    return sign_by_partition(g, rng.random(n) < 0.5)


# ---------------------------------------------------------------------------
# structure


class _DisjointSet:
    __slots__ = ("parent", "count")

    def __init__(self, size):
        self.parent = list(range(size))
        self.count = size

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
            self.count -= 1


def components(g: Graph) -> tuple[int, np.ndarray]:
    """Number of connected components and a per-vertex component label."""
    ds = _DisjointSet(g.n)
    for a, b in zip(g.heads.tolist(), g.tails.tolist()):
        ds.union(a, b)
    roots = [ds.find(x) for x in range(g.n)]
    _, labels = np.unique(roots, return_inverse=True)
    return ds.count, labels


def is_connected(g: Graph) -> bool:
    """True iff ``g`` has exactly one component (any nonzero weight is an edge)."""
    if g.num_edges < g.n - 1:
        return False
    ds = _DisjointSet(g.n)
    for a, b in zip(g.heads.tolist(), g.tails.tolist()):
        ds.union(a, b)
        if ds.count == 1:
            return True
    return ds.count == 1


def complement(g: Graph) -> Graph:
    """Unweighted complement: edges are exactly the non-edges of ``g``."""
    if not g.is_unweighted():
        raise ShiftLabError("complement is only defined here for unweighted graphs")
    n = g.n
    present = np.zeros((n, n), dtype=bool)
    present[g.heads, g.tails] = True
    iu, iv = _pair_index(n)
    keep = ~present[iu, iv]
    return Graph._canonical(n, iu[keep], iv[keep])


def is_balanced(g: Graph) -> bool:
    """Harary balance via BFS 2-coloring of the edge signs.

    A signing ``s`` with ``sign(w_uv) == s(u) * s(v)`` on every edge exists
    iff every cycle has positive weight product.
    """
    adj = g.neighbors()
    color = [0] * g.n
    for start in range(g.n):
        if color[start]:
            continue
        color[start] = 1
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y, w in adj[x]:
                want = color[x] if w > 0 else -color[x]
                if color[y] == 0:
                    color[y] = want
                    queue.append(y)
                elif color[y] != want:
                    return False
    return True
