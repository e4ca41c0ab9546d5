"""
Deciding small graphs
=====================

A symmetric shift matrix is shift-enabled when its eigenvalues are all
distinct. Here we look at a few textbook graphs, with the floating-point
test and the exact integer test side by side.
"""

import itertools

import numpy as np

from shiftlab import Graph, build_shift, eigenvalues_symmetric, is_shift_enabled, is_shift_enabled_exact

graphs = {
    "path P3": Graph(3, [(0, 1), (1, 2)]),
    "complete K5": Graph(5, itertools.combinations(range(5), 2)),
    "cycle C6": Graph(6, [(i, (i + 1) % 6) for i in range(6)]),
    "star S3": Graph(4, [(0, 1), (0, 2), (0, 3)]),
}

# %%
# Laplacian spectra and verdicts. K5 repeats the eigenvalue 5 four times and
# the cycle pairs up eigenvalues j and n - j, so neither is shift-enabled.
for name, g in graphs.items():
    spec = eigenvalues_symmetric(build_shift(g, "laplacian"))
    verdict = is_shift_enabled(g)
    exact = is_shift_enabled_exact(g)
    print(f"{name:12s} eig={np.round(spec.values, 4)}  {verdict.describe()}  exact={exact.enabled}")

# %%
# The verdict depends on the shift matrix. A disconnected graph repeats the
# Laplacian eigenvalue 0, but its adjacency spectrum may still be simple.
two_plus_one = Graph(3, [(0, 1)])
for kind in ("laplacian", "adjacency"):
    print(f"K2 + K1, {kind:9s}: {is_shift_enabled(two_plus_one, kind).describe()}")
