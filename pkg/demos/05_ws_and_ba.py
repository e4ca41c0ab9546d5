"""
Small worlds and preferential attachment
========================================

A ring lattice is circulant, so eigenvalues j and n - j coincide and it is
never shift-enabled. Rewiring destroys that symmetry. Barabási–Albert
trees, on the other hand, hang many leaves on the same vertices. Each extra
leaf on a vertex adds an eigenvector for the Laplacian eigenvalue 1, so
larger trees fail more often.
"""

import numpy as np

from shiftlab import ExperimentConfig, ring_lattice, ring_lattice_spectrum, run_sweep

# %%
# Closed-form lattice spectrum: note the paired values.
print("ring lattice n=8, k=2:", np.round(ring_lattice_spectrum(8, 2).values, 4))
print("lattice edges:", ring_lattice(8, 2).num_edges)

# %%
# Watts–Strogatz n=20, k=2 as the rewiring probability grows.
ws = ExperimentConfig("ws", {"n": 20, "k": 2, "beta": [0.0, 0.05, 0.1, 0.2, 0.5, 1.0]}, trials=500, seed=2)
for row in run_sweep(ws, workers=1):
    print(f"beta={row.param_value:.2f}  p_hat={row.p_hat:.3f}")

# %%
# BA trees (m0 = m = 1) of increasing size.
ba = ExperimentConfig("ba", {"n": [10, 20, 50, 100], "m0": 1, "m": 1}, trials=500, seed=3)
for row in run_sweep(ba, workers=1):
    print(f"n={row.param_value:4d}  p_hat={row.p_hat:.3f}")
