"""
Filters as polynomials in the shift
===================================

On a shift-enabled graph every filter that commutes with the shift matrix
is a polynomial in it. When an eigenvalue repeats, a commuting filter can
mix the repeated eigenspace and no polynomial reproduces it.
"""

import itertools

import numpy as np

from shiftlab import (
    Graph,
    NotRepresentableError,
    apply_polynomial,
    build_shift,
    commutes,
    commuting_witness,
    fit_filter_polynomial,
)

path = Graph(4, [(0, 1), (1, 2), (2, 3)])
L = build_shift(path, "laplacian")

# %%
# Build H = 1 - 0.5 L + 0.1 L^2 and recover its coefficients.
H = apply_polynomial([1.0, -0.5, 0.1], L)
fit = fit_filter_polynomial(H, L)
print("recovered coefficients:", np.round(fit.coefficients, 12), "residual:", fit.residual)

# %%
# K3 has Laplacian eigenvalues 0, 3, 3. The witness u v^T + v u^T built from
# the repeated eigenspace commutes with L but is not a polynomial in L.
K3 = build_shift(Graph(3, itertools.combinations(range(3), 2)), "laplacian")
W = commuting_witness(K3)
print("commutes:", commutes(W, K3))
try:
    fit_filter_polynomial(W, K3)
except NotRepresentableError as exc:
    print("not representable:", exc)
