"""
Weights and signs
=================

Random edge weights break the symmetries that force repeated eigenvalues,
so even complete graphs become shift-enabled. Balanced signings are
switching-equivalent to the unsigned graph and change nothing; independent
random signs behave like weights.
"""

import numpy as np

from shiftlab import (
    Exponential,
    ExperimentConfig,
    Gaussian,
    build_shift,
    eigenvalues_symmetric,
    gen_balanced_signed,
    is_balanced,
    run_sweep,
)

# %%
# Complete graph on 20 vertices under three weightings.
for weights in (None, Exponential(10.0), Gaussian(100.0, 10.0)):
    kwargs = {} if weights is None else {"weights": weights}
    cfg = ExperimentConfig("er-gnm", {"n": 20, "m": 190}, trials=500, seed=1, **kwargs)
    row = run_sweep(cfg, workers=1).rows[0]
    print(f"K20 {cfg.weights.label:16s} p_hat={row.p_hat:.3f}")

# %%
# A balanced signed graph and its unsigned twin share the same spectrum.
g = gen_balanced_signed(12, 30, seed=3)
signed = eigenvalues_symmetric(build_shift(g, "signed")).values
unsigned = eigenvalues_symmetric(build_shift(g.with_weights(np.abs(g.weights)), "laplacian")).values
print("balanced:", is_balanced(g), " max spectral difference:", np.abs(signed - unsigned).max())

# %%
# Independent ±1 signs on K20: almost always shift-enabled.
cfg = ExperimentConfig("er-gnm", {"n": 20, "m": 190}, signed_mode="unbalanced", shift_kind="signed", trials=500)
print("unbalanced K20 p_hat:", run_sweep(cfg, workers=1).p_hat[0])
