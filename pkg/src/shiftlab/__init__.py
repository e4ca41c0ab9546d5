"""Shift-enabled graphs: decide them, generate random ones, and estimate how often they occur."""

from .edgelist import format_edge_list, parse_edge_list, read_edge_list, write_edge_list
from .errors import *  # noqa: F401,F403
from .exact import IntPolynomial, char_poly_exact, is_shift_enabled_exact, is_squarefree
from .filters import FilterFit, apply_polynomial, commutes, commuting_witness, fit_filter_polynomial
from .graph import (
    Exponential,
    Gaussian,
    Graph,
    SignedUnit,
    UnitWeight,
    WeightDistribution,
    apply_weights,
    complement,
    components,
    derive_seed,
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
from .montecarlo import ExperimentConfig, SweepResult, SweepRow, run_point, run_sweep, wilson_interval
from .shift import ShiftKind, ShiftMatrix, build_shift, symmetrize_transition
from .spectral import (
    Reason,
    ShiftEnabledVerdict,
    Spectrum,
    complement_spectrum,
    eigenvalues_symmetric,
    is_shift_enabled,
    ring_lattice_spectrum,
)

__version__ = "0.1.0"
