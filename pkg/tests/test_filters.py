import numpy as np
import pytest

from conftest import complete, cycle, path
from shiftlab import (
    DoesNotCommuteError,
    IsShiftEnabledError,
    NonSymmetricKindError,
    NotRepresentableError,
    apply_polynomial,
    build_shift,
    commutes,
    commuting_witness,
    fit_filter_polynomial,
    gen_er_gnm,
    is_connected,
    is_shift_enabled,
)


def test_identity_commutes():
    L = build_shift(path(4), "laplacian")
    assert commutes(np.identity(4), L)
    assert commutes(apply_polynomial([1.0, -2.0, 0.5], L), L)


def test_path_quadratic_fit():
    L = build_shift(path(3), "laplacian")
    H = apply_polynomial([2.0, 0.0, 1.0], L)  # 2I + L^2
    fit = fit_filter_polynomial(H, L)
    assert np.allclose(fit.coefficients, [2.0, 0.0, 1.0], atol=1e-10)
    assert fit.residual <= 1e-10


def test_non_commuting_filter():
    L = build_shift(path(3), "laplacian")
    H = np.zeros((3, 3))
    H[0, 2] = 1.0
    assert not commutes(H, L)
    with pytest.raises(DoesNotCommuteError):
        fit_filter_polynomial(H, L)


@pytest.mark.parametrize("g", [complete(3), cycle(6), complete(6)], ids=["K3", "C6", "K6"])
def test_witness_commutes_but_is_not_polynomial(g):
    L = build_shift(g, "laplacian")
    H = commuting_witness(L)
    assert np.allclose(H, H.T)
    assert commutes(H, L)
    with pytest.raises(NotRepresentableError) as info:
        fit_filter_polynomial(H, L)
    basis = info.value.eigenspace
    lam = info.value.eigenvalue
    assert np.allclose(L.entries @ basis, lam * basis, atol=1e-9)


def test_witness_requires_repeat():
    with pytest.raises(IsShiftEnabledError):
        commuting_witness(build_shift(path(4), "laplacian"))


def test_scalar_on_repeated_eigenspace_still_fits():
    L = build_shift(complete(4), "laplacian")
    H = apply_polynomial([1.0, 3.0], L)
    fit = fit_filter_polynomial(H, L)
    assert fit.residual <= 1e-10
    assert np.allclose(fit.coefficients[:2], [1.0, 3.0])
    assert np.allclose(fit.coefficients[2:], 0.0)


def test_raw_transition_rejected():
    T = build_shift(cycle(5), "transition")
    with pytest.raises(NonSymmetricKindError):
        fit_filter_polynomial(np.identity(5), T)


def test_random_round_trip_residual(rng):
    done = 0
    while done < 30:
        n = int(rng.integers(3, 11))
        g = gen_er_gnm(n, int(rng.integers(n, n * (n - 1) // 2 + 1)), rng)
        if not is_connected(g) or not is_shift_enabled(g):
            continue
        L = build_shift(g, "laplacian")
        c = rng.normal(size=n)
        H = apply_polynomial(c, L)
        fit = fit_filter_polynomial(H, L)
        assert fit.residual <= 1e-8 * np.linalg.norm(H, np.inf)
        done += 1
