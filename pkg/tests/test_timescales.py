import math

import numpy as np
import pytest

from pairdecay import (
    NoBracket,
    NotPure,
    bell_phi,
    decoherence_rate,
    disentanglement_time,
    disentanglement_time_mems,
    disentanglement_time_pure,
    disentanglement_time_single_excitation,
    disentanglement_time_werner,
    locality_time,
    locality_time_mems,
    locality_time_pure,
    locality_time_werner,
    maximally_mixed,
    mems,
    pure_with_concurrence,
    werner,
)
from pairdecay.timescales import _first_zero, _mems_short_branch_tau


def test_first_zero_raises_without_sign_change():
    with pytest.raises(NoBracket):
        _first_zero(lambda t: 1.0, 1e-8)


def test_first_zero_finds_simple_root():
    lo, hi = _first_zero(lambda t: 1.0 - t, 1e-10)
    assert lo <= 1.0 <= hi
    assert hi - lo <= 1e-10


def test_numeric_disentanglement_of_separable_state():
    res = disentanglement_time(maximally_mixed())
    assert res.time == 0.0
    assert res.method == "numeric"


def test_numeric_disentanglement_of_bell():
    res = disentanglement_time(bell_phi())
    assert res.time == pytest.approx(0.4406867935097715, abs=1e-8)
    assert res.bracket[0] <= res.time <= res.bracket[1]
    assert abs(res.residual) < 1e-7
    assert not res.revival


def test_numeric_disentanglement_of_werner_half():
    res = disentanglement_time(werner(0.5))
    assert res.time == pytest.approx(0.15595267909121782, abs=1e-8)


def test_numeric_gamma_rescales_time():
    fast = disentanglement_time(bell_phi(), gamma=4.0)
    assert fast.time == pytest.approx(0.4406867935097715 / 4.0, abs=1e-8)
    with pytest.raises(ValueError):
        disentanglement_time(bell_phi(), gamma=0.0)


def test_numeric_locality_of_local_state():
    assert locality_time(maximally_mixed()).time == 0.0
    assert locality_time(werner(0.5)).time == 0.0  # m = 0.5, never nonlocal


def test_numeric_locality_of_bell():
    res = locality_time(bell_phi())
    assert res.time == pytest.approx(0.17328679513998632, abs=1e-8)


def test_numeric_locality_of_half_superposition():
    res = locality_time(pure_with_concurrence(0.5))
    assert res.time == pytest.approx(0.031169186730360673, abs=1e-8)


def test_closed_single_excitation():
    assert disentanglement_time_single_excitation(0.0).time == 0.0
    got = disentanglement_time_single_excitation(0.5)
    assert got.time == pytest.approx(0.24060591252980174, abs=1e-14)
    assert got.method == "closed_form"
    assert abs(got.residual) < 1e-12
    assert disentanglement_time_single_excitation(1.0).time == pytest.approx(
        0.4406867935097715, abs=1e-14
    )
    with pytest.raises(ValueError):
        disentanglement_time_single_excitation(1.5)


def test_closed_pure_family():
    assert disentanglement_time_pure(0.0).time == 0.0
    assert disentanglement_time_pure(1.0).time == pytest.approx(
        0.4406867935097715, abs=1e-14
    )
    assert disentanglement_time_pure(0.6).time == pytest.approx(
        0.28441244936612375, abs=1e-14
    )
    assert disentanglement_time_pure(1.0, gamma=2.0).time == pytest.approx(
        0.4406867935097715 / 2.0, abs=1e-14
    )


def test_closed_werner_family():
    assert disentanglement_time_werner(0.2).time == 0.0
    assert disentanglement_time_werner(1 / 3).time == 0.0
    assert disentanglement_time_werner(0.5).time == pytest.approx(
        0.15595267909121782, abs=1e-14
    )
    assert disentanglement_time_werner(0.8).time == pytest.approx(
        0.34657359027997264, abs=1e-14
    )
    with pytest.raises(ValueError):
        disentanglement_time_werner(-0.1)


def test_closed_mems_family():
    assert disentanglement_time_mems(0.0).time == 0.0
    assert disentanglement_time_mems(1.0).time == pytest.approx(
        0.25 * math.log(3 + 2 * math.sqrt(2)), abs=1e-14
    )
    # the c=1 value equals the Bell-state time
    assert disentanglement_time_mems(1.0).time == pytest.approx(
        0.4406867935097715, abs=1e-14
    )
    with pytest.raises(ValueError):
        disentanglement_time_mems(1.1)


def test_mems_branch_continuity():
    seam = 2.0 / 3.0
    want = 0.25 * math.log(13 / 9 + 4 * math.sqrt(10) / 9)
    assert want == pytest.approx(0.26182108020030387, abs=1e-15)
    low = _mems_short_branch_tau(seam, 1.0 / 18.0)
    high = disentanglement_time_mems(seam).time
    assert low == pytest.approx(want, abs=1e-12)
    assert high == pytest.approx(want, abs=1e-12)


def test_mems_rejected_coefficient_misses_origin():
    """The 1/16 radical variant has a nonzero limit at c -> 0, the 1/18 one
    goes to zero as it must for a separable endpoint."""
    assert _mems_short_branch_tau(1e-9, 1.0 / 18.0) == pytest.approx(0.0, abs=1e-8)
    assert _mems_short_branch_tau(1e-9, 1.0 / 16.0) == pytest.approx(
        0.25 * math.log(19.0 / 18.0), abs=1e-8
    )


def test_closed_vs_numeric_disentanglement():
    for c in (0.2, 0.55, 0.9):
        closed = disentanglement_time_pure(c).time
        numeric = disentanglement_time(pure_with_concurrence(c)).time
        assert abs(closed - numeric) < 1e-6
    for p in (0.4, 0.75):
        closed = disentanglement_time_werner(p).time
        numeric = disentanglement_time(werner(p)).time
        assert abs(closed - numeric) < 1e-6
    for c in (0.3, 2 / 3, 0.85):
        closed = disentanglement_time_mems(c).time
        numeric = disentanglement_time(mems(c)).time
        assert abs(closed - numeric) < 1e-6


def test_locality_pure_both_expressions():
    res = locality_time_pure(0.5)
    assert res.fixed_order_valid
    assert res.time == pytest.approx(0.031169186730360673, abs=1e-14)
    assert res.time == res.fixed_order_time
    late = locality_time_pure(1.0)
    assert not late.fixed_order_valid
    assert late.fixed_order_time == pytest.approx(0.12030295626490087, abs=1e-14)
    assert late.time == pytest.approx(0.17328679513998632, abs=1e-14)
    with pytest.raises(ValueError):
        locality_time_pure(-0.2)


def test_locality_pure_switch_point():
    """Both expressions coincide at c = 2^{-1/4}."""
    c = 2.0 ** -0.25
    res = locality_time_pure(c)
    assert res.fixed_order_valid
    assert res.fixed_order_time == pytest.approx(math.log(2.0) / 8.0, abs=1e-12)
    assert res.time == pytest.approx(0.25 * math.log(2.0 * c * c), abs=1e-12)


def test_locality_pure_matches_numeric_everywhere():
    for c in (0.3, 0.7, 0.9, 1.0):
        closed = locality_time_pure(c).time
        numeric = locality_time(pure_with_concurrence(c)).time
        assert abs(closed - numeric) < 1e-6, c


def test_locality_werner_family():
    assert locality_time_werner(0.5).time == 0.0
    assert locality_time_werner(1 / math.sqrt(2)).time == 0.0
    assert locality_time_werner(0.9).time == pytest.approx(
        0.1206065373110732, abs=1e-14
    )
    assert locality_time_werner(1.0).time == pytest.approx(
        0.17328679513998632, abs=1e-14
    )
    with pytest.raises(ValueError):
        locality_time_werner(2.0)


def test_locality_mems_family():
    assert locality_time_mems(0.5).time == 0.0
    assert locality_time_mems(0.8).time == pytest.approx(
        0.06171501948288145, abs=1e-14
    )
    assert locality_time_mems(1.0).time == pytest.approx(
        0.17328679513998632, abs=1e-14
    )


def test_family_seams():
    """All families meet at parameter 1 (the Bell state)."""
    td = [
        disentanglement_time_pure(1.0).time,
        disentanglement_time_werner(1.0).time,
        disentanglement_time_mems(1.0).time,
    ]
    assert max(td) - min(td) < 1e-14
    tl = [
        locality_time_pure(1.0).time,
        locality_time_werner(1.0).time,
        locality_time_mems(1.0).time,
    ]
    assert max(tl) - min(tl) < 1e-14


def test_monotonicity_in_parameter():
    grid = np.linspace(0.05, 1.0, 25)
    pure = [disentanglement_time_pure(float(c)).time for c in grid]
    assert all(a < b for a, b in zip(pure, pure[1:]))
    wgrid = np.linspace(0.35, 1.0, 25)
    wern = [disentanglement_time_werner(float(p)).time for p in wgrid]
    assert all(a < b for a, b in zip(wern, wern[1:]))
    memsv = [disentanglement_time_mems(float(c)).time for c in grid]
    assert all(a < b for a, b in zip(memsv, memsv[1:]))


def test_locality_precedes_disentanglement():
    for c in (0.75, 0.9, 1.0):
        assert locality_time_mems(c).time < disentanglement_time_mems(c).time
        assert locality_time_werner(c).time < disentanglement_time_werner(c).time
        assert locality_time_pure(c).time < disentanglement_time_pure(c).time


def test_decoherence_rate_of_superpositions():
    for c in (0.0, 0.3, 0.6, 1.0):
        lam = decoherence_rate(pure_with_concurrence(c))
        assert lam == pytest.approx(2.0, rel=1e-6)


def test_decoherence_rate_of_basis_projector():
    rho = np.diag([0.0, 1.0, 0.0, 0.0]).astype(complex)
    assert decoherence_rate(rho) == pytest.approx(2.0, rel=1e-6)


def test_decoherence_rate_scales_with_gamma():
    assert decoherence_rate(bell_phi(), gamma=3.0) == pytest.approx(6.0, rel=1e-5)


def test_decoherence_rate_rejects_mixed_input():
    with pytest.raises(NotPure):
        decoherence_rate(werner(0.5))
