import math

import numpy as np
import pytest

from pairdecay import (
    EvolutionConfig,
    bell_phi,
    correlation_matrix,
    evolve_numeric,
    horodecki_m,
    horodecki_m_pure,
    maximally_mixed,
    mems,
    pure_with_concurrence,
    random_density,
    violation_degree,
    werner,
)

EXPM = EvolutionConfig(method="expm")


def test_correlation_matrix_of_bell():
    t = correlation_matrix(bell_phi())
    np.testing.assert_allclose(t, np.diag([1.0, -1.0, 1.0]), atol=1e-14)


def test_correlation_matrix_of_superposition():
    """The c-family has diagonal correlations (c, -c, 1)."""
    for c in (0.0, 0.4, 1.0):
        t = correlation_matrix(pure_with_concurrence(c))
        np.testing.assert_allclose(t, np.diag([c, -c, 1.0]), atol=1e-14)


def test_correlation_matrix_of_identity():
    np.testing.assert_allclose(correlation_matrix(maximally_mixed()), np.zeros((3, 3)), atol=1e-15)


def test_criterion_reference_values():
    assert horodecki_m(bell_phi()) == pytest.approx(2.0, abs=1e-12)
    assert horodecki_m(maximally_mixed()) == pytest.approx(0.0, abs=1e-14)
    assert horodecki_m(pure_with_concurrence(0.6)) == pytest.approx(1.36, abs=1e-12)
    assert horodecki_m(pure_with_concurrence(0.5)) == pytest.approx(1.25, abs=1e-12)


def test_werner_criterion_value():
    """Werner states give m = 2 p^2."""
    for p in (0.3, 0.7, 1.0):
        assert horodecki_m(werner(p)) == pytest.approx(2 * p * p, abs=1e-12)


def test_mems_criterion_value():
    """For c >= 2/3 the mems correlations give m = 2c^2; below the seam the
    third correlation freezes at 1/3 and m = c^2 + max(c^2, 1/9)."""
    assert horodecki_m(mems(1.0)) == pytest.approx(2.0, abs=1e-12)
    assert horodecki_m(mems(0.8)) == pytest.approx(2 * 0.64, abs=1e-12)
    assert horodecki_m(mems(0.5)) == pytest.approx(0.5, abs=1e-12)
    assert horodecki_m(mems(0.2)) == pytest.approx(0.04 + 1 / 9, abs=1e-12)


def test_violation_degree():
    assert violation_degree(bell_phi()) == pytest.approx(1.0, abs=1e-12)
    assert violation_degree(maximally_mixed()) == 0.0
    assert violation_degree(pure_with_concurrence(0.5)) == pytest.approx(0.25, abs=1e-12)
    assert violation_degree(werner(0.5)) == 0.0


def test_all_pure_entangled_states_violate():
    for c in np.linspace(0.05, 1.0, 20):
        assert horodecki_m(pure_with_concurrence(float(c))) > 1.0


def test_criterion_bounded_by_two():
    rng = np.random.default_rng(30)
    for _ in range(200):
        assert horodecki_m(random_density(rng)) <= 2.0 + 1e-12


def test_local_unitary_invariance():
    """m is unchanged by independent rotations of either atom."""
    rng = np.random.default_rng(31)
    for _ in range(20):
        rho = random_density(rng)
        base = horodecki_m(rho)
        ga = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        gb = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        ua, _ = np.linalg.qr(ga)
        ub, _ = np.linalg.qr(gb)
        u = np.kron(ua, ub)
        assert horodecki_m(u @ rho @ u.conj().T) == pytest.approx(base, abs=1e-9)


def test_pure_closed_form_at_time_zero():
    for c in (0.0, 0.5, 1.0):
        res = horodecki_m_pure(c, 0.0)
        assert res.value == pytest.approx(1 + c * c, abs=1e-14)
        assert res.fixed_order_value == pytest.approx(1 + c * c, abs=1e-14)
        assert res.fixed_order_valid


def test_pure_closed_form_product_limit():
    for tau in (0.1, 0.8, 2.0):
        res = horodecki_m_pure(0.0, tau)
        assert res.value == pytest.approx(math.exp(-8 * tau), abs=1e-14)


def test_pure_closed_form_validity_boundary():
    """Fixed-order and max-corrected expressions split where e^{-4t} = c^2."""
    res = horodecki_m_pure(1.0, 0.3)
    assert res.fixed_order_value == pytest.approx(0.3919121652016146, abs=1e-13)
    assert res.value == pytest.approx(0.6023884238244042, abs=1e-13)
    assert not res.fixed_order_valid
    # before the ordering switch both expressions agree
    early = horodecki_m_pure(0.5, 0.1)
    assert early.fixed_order_valid
    assert early.value == pytest.approx(early.fixed_order_value, abs=1e-15)


def test_pure_closed_form_matches_eigensolver():
    """The max-corrected expression tracks the eigensolver on both sides of
    the ordering switch; the fixed-order one only on its validity side."""
    for c in (0.3, 0.9, 1.0):
        rho = pure_with_concurrence(c)
        for tau in (0.05, 0.2, 0.6, 1.5):
            res = horodecki_m_pure(c, tau)
            direct = horodecki_m(evolve_numeric(rho, tau, 1.0, EXPM))
            assert res.value == pytest.approx(direct, abs=1e-10)
            if res.fixed_order_valid:
                assert res.fixed_order_value == pytest.approx(direct, abs=1e-10)


def test_pure_closed_form_domain_errors():
    with pytest.raises(ValueError):
        horodecki_m_pure(1.2, 0.1)
    with pytest.raises(ValueError):
        horodecki_m_pure(0.5, -0.1)
    with pytest.raises(ValueError):
        horodecki_m_pure(0.5, 0.1, gamma=0.0)


def test_correlations_are_real_on_random_states():
    rng = np.random.default_rng(32)
    for _ in range(100):
        t = correlation_matrix(random_density(rng))
        assert t.dtype.kind == "f"
