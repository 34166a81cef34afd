import math

import numpy as np
import pytest

from pairdecay import (
    ComplexRoot,
    NotXClass,
    bell_phi,
    concurrence,
    concurrence_x,
    concurrence_x_collective,
    concurrence_x_evolved,
    entanglement_of_formation,
    evolve_x_closed,
    is_separable_ppt,
    maximally_mixed,
    mems,
    partial_transpose,
    pure_with_concurrence,
    random_density,
    random_x_state,
    spin_flip,
    validate_density,
    werner,
    x_state,
    XStateParams,
)


def test_spin_flip_is_an_involution():
    rng = np.random.default_rng(20)
    for _ in range(20):
        rho = random_density(rng)
        np.testing.assert_allclose(spin_flip(spin_flip(rho)), rho, atol=1e-14)


def test_spin_flip_fixes_bell_state():
    rho = bell_phi()
    np.testing.assert_allclose(spin_flip(rho), rho, atol=1e-14)


def test_concurrence_reference_values():
    assert concurrence(bell_phi()) == pytest.approx(1.0, abs=1e-12)
    assert concurrence(maximally_mixed()) == 0.0
    assert concurrence(np.diag([1.0, 0.0, 0.0, 0.0]).astype(complex)) == 0.0
    assert concurrence(werner(0.5)) == pytest.approx(0.25, abs=1e-12)
    # Werner concurrence is max(0, (3p-1)/2)
    assert concurrence(werner(0.2)) == 0.0
    assert concurrence(werner(0.9)) == pytest.approx(0.85, abs=1e-12)


def test_concurrence_of_superposition_family():
    """The family parameter is exactly the concurrence, including the
    rank-deficient endpoints where naive eigenvalue noise would show up."""
    for c in np.linspace(0.0, 1.0, 21):
        rho = pure_with_concurrence(float(c))
        assert concurrence(rho) == pytest.approx(float(c), abs=1e-12)


def test_concurrence_of_mems_family():
    for c in (0.1, 0.4, 2 / 3, 0.8, 1.0):
        assert concurrence(mems(c)) == pytest.approx(c, abs=1e-12)


def test_concurrence_breakdown_value():
    b = concurrence_x(bell_phi())
    assert b.c1 == pytest.approx(1.0)
    assert b.c2 == pytest.approx(-1.0)
    assert b.value == pytest.approx(1.0)
    b0 = concurrence_x(maximally_mixed())
    assert b0.c1 == pytest.approx(-0.5)
    assert b0.value == 0.0


def test_concurrence_x_rejects_non_x():
    rho = maximally_mixed().copy()
    rho[0, 2] = rho[2, 0] = 0.03
    with pytest.raises(NotXClass):
        concurrence_x(rho)


def test_x_routes_agree_with_general_concurrence():
    rng = np.random.default_rng(21)
    worst = 0.0
    for _ in range(300):
        rho = random_x_state(rng)
        ref = concurrence(rho)
        a = concurrence_x(rho)
        b = concurrence_x_collective(rho)
        worst = max(worst, abs(a.value - ref), abs(b.value - ref),
                    abs(a.c1 - b.c1), abs(a.c2 - b.c2))
    assert worst <= 1e-10, worst


def test_evolved_breakdown_matches_evolve_then_measure():
    rng = np.random.default_rng(22)
    worst = 0.0
    for _ in range(100):
        rho = random_x_state(rng)
        for tau in (0.0, 0.35, 1.4):
            direct = concurrence_x_evolved(rho, tau)
            staged = concurrence_x(evolve_x_closed(rho, tau))
            worst = max(worst, abs(direct.c1 - staged.c1), abs(direct.c2 - staged.c2))
    assert worst <= 1e-10, worst


def test_evolved_breakdown_gamma_scaling():
    rho = random_x_state(23)
    a = concurrence_x_evolved(rho, 0.4, gamma=2.0)
    b = concurrence_x_evolved(rho, 0.8, gamma=1.0)
    assert a.c1 == pytest.approx(b.c1, abs=1e-14)
    assert a.c2 == pytest.approx(b.c2, abs=1e-14)


def test_single_excitation_concurrence_trajectory():
    """For states in the middle block, C(t) = max(0, x2 C0 - (1 - x4)/2)."""
    for c0 in (0.3, 0.7, 1.0):
        rho = x_state(XStateParams(rho11=0, rho22=0.5, rho33=0.5, rho44=0, rho23=c0 / 2))
        for tau in (0.0, 0.1, 0.3):
            x2, x4 = math.exp(-2 * tau), math.exp(-4 * tau)
            want = max(0.0, x2 * c0 - 0.5 * (1 - x4))
            got = concurrence_x_evolved(rho, tau).value
            assert got == pytest.approx(want, abs=1e-12)


def test_pure_family_branch_trajectory():
    """C1(t) = c x2 - (1 - x4)/2 for the pure superposition family."""
    for c in (0.2, 0.6, 1.0):
        rho = pure_with_concurrence(c)
        for tau in (0.0, 0.15, 0.4):
            x2, x4 = math.exp(-2 * tau), math.exp(-4 * tau)
            want = c * x2 - 0.5 * (1 - x4)
            assert concurrence_x_evolved(rho, tau).c1 == pytest.approx(want, abs=1e-12)


def test_evolved_breakdown_rejects_bad_block():
    """A population dip inside tolerance still trips the radicand guard."""
    rho = np.diag([0.0, -6e-10, 0.5, 0.5 + 6e-10]).astype(complex)
    with pytest.raises(ComplexRoot):
        concurrence_x_evolved(rho, 0.0)


def test_entanglement_of_formation_values():
    assert entanglement_of_formation(bell_phi()) == pytest.approx(1.0, abs=1e-12)
    assert entanglement_of_formation(maximally_mixed()) == 0.0
    got = entanglement_of_formation(pure_with_concurrence(0.6))
    assert got == pytest.approx(0.4689955935892811, abs=1e-12)


def test_entanglement_of_formation_monotone_in_concurrence():
    values = [entanglement_of_formation(pure_with_concurrence(c))
              for c in np.linspace(0.0, 1.0, 11)]
    assert all(a < b for a, b in zip(values, values[1:]))


def test_partial_transpose_entries():
    rng = np.random.default_rng(24)
    rho = random_density(rng)
    pt = partial_transpose(rho, "B")
    # B-transpose swaps the column index of atom B: (ab),(a'b') -> (ab'),(a'b)
    assert pt[0, 1] == rho[1, 0]
    assert pt[0, 3] == rho[1, 2]
    assert pt[2, 1] == rho[3, 0]
    np.testing.assert_allclose(partial_transpose(pt, "B"), rho, atol=0)
    np.testing.assert_allclose(
        partial_transpose(rho, "A"), partial_transpose(rho, "B").T, atol=0
    )
    with pytest.raises(ValueError):
        partial_transpose(rho, "C")


def test_ppt_on_werner_family():
    """Werner states cross the separability line exactly at p = 1/3."""
    assert is_separable_ppt(werner(0.2))
    assert is_separable_ppt(werner(1 / 3))
    assert not is_separable_ppt(werner(0.4))
    assert not is_separable_ppt(bell_phi())
    assert is_separable_ppt(maximally_mixed())


def test_ppt_agrees_with_concurrence():
    rng = np.random.default_rng(25)
    for _ in range(300):
        rho = random_density(rng)
        assert is_separable_ppt(rho) == (concurrence(rho) <= 1e-9)


def test_concurrence_validates_input():
    with pytest.raises(ValueError):
        concurrence(np.eye(4))  # trace 4
    validate_density(maximally_mixed())
