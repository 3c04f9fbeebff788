import math

import mpmath
import numpy as np
import pytest
from scipy.stats import unitary_group

from xyentangle.errors import DomainError, PositivityError, ShapeError, SpectrumError
from xyentangle.measures import (binary_entropy, concurrence_general, concurrence_x_state,
                                 eof_from_concurrence, spin_flip, two_site_entanglement,
                                 von_neumann_entropy, wootters_margin)
from xyentangle.reduced import OneSiteState, TwoSiteState, one_site_ground, two_site_thermal
from xyentangle.xymodel import CRITICAL, ModelParams

PSI_MINUS = np.array([0, 1, -1, 0]) / math.sqrt(2)
BELL = np.outer(PSI_MINUS, PSI_MINUS)


def mp_binary_entropy(x):
    mpmath.mp.dps = 40
    x = mpmath.mpf(x)
    return float(-x * mpmath.log(x, 2) - (1 - x) * mpmath.log(1 - x, 2))


def random_density(rng, dim=4, rank=None):
    rank = rank or dim
    a = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def random_x_state(rng):
    p = rng.dirichlet(np.ones(4))
    a = rng.uniform(0, math.sqrt(p[0] * p[3])) * np.exp(1j * rng.uniform(0, 2 * math.pi))
    b = rng.uniform(0, math.sqrt(p[1] * p[2])) * np.exp(1j * rng.uniform(0, 2 * math.pi))
    rho = np.diag(p).astype(complex)
    rho[0, 3], rho[3, 0] = a, np.conj(a)
    rho[1, 2], rho[2, 1] = b, np.conj(b)
    return rho


class TestEntropy:
    def test_pure(self):
        assert von_neumann_entropy(OneSiteState(0, 1).matrix) == 0.0

    def test_maximally_mixed(self):
        assert von_neumann_entropy(np.eye(2) / 2) == pytest.approx(1.0)
        assert von_neumann_entropy(np.eye(4) / 4) == pytest.approx(2.0)

    def test_ground_state_at_criticality(self):
        s = von_neumann_entropy(one_site_ground(1.0).matrix)
        assert s == pytest.approx(mp_binary_entropy((1 + 2 / math.pi) / 2), abs=1e-10)
        assert s == pytest.approx(0.683760, abs=1e-6)

    def test_rejects_negative_spectrum(self):
        with pytest.raises(PositivityError):
            von_neumann_entropy(np.diag([1.1, -0.1]))

    def test_binary_entropy_endpoints(self):
        assert binary_entropy(0.0) == 0.0
        assert binary_entropy(1.0) == 0.0
        assert math.copysign(1, binary_entropy(1.0)) == 1.0


class TestSpinFlip:
    def test_maximally_mixed(self):
        np.testing.assert_allclose(spin_flip(np.eye(4) / 4), np.eye(4) / 4)

    def test_flips_both(self):
        up = np.zeros((4, 4))
        up[0, 0] = 1
        down = np.zeros((4, 4))
        down[3, 3] = 1
        np.testing.assert_allclose(spin_flip(up), down, atol=1e-15)

    def test_singlet_invariant(self):
        np.testing.assert_allclose(spin_flip(BELL), BELL, atol=1e-15)


class TestConcurrence:
    def test_bell(self):
        assert concurrence_general(BELL) == pytest.approx(1.0, abs=1e-12)
        assert concurrence_x_state(BELL) == pytest.approx(1.0, abs=1e-12)

    def test_product(self, rng=np.random.default_rng(1)):
        for _ in range(20):
            a, b = random_density(rng, 2, 1), random_density(rng, 2, 1)
            assert concurrence_general(np.kron(a, b)) == pytest.approx(0.0, abs=1e-7)

    def test_critical_reference_values(self):
        c1 = concurrence_general(two_site_thermal(1, CRITICAL).matrix)
        c2 = concurrence_general(two_site_thermal(2, CRITICAL).matrix)
        assert c1 == pytest.approx(0.1946, abs=1e-4)
        assert c2 == pytest.approx(0.0044, abs=1e-4)

    def test_x_state_hand_values(self):
        assert concurrence_x_state(two_site_thermal(1, CRITICAL)) == pytest.approx(0.19462, abs=5e-5)
        assert concurrence_x_state(two_site_thermal(2, CRITICAL)) == pytest.approx(0.00436, abs=5e-5)
        assert concurrence_x_state(two_site_thermal(1, ModelParams(1, 0))) == pytest.approx(0.0, abs=1e-15)

    def test_x_state_shape_check(self):
        with pytest.raises(ShapeError):
            concurrence_x_state(np.full((4, 4), 0.25))
        with pytest.raises(ShapeError):
            concurrence_general(np.eye(2))

    def test_spectrum_error(self):
        with pytest.raises(SpectrumError):
            concurrence_general(np.diag([0.7, 0.5, -0.2, 0.0]))

    def test_x_state_matches_general_random(self):
        rng = np.random.default_rng(7)
        for _ in range(10_000 // 10):
            rho = random_x_state(rng)
            assert concurrence_x_state(rho) == pytest.approx(concurrence_general(rho), abs=1e-10)

    def test_local_unitary_invariance(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            rho = random_density(rng, rank=rng.integers(1, 5))
            u = np.kron(unitary_group.rvs(2, random_state=rng), unitary_group.rvs(2, random_state=rng))
            c = concurrence_general(rho)
            assert concurrence_general(u @ rho @ u.conj().T) == pytest.approx(c, abs=1e-9)

    def test_convexity(self):
        rng = np.random.default_rng(4)
        for _ in range(200):
            a, b = random_density(rng, rank=rng.integers(1, 3)), random_density(rng, rank=1)
            mix = concurrence_general(0.5 * a + 0.5 * b)
            assert mix <= 0.5 * concurrence_general(a) + 0.5 * concurrence_general(b) + 1e-9

    def test_margin_negative_for_mixed(self):
        assert wootters_margin(np.eye(4) / 4) == pytest.approx(-0.5)


class TestFormation:
    def test_endpoints(self):
        assert eof_from_concurrence(0.0) == 0.0
        assert eof_from_concurrence(1.0) == pytest.approx(1.0)

    def test_critical_value(self):
        c = 0.1946
        ref = mp_binary_entropy((1 + mpmath.sqrt(1 - mpmath.mpf(c) ** 2)) / 2)
        assert eof_from_concurrence(c) == pytest.approx(ref, abs=1e-12)
        assert eof_from_concurrence(c) == pytest.approx(0.0778529, abs=1e-7)

    def test_domain(self):
        for c in (-0.1, 1.1):
            with pytest.raises(DomainError):
                eof_from_concurrence(c)

    def test_monotone(self):
        cs = np.linspace(0, 1, 501)
        e = np.array([eof_from_concurrence(c) for c in cs])
        assert np.all(np.diff(e) >= 0)

    def test_pure_states_match_entropy(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            psi = rng.normal(size=4) + 1j * rng.normal(size=4)
            psi /= np.linalg.norm(psi)
            rho = np.outer(psi, psi.conj())
            m = psi.reshape(2, 2)
            red = m @ m.conj().T
            e = eof_from_concurrence(concurrence_general(rho))
            assert e == pytest.approx(von_neumann_entropy(red), abs=1e-9)


def test_two_site_entanglement_bundle():
    res = two_site_entanglement(two_site_thermal(1, CRITICAL))
    assert res.concurrence == pytest.approx(0.19460, abs=1e-5)
    assert res.eof == pytest.approx(eof_from_concurrence(res.concurrence))
    assert 0 <= res.entropy <= 2
    product = two_site_entanglement(TwoSiteState(1.0, 0.0, 0.0, 1.0))
    assert (product.concurrence, product.eof) == (0.0, 0.0)


@pytest.mark.parametrize("gamma", [0.25, 0.5, 0.75, 0.9])
def test_factorizing_field(gamma):
    # at lam = 1/sqrt(1 - gamma^2) the ground state is a product state and every pair
    # sits exactly on the separability boundary, entangled on either side
    lam = 1 / math.sqrt(1 - gamma ** 2)
    for r in (1, 2, 3, 5):
        assert wootters_margin(two_site_thermal(r, ModelParams(gamma, lam)).matrix) == \
            pytest.approx(0.0, abs=1e-12)
    for f in (0.98, 1.02):
        assert concurrence_x_state(two_site_thermal(1, ModelParams(gamma, f * lam))) > 0
