"""Chinese-remainder factorization of the group and its representations."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from whsic.clifford import SymplecticMatrix, is_symplectic
from whsic.crt import (crt_permutation, eta_prime, f_prime, factor_dimension,
                       verify_product_iso)
from whsic.dims import Dimension
from whsic.weyl import (GroupElement, all_displacements, compose,
                        standard_generators)


# ---------------------------------------------------------------------------
# factorization bookkeeping
# ---------------------------------------------------------------------------

def test_factor_dimension_six():
    fact = factor_dimension(6)
    assert [(f.p, f.q, f.n, f.nbar) for f in fact.factors] == \
        [(2, 1, 2, 4), (3, 1, 3, 3)]
    # kappa_1 = 3^{-1} mod 4 = 3, kappa_2 = 2^{-1} mod 3 = 2
    assert fact.kappas == (3, 2)


def test_factor_dimension_prime_power():
    fact = factor_dimension(9)
    assert len(fact.factors) == 1
    f = fact.factors[0]
    assert (f.p, f.q, f.n, f.nbar, f.kappa) == (3, 2, 9, 9, 1)


def test_factor_dimension_twelve():
    fact = factor_dimension(12)
    assert [f.n for f in fact.factors] == [4, 3]
    assert [f.nbar for f in fact.factors] == [8, 3]
    for f in fact.factors:
        assert (f.kappa * (12 // f.n)) % f.nbar == 1


def test_factor_dimension_rejects_small():
    with pytest.raises(ValueError):
        factor_dimension(1)


# ---------------------------------------------------------------------------
# the corrected exponent map
# ---------------------------------------------------------------------------

def test_eta_prime_example():
    # N = 6: x z t -> (x z^3 t^3, x z^2 t^2)
    assert eta_prime(1, 1, 1, 6) == [(1, 1, 3), (1, 2, 2)]


@given(N=st.sampled_from([6, 10, 12, 15]), data=st.data())
@settings(max_examples=60, deadline=None)
def test_eta_prime_is_a_homomorphism(N, data):
    """Composing in H(N) then mapping equals mapping then composing
    factorwise. The central exponent fed to the map is the full power of tau
    carried by tau^k D_ij = tau^{k + ij} x^i z^j."""
    dim = Dimension(N)
    nbar = dim.nbar
    ints = st.integers(0, nbar - 1)
    g1 = GroupElement(data.draw(ints), data.draw(ints) % N, data.draw(ints) % N)
    g2 = GroupElement(data.draw(ints), data.draw(ints) % N, data.draw(ints) % N)
    g12 = compose(g1, g2, dim)
    lhs = eta_prime(g12.i, g12.j, g12.k + g12.i * g12.j, N)
    img1 = eta_prime(g1.i, g1.j, g1.k + g1.i * g1.j, N)
    img2 = eta_prime(g2.i, g2.j, g2.k + g2.i * g2.j, N)
    fact = factor_dimension(N)
    for f, (a1, b1, c1), (a2, b2, c2), target in zip(fact.factors, img1, img2,
                                                     lhs):
        dj = Dimension(f.n)
        h1 = GroupElement(c1 - a1 * b1, a1, b1)
        h2 = GroupElement(c2 - a2 * b2, a2, b2)
        h = compose(h1, h2, dj)
        assert (h.i, h.j, (h.k + h.i * h.j) % f.nbar) == target


@pytest.mark.parametrize("N", [6, 12, 15])
def test_f_prime_factors_are_symplectic(N):
    dim = Dimension(N)
    fact = factor_dimension(N)
    rng = np.random.default_rng(N)
    nbar = dim.nbar
    count = 0
    while count < 100:
        a, b, g_, d = (int(x) for x in rng.integers(0, nbar, size=4))
        G = SymplecticMatrix(a, b, g_, d)
        if G.det() % nbar != 1:
            continue
        count += 1
        for j, f in enumerate(fact.factors):
            Gj = f_prime(G, j, fact)
            assert Gj.det() % f.nbar == 1
            assert is_symplectic(Gj, Dimension(f.n))


def test_f_prime_trivial_twist_is_reduction():
    # single prime-power factor: kappa = 1 and F' is plain reduction
    fact = factor_dimension(9)
    G = SymplecticMatrix(2, 3, 3, 5)  # det = 10 - 9 = 1
    assert f_prime(G, 0, fact) == G.reduced(9)


# ---------------------------------------------------------------------------
# the permutation and the dense isomorphism
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("N", [6, 12, 15])
def test_crt_permutation_carries_generators(N):
    fact = factor_dimension(N)
    P = crt_permutation(fact)
    assert np.array_equal(P @ P.T, np.eye(N))
    X, Z = standard_generators(Dimension(N))
    Xk = np.ones((1, 1), dtype=complex)
    Zk = np.ones((1, 1), dtype=complex)
    for f in fact.factors:
        Xj, Zj = standard_generators(Dimension(f.n))
        Xk = np.kron(Xk, Xj)
        Zk = np.kron(Zk, np.linalg.matrix_power(Zj, f.kappa))
    assert np.max(np.abs(P @ X @ P.T - Xk)) < 1e-12
    assert np.max(np.abs(P @ Z @ P.T - Zk)) < 1e-12


@pytest.mark.parametrize("N", [4, 6, 9, 12])
def test_product_isomorphism_dense(N):
    assert verify_product_iso(N, n_symplectic=10) < 1e-9
