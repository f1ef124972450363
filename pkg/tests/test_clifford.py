"""Metaplectic representation, order-3 symmetry, and the even-dimension lift."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from whsic.clifford import (IDENTITY, PARITY_J, ZAUNER, SymplecticMatrix,
                            antiunitary_action, conjugation_check_batched,
                            decompose, eigenspace_dims, is_symplectic, lift_sl2,
                            metaplectic, order3_trace_check,
                            predicted_eigenspace_dims, random_symplectic,
                            zauner_unitary)
from whsic.dims import Dimension
from whsic.errors import DetNotMinusOne


@pytest.mark.parametrize("N", [2, 3, 4, 5, 6, 7, 8, 9])
def test_metaplectic_is_unitary_and_covariant(N):
    dim = Dimension(N)
    rng = np.random.default_rng(N)
    for _ in range(15):
        G = random_symplectic(dim, rng)
        U = metaplectic(G, dim)
        assert np.max(np.abs(U @ U.conj().T - np.eye(N))) < 1e-10
        assert conjugation_check_batched(G, dim, U) < 1e-9


@pytest.mark.parametrize("N", [3, 4, 6, 8])
def test_metaplectic_is_projective_homomorphism(N):
    dim = Dimension(N)
    rng = np.random.default_rng(N + 100)
    for _ in range(10):
        G1 = random_symplectic(dim, rng)
        G2 = random_symplectic(dim, rng)
        lhs = metaplectic(G1, dim) @ metaplectic(G2, dim)
        rhs = metaplectic(G1.mul(G2, dim.nbar), dim)
        ph = np.trace(rhs.conj().T @ lhs) / N
        ph /= abs(ph)
        assert np.max(np.abs(lhs - ph * rhs)) < 1e-9


def test_decompose_handles_noninvertible_beta():
    dim = Dimension(6)
    G = SymplecticMatrix(1, 0, 0, 1)  # beta = 0 shares a factor with 12
    G1, G2 = decompose(G, dim)
    assert G1.mul(G2, dim.nbar) == G.reduced(dim.nbar)
    U = metaplectic(G, dim)
    assert np.max(np.abs(U @ U.conj().T - np.eye(6))) < 1e-10


def test_zauner_matrix_is_order_three():
    for N in range(2, 20):
        dim = Dimension(N)
        is3, trace = order3_trace_check(ZAUNER, dim)
        assert trace
        Z3 = ZAUNER.mul(ZAUNER, N).mul(ZAUNER, N)
        assert Z3.reduced(N) == IDENTITY.reduced(N)


@pytest.mark.parametrize("N", range(2, 37))
def test_zauner_unitary_cube_and_multiplicities(N):
    dim = Dimension(N)
    U = zauner_unitary(dim)
    assert np.max(np.abs(U @ U @ U - np.eye(N))) < 1e-10
    measured, predicted = eigenspace_dims(dim)
    assert measured == predicted


def test_eigenspace_table_formula():
    # d0 = k+1 always; the deficit rotates with N mod 3
    assert predicted_eigenspace_dims(Dimension(9)) == (4, 3, 2)
    assert predicted_eigenspace_dims(Dimension(10)) == (4, 3, 3)
    assert predicted_eigenspace_dims(Dimension(11)) == (4, 4, 3)


@pytest.mark.parametrize("N", [2, 4, 6, 8])
def test_lift_sl2_round_trip(N):
    dim = Dimension(N)
    rng = np.random.default_rng(N)
    count = 0
    while count < 250:
        a, b, g_, d = (int(x) for x in rng.integers(0, N, size=4))
        G = SymplecticMatrix(a, b, g_, d)
        if G.det() % N != 1:
            continue
        count += 1
        Gbar = lift_sl2(G, dim)
        assert Gbar.det() % (2 * N) == 1
        assert Gbar.reduced(N) == G.reduced(N)


def test_lift_sl2_rejects_odd_dimension():
    with pytest.raises(ValueError):
        lift_sl2(IDENTITY, Dimension(3))


def test_antiunitary_requires_det_minus_one():
    dim = Dimension(5)
    v = np.ones(5) / np.sqrt(5)
    with pytest.raises(DetNotMinusOne):
        antiunitary_action(IDENTITY, dim, v)
    out = antiunitary_action(PARITY_J, dim, v)
    assert abs(np.linalg.norm(out) - 1) < 1e-12


@given(N=st.integers(2, 10), seed=st.integers(0, 50))
@settings(max_examples=40, deadline=None)
def test_random_symplectic_is_symplectic(N, seed):
    dim = Dimension(N)
    G = random_symplectic(dim, np.random.default_rng(seed))
    assert is_symplectic(G, dim)
    assert G.mul(G.inv(dim.nbar), dim.nbar) == IDENTITY.reduced(dim.nbar)
