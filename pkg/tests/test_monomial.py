"""Phase-permutation representation and the SL(2, N) orbit machinery."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from whsic.clifford import ZAUNER, conjugation_check_batched, random_symplectic
from whsic.dims import Dimension
from whsic.errors import NotSquare
from whsic.monomial import (is_phase_permutation, invariant_subgroup,
                            monomial_antiunitary, monomial_clifford,
                            monomial_weyl_generators, monomial_zauner,
                            sl2_orbit, stabilized_abelian_check, vector_order,
                            zak_matrix)
from whsic.weyl import all_displacements

SQUARES = [4, 9, 16, 25]


@pytest.mark.parametrize("N", SQUARES)
def test_generators_commutation_and_order(N):
    dim = Dimension(N)
    X, Z = monomial_weyl_generators(dim)
    omega = np.exp(2j * np.pi / N)
    assert np.max(np.abs(Z @ X - omega * X @ Z)) < 1e-12
    assert np.max(np.abs(np.linalg.matrix_power(X, N) - np.eye(N))) < 1e-11
    assert np.max(np.abs(np.linalg.matrix_power(Z, N) - np.eye(N))) < 1e-11
    assert is_phase_permutation(X) and is_phase_permutation(Z)


@pytest.mark.parametrize("N", [4, 9])
def test_zak_conjugation_is_exact(N):
    """The Zak basis change carries the standard generators to the monomial
    ones exactly."""
    from whsic.weyl import standard_generators
    dim = Dimension(N)
    V = zak_matrix(dim)
    Xs, Zs = standard_generators(dim)
    Xm, Zm = monomial_weyl_generators(dim)
    assert np.max(np.abs(V.conj().T @ Xs @ V - Xm)) < 1e-12
    assert np.max(np.abs(V.conj().T @ Zs @ V - Zm)) < 1e-12


@pytest.mark.parametrize("N", SQUARES)
def test_monomial_clifford_phase_permutation_and_covariance(N):
    dim = Dimension(N)
    rng = np.random.default_rng(N)
    X, Z = monomial_weyl_generators(dim)
    D = all_displacements(dim, X, Z)
    for _ in range(12):
        G = random_symplectic(dim, rng)
        U = monomial_clifford(G, dim)
        assert is_phase_permutation(U, 1e-10)
        assert conjugation_check_batched(G, dim, U, D) < 1e-9


@pytest.mark.parametrize("N", SQUARES)
def test_monomial_zauner_cubes_to_identity(N):
    dim = Dimension(N)
    U = monomial_zauner(dim)
    assert np.max(np.abs(U @ U @ U - np.eye(N))) < 1e-10
    assert is_phase_permutation(U)
    # it represents the Zauner symplectic up to phase
    X, Z = monomial_weyl_generators(dim)
    D = all_displacements(dim, X, Z)
    assert conjugation_check_batched(ZAUNER, dim, U, D) < 1e-9


@pytest.mark.parametrize("N", SQUARES)
def test_stabilized_abelian_subgroup(N):
    dim = Dimension(N)
    rng = np.random.default_rng(N + 7)
    for _ in range(5):
        G = random_symplectic(dim, rng)
        assert stabilized_abelian_check(G, dim) < 1e-9


def test_monomial_antiunitary_respects_norm():
    dim = Dimension(9)
    rng = np.random.default_rng(3)
    v = rng.standard_normal(9) + 1j * rng.standard_normal(9)
    v /= np.linalg.norm(v)
    w = monomial_antiunitary(dim, v)
    assert abs(np.linalg.norm(w) - 1) < 1e-12


def test_non_square_rejected():
    with pytest.raises(NotSquare):
        monomial_weyl_generators(Dimension(6))


# ---------------------------------------------------------------------------
# orbits and the square-dimension criterion
# ---------------------------------------------------------------------------

@given(N=st.integers(2, 12), v0=st.integers(0, 11), v1=st.integers(0, 11))
@settings(max_examples=50, deadline=None)
def test_orbits_are_constant_order_classes(N, v0, v1):
    dim = Dimension(N)
    v = (v0 % N, v1 % N)
    rep = sl2_orbit(dim, v)
    k = vector_order(v, N)
    assert rep.order == k
    assert all(vector_order(w, N) == k for w in rep.members)
    # every witness actually maps v to its member
    for w, S in rep.witness_maps.items():
        assert S.apply(v[0], v[1], N) == w
        assert S.det() % N == 1


@pytest.mark.parametrize("N", range(2, 37))
def test_invariant_subgroup_exists_iff_square(N):
    dim = Dimension(N)
    V = invariant_subgroup(dim, brute_force=True)
    if dim.is_square:
        assert V is not None and len(V) == N
        assert V == invariant_subgroup(dim)
    else:
        assert V is None
