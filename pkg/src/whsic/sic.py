"""SIC fiducial vectors: closed forms for N = 4, 9, 16 and a numerical search.

A SIC fiducial is a unit vector whose Weyl-Heisenberg orbit is equiangular,

    |<psi| D_ij |psi>|^2 = 1/(N+1)   for all (i, j) != (0, 0).

Each fiducial carries a basis tag naming the generator pair its amplitudes
refer to. Registered tags:

    standard   - shift/clock generators
    monomial   - phase-permutation basis |r,s> (square N)
    rephased4  - the diagonally rephased monomial basis used for the N = 4
                 closed form
    adapted16  - the N = 16 basis in which X^4 and Z^4 are diagonal

The module also evaluates the simplex-projection identities (sum of squared
probabilities 2/(N+1), shifted autocorrelations 1/(N+1)) and projects vectors
onto the order-3 symmetry eigenspace where fiducials live.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from . import adapted16
from .clifford import zauner_unitary
from .dims import Dimension, omega_power, sigma_power, tau_power
from .errors import BasisUnavailable, NegativeRadicand, NullProjection
from .monomial import flatten, monomial_weyl_generators, monomial_zauner
from .weyl import all_displacements, standard_generators


@dataclass(frozen=True)
class Fiducial:
    dim: Dimension
    basis: str
    amplitudes: np.ndarray
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        nrm = float(np.linalg.norm(self.amplitudes))
        if abs(nrm - 1.0) > 1e-12:
            raise ValueError(f"fiducial norm {nrm} deviates from 1 beyond 1e-12")


@dataclass(frozen=True)
class SicCertificate:
    max_abs_deviation: float
    tolerance: float
    passed: bool
    per_displacement: np.ndarray | None = None


@dataclass(frozen=True)
class SimplexProjection:
    p: np.ndarray

    def __post_init__(self):
        if abs(float(self.p.sum()) - 1.0) > 1e-12 or (self.p < -1e-15).any():
            raise ValueError("probabilities must be nonnegative and sum to 1")


def rephased4_generators() -> tuple[np.ndarray, np.ndarray]:
    """N = 4 monomial generators after the diagonal rephasing
    diag(tau^-2, tau^-7, tau^-5, 1); both come out as tau times a signed
    permutation with entries in {1, i, -1}."""
    dim = Dimension(4)
    X, Z = monomial_weyl_generators(dim)
    # rescaling the kets |e_j> -> ph_j |e_j> conjugates operators by the
    # inverse diagonal: M' = P^{-1} M P
    ph = np.array([tau_power(dim, -2), tau_power(dim, -7), tau_power(dim, -5), 1.0])
    P = np.diag(ph)
    Pinv = np.diag(1.0 / ph)
    return Pinv @ X @ P, Pinv @ Z @ P


def basis_generators(dim: Dimension, basis: str) -> tuple[np.ndarray, np.ndarray]:
    """Generator pair (X, Z) registered for a basis tag."""
    if basis == "standard":
        return standard_generators(dim)
    if basis == "monomial" and dim.is_square:
        return monomial_weyl_generators(dim)
    if basis == "rephased4" and dim.N == 4:
        return rephased4_generators()
    if basis == "adapted16" and dim.N == 16:
        X, Z, _ = adapted16.adapted16_generators()
        return X, Z
    raise BasisUnavailable(f"no generators registered for basis {basis!r} at N={dim.N}")


def verify_sic(f: Fiducial, tol: float = 1e-8,
               keep_table: bool = False) -> SicCertificate:
    """Max deviation of |<psi|D_ij|psi>|^2 from 1/(N+1) over the N^2 - 1
    nontrivial displacements, in the fiducial's own basis."""
    dim = f.dim
    N = dim.N
    X, Z = basis_generators(dim, f.basis)
    D = all_displacements(dim, X, Z)
    psi = f.amplitudes
    overlaps = np.einsum("i,kij,j->k", psi.conj(), D, psi)
    probs = np.abs(overlaps) ** 2
    dev = np.abs(probs - 1.0 / (N + 1))
    dev[0] = 0.0  # D_00 = identity carries no condition
    worst = float(dev.max())
    return SicCertificate(
        max_abs_deviation=worst,
        tolerance=tol,
        passed=worst <= tol,
        per_displacement=dev.reshape(N, N) if keep_table else None,
    )


# ---------------------------------------------------------------------------
# N = 4 closed form
# ---------------------------------------------------------------------------

def fiducial_n4(slot: int, s: int, t: int, u: int) -> Fiducial:
    """x = sqrt(2 + sqrt(5)) in the given slot, powers of i elsewhere,
    in the rephased N = 4 monomial basis. All 256 parameter choices are
    fiducials; they fall into 16 Weyl-Heisenberg orbits."""
    if not (0 <= slot < 4):
        raise ValueError(f"slot must be 0..3, got {slot}")
    x = math.sqrt(2.0 + math.sqrt(5.0))
    v = np.empty(4, dtype=complex)
    v[slot] = x
    rest = [k for k in range(4) if k != slot]
    for k, e in zip(rest, (s, t, u)):
        v[k] = 1j ** (e % 4)
    v = v / np.linalg.norm(v)
    return Fiducial(Dimension(4), "rephased4", v,
                    {"construction": "n4", "slot": slot, "s": s % 4,
                     "t": t % 4, "u": u % 4})


# ---------------------------------------------------------------------------
# N = 9 closed form
# ---------------------------------------------------------------------------

def _checked_sqrt(x: float, name: str) -> float:
    if x < -1e-12:
        raise NegativeRadicand(f"{name}: radicand {x} is negative")
    return math.sqrt(max(x, 0.0))


def fiducial_n9_amplitudes(s0: int, s1: int, s2: int) -> tuple[float, float, float, float]:
    """(p1, p2, p3, p4) from the closed radicals; they solve
    p1 + p2 + 3 p3 + 3 p4 = 1,
    p1^2 + p2^2 - p1 p2 = 1/10,
    3 p3^2 + 3 p4^2 + 3 p3 p4 - p3 - p4 = -1/10."""
    r3, r5, r15 = math.sqrt(3.0), math.sqrt(5.0), math.sqrt(15.0)
    a1 = (5.0 - s0 * 5.0 * r3 + s0 * 3.0 * r5 + r15) / 40.0
    b1 = s2 / 60.0 * _checked_sqrt(15.0 * (r15 + s0 * r3), "b1")
    a3 = (15.0 + s0 * 5.0 * r3 - s0 * 3.0 * r5 - r15) / 120.0
    b3 = s1 / 60.0 * _checked_sqrt(
        5.0 * (-18.0 - s0 * 7.0 * r3 + s0 * 6.0 * r5 + 5.0 * r15), "b3")
    return a1 + b1, a1 - b1, a3 + b3, a3 - b3


def fiducial_n9(s0: int, s1: int, s2: int, m3: int, m4: int) -> Fiducial:
    """Closed-form N = 9 fiducial in the monomial basis.

    Parameters: signs s0, s1, s2 in {+1, -1} and cube-root indices m3, m4 in
    {0, 1, 2}; 72 vectors in total. The sign s0 selects one of two orbits of
    the extended Clifford group. The vector is

        -z1 w^7 |1,1> - z2 w |2,2>
        + z3 (w^6 |0,2> + |1,0> + w^8 |2,1>)
        + z4 (w^6 |0,1> + |2,0> + w^5 |1,2>)

    with w = omega, z1 = sqrt(p1) e^{i mu0}, z2 = sqrt(p2) e^{-i mu0},
    z3 = sqrt(p3) e^{i mu3}, z4 = sqrt(p4) e^{i mu4}; mu0 is taken on the
    branch -pi/2 < mu0 <= pi/2 and e^{i mu3}, e^{i mu4} are principal cube
    roots times sigma^{m3}, sigma^{m4}.
    """
    if s0 not in (1, -1) or s1 not in (1, -1) or s2 not in (1, -1):
        raise ValueError("s0, s1, s2 must be +1 or -1")
    dim = Dimension(9)
    r3, r5, r15 = math.sqrt(3.0), math.sqrt(5.0), math.sqrt(15.0)
    p1, p2, p3, p4 = fiducial_n9_amplitudes(s0, s1, s2)

    c0 = 0.125 * _checked_sqrt(2.0 * (6.0 + s0 * r3 - r15), "c0")
    e_mu0 = _checked_sqrt(0.5 + c0, "mu0 re") - 1j * s1 * _checked_sqrt(0.5 - c0, "mu0 im")

    c1 = s0 / 8.0 * _checked_sqrt(9.0 - s0 * 4.0 * r3 + s0 * 3.0 * r5 - 2.0 * r15, "c1")
    c2 = s1 * s0 / 24.0 * _checked_sqrt(
        15.0 * (-19.0 + s0 * 12.0 * r3 - s0 * 9.0 * r5 + 6.0 * r15), "c2")
    cube3 = (-_checked_sqrt(0.5 - c1 + c2, "mu3 re")
             + 1j * s1 * s2 * _checked_sqrt(0.5 + c1 - c2, "mu3 im"))
    cube4 = (-_checked_sqrt(0.5 - c1 - c2, "mu4 re")
             + 1j * s1 * s2 * _checked_sqrt(0.5 + c1 + c2, "mu4 im"))
    e_mu3 = sigma_power(dim, m3) * complex(cube3) ** (1.0 / 3.0)
    e_mu4 = sigma_power(dim, m4) * complex(cube4) ** (1.0 / 3.0)

    z1 = math.sqrt(p1) * e_mu0
    z2 = math.sqrt(p2) * np.conj(e_mu0)
    z3 = math.sqrt(p3) * e_mu3
    z4 = math.sqrt(p4) * e_mu4

    w = [omega_power(dim, k) for k in range(9)]
    v = np.zeros(9, dtype=complex)
    v[flatten(1, 1, 3)] = -z1 * w[7]
    v[flatten(2, 2, 3)] = -z2 * w[1]
    v[flatten(0, 2, 3)] = z3 * w[6]
    v[flatten(1, 0, 3)] = z3
    v[flatten(2, 1, 3)] = z3 * w[8]
    v[flatten(0, 1, 3)] = z4 * w[6]
    v[flatten(2, 0, 3)] = z4
    v[flatten(1, 2, 3)] = z4 * w[5]
    v = v / np.linalg.norm(v)
    return Fiducial(dim, "monomial", v,
                    {"construction": "n9", "s0": s0, "s1": s1, "s2": s2,
                     "m3": m3 % 3, "m4": m4 % 3,
                     "orbit": "9a" if s0 == 1 else "9b"})


# ---------------------------------------------------------------------------
# N = 16 closed form (heavy lifting lives in adapted16)
# ---------------------------------------------------------------------------

adapted16_generators = adapted16.adapted16_generators


def fiducial_n16(t2_branch: int = +1, conjugate_orbit: bool = False) -> Fiducial:
    """Closed-form N = 16 fiducial in the adapted basis. Both t2 branches
    give valid fiducials; conjugate_orbit flips the signs of sqrt(13) and
    sqrt(17) in the coefficient field, landing on the second orbit."""
    v = adapted16.fiducial_vector(t2_branch, conjugate_orbit)
    return Fiducial(Dimension(16), "adapted16", v,
                    {"construction": "n16", "t2_branch": t2_branch,
                     "conjugate_orbit": conjugate_orbit,
                     "orbit": "16b" if conjugate_orbit else "16a"})


def fiducial_n16_standard(t2_branch: int = +1,
                          conjugate_orbit: bool = False) -> Fiducial:
    """The same fiducial expressed in the standard basis via the basis-change
    matrix of the adapted construction."""
    v = adapted16.adapted_to_standard(
        adapted16.fiducial_vector(t2_branch, conjugate_orbit))
    v = v / np.linalg.norm(v)
    return Fiducial(Dimension(16), "standard", v,
                    {"construction": "n16", "t2_branch": t2_branch,
                     "conjugate_orbit": conjugate_orbit,
                     "orbit": "16b" if conjugate_orbit else "16a"})


# ---------------------------------------------------------------------------
# Simplex projection and autocorrelations
# ---------------------------------------------------------------------------

def simplex_projection(f: Fiducial) -> SimplexProjection:
    """Componentwise squared moduli: the image of the state in the
    probability simplex of its basis."""
    return SimplexProjection(np.abs(f.amplitudes) ** 2)


def autocorrelation_check(f: Fiducial) -> np.ndarray:
    """Residuals of the shifted-product probability sums.

    In the standard basis the sums run over 1D shifts,
    sum_i p_i p_{i+x} with x mod N; in a phase-permutation basis over 2D
    shifts, sum_{r,s} p_{rs} p_{r+x,s+y} with x, y mod n. The zero shift must
    give 2/(N+1), every other shift 1/(N+1); the returned array holds the
    absolute residuals, indexed by shift.
    """
    dim = f.dim
    N = dim.N
    p = np.abs(f.amplitudes) ** 2
    if f.basis == "standard":
        res = np.empty(N)
        for x in range(N):
            s = float(np.dot(p, np.roll(p, -x)))
            target = 2.0 / (N + 1) if x == 0 else 1.0 / (N + 1)
            res[x] = abs(s - target)
        return res
    if f.basis in ("monomial", "rephased4") and dim.is_square:
        n = dim.n
        P = p.reshape(n, n)
        res = np.empty((n, n))
        for x in range(n):
            for y in range(n):
                s = float(np.sum(P * np.roll(np.roll(P, -x, axis=0), -y, axis=1)))
                target = 2.0 / (N + 1) if (x, y) == (0, 0) else 1.0 / (N + 1)
                res[x, y] = abs(s - target)
        return res
    raise BasisUnavailable(
        f"autocorrelation shifts are not defined for basis {f.basis!r}")


# ---------------------------------------------------------------------------
# Zauner eigenspace projection and numerical search
# ---------------------------------------------------------------------------

def _order3_unitary(dim: Dimension, basis: str) -> np.ndarray:
    if basis == "monomial":
        return monomial_zauner(dim)
    if basis == "standard":
        return zauner_unitary(dim)
    raise BasisUnavailable(f"no order-3 symmetry registered for basis {basis!r}")


def zauner_project(dim: Dimension, v: np.ndarray, basis: str = "standard",
                   tol: float = 1e-8) -> np.ndarray:
    """Project onto the eigenvalue-1 eigenspace of the order-3 symmetry via
    (1 + U + U^2)/3 and renormalize; raises NullProjection if the component
    is numerically null."""
    U = _order3_unitary(dim, basis)
    P = (np.eye(dim.N) + U + U @ U) / 3.0
    out = P @ v
    nrm = float(np.linalg.norm(out))
    if nrm < tol:
        raise NullProjection(f"projected norm {nrm} below {tol}")
    return out / nrm


def _e0_basis(dim: Dimension) -> np.ndarray:
    """Orthonormal columns spanning the eigenvalue-1 eigenspace of the
    standard-basis order-3 unitary."""
    U = zauner_unitary(dim)
    P = (np.eye(dim.N) + U + U @ U) / 3.0
    w, v = np.linalg.eigh(P @ P.conj().T)
    cols = v[:, w > 0.5]
    # re-orthonormalize the projected columns against roundoff
    q, _ = np.linalg.qr(P @ cols)
    return q


def sic_residual(psi: np.ndarray, D: np.ndarray, N: int) -> float:
    overlaps = np.einsum("i,kij,j->k", psi.conj(), D, psi)
    probs = np.abs(overlaps) ** 2
    probs[0] = 1.0 / (N + 1)
    return float(np.sum((probs - 1.0 / (N + 1)) ** 2))


def search_fiducial(dim: Dimension, rng_seed: int = 0, max_restarts: int = 50,
                    tol: float = 1e-8, max_iter: int = 100_000,
                    fd_step: float = 1e-7) -> Fiducial | None:
    """Numerical fiducial search in the order-3 eigenspace E0.

    Random unit starts are drawn inside E0 with deterministically derived
    sub-seeds (one per restart), then refined by a quasi-Newton descent of
    F(psi) = sum ( |<psi|D_ij|psi>|^2 - 1/(N+1) )^2 with finite-difference
    gradients. Returns the first restart (lowest index) whose polished vector
    passes verify_sic at tol, or None if all restarts fail.
    """
    N = dim.N
    D = all_displacements(dim)
    B = _e0_basis(dim)
    d = B.shape[1]

    def objective(x: np.ndarray) -> float:
        c = x[:d] + 1j * x[d:]
        nrm = np.linalg.norm(c)
        if nrm < 1e-12:
            return 1.0
        psi = B @ (c / nrm)
        return sic_residual(psi, D, N)

    seeds = np.random.SeedSequence(rng_seed).spawn(max_restarts)
    for restart, seed in enumerate(seeds):
        rng = np.random.default_rng(seed)
        x0 = rng.standard_normal(2 * d)
        res = minimize(objective, x0, method="L-BFGS-B",
                       options={"maxiter": max_iter, "eps": fd_step,
                                "ftol": 1e-16, "gtol": 1e-12})
        # polish with a finer difference step once the coarse pass stalls
        res = minimize(objective, res.x, method="L-BFGS-B",
                       options={"maxiter": max_iter, "eps": fd_step * 1e-2,
                                "ftol": 1e-18, "gtol": 1e-14})
        c = res.x[:d] + 1j * res.x[d:]
        psi = B @ (c / np.linalg.norm(c))
        psi = psi / np.linalg.norm(psi)
        f = Fiducial(dim, "standard", psi,
                     {"construction": "search", "rng_seed": rng_seed,
                      "restart": restart, "residual": float(res.fun)})
        if verify_sic(f, tol).passed:
            return f
    return None
