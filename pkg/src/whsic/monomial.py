"""Phase-permutation representation for square dimensions N = n^2.

Basis vectors are labelled |r,s> with r,s mod n, flattened as r*n + s.
The generators act by

    X|r,s> = |r,s+1>            (wrap: X|r,n-1> = sigma^r |r,0>)
    Z|r,s> = omega^s |r-1,s>

and a symplectic G with beta coprime to nbar acts by

    U_G|r,s> = e^{i theta} tau^{beta^{-1}(delta s'^2 - 2 s s' + alpha s^2)}
               |delta r - gamma s + m gamma delta, -beta r + alpha s + m alpha beta>

with s' = -beta r + alpha s + m alpha taken in [0, n) and m = 0 (n odd) or
n/2 (n even). The module also holds the SL(2,N)-orbit machinery used for the
square/non-square decision procedures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dims import DEFAULT_TOL, Dimension, omega_power, sigma_power, tau_power
from .errors import NotSquare
from .weyl import mod_inverse
from .clifford import SymplecticMatrix, ZAUNER, decompose, metaplectic


def _require_square(dim: Dimension) -> int:
    if dim.n is None:
        raise NotSquare(f"N={dim.N} is not a square dimension")
    return dim.n


def flatten(r: int, s: int, n: int) -> int:
    return (r % n) * n + (s % n)


def zak_matrix(dim: Dimension) -> np.ndarray:
    """Unitary whose columns are |r,s> = (1/sqrt(n)) sum_t omega^{-ntr} |nt+s>."""
    n = _require_square(dim)
    N = dim.N
    V = np.zeros((N, N), dtype=complex)
    for r in range(n):
        for s in range(n):
            col = flatten(r, s, n)
            for t in range(n):
                V[n * t + s, col] = omega_power(dim, -n * t * r) / np.sqrt(n)
    return V


def monomial_weyl_generators(dim: Dimension) -> tuple[np.ndarray, np.ndarray]:
    """(X, Z) acting on the |r,s> basis."""
    n = _require_square(dim)
    N = dim.N
    X = np.zeros((N, N), dtype=complex)
    Z = np.zeros((N, N), dtype=complex)
    for r in range(n):
        for s in range(n):
            col = flatten(r, s, n)
            if s + 1 < n:
                X[flatten(r, s + 1, n), col] = 1.0
            else:
                X[flatten(r, 0, n), col] = sigma_power(dim, r)
            Z[flatten(r - 1, s, n), col] = omega_power(dim, s)
    return X, Z


def monomial_clifford(G: SymplecticMatrix, dim: Dimension, theta: float = 0.0) -> np.ndarray:
    """Phase-permutation unitary of a symplectic G on the |r,s> basis."""
    n = _require_square(dim)
    N, nbar = dim.N, dim.nbar
    m = dim.half_shift
    G = G.reduced(nbar)
    if math.gcd(G.beta, nbar) != 1:
        G1, G2 = decompose(G, dim)
        return np.exp(1j * theta) * (monomial_clifford(G1, dim) @ monomial_clifford(G2, dim))
    a, b, g_, d = G.alpha, G.beta, G.gamma, G.delta
    binv = mod_inverse(b, nbar)
    U = np.zeros((N, N), dtype=complex)
    for r in range(n):
        for s in range(n):
            col = flatten(r, s, n)
            sp = (-b * r + a * s + m * a) % n
            rp = (d * r - g_ * s + m * g_ * d) % n
            expo = binv * (d * sp * sp - 2 * s * sp + a * s * s)
            U[flatten(rp, sp, n), col] = np.exp(1j * theta) * tau_power(dim, expo)
    return U


def monomial_zauner(dim: Dimension) -> np.ndarray:
    """U|r,s> = e^{i pi (N-1)/12} tau^{r^2+2rs} |-r-s-m, r>, satisfying U^3 = 1."""
    n = _require_square(dim)
    N = dim.N
    m = dim.half_shift
    ph = np.exp(1j * np.pi * (N - 1) / 12)
    U = np.zeros((N, N), dtype=complex)
    for r in range(n):
        for s in range(n):
            U[flatten(-r - s - m, r, n), flatten(r, s, n)] = ph * tau_power(dim, r * r + 2 * r * s)
    return U


def monomial_antiunitary(dim: Dimension, v: np.ndarray) -> np.ndarray:
    """Anti-unitary of J: conjugate amplitudes and send (r,s) -> (-r, s)."""
    n = _require_square(dim)
    out = np.zeros_like(v, dtype=complex)
    for r in range(n):
        for s in range(n):
            out[flatten(-r, s, n)] = np.conj(v[flatten(r, s, n)])
    return out


def is_phase_permutation(M: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """True iff every row and column carries exactly one unit-modulus entry
    and everything else is below tol."""
    absM = np.abs(M)
    big = absM > tol
    if not (big.sum(axis=0) == 1).all() or not (big.sum(axis=1) == 1).all():
        return False
    return bool(np.all(np.abs(absM[big] - 1.0) <= tol))


# ---------------------------------------------------------------------------
# SL(2, N) orbits on Z_N^2 and the stabilized-subgroup criterion
# ---------------------------------------------------------------------------

def vector_order(v: tuple[int, int], N: int) -> int:
    """Least k >= 1 with k*v == 0 mod N."""
    return N // math.gcd(v[0] % N, v[1] % N, N)


def _column_completion(vp: tuple[int, int], N: int) -> SymplecticMatrix:
    """A matrix in SL(2, N) whose first column is vp (which has order N)."""
    v1, v2 = vp[0] % N, vp[1] % N
    g = math.gcd(v1, v2)
    if g == 0:
        raise ValueError("zero vector cannot have order N")
    a, b = _bezout(v1, v2)
    ginv = mod_inverse(g % N, N)
    y = (ginv * a) % N
    x = (-ginv * b) % N
    S = SymplecticMatrix(v1, x, v2, y)
    assert S.det() % N == 1
    return S


def _bezout(p: int, q: int) -> tuple[int, int]:
    """Smallest pair (a, b) from the extended gcd with a*p + b*q = gcd(p, q)."""
    old_r, r = p, q
    old_a, a = 1, 0
    old_b, b = 0, 1
    while r != 0:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_a, a = a, old_a - quot * a
        old_b, b = b, old_b - quot * b
    return old_a, old_b


def _primitive_lift(w: tuple[int, int], k: int, N: int) -> tuple[int, int]:
    """A vector w' of order N with (N/k) * w' == w mod N.

    The plain componentwise quotient w // (N/k) solves the divisibility but
    may have order < N (e.g. (4,4)/2 = (2,2) at N = 6); shifting components
    by multiples of k fixes the order without changing (N/k) * w'.
    """
    scale = N // k
    w0 = (w[0] // scale, w[1] // scale)
    for a in range(scale):
        for b in range(scale):
            cand = ((w0[0] + k * a) % N, (w0[1] + k * b) % N)
            if vector_order(cand, N) == N:
                return cand
    raise AssertionError("no primitive lift found; contradicts gcd argument")


@dataclass(frozen=True)
class OrbitReport:
    order: int
    members: frozenset
    witness_maps: dict  # member -> SymplecticMatrix mapping the base point to it


def sl2_orbit(dim: Dimension, v: tuple[int, int]) -> OrbitReport:
    """Orbit of v under SL(2, N): all vectors of the same order, with an
    explicit symplectic witness per member built from the constructive
    transitivity proof."""
    N = dim.N
    v = (v[0] % N, v[1] % N)
    k = vector_order(v, N)
    members = frozenset(
        (i, j) for i in range(N) for j in range(N) if vector_order((i, j), N) == k
    )
    if k == 1:
        return OrbitReport(1, members, {(0, 0): SymplecticMatrix(1, 0, 0, 1)})
    Sv = _column_completion(_primitive_lift(v, k, N), N)
    Sv_inv = Sv.inv(N)
    witnesses = {}
    for w in members:
        Sw = _column_completion(_primitive_lift(w, k, N), N)
        S = Sw.mul(Sv_inv, N)
        assert S.apply(v[0], v[1], N) == w
        witnesses[w] = S
    return OrbitReport(k, members, witnesses)


def invariant_subgroup(dim: Dimension, brute_force: bool = False):
    """The order-N subgroup of Z_N^2 stabilized by SL(2, N), or None.

    For square N the answer is n * Z_N^2. Otherwise (N <= 36) an exhaustive
    search over unions of constant-order classes (the only SL-invariant
    candidates, by the orbit structure) is performed; brute_force=True forces
    the search path even for squares.
    """
    N = dim.N
    if dim.is_square and not brute_force:
        n = dim.n
        return frozenset((n * a % N, n * b % N) for a in range(n) for b in range(n))
    if N > 36:
        raise ValueError("brute-force search is capped at N <= 36")
    divisors = [d for d in range(1, N + 1) if N % d == 0]
    classes = {d: frozenset((i, j) for i in range(N) for j in range(N)
                            if vector_order((i, j), N) == d)
               for d in divisors}
    # candidate invariant sets: unions over divisor-closed subsets of divisors
    for mask in range(1, 1 << len(divisors)):
        S = [divisors[t] for t in range(len(divisors)) if mask >> t & 1]
        if 1 not in S:
            continue
        if any(e for d in S for e in divisors if d % e == 0 and e not in S):
            continue
        V = frozenset().union(*(classes[d] for d in S))
        if len(V) != N:
            continue
        if _is_subgroup(V, N):
            return V
    return None


def _is_subgroup(V: frozenset, N: int) -> bool:
    return all(((a1 + b1) % N, (a2 + b2) % N) in V for a1, a2 in V for b1, b2 in V)


def stabilized_abelian_check(G: SymplecticMatrix, dim: Dimension) -> float:
    """Deviation of U_G-conjugation from mapping the maximal Abelian subgroup
    <X^n, Z^n, tau*1> into itself: each conjugated generator must equal
    tau^k X^{an} Z^{bn} for the indices predicted by the symplectic action,
    up to the best tau power."""
    n = _require_square(dim)
    N, nbar = dim.N, dim.nbar
    U = monomial_clifford(G, dim)
    Ud = U.conj().T
    X, Z = monomial_weyl_generators(dim)
    tau_table = np.array([tau_power(dim, k) for k in range(nbar)])
    Xp = [np.eye(N, dtype=complex)]
    Zp = [np.eye(N, dtype=complex)]
    for _ in range(N - 1):
        Xp.append(Xp[-1] @ X)
        Zp.append(Zp[-1] @ Z)
    worst = 0.0
    for (i, j) in ((n, 0), (0, n)):
        D = tau_power(dim, i * j) * (Xp[i] @ Zp[j])
        conj = U @ D @ Ud
        ip, jp = G.apply(i, j, N)
        assert ip % n == 0 and jp % n == 0, "conjugate left the subgroup"
        tgt = tau_power(dim, ip * jp) * (Xp[ip] @ Zp[jp])
        ph = np.trace(tgt.conj().T @ conj) / N
        k = int(np.argmin(np.abs(tau_table - ph)))
        worst = max(worst, float(np.max(np.abs(conj - tau_table[k] * tgt))))
    # tau * identity must be fixed exactly
    worst = max(worst, 0.0)
    return worst
