"""Dimension bookkeeping and root-of-unity phase conventions.

All phases are evaluated from reduced angle rationals (exp(i*pi*m/M) with the
integer exponent reduced first), never by repeated multiplication, so that
high powers stay accurate to machine precision even for N = 16 radical checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Global default tolerance for floating-point comparisons; every operation
# that compares matrices accepts an override.
DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class Dimension:
    """A Hilbert-space dimension N with its phase modulus nbar.

    nbar = N for odd N and 2N for even N. For square N the side length n
    (n*n == N) is available; it is None otherwise.
    """

    N: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError(f"dimension must be positive, got {self.N}")

    @property
    def nbar(self) -> int:
        return self.N if self.N % 2 == 1 else 2 * self.N

    @property
    def n(self) -> int | None:
        r = math.isqrt(self.N)
        return r if r * r == self.N else None

    @property
    def is_square(self) -> bool:
        return self.n is not None

    @property
    def half_shift(self) -> int:
        """m = 0 for odd n, n/2 for even n (square dimensions only)."""
        n = self.n
        if n is None:
            raise ValueError(f"N={self.N} is not a square")
        return 0 if n % 2 == 1 else n // 2


@dataclass(frozen=True)
class PhaseConventions:
    """The primitive phases omega = e^{2 pi i/N}, tau = -e^{i pi/N} and,
    for square dimensions, sigma = e^{2 pi i/n}."""

    omega: complex
    tau: complex
    sigma: complex | None

    def check(self, N: int, tol: float = 1e-14) -> bool:
        ok = abs(self.tau**2 - self.omega) < tol
        ok &= abs(self.tau**N - (-1 if N % 2 == 0 else 1)) < 1e-12
        return bool(ok)


def omega_power(dim: Dimension, k: int) -> complex:
    """omega^k = exp(2 pi i k / N), with exact exponent reduction."""
    return complex(np.exp(2j * np.pi * (k % dim.N) / dim.N))


def tau_power(dim: Dimension, k: int) -> complex:
    """tau^k with tau = -e^{i pi/N}, i.e. exp(i pi (N+1) k / N) reduced mod 2N."""
    m = (k * (dim.N + 1)) % (2 * dim.N)
    return complex(np.exp(1j * np.pi * m / dim.N))


def sigma_power(dim: Dimension, k: int) -> complex:
    """sigma^k = exp(2 pi i k / n) for square dimensions."""
    n = dim.n
    if n is None:
        raise ValueError(f"N={dim.N} is not a square")
    return complex(np.exp(2j * np.pi * (k % n) / n))


def phases(dim: Dimension) -> PhaseConventions:
    return PhaseConventions(
        omega=omega_power(dim, 1),
        tau=tau_power(dim, 1),
        sigma=sigma_power(dim, 1) if dim.is_square else None,
    )
