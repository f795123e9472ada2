"""Elementary arithmetic functions: sieved tables and point evaluations."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import CountOverflowError, DomainError, SizeError

# spf/tau int32, phi int64, mu/expo int8: ~18 bytes per entry, ~360 MB at the cap.
TABLE_LIMIT_CAP = 20_000_000
DIVISOR_CACHE_CAP = 1_000_000
INT64_MAX = 2**63 - 1


def check_int64(value: int, what: str = "count") -> int:
    if value > INT64_MAX or value < -INT64_MAX - 1:
        raise CountOverflowError(f"{what} {value} does not fit in 64 bits")
    return value


@dataclass(frozen=True, eq=False)
class ArithTables:
    """Sieved smallest prime factor, tau, phi and mu on 0..limit.

    Index 0 is a zero placeholder so that ``tau[n]`` is tau(n). The arrays
    are marked read-only. Divisor lists are produced on demand from the spf
    factorization and memoized for n <= ``divisor_cap``.
    """

    limit: int
    smallest_prime_factor: np.ndarray
    tau: np.ndarray
    phi: np.ndarray
    mu: np.ndarray
    divisor_cap: int = DIVISOR_CACHE_CAP
    _divisor_cache: dict = field(default_factory=dict, repr=False)

    def factorize(self, n: int) -> list[tuple[int, int]]:
        if n < 1:
            raise DomainError(f"cannot factor {n}")
        if n > self.limit:
            return factorize(n)
        spf = self.smallest_prime_factor
        out = []
        while n > 1:
            p = int(spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out

    def divisors(self, n: int) -> list[int]:
        cached = self._divisor_cache.get(n)
        if cached is not None:
            return cached
        divs = _divisors_from_factors(self.factorize(n))
        if n <= self.divisor_cap:
            self._divisor_cache[n] = divs
        return divs

    def tau_of(self, n: int) -> int:
        return int(self.tau[n]) if 1 <= n <= self.limit else tau_point(n)

    def phi_of(self, n: int) -> int:
        return int(self.phi[n]) if 1 <= n <= self.limit else phi_point(n)

    def mu_of(self, n: int) -> int:
        return int(self.mu[n]) if 1 <= n <= self.limit else mu_point(n)


def build_tables(limit: int, divisor_cap: int = DIVISOR_CACHE_CAP) -> ArithTables:
    """Linear smallest-prime-factor sieve; tau, phi, mu come out of the same pass."""
    if limit < 1:
        raise SizeError(f"table limit must be >= 1, got {limit}")
    if limit > TABLE_LIMIT_CAP:
        raise SizeError(f"table limit {limit} exceeds cap {TABLE_LIMIT_CAP}")
    spf, tau, phi, mu = _kernels.linear_sieve(int(limit))
    for arr in (spf, tau, phi, mu):
        arr.flags.writeable = False
    return ArithTables(limit, spf, tau, phi, mu, divisor_cap=divisor_cap)


def factorize(n: int) -> list[tuple[int, int]]:
    """Trial division; fine for the sizes this package meets (n < 10^14 or so)."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    p = 5
    step = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += step
        step = 6 - step
    if n > 1:
        out.append((n, 1))
    return out


def _divisors_from_factors(factors: list[tuple[int, int]]) -> list[int]:
    divs = [1]
    for p, e in factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    divs.sort()
    return divs


def divisors(n: int) -> list[int]:
    return _divisors_from_factors(factorize(n))


def tau_point(n: int) -> int:
    if n < 1:
        raise DomainError(f"tau undefined at {n}")
    return math.prod(e + 1 for _, e in factorize(n))


def phi_point(n: int) -> int:
    if n < 1:
        raise DomainError(f"phi undefined at {n}")
    return math.prod((p - 1) * p ** (e - 1) for p, e in factorize(n))


def mu_point(n: int) -> int:
    if n < 1:
        raise DomainError(f"mu undefined at {n}")
    factors = factorize(n)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def gcd(a: int, b: int) -> int:
    if a < 1 or b < 1:
        raise DomainError(f"gcd needs positive arguments, got ({a}, {b})")
    return math.gcd(a, b)
