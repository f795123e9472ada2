"""Stieltjes constants gamma_0..gamma_4 and zeta^(j)(2), j = 0..4, to high precision.

Both come from Euler-Maclaurin summation of f(t) = (log t)^n t^(-a):

    gamma_n     = sum_{k<N} f(k) - (log N)^(n+1)/(n+1) + f(N)/2
                  - sum_j B_2j/(2j)! f^(2j-1)(N)                    (a = 1)
    sum_k f(k)  = sum_{k<N} f(k) + int_N^inf f + f(N)/2 - (same)     (a > 1)

The correction series is cut once its terms drop below the target; if the
terms start growing first, N is doubled. Stieltjes constants are checked
against mpmath's independent implementation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath

from .errors import DomainError, PrecisionError

DEFAULT_DIGITS = 50
GUARD_DIGITS = 15
MAX_ORDER = 4


def _deriv_polys(n: int, a, count: int):
    """Yield coefficient lists p with f^(r)(t) = t^(-a-r) sum_i p[i] (log t)^i, r = 0, 1, ..."""
    p = [mpmath.mpf(0)] * n + [mpmath.mpf(1)]
    r = 0
    while r < count:
        yield p
        q = [-(a + r) * c for c in p]
        for i in range(1, len(p)):
            q[i - 1] += i * p[i]
        p = q
        r += 1


def _em_corrections(n: int, a, N: int, eps):
    """f(N)/2 - sum_j B_2j/(2j)! f^(2j-1)(N), or None if the series stalls above eps."""
    L = mpmath.log(N)
    total = L**n / mpmath.mpf(N) ** a / 2
    prev = None
    jmax = 4 * N + 20
    for r, p in enumerate(_deriv_polys(n, a, 2 * jmax)):
        if r % 2 == 0:
            continue
        j = (r + 1) // 2
        val = mpmath.polyval(p[::-1], L) / mpmath.mpf(N) ** (a + r)
        term = mpmath.bernoulli(2 * j) / mpmath.factorial(2 * j) * val
        size = abs(term)
        if size < eps:
            return total
        if prev is not None and size > prev:
            return None
        total -= term
        prev = size
    return None


def _em_sum(n: int, a, digits: int):
    """Sum_{k>=1} (log k)^n k^(-a) for a > 1, or gamma_n for a = 1."""
    eps = mpmath.mpf(10) ** (-(digits + 5))
    N = max(8, int(0.4 * digits) + 8)
    while True:
        corr = _em_corrections(n, a, N, eps)
        if corr is not None:
            break
        N *= 2
    head = mpmath.fsum(mpmath.log(k) ** n / mpmath.mpf(k) ** a for k in range(2, N)) if n else \
        mpmath.fsum(1 / mpmath.mpf(k) ** a for k in range(1, N))
    L = mpmath.log(N)
    if a == 1:
        integral = -(L ** (n + 1)) / (n + 1)
    else:
        # int_N^inf (log t)^n t^-a dt = Gamma(n+1, (a-1)L) / (a-1)^(n+1)
        b = a - 1
        integral = (
            mpmath.factorial(n) * mpmath.exp(-b * L)
            * mpmath.fsum((b * L) ** i / mpmath.factorial(i) for i in range(n + 1))
            / b ** (n + 1)
        )
    return head + integral + corr


def _check_digits(digits: int) -> None:
    if digits < 15:
        raise DomainError(f"need at least 15 digits, got {digits}")


def _check_order(k: int) -> None:
    if not 0 <= k <= MAX_ORDER:
        raise DomainError(f"order must be in 0..{MAX_ORDER}, got {k}")


def stieltjes_em(n: int, digits: int):
    _check_order(n)
    _check_digits(digits)
    with mpmath.workdps(digits + GUARD_DIGITS):
        return +_em_sum(n, mpmath.mpf(1), digits + GUARD_DIGITS // 2)


def stieltjes_reference(n: int, digits: int):
    """Second route: mpmath's own Stieltjes implementation."""
    _check_order(n)
    _check_digits(digits)
    with mpmath.workdps(digits + GUARD_DIGITS):
        return +mpmath.stieltjes(n)


def agreeing_digits(u, v) -> float:
    """Number of significant decimal digits on which u and v agree."""
    diff = abs(u - v)
    if diff == 0:
        return math.inf
    scale = max(abs(u), abs(v))
    return float(-mpmath.log10(diff / scale))


def stieltjes(n: int, digits: int = DEFAULT_DIGITS):
    """gamma_n to `digits` significant digits (with guard digits carried)."""
    primary = stieltjes_em(n, digits)
    check = stieltjes_reference(n, digits)
    with mpmath.workdps(digits + GUARD_DIGITS):
        agree = agreeing_digits(primary, check)
    if agree < digits - 5:
        raise PrecisionError(
            f"gamma_{n}: Euler-Maclaurin and reference agree to only {agree:.1f} digits"
        )
    return primary


def zeta_deriv_at_2(j: int, digits: int = DEFAULT_DIGITS):
    """zeta^(j)(2) = sum_n (-log n)^j n^-2."""
    _check_order(j)
    _check_digits(digits)
    with mpmath.workdps(digits + GUARD_DIGITS):
        return (-1) ** j * _em_sum(j, mpmath.mpf(2), digits + GUARD_DIGITS // 2)


def zeta_real(a, digits: int = DEFAULT_DIGITS):
    """zeta(a) for real a > 1."""
    _check_digits(digits)
    if not a > 1:
        raise DomainError(f"zeta_real needs a > 1, got {a}")
    with mpmath.workdps(digits + GUARD_DIGITS):
        return _em_sum(0, mpmath.mpf(a), digits + GUARD_DIGITS // 2)


def fixed_decimal(value, digits: int) -> str:
    """Fixed-point string with `digits` significant digits, never exponent form."""
    return mpmath.nstr(value, digits, min_fixed=-mpmath.inf, max_fixed=mpmath.inf,
                       strip_zeros=False)


def align_decimals(strings: list[str]) -> list[str]:
    """Pad so the decimal points line up."""
    width = max(s.index(".") if "." in s else len(s) for s in strings)
    return [" " * (width - (s.index(".") if "." in s else len(s))) + s for s in strings]


@dataclass(frozen=True)
class ConstantsBank:
    digits: int
    gamma: tuple
    zeta2_derivs: tuple

    @property
    def dps(self) -> int:
        return self.digits + GUARD_DIGITS

    def rows(self) -> list[tuple[str, str]]:
        names = [f"gamma_{i}" for i in range(len(self.gamma))]
        names += ["zeta(2)"] + [f"zeta^({j})(2)" for j in range(1, len(self.zeta2_derivs))]
        values = list(self.gamma) + list(self.zeta2_derivs)
        return [(name, fixed_decimal(v, self.digits)) for name, v in zip(names, values)]


@lru_cache(maxsize=8)
def build_bank(digits: int = DEFAULT_DIGITS) -> ConstantsBank:
    _check_digits(digits)
    gamma = tuple(stieltjes(n, digits) for n in range(MAX_ORDER + 1))
    zd = tuple(zeta_deriv_at_2(j, digits) for j in range(MAX_ORDER + 1))
    with mpmath.workdps(digits + GUARD_DIGITS):
        agree = agreeing_digits(zd[0], mpmath.pi**2 / 6)
    if agree < digits:
        raise PrecisionError(f"zeta(2) matches pi^2/6 to only {agree:.1f} digits")
    if not (zd[1] < 0 and zd[2] > 0):
        raise PrecisionError("sign check failed: expected zeta'(2) < 0 < zeta''(2)")
    return ConstantsBank(digits, gamma, zd)
