"""Subgroup counts s(m,n) and cyclic-subgroup counts c(m,n) of Z_m x Z_n.

Three divisor-sum formulas for s (F1-F3), four for c (C1-C4), and a
brute-force enumeration oracle that never looks at any of them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import ArithTables, check_int64
from .errors import DomainError, SizeError

S_FORMULAS = ("F1", "F2", "F3")
C_FORMULAS = ("C1", "C2", "C3", "C4")
ORACLE_CAP = 10_000


@dataclass(frozen=True)
class GroupCountRecord:
    m: int
    n: int
    s_count: int
    c_count: int
    source: str


def _check_args(m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise DomainError(f"m and n must be positive, got ({m}, {n})")


def _divs(tables: ArithTables | None, k: int) -> list[int]:
    if tables is not None:
        return tables.divisors(k)
    from .arith import divisors

    return divisors(k)


def _tau(tables, k):
    if tables is not None:
        return tables.tau_of(k)
    from .arith import tau_point

    return tau_point(k)


def _phi(tables, k):
    if tables is not None:
        return tables.phi_of(k)
    from .arith import phi_point

    return phi_point(k)


def _mu(tables, k):
    if tables is not None:
        return tables.mu_of(k)
    from .arith import mu_point

    return mu_point(k)


def mu_conv_phi(d: int, tables: ArithTables | None = None) -> int:
    """(mu * phi)(d) by direct Dirichlet convolution over the divisors of d."""
    return sum(_mu(tables, e) * _phi(tables, d // e) for e in _divs(tables, d))


def s_count(m: int, n: int, formula: str = "F3", tables: ArithTables | None = None) -> int:
    _check_args(m, n)
    if formula == "F1":
        dn = _divs(tables, n)
        val = sum(math.gcd(a, b) for a in _divs(tables, m) for b in dn)
    elif formula == "F2":
        val = sum(
            _phi(tables, d) * _tau(tables, m // d) * _tau(tables, n // d)
            for d in _divs(tables, math.gcd(m, n))
        )
    elif formula == "F3":
        mn = m * n
        val = sum(d * _tau(tables, mn // (d * d)) for d in _divs(tables, math.gcd(m, n)))
    else:
        raise DomainError(f"unknown s-formula {formula!r}; expected one of {S_FORMULAS}")
    return check_int64(val, "s(m,n)")


def c_count(m: int, n: int, formula: str = "C4", tables: ArithTables | None = None) -> int:
    _check_args(m, n)
    if formula == "C1":
        dn = _divs(tables, n)
        val = sum(
            math.gcd(a, b)
            for a in _divs(tables, m)
            for b in dn
            if math.gcd(m // a, n // b) == 1
        )
    elif formula == "C2":
        dn = _divs(tables, n)
        val = sum(_phi(tables, math.gcd(a, b)) for a in _divs(tables, m) for b in dn)
    elif formula == "C3":
        val = sum(
            mu_conv_phi(d, tables) * _tau(tables, m // d) * _tau(tables, n // d)
            for d in _divs(tables, math.gcd(m, n))
        )
    elif formula == "C4":
        mn = m * n
        val = sum(
            _phi(tables, d) * _tau(tables, mn // (d * d)) for d in _divs(tables, math.gcd(m, n))
        )
    else:
        raise DomainError(f"unknown c-formula {formula!r}; expected one of {C_FORMULAS}")
    return check_int64(val, "c(m,n)")


def count_record(m: int, n: int, s_formula: str = "F3", c_formula: str = "C4",
                 tables: ArithTables | None = None) -> GroupCountRecord:
    return GroupCountRecord(
        m, n, s_count(m, n, s_formula, tables), c_count(m, n, c_formula, tables),
        f"{s_formula}/{c_formula}",
    )


def enumerate_subgroups(m: int, n: int, cap: int = ORACLE_CAP) -> tuple[int, int]:
    """Count subgroups of Z_m x Z_n by explicit construction.

    A subset is a bitmask over element codes a*n + b. The cyclic subgroup of
    each element is built by repeated addition; every subgroup is
    <g> + <h> for two cyclic subgroups, closed by repeatedly doubling the
    translate set A + {0..j-1}h. Distinct bitmasks are distinct subgroups.
    """
    _check_args(m, n)
    order = m * n
    if order > cap:
        raise SizeError(f"m*n = {order} exceeds oracle cap {cap}")

    full = (1 << order) - 1
    row = (1 << n) - 1
    row_pattern = sum(1 << (r * n) for r in range(m))
    # keep[hb]: in-row bits >= hb; wrap[hb]: in-row bits < hb
    keep = [row_pattern * (row & ~((1 << hb) - 1)) for hb in range(n)]
    wrap = [row_pattern * ((1 << hb) - 1) for hb in range(n)]

    def translate(mask: int, ha: int, hb: int) -> int:
        if hb:
            mask = ((mask << hb) & keep[hb]) | ((mask >> (n - hb)) & wrap[hb])
        if ha:
            shift = ha * n
            mask = ((mask << shift) | (mask >> (order - shift))) & full
        return mask

    cyclic: list[tuple[int, int, int]] = []  # (mask, a, b) of one generator
    seen = 0
    for a in range(m):
        for b in range(n):
            if (seen >> (a * n + b)) & 1:
                continue
            multiples = [(0, 0)]
            ca, cb = a, b
            while ca or cb:
                multiples.append((ca, cb))
                ca, cb = (ca + a) % m, (cb + b) % n
            mask = 0
            for xa, xb in multiples:
                mask |= 1 << (xa * n + xb)
            k_order = len(multiples)
            # k*g generates the same cyclic subgroup when gcd(k, |g|) = 1
            for k in range(1, k_order):
                if math.gcd(k, k_order) == 1:
                    xa, xb = multiples[k]
                    seen |= 1 << (xa * n + xb)
            cyclic.append((mask, a, b))

    subgroups = {c[0] for c in cyclic}
    for i, (A, ga, gb) in enumerate(cyclic):
        for B, ha, hb in cyclic[i + 1:]:
            if (A >> (ha * n + hb)) & 1 or (B >> (ga * n + gb)) & 1:
                continue
            # H = A + {0..j-1}h with (sa, sb) = j*h; once j*h is in H the
            # index of A in A + <h> is at most j, so H is closed.
            H = A
            sa, sb = ha, hb
            while not (H >> (sa * n + sb)) & 1:
                H |= translate(H, sa, sb)
                sa, sb = 2 * sa % m, 2 * sb % n
            subgroups.add(H)
    return len(subgroups), len(cyclic)
