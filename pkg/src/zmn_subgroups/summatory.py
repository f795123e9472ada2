"""Summatory functions over the hyperbolic region mn <= x.

    D_s(x)  = sum_{mn<=x} s(m,n)          D~_s(x) = sum_{mn<=x} s(m,n) log(x/mn)

(and likewise for c). NAIVE walks every pair (m, n). REDUCED uses
s(m,n) = sum_{d | (m,n)} d tau(mn/d^2) and #{(m,n): mn = k} = tau(k):

    D_s(x)  = sum_{d <= sqrt x} d      T(x/d^2),   T(y) = sum_{k<=y} tau(k)^2

with phi(d) in place of d for c, and the weighted sums use
K(y, C) = sum_{k<=y} tau(k)^2 (C - log k) with C = log x - 2 log d.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .arith import INT64_MAX, ArithTables, build_tables, check_int64
from .constants import DEFAULT_DIGITS, zeta_real
from .errors import CountOverflowError, DomainError, SizeError
from .groups import c_count, mu_conv_phi, s_count

SEGMENT_SIZE = 1 << 22
NAIVE_CAP = 10**6
REDUCED_CAP = 10**11
DIRICHLET_CAP = 10**6


@dataclass(frozen=True)
class SummatoryResult:
    x: float
    variant: str
    weighted: bool
    value: int | float
    algorithm: str
    elapsed: float


def _check_variant(variant: str) -> None:
    if variant not in ("s", "c"):
        raise DomainError(f"variant must be 's' or 'c', got {variant!r}")


def tau_square_prefix(queries, want_logs: bool = True,
                      segment: int = SEGMENT_SIZE) -> tuple[np.ndarray, np.ndarray]:
    """T(y) and sum_{k<=y} tau(k)^2 log k at each (integer) query point, one sieve pass."""
    q = np.asarray(queries, dtype=np.int64)
    if q.size and q.min() < 0:
        raise DomainError("query points must be non-negative")
    order = np.argsort(q, kind="stable")
    counts, logs, overflow = _kernels.tau_square_prefix(q[order], segment, want_logs)
    if overflow:
        raise CountOverflowError("sum of tau(k)^2 left the 64-bit range")
    out_c = np.empty_like(counts)
    out_l = np.empty_like(logs)
    out_c[order] = counts
    out_l[order] = logs
    return out_c, out_l


def tau_square_sum(y) -> int:
    """sum_{k <= floor(y)} tau(k)^2."""
    if y < 0:
        raise DomainError(f"tau_square_sum needs y >= 0, got {y}")
    top = int(math.floor(y))
    if top > REDUCED_CAP:
        raise SizeError(f"y = {top} exceeds sieve cap {REDUCED_CAP}")
    if top == 0:
        return 0
    counts, _ = tau_square_prefix([top], want_logs=False)
    return int(counts[0])


def weighted_kernel(y, C: float) -> float:
    """sum_{k <= y} tau(k)^2 (C - log k)."""
    if y < 1:
        raise DomainError(f"weighted_kernel needs y >= 1, got {y}")
    top = int(math.floor(y))
    if top > REDUCED_CAP:
        raise SizeError(f"y = {top} exceeds sieve cap {REDUCED_CAP}")
    counts, logs = tau_square_prefix([top])
    return math.fsum([C * float(counts[0]), -float(logs[0])])


def _phi_upto(n: int) -> np.ndarray:
    return build_tables(max(n, 1)).phi


def _reduced(variant: str, weighted: bool, x: float):
    top = int(math.floor(x))
    dmax = math.isqrt(top)
    d = np.arange(1, dmax + 1, dtype=np.int64)
    ys = top // (d * d)
    counts, logs = tau_square_prefix(ys, want_logs=weighted)
    if variant == "s":
        w = [int(v) for v in d]
    else:
        w = [int(v) for v in _phi_upto(dmax)[1:dmax + 1]]
    if not weighted:
        total = sum(wi * int(ci) for wi, ci in zip(w, counts))
        return check_int64(total, f"D_{variant}({x})")
    logx = math.log(x)
    terms = []
    for di, wi, ci, li in zip(d.tolist(), w, counts.tolist(), logs.tolist()):
        C = logx - 2 * math.log(di)
        terms.append(wi * C * ci)
        terms.append(-wi * li)
    return math.fsum(terms)


def _naive(variant: str, weighted: bool, x: float, tables: ArithTables | None):
    top = int(math.floor(x))
    if tables is None or tables.limit < top:
        tables = build_tables(max(top, 1))
    dmax = math.isqrt(top)
    if variant == "s":
        weights = np.asarray(tables.phi[: dmax + 1], dtype=np.int64)
    else:
        weights = np.zeros(dmax + 1, dtype=np.int64)
        for k in range(1, dmax + 1):
            weights[k] = mu_conv_phi(k, tables)
    tau = np.asarray(tables.tau, dtype=np.int64)
    total, wsum = _kernels.naive_region_sum(float(x), weighted, tau, weights)
    if total >= INT64_MAX // 2:
        raise CountOverflowError(f"naive sum at x = {x} near the 64-bit limit")
    return float(wsum) if weighted else int(total)


def summatory(variant: str, weighted: bool, x, algo: str = "reduced",
              tables: ArithTables | None = None) -> SummatoryResult:
    _check_variant(variant)
    if not x >= 1:
        raise DomainError(f"x must be >= 1, got {x}")
    algo = algo.lower()
    start = time.perf_counter()
    if algo == "naive":
        if x > NAIVE_CAP:
            raise SizeError(f"x = {x} exceeds the naive cap {NAIVE_CAP}")
        value = _naive(variant, weighted, float(x), tables)
    elif algo == "reduced":
        if x > REDUCED_CAP:
            raise SizeError(f"x = {x} exceeds the sieve cap {REDUCED_CAP}")
        value = _reduced(variant, weighted, float(x))
    else:
        raise DomainError(f"unknown algorithm {algo!r}; expected naive or reduced")
    return SummatoryResult(float(x), variant, weighted, value, algo.upper(),
                           time.perf_counter() - start)


def coefficient_sums(variant: str, top: int, tables: ArithTables | None = None) -> list[int]:
    """a(k) = sum_{mn = k} s(m,n) (or c) for k = 0..top, by explicit pairs."""
    _check_variant(variant)
    if tables is None or tables.limit < top:
        tables = build_tables(max(top, 1))
    count = s_count if variant == "s" else c_count
    a = [0] * (top + 1)
    for m in range(1, top + 1):
        for n in range(1, top // m + 1):
            a[m * n] += count(m, n, tables=tables)
    return a


def integrated_plain_sum(variant: str, x, tables: ArithTables | None = None) -> float:
    """int_1^x D(t)/t dt, integrating the step function D piece by piece."""
    if not x >= 1:
        raise DomainError(f"x must be >= 1, got {x}")
    top = int(math.floor(x))
    a = coefficient_sums(variant, top, tables)
    pieces = []
    running = 0
    for k in range(1, top + 1):
        running += a[k]
        upper = math.log(x) if k == top else math.log(k + 1)
        pieces.append(running * (upper - math.log(k)))
    return math.fsum(pieces)


def dirichlet_truncation(variant: str, z: float, w: float, N: int,
                         tables: ArithTables | None = None,
                         digits: int = DEFAULT_DIGITS) -> tuple[float, float]:
    """Partial double Dirichlet sum over mn <= N against the zeta-product closed form."""
    _check_variant(variant)
    if not (z > 1 and w > 1):
        raise DomainError(f"need z > 1 and w > 1, got z={z}, w={w}")
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    if N > DIRICHLET_CAP:
        raise SizeError(f"N = {N} exceeds cap {DIRICHLET_CAP}")
    if tables is None or tables.limit < N:
        tables = build_tables(N)
    count = s_count if variant == "s" else c_count
    terms = []
    for m in range(1, N + 1):
        mz = m ** -z
        for n in range(1, N // m + 1):
            terms.append(count(m, n, tables=tables) * mz * n ** -w)
    partial = math.fsum(terms)
    zz, zw = zeta_real(z, digits), zeta_real(w, digits)
    num = zz**2 * zw**2 * zeta_real(z + w - 1, digits)
    den = zeta_real(z + w, digits) ** (1 if variant == "s" else 2)
    return partial, float(num / den)
