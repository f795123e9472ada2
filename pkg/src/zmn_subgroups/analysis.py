"""Error-term scans for the log-weighted sums against their main terms."""
from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields

import numpy as np

from .errors import DomainError, InsufficientDataError
from .residue import MainTermPolynomial
from .summatory import summatory

CSV_HEADER = ("x", "exact", "main_term", "delta", "normalized_delta", "relative_error")


@dataclass(frozen=True)
class ErrorRecord:
    x: float
    exact: float
    main: float
    delta: float
    normalized: float
    rel_err: float

    @classmethod
    def from_values(cls, x: float, exact: float, main: float) -> ErrorRecord:
        delta = exact - main
        norm = abs(delta) / (math.sqrt(x) * math.log(x)) if x > 1 else math.nan
        return cls(x, exact, main, delta, norm, abs(delta) / main)


def geometric_grid(x_from: float, x_to: float, points_per_decade: int) -> list[float]:
    if points_per_decade < 1:
        raise DomainError(f"points_per_decade must be >= 1, got {points_per_decade}")
    grid = []
    k = 0
    while True:
        x = x_from * 10 ** (k / points_per_decade)
        if x > x_to * (1 + 1e-12):
            break
        grid.append(x)
        k += 1
    return grid


def error_record(variant: str, x: float, coeffs: MainTermPolynomial) -> ErrorRecord:
    exact = summatory(variant, True, x, "reduced").value
    return ErrorRecord.from_values(x, float(exact), float(coeffs.value(x)))


def error_scan(variant: str, x_from: float, x_to: float, points_per_decade: int,
               coeffs: MainTermPolynomial, threads: int | None = None) -> list[ErrorRecord]:
    if not 2 < x_from < x_to:
        raise DomainError(f"need 2 < x_from < x_to, got {x_from}, {x_to}")
    if coeffs.weight_order != 2 or coeffs.variant != variant:
        raise DomainError(
            f"scan of {variant!r} needs weight-order-2 coefficients for the same variant, "
            f"got ({coeffs.variant!r}, {coeffs.weight_order})"
        )
    grid = geometric_grid(x_from, x_to, points_per_decade)
    # sieve kernels release the GIL; map() keeps x-order
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda x: error_record(variant, x, coeffs), grid))


def slope_fit(records, epsilon=None) -> float:
    """Least-squares slope of log|delta| against log x.

    Records with |delta| <= epsilon are dropped; epsilon defaults to
    1e-6 * sqrt(x) per record and may be a number or a callable of x.
    """
    if epsilon is None:
        def keep(r):
            return abs(r.delta) > 1e-6 * math.sqrt(r.x)
    elif callable(epsilon):
        def keep(r):
            return abs(r.delta) > epsilon(r.x)
    else:
        def keep(r):
            return abs(r.delta) > epsilon
    kept = [r for r in records if keep(r)]
    if len(kept) < 5:
        raise InsufficientDataError(f"slope fit needs >= 5 usable records, got {len(kept)}")
    lx = np.log([r.x for r in kept])
    ld = np.log([abs(r.delta) for r in kept])
    slope, _ = np.polyfit(lx, ld, 1)
    return float(slope)


def _fmt(v: float) -> str:
    return format(v, ".15g")


def records_to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow([_fmt(getattr(r, f.name)) for f in fields(ErrorRecord)])
    return buf.getvalue()


def records_from_csv(text: str) -> list[ErrorRecord]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != CSV_HEADER:
        raise DomainError(f"unexpected CSV header {header}")
    return [ErrorRecord(*(float(v) for v in row)) for row in reader if row]
