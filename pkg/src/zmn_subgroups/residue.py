"""Truncated Laurent series around s = 1 and the main-term coefficients.

Series are in u = s - 1. The residue at s = 1 of F(s) x^s, with
x^s = x * exp(u log x), is x * sum_j c_{-1-j} (log x)^j / j!, so the
main-term polynomial coefficients are B_j = c_{-1-j} / j!.

Three routes produce B_0..B_4:

* SERIES      pure series arithmetic from the constants bank;
* CLOSED_FORM the published closed forms for the weighted s-variant;
* G_DERIV     published derivatives of g(s,x) = x^s s^-2 zeta(2s)^-1 at
              s = 1, combined with the Laurent coefficients of
              f(s) = zeta(s)^4 zeta(2s-1).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .constants import ConstantsBank, MAX_ORDER, build_bank
from .errors import DomainError, PrecisionError, SingularityError, UnsupportedOrderError

TAYLOR_ORDER = 6
ROUTES = ("series", "closedform", "gderiv")


@dataclass(frozen=True)
class TruncatedLaurent:
    """sum_{j=-pole_order}^{order} coeffs[j + pole_order] u^j + O(u^(order+1))."""

    pole_order: int
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError("a truncated series needs at least one coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1 - self.pole_order

    def coeff(self, power: int):
        if power > self.order:
            raise UnsupportedOrderError(f"power {power} beyond truncation order {self.order}")
        idx = power + self.pole_order
        return self.coeffs[idx] if idx >= 0 else mpmath.mpf(0)

    def __mul__(self, other: TruncatedLaurent) -> TruncatedLaurent:
        return series_mul(self, other)

    def __pow__(self, k: int) -> TruncatedLaurent:
        return series_pow(self, k)


def taylor(coeffs) -> TruncatedLaurent:
    return TruncatedLaurent(0, tuple(coeffs))


def series_mul(a: TruncatedLaurent, b: TruncatedLaurent) -> TruncatedLaurent:
    # relative lengths: the product is known as far as the shorter factor
    n = min(len(a.coeffs), len(b.coeffs))
    out = [mpmath.fsum(a.coeffs[i] * b.coeffs[k - i] for i in range(k + 1)) for k in range(n)]
    return TruncatedLaurent(a.pole_order + b.pole_order, tuple(out))


def series_inverse(a: TruncatedLaurent) -> TruncatedLaurent:
    lead = a.coeffs[0]
    if lead == 0:
        raise SingularityError("cannot invert a series with zero leading coefficient")
    n = len(a.coeffs)
    out = [1 / lead]
    for k in range(1, n):
        out.append(-mpmath.fsum(a.coeffs[i] * out[k - i] for i in range(1, k + 1)) / lead)
    return TruncatedLaurent(-a.pole_order, tuple(out))


def series_pow(a: TruncatedLaurent, k: int) -> TruncatedLaurent:
    if k < 0:
        return series_pow(series_inverse(a), -k)
    result = TruncatedLaurent(0, (mpmath.mpf(1),) * 1 + (mpmath.mpf(0),) * (len(a.coeffs) - 1))
    for _ in range(k):
        result = series_mul(result, a)
    return result


def scale_argument(a: TruncatedLaurent, c) -> TruncatedLaurent:
    """Series of F(1 + c u) from that of F(1 + u)."""
    return TruncatedLaurent(
        a.pole_order,
        tuple(x * mpmath.mpf(c) ** (i - a.pole_order) for i, x in enumerate(a.coeffs)),
    )


def zeta_laurent_at_1(K: int, bank: ConstantsBank) -> TruncatedLaurent:
    """zeta(1+u) = 1/u + sum_j (-1)^j gamma_j / j! u^j through u^K."""
    if K < 0 or K > MAX_ORDER:
        raise UnsupportedOrderError(f"zeta Laurent order {K} unsupported (0..{MAX_ORDER})")
    with mpmath.workdps(bank.dps):
        coeffs = [mpmath.mpf(1)] + [
            (-1) ** j * bank.gamma[j] / math.factorial(j) for j in range(K + 1)
        ]
    return TruncatedLaurent(1, tuple(coeffs))


def zeta_2s_taylor(bank: ConstantsBank, order: int = MAX_ORDER) -> TruncatedLaurent:
    """zeta(2 + 2u) = sum_j zeta^(j)(2) 2^j / j! u^j."""
    order = min(order, MAX_ORDER)
    with mpmath.workdps(bank.dps):
        return taylor(bank.zeta2_derivs[j] * 2**j / math.factorial(j) for j in range(order + 1))


def inverse_power_taylor(w: int, order: int = TAYLOR_ORDER) -> TruncatedLaurent:
    """s^-w = (1+u)^-w = sum_j (-1)^j C(w-1+j, j) u^j."""
    return taylor(mpmath.mpf((-1) ** j * math.comb(w - 1 + j, j)) for j in range(order + 1))


def f_laurent(bank: ConstantsBank, K: int = MAX_ORDER) -> TruncatedLaurent:
    """zeta(s)^4 zeta(2s-1) around s = 1 (pole of order 5)."""
    if bank.digits < 30:
        raise PrecisionError(f"f expansion needs a bank of >= 30 digits, got {bank.digits}")
    z = zeta_laurent_at_1(K, bank)
    with mpmath.workdps(bank.dps):
        return series_pow(z, 4) * scale_argument(z, 2)


def f_printed_coefficients(bank: ConstantsBank) -> list:
    """Published closed forms of the u^-5 .. u^0 coefficients of f, in that order."""
    g0, g1, g2, g3, g4 = bank.gamma
    with mpmath.workdps(bank.dps):
        return [
            mpmath.mpf(1) / 2,
            3 * g0,
            7 * g0**2 - 4 * g1,
            8 * g0**3 - 18 * g0 * g1 + 3 * g2,
            mpmath.mpf(9) / 2 * g0**4 - 30 * g0**2 * g1 + 11 * g1**2 + 13 * g0 * g2
            - mpmath.mpf(5) / 3 * g3,
            g0**5 - 22 * g0**3 * g1 + 36 * g0 * g1**2 + 21 * g0**2 * g2 - 15 * g1 * g2
            - 7 * g0 * g3 + mpmath.mpf(3) / 4 * g4,
        ]


@dataclass(frozen=True)
class MainTermPolynomial:
    variant: str
    weight_order: int
    coeffs: tuple  # B_0 .. B_4
    route: str

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def value(self, x):
        """x * sum_r B_r (log x)^r, in mpmath at the coefficients' precision."""
        with mpmath.workdps(max(mpmath.mp.dps, 40)):
            x = mpmath.mpf(x)
            return x * mpmath.polyval(list(self.coeffs)[::-1], mpmath.log(x))

    def float_coeffs(self) -> list[float]:
        return [float(c) for c in self.coeffs]


def _check_variant(variant: str, weight_order: int) -> None:
    if variant not in ("s", "c"):
        raise DomainError(f"variant must be 's' or 'c', got {variant!r}")
    if weight_order not in (1, 2):
        raise DomainError(f"weight order must be 1 or 2, got {weight_order}")


def main_term_coefficients(variant: str, weight_order: int,
                           bank: ConstantsBank | None = None) -> MainTermPolynomial:
    """B_0..B_4 for x^s / s^w against zeta^4(s) zeta(2s-1) / zeta^k(2s), k = 1 (s) or 2 (c)."""
    _check_variant(variant, weight_order)
    bank = bank or build_bank()
    k = 1 if variant == "s" else 2
    with mpmath.workdps(bank.dps):
        H = (
            f_laurent(bank)
            * inverse_power_taylor(weight_order)
            * series_pow(series_inverse(zeta_2s_taylor(bank)), k)
        )
        B = tuple(H.coeff(-1 - j) / math.factorial(j) for j in range(5))
    return MainTermPolynomial(variant, weight_order, B, "SERIES")


def closed_form_B_weighted_s(bank: ConstantsBank | None = None) -> MainTermPolynomial:
    """The published closed forms of B_0..B_4 for the log-weighted s-variant."""
    bank = bank or build_bank()
    g0, g1, g2, g3, _ = bank.gamma
    _, z1, z2, z3, z4 = bank.zeta2_derivs
    with mpmath.workdps(bank.dps):
        pi = mpmath.pi
        B4 = 1 / (8 * pi**2)
        B3 = (3 * g0 - 1) / pi**2 - 6 / pi**4 * z1
        B2 = (
            -18 / pi**4 * z2 + 216 / pi**6 * z1**2 + 36 / pi**4 * (-3 * g0 + 1) * z1
            + 3 / (2 * pi**2) * (3 + 14 * g0**2 - 12 * g0 - 8 * g1)
        )
        B1 = (
            -5184 / pi**8 * z1**3
            + 864 / pi**6 * z1 * (-z1 + 3 * g0 * z1 + z2)
            - 12 / pi**4 * (42 * g0**2 * z1 + z1 * (9 - 24 * g1) - 6 * z2
                            + 18 * g0 * (-2 * z1 + z2) + 2 * z3)
            + 6 / pi**2 * (8 * g0**3 - 14 * g0**2 + 9 * g0 - 18 * g0 * g1 + 8 * g1 + 3 * g2 - 2)
        )
        B0 = (
            1 / pi**2 * (15 - 96 * g0**3 + 27 * g0**4 - 72 * g1 + 66 * g1**2
                         - 18 * g0**2 * (-7 + 10 * g1) - 36 * g2)
            + 1 / pi**2 * (6 * g0 * (-12 + 36 * g1 + 13 * g2) - 10 * g3)
            - 5184 / pi**8 * z1**2 * (-2 * z1 + 6 * g0 * z1 + 3 * z2)
            - 12 / pi**4 * (48 * g0**3 * z1 + 6 * (-2 + 8 * g1 + 3 * g2) * z1 + 9 * z2
                            - 24 * g1 * z2 + 42 * g0**2 * (-2 * z1 + z2))
            + 12 / pi**4 * (6 * g0 * (9 * (-1 + 2 * g1) * z1 + 6 * z2 - 2 * z3)
                            + 4 * z3 - z4)
            + 144 / pi**6 * (42 * g0**2 * z1**2 + (9 - 24 * g1) * z1**2
                             - 36 * g0 * z1 * (z1 - z2) + 3 * z2**2)
            + 144 / pi**6 * (4 * z1 * (-3 * z2 + z3))
            + 62208 / pi**10 * z1**4
        )
    return MainTermPolynomial("s", 2, (B0, B1, B2, B3, B4), "CLOSED_FORM")


# g(s, x) = x^s s^-2 zeta(2s)^-1; its i-th s-derivative at s = 1 is x * P_i(log x).

def g_polynomials_series(bank: ConstantsBank) -> list[list]:
    """Coefficient lists (ascending in log x) of P_0..P_4 from series arithmetic."""
    with mpmath.workdps(bank.dps):
        h = inverse_power_taylor(2) * series_inverse(zeta_2s_taylor(bank))
        # x^(1+u) = x sum_b (u log x)^b / b!, so P_i = i! sum_b h_{i-b} L^b / b!
        return [
            [math.factorial(i) * h.coeff(i - b) / math.factorial(b) for b in range(i + 1)]
            for i in range(5)
        ]


def g_polynomials_printed(bank: ConstantsBank) -> list[list]:
    """Coefficient lists (ascending in log x) of the published g-derivative displays."""
    z0, z1, z2, z3, z4 = bank.zeta2_derivs
    with mpmath.workdps(bank.dps):
        pi = mpmath.pi
        lead = 6 / pi**2
        P0 = [1 / z0]
        P1 = [-12 / pi**4 * (6 * z1 + pi**2), lead]
        P2 = [
            36 / pi**6 * (48 * z1**2 + 4 * pi**2 * (2 * z1 - z2) + pi**4),
            -24 / pi**4 * (6 * z1 + pi**2),
            lead,
        ]
        P3 = [
            -144 / pi**8 * (432 * z1**3 + 72 * pi**2 * z1 * (z1 - z2) + pi**6)
            - 144 / pi**4 * (9 * z1 - 6 * z2 + 2 * z3),
            108 / pi**6 * (48 * z1**2 + 4 * pi**2 * (2 * z1 - z2) + pi**4),
            -36 / pi**4 * (6 * z1 + pi**2),
            lead,
        ]
        P4 = [
            144 / pi**10 * (20736 * z1**4 + 1728 * pi**2 * z1**2 * (2 * z1 - 3 * z2) + 5 * pi**8)
            + 6912 / pi**6 * (3 * z2**2 + 9 * z1**2 - 4 * z1 * (3 * z2 - z3))
            + 576 / pi**4 * (-z4 + 4 * z3 - 9 * z2 + 12 * z1),
            576 / pi**8 * (-432 * z1**3 + 72 * pi**2 * z1 * z2 - 72 * pi**2 * z1**2 - pi**6)
            + 576 / pi**4 * (-2 * z3 - 9 * z1 + 6 * z2),
            216 / pi**6 * (-4 * pi**2 * z2 + 48 * z1**2 + 8 * pi**2 * z1 + pi**4),
            -48 / pi**4 * (pi**2 + 6 * z1),
            lead,
        ]
    return [P0, P1, P2, P3, P4]


def g_derivatives(x, bank: ConstantsBank | None = None, route: str = "printed") -> list:
    """Values g^(i)(1, x), i = 0..4."""
    if not x > 1:
        raise DomainError(f"g derivatives need x > 1, got {x}")
    bank = bank or build_bank()
    if route == "printed":
        polys = g_polynomials_printed(bank)
    elif route == "series":
        polys = g_polynomials_series(bank)
    else:
        raise DomainError(f"unknown g route {route!r}")
    with mpmath.workdps(bank.dps):
        x = mpmath.mpf(x)
        L = mpmath.log(x)
        return [x * mpmath.polyval(p[::-1], L) for p in polys]


def g_route_B(bank: ConstantsBank | None = None) -> MainTermPolynomial:
    """B_r = sum_k a_{-k} [L^r] P_{k-1} / (k-1)! with a from f and P from the g displays."""
    bank = bank or build_bank()
    f = f_laurent(bank)
    polys = g_polynomials_printed(bank)
    with mpmath.workdps(bank.dps):
        B = []
        for r in range(5):
            B.append(mpmath.fsum(
                f.coeff(-k) * polys[k - 1][r] / math.factorial(k - 1)
                for k in range(r + 1, 6)
            ))
    return MainTermPolynomial("s", 2, tuple(B), "G_DERIV")


def residue_via_g(x, bank: ConstantsBank | None = None, route: str = "printed"):
    """Res_{s=1} f(s) g(s, x) = sum_{k=1}^{5} a_{-k} g^(k-1)(1, x) / (k-1)!."""
    bank = bank or build_bank()
    f = f_laurent(bank)
    gd = g_derivatives(x, bank, route)
    with mpmath.workdps(bank.dps):
        return mpmath.fsum(f.coeff(-k) * gd[k - 1] / math.factorial(k - 1) for k in range(1, 6))


def coefficients(variant: str, weight_order: int, route: str = "series",
                 bank: ConstantsBank | None = None) -> MainTermPolynomial:
    """Dispatch on route; the two audit routes only exist for the weighted s-variant."""
    _check_variant(variant, weight_order)
    if route == "series":
        return main_term_coefficients(variant, weight_order, bank)
    if route not in ROUTES:
        raise DomainError(f"unknown route {route!r}; expected one of {ROUTES}")
    if (variant, weight_order) != ("s", 2):
        raise DomainError(f"route {route!r} is only available for variant s, weight order 2")
    return closed_form_B_weighted_s(bank) if route == "closedform" else g_route_B(bank)


def relative_difference(u, v):
    scale = max(abs(u), abs(v))
    return abs(u - v) / scale if scale else abs(u - v)
