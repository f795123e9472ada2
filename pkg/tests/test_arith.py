import math

import pytest
from hypothesis import given, strategies as st

from zmn_subgroups.arith import (
    TABLE_LIMIT_CAP,
    build_tables,
    divisors,
    factorize,
    gcd,
    mu_point,
    phi_point,
    tau_point,
)
from zmn_subgroups.errors import DomainError, SizeError


def brute_tau(n):
    return sum(1 for d in range(1, n + 1) if n % d == 0)


def brute_phi(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_tiny_table():
    t = build_tables(1)
    assert list(t.tau[1:]) == [1]
    assert t.phi[1] == t.mu[1] == 1


def test_spot_values():
    assert build_tables(12).tau[12] == brute_tau(12) == 6
    assert build_tables(10).phi[10] == brute_phi(10) == 4


def test_point_values():
    assert tau_point(1) == 1
    assert mu_point(4) == 0
    assert phi_point(36) == brute_phi(36) == 12


@pytest.mark.parametrize("bad", [0, TABLE_LIMIT_CAP + 1])
def test_table_size_errors(bad):
    with pytest.raises(SizeError):
        build_tables(bad)


@pytest.mark.parametrize("fn", [tau_point, phi_point, mu_point])
def test_point_domain(fn):
    with pytest.raises(DomainError):
        fn(0)


def test_gcd():
    assert gcd(1, 17) == 1
    assert gcd(4, 6) == 2
    assert gcd(9, 9) == 9
    with pytest.raises(DomainError):
        gcd(0, 3)


def test_prime_values():
    t = build_tables(2000)
    for p in range(2, 2001):
        if all(p % q for q in range(2, math.isqrt(p) + 1)):
            assert (t.tau[p], t.phi[p], t.mu[p]) == (2, p - 1, -1)


def test_divisor_sum_identities():
    limit = 20_000
    t = build_tables(limit)
    phi_sums = [0] * (limit + 1)
    mu_sums = [0] * (limit + 1)
    for d in range(1, limit + 1):
        for k in range(d, limit + 1, d):
            phi_sums[k] += int(t.phi[d])
            mu_sums[k] += int(t.mu[d])
    assert phi_sums[1:] == list(range(1, limit + 1))
    assert mu_sums[1:] == [1] + [0] * (limit - 1)


def test_points_agree_with_tables():
    t = build_tables(3000)
    for n in range(1, 3001):
        assert (tau_point(n), phi_point(n), mu_point(n)) == (t.tau[n], t.phi[n], t.mu[n])


def test_table_divisors_and_fallback():
    t = build_tables(1000)
    assert t.divisors(360) == divisors(360) == [d for d in range(1, 361) if 360 % d == 0]
    big = 2**5 * 3**3 * 10007
    assert t.divisors(big) == divisors(big)
    assert t.tau_of(big) == 6 * 4 * 2
    assert factorize(big) == [(2, 5), (3, 3), (10007, 1)]


def test_tables_read_only():
    t = build_tables(10)
    with pytest.raises(ValueError):
        t.tau[3] = 7


@given(st.integers(1, 5000), st.integers(1, 5000))
def test_multiplicative(a, b):
    if math.gcd(a, b) != 1:
        return
    assert tau_point(a * b) == tau_point(a) * tau_point(b)
    assert phi_point(a * b) == phi_point(a) * phi_point(b)
    assert mu_point(a * b) == mu_point(a) * mu_point(b)
