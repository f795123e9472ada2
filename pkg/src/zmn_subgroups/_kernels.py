"""Compiled inner loops (numba).

Everything here works on plain numpy arrays and scalars; validation and
error translation live in the calling modules.
"""
from __future__ import annotations

import math

import numpy as np
from numba import njit

INT64_SAFE = 2**62


@njit(cache=True, nogil=True)
def linear_sieve(limit):
    spf = np.zeros(limit + 1, dtype=np.int32)
    tau = np.zeros(limit + 1, dtype=np.int32)
    phi = np.zeros(limit + 1, dtype=np.int64)
    mu = np.zeros(limit + 1, dtype=np.int8)
    # exponent of the smallest prime in n
    expo = np.zeros(limit + 1, dtype=np.int8)
    primes = np.empty(limit // 2 + 16, dtype=np.int32)
    nprimes = 0
    tau[1] = 1
    phi[1] = 1
    mu[1] = 1
    for i in range(2, limit + 1):
        if spf[i] == 0:
            spf[i] = i
            primes[nprimes] = i
            nprimes += 1
            tau[i] = 2
            phi[i] = i - 1
            mu[i] = -1
            expo[i] = 1
        for j in range(nprimes):
            p = primes[j]
            ip = i * p
            if p > spf[i] or ip > limit:
                break
            spf[ip] = p
            if p == spf[i]:
                e = expo[i]
                expo[ip] = e + 1
                tau[ip] = tau[i] // (e + 1) * (e + 2)
                phi[ip] = phi[i] * p
                mu[ip] = 0
            else:
                expo[ip] = 1
                tau[ip] = tau[i] * 2
                phi[ip] = phi[i] * (p - 1)
                mu[ip] = -mu[i]
    return spf, tau, phi, mu


@njit(cache=True, nogil=True)
def tau_square_prefix(queries, seg_size, want_logs):
    """Prefix sums of tau(k)^2 (and tau(k)^2 log k) at ascending query points.

    Segmented divisor-pair sieve: within [lo, hi] each d <= sqrt(hi) adds 2 to
    every multiple d*q with q > d and 1 to d*d.
    """
    nq = queries.shape[0]
    counts = np.zeros(nq, dtype=np.int64)
    logs = np.zeros(nq, dtype=np.float64)
    overflow = False
    if nq == 0:
        return counts, logs, overflow
    top = queries[nq - 1]
    tau = np.zeros(seg_size, dtype=np.int32)
    total = np.int64(0)
    s = 0.0
    comp = 0.0
    qi = 0
    while qi < nq and queries[qi] < 1:
        qi += 1
    lo = np.int64(1)
    while lo <= top:
        hi = min(lo + seg_size - 1, top)
        width = hi - lo + 1
        for i in range(width):
            tau[i] = 0
        d = np.int64(1)
        while d * d <= hi:
            q0 = (lo + d - 1) // d
            if q0 <= d:
                sq = d * d
                if sq >= lo:
                    tau[sq - lo] += 1
                m = sq + d
            else:
                m = q0 * d
            while m <= hi:
                tau[m - lo] += 2
                m += d
            d += 1
        for i in range(width):
            t = np.int64(tau[i])
            total += t * t
            if want_logs:
                term = t * t * math.log(lo + i)
                # Neumaier compensated sum
                u = s + term
                if abs(s) >= abs(term):
                    comp += (s - u) + term
                else:
                    comp += (term - u) + s
                s = u
            while qi < nq and queries[qi] == lo + i:
                counts[qi] = total
                logs[qi] = s + comp
                qi += 1
        if total > INT64_SAFE:
            overflow = True
            break
        lo = hi + 1
    return counts, logs, overflow


@njit(cache=True, nogil=True)
def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True, nogil=True)
def naive_region_sum(x, weighted, tau, weights):
    """Sum over mn <= floor(x) of sum_{d | gcd(m,n)} weights[d] tau(m/d) tau(n/d).

    With weights = phi this is s(m,n); with weights = mu*phi it is c(m,n).
    Returns (integer total, compensated float total of the log-weighted sum).
    """
    top = np.int64(math.floor(x))
    total = np.int64(0)
    s = 0.0
    comp = 0.0
    for m in range(1, top + 1):
        nmax = top // m
        for n in range(1, nmax + 1):
            g = _gcd(m, n)
            val = np.int64(0)
            for d in range(1, g + 1):
                if g % d == 0:
                    val += weights[d] * tau[m // d] * tau[n // d]
            total += val
            if weighted:
                term = val * math.log(x / (m * n))
                u = s + term
                if abs(s) >= abs(term):
                    comp += (s - u) + term
                else:
                    comp += (term - u) + s
                s = u
    return total, s + comp
