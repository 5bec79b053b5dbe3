"""Small number-theoretic helpers (trial division; desk-scale inputs only)."""

from __future__ import annotations

from math import gcd, isqrt

from .errors import PreconditionViolated


def factorize(m: int) -> list[tuple[int, int]]:
    """Prime factorization of ``m`` as a sorted list of ``(prime, exponent)``.

    >>> factorize(12)
    [(2, 2), (3, 1)]
    >>> factorize(1)
    []
    """
    if m < 1:
        raise ValueError(f"factorize needs m >= 1, got {m}")
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    for d in range(3, isqrt(m) + 1, 2):
        if m % d == 0:
            return False
    return True


def prime_power(m: int):
    """Return ``(p, k)`` when ``m = p**k`` with ``k >= 1``, else None."""
    if m < 2:
        return None
    f = factorize(m)
    if len(f) != 1:
        return None
    return f[0]


def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError(f"euler_phi needs m >= 1, got {m}")
    result = m
    for p, _ in factorize(m):
        result -= result // p
    return result


def phi_divides(m: int, n: int) -> tuple[bool, bool]:
    """For ``m | n`` report ``(phi(m) | phi(n), phi(m) == phi(n))``.

    Equality happens exactly when ``m == n`` or ``m`` is odd and ``n == 2m``.
    """
    if m < 1 or n < 1 or n % m:
        raise PreconditionViolated(f"{m} does not divide {n}")
    a, b = euler_phi(m), euler_phi(n)
    return b % a == 0, a == b


def divisors(m: int) -> list[int]:
    ds = [1]
    for p, e in factorize(m):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def valuation(m: int, p: int) -> int:
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return k


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b
