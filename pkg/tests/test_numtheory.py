from math import gcd

import pytest
from hypothesis import given, strategies as st

from powergraph.errors import PreconditionViolated
from powergraph.numtheory import divisors, euler_phi, factorize, is_prime, phi_divides, prime_power


def phi_brute(m):
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


def test_phi_examples():
    assert euler_phi(15) == 8
    assert euler_phi(1) == 1
    assert euler_phi(24) == 8


def test_phi_matches_gcd_count():
    for m in range(1, 500):
        assert euler_phi(m) == phi_brute(m)


def test_divisor_sum_identity():
    for n in range(1, 10_001):
        assert sum(euler_phi(d) for d in divisors(n)) == n


def test_phi_one_and_parity():
    for m in range(1, 2000):
        v = euler_phi(m)
        assert (v == 1) == (m in (1, 2))
        assert (v % 2 == 1) == (v == 1)


def test_phi_divides_examples():
    assert phi_divides(3, 6) == (True, True)
    assert phi_divides(5, 5) == (True, True)
    assert phi_divides(2, 8) == (True, False)
    with pytest.raises(PreconditionViolated):
        phi_divides(3, 8)


def test_phi_divides_equality_cases():
    for n in range(1, 400):
        for m in divisors(n):
            div, eq = phi_divides(m, n)
            assert div and euler_phi(n) % euler_phi(m) == 0
            assert eq == (euler_phi(m) == euler_phi(n))
            assert eq == (m == n or (m % 2 == 1 and n == 2 * m))


def test_factorize_examples():
    assert factorize(1) == []
    assert factorize(12) == [(2, 2), (3, 1)]
    assert factorize(27) == [(3, 3)]


@given(st.integers(min_value=1, max_value=10**7))
def test_factorize_reassembles(m):
    fs = factorize(m)
    prod = 1
    for p, e in fs:
        assert is_prime(p) and e >= 1
        prod *= p**e
    assert prod == m
    assert [p for p, _ in fs] == sorted({p for p, _ in fs})


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(12) is None
    assert prime_power(1) is None
    assert prime_power(7) == (7, 1)
