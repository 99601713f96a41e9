import math

import pytest


def residues(f: int) -> list[int]:
    return [a for a in range(1, f + 1) if math.gcd(a, f) == 1]


def brute_order(g: int, p: int) -> int:
    """Multiplicative order by repeated multiplication (independent oracle)."""
    v = g % p
    assert v != 0
    order = 1
    while v != 1:
        v = v * g % p
        order += 1
    return order


def admissible_bases(lo: int, hi: int) -> list[int]:
    """Bases in [lo, hi] that are neither 0, -1 nor a perfect square."""
    out = []
    for g in range(lo, hi + 1):
        if g in (-1, 0, 1):
            continue
        if g > 1 and math.isqrt(g) ** 2 == g:
            continue
        out.append(g)
    return out


@pytest.fixture(scope="session")
def small_primes() -> list[int]:
    from sympy import primerange

    return list(primerange(2, 10**4))
