"""Small integer number theory: primality, trial factoring, divisors."""

from functools import lru_cache

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Miller-Rabin with the first 13 prime bases.

    Deterministic for n < 3.3 * 10**24, which covers every 64-bit value.
    """
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def trial_factor(n: int, bound: int = 10**6):
    """Factor |n| by trial division up to ``bound``.

    Returns ``(factors, cofactor)`` where ``factors`` maps primes to
    exponents and ``cofactor`` is the unfactored remainder (1 if none).
    A cofactor that is itself prime is moved into ``factors``.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    factors = {}
    p = 2
    while p <= bound and p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1 and (n <= bound * bound or is_prime(n)):
        # below bound**2 with no factor <= bound means n is prime
        factors[n] = factors.get(n, 0) + 1
        n = 1
    return factors, n


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple:
    """All positive divisors of n > 0, increasing."""
    if n <= 0:
        raise ValueError("divisors of a non-positive integer")
    factors, rest = trial_factor(n)
    if rest != 1:
        import sympy

        factors = {int(p): e for p, e in sympy.factorint(n).items()}
    divs = [1]
    for p, e in factors.items():
        divs = [q * p**k for q in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def nontrivial_divisors(n: int) -> tuple:
    """Divisors m of n with 1 < m < n."""
    return tuple(m for m in divisors(n) if 1 < m < n)


def sigma(n: int, k: int) -> int:
    """Divisor function: sum of m**k over the divisors m of n."""
    return sum(m**k for m in divisors(n))
