"""Small integer number theory helpers (desk scale, exact arithmetic only)."""

from .errors import NotPrimePower


def is_prime(n: int) -> bool:
    """Primality by trial division; adequate for the desk-scale ranges used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {prime: exponent} by trial division. Requires n >= 1."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def prime_power_decompose(q: int) -> tuple[int, int]:
    """Write q = p^s with p prime, s >= 1, or raise NotPrimePower."""
    if q >= 2:
        factors = factorize(q)
        if len(factors) == 1:
            ((p, s),) = factors.items()
            return p, s
    raise NotPrimePower(f"not a prime power: {q}")


def is_prime_power(q: int) -> bool:
    try:
        prime_power_decompose(q)
    except NotPrimePower:
        return False
    return True


def primes_upto(bound: int) -> list[int]:
    return [n for n in range(2, bound + 1) if is_prime(n)]


def prime_powers_upto(bound: int) -> list[int]:
    return [n for n in range(2, bound + 1) if is_prime_power(n)]
