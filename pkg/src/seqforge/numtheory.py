"""Small integer helpers. Inputs here are desk-sized, so trial division is fine."""

from __future__ import annotations

from .errors import DomainError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_generator(a: int, p: int) -> bool:
    """True iff ``a`` generates the multiplicative group of Z_p (p prime)."""
    if a % p == 0:
        return False
    return all(pow(a, (p - 1) // q, p) != 1 for q in prime_factors(p - 1))


def legendre_symbol(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def require_prime(n: int, what: str = "n") -> None:
    if not is_prime(n):
        raise DomainError(f"{what}={n} is not prime")
