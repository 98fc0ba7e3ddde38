"""Zolotarev, Legendre and Jacobi symbols plus the arithmetic they lean on.

The Zolotarev symbol ``<a|n>`` is the sign of ``x -> a*x`` on the whole of
Z/nZ (zero is a fixed point). The Legendre symbol has a brute-force
definition (enumerate squares) and Euler's criterion; the Jacobi symbol has
a factor-then-multiply oracle and the usual reciprocity-driven reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import Literal

from .errors import (
    DividesModulus,
    EvenModulus,
    NotCoprime,
    NotPrime,
    ZeroModulus,
)
from .perms import Permutation, Sign, count_cycles

SymbolValue = Literal[-1, 0, 1]

# deterministic Miller-Rabin: these witnesses are exact for n < 3.3 * 10**24
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_TRIAL_DIVISION_LIMIT = 10**6


def mod_pow(base: int, exp: int, n: int) -> int:
    """Square-and-multiply ``base ** exp % n``.

    Python integers are unbounded, so products of two residues never wrap.
    """
    if n < 1:
        raise ZeroModulus("modulus must be positive")
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    result = 1 % n
    base %= n
    while exp:
        if exp & 1:
            result = result * base % n
        base = base * base % n
        exp >>= 1
    return result


def _trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def is_prime(n: int) -> bool:
    if n < _TRIAL_DIVISION_LIMIT:
        return _trial_division_is_prime(n)
    if n % 2 == 0:
        return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = mod_pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorisation by trial division as ``[(prime, exponent), ...]``."""
    if n < 1:
        raise ValueError("can only factor positive integers")
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return factors


@dataclass(frozen=True)
class ModulusProfile:
    n: int
    odd: bool
    prime: bool

    @classmethod
    def of(cls, n: int) -> ModulusProfile:
        if n < 1:
            raise ZeroModulus("modulus must be positive")
        return cls(n=n, odd=bool(n & 1), prime=is_prime(n))


def _check_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise NotPrime(f"{p} is not an odd prime")


def primitive_root(p: int) -> int:
    """Smallest generator of (Z/pZ)^x for an odd prime ``p``."""
    _check_odd_prime(p)
    order = p - 1
    prime_divisors = [q for q, _ in factorize(order)]
    for g in range(2, p):
        if all(mod_pow(g, order // q, p) != 1 for q in prime_divisors):
            return g
    raise AssertionError(f"no primitive root found mod {p}")  # pragma: no cover


def multiplication_permutation(a: int, n: int) -> Permutation:
    """The map ``x -> a*x mod n`` on ``range(n)``."""
    if n < 1:
        raise ZeroModulus("modulus must be positive")
    a %= n
    if gcd(a, n) != 1:
        raise NotCoprime(f"gcd({a}, {n}) != 1")
    return Permutation._trusted(tuple(a * x % n for x in range(n)))


def translation_permutation(c: int, n: int) -> Permutation:
    if n < 1:
        raise ZeroModulus("modulus must be positive")
    c %= n
    return Permutation._trusted(tuple((x + c) % n for x in range(n)))


def translation_sign(c: int, n: int) -> Sign:
    """Sign of ``x -> x + c`` mod ``n``, by cycle parity.

    The map splits into ``gcd(c, n)`` cycles, each of length ``n / gcd``.
    """
    if n < 1:
        raise ZeroModulus("modulus must be positive")
    c %= n
    g = gcd(c, n)  # gcd(0, n) == n: n fixed points
    return -1 if (n - g) & 1 else 1


def _multiplication_cycle_count(a: int, n: int) -> int:
    seen = bytearray(n)
    cycles = 0
    for start in range(n):
        if seen[start]:
            continue
        cycles += 1
        x = start
        while not seen[x]:
            seen[x] = 1
            x = x * a % n
    return cycles


def zolotarev_symbol(a: int, n: int) -> Sign:
    """Sign of multiplication by ``a`` on Z/nZ for odd ``n``, via cycle parity."""
    if n < 1:
        raise ZeroModulus("modulus must be positive")
    if n % 2 == 0:
        raise EvenModulus(f"modulus {n} is even")
    a %= n
    if gcd(a, n) != 1:
        raise NotCoprime(f"gcd({a}, {n}) != 1")
    return -1 if (n - _multiplication_cycle_count(a, n)) & 1 else 1


def zolotarev_symbol_via_permutation(a: int, n: int) -> Sign:
    """Same value as ``zolotarev_symbol``, routed through a materialised permutation."""
    if n % 2 == 0:
        raise EvenModulus(f"modulus {n} is even")
    p = multiplication_permutation(a, n)
    return -1 if (n - count_cycles(p.image)) & 1 else 1


@lru_cache(maxsize=256)
def _squares_mod(p: int) -> frozenset[int]:
    return frozenset(x * x % p for x in range(p))


def _check_legendre_args(a: int, p: int) -> None:
    _check_odd_prime(p)
    if a % p == 0:
        raise DividesModulus(f"{p} divides {a}")


def legendre_bruteforce(a: int, p: int) -> Sign:
    """+1 iff ``a`` is a square mod ``p``, by enumerating ``x*x`` for all ``x``."""
    _check_legendre_args(a, p)
    return 1 if a % p in _squares_mod(p) else -1


def legendre_euler(a: int, p: int) -> Sign:
    _check_legendre_args(a, p)
    r = mod_pow(a, (p - 1) // 2, p)
    if r == 1:
        return 1
    if r == p - 1:
        return -1
    raise ArithmeticError(f"Euler criterion gave {r} mod {p}; modulus is not prime")


def _check_odd_modulus(n: int) -> None:
    if n < 1:
        raise ZeroModulus("modulus must be positive")
    if n % 2 == 0:
        raise EvenModulus(f"modulus {n} is even")


def jacobi_factored(a: int, n: int) -> SymbolValue:
    """Product of Legendre symbols over the prime factors of ``n``."""
    _check_odd_modulus(n)
    if gcd(a, n) != 1:
        return 0
    value = 1
    for p, e in factorize(n):
        if e & 1:
            value *= legendre_euler(a, p)
    return value


def jacobi_reciprocity(a: int, n: int) -> SymbolValue:
    """Jacobi symbol in O(log) steps.

    Factors of two are pulled out with the ``<2|n>`` supplement, and the
    arguments are swapped with the reciprocity law, reducing each time.
    """
    _check_odd_modulus(n)
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0
