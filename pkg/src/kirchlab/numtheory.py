"""Elementary number theory shared by the whole laboratory.

Prime tables, factorization, coprimality, CRT, the 2^m+-1 prime shapes,
and three classical checkers: primitive prime divisors of a^n - 1,
consecutive perfect powers, and least primes in arithmetic progressions.

All prime enumeration goes through one growing, odds-only numpy sieve.
Operands are capped at MAX_OPERAND = 10**9 (the sieve at that size is
~500 MB transient, which is the documented capacity of this module).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

import numpy as np

MAX_OPERAND = 10**9


class NonCoprimeModuli(ValueError):
    """CRT input moduli share a common factor."""


class NotPrime(ValueError):
    """A prime was required."""


class NotCoprime(ValueError):
    """Arguments share a common factor where coprimality is required."""


class SearchBoundExceeded(ValueError):
    """A bounded search ran out of budget before finding its target."""


_primes: np.ndarray = np.array([2, 3, 5, 7], dtype=np.int64)
_primes.flags.writeable = False
_limit: int = 10


def _sieve(n: int) -> np.ndarray:
    # odds-only sieve of Eratosthenes; returns all primes <= n
    half = (n + 1) // 2  # flags for 1, 3, 5, ...
    flags = np.ones(half, dtype=bool)
    flags[0] = False
    for i in range(1, math.isqrt(n) // 2 + 1):
        if flags[i]:
            p = 2 * i + 1
            flags[p * p // 2:: p] = False
    odd = 2 * np.nonzero(flags)[0].astype(np.int64) + 1
    return np.concatenate((np.array([2], dtype=np.int64), odd))


def primes_upto(n: int) -> np.ndarray:
    """All primes <= n, ascending, as a read-only int64 array."""
    global _primes, _limit
    n = int(n)
    if n > MAX_OPERAND:
        raise ValueError(f"prime table capped at {MAX_OPERAND}, asked for {n}")
    if n > _limit:
        new_limit = min(max(n, 2 * _limit, 1000), MAX_OPERAND)
        _primes = _sieve(new_limit)
        _primes.flags.writeable = False
        _limit = new_limit
    idx = int(np.searchsorted(_primes, n, side="right"))
    return _primes[:idx]


@lru_cache(maxsize=1 << 16)
def is_prime(n: int) -> bool:
    """Deterministic primality by trial division up to sqrt(n)."""
    n = int(n)
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for p in primes_upto(math.isqrt(n)):
        if n % p == 0:
            return n == p
    return True


@dataclass(frozen=True)
class PrimeSet:
    """A finite set of primes, stored as a strictly increasing tuple.

    Construct with ``PrimeSet.of(iterable)`` (sorts and deduplicates) or
    directly from an already-sorted tuple. Every element is validated.
    """

    elements: tuple

    def __post_init__(self):
        elems = tuple(int(p) for p in self.elements)
        object.__setattr__(self, "elements", elems)
        prev = 1
        for p in elems:
            if p <= prev:
                raise ValueError("elements must be strictly increasing")
            if not is_prime(p):
                raise NotPrime(f"{p} is not prime")
            prev = p
        object.__setattr__(self, "_set", frozenset(elems))

    @classmethod
    def of(cls, primes: Iterable[int]) -> "PrimeSet":
        return cls(tuple(sorted({int(p) for p in primes})))

    def __contains__(self, p) -> bool:
        return int(p) in self._set

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __bool__(self) -> bool:
        return bool(self.elements)

    def __or__(self, other: "PrimeSet") -> "PrimeSet":
        return PrimeSet.of(set(self.elements) | set(other.elements))

    def __and__(self, other: "PrimeSet") -> "PrimeSet":
        return PrimeSet.of(set(self.elements) & set(other.elements))

    def __sub__(self, other: "PrimeSet") -> "PrimeSet":
        return PrimeSet.of(set(self.elements) - set(other.elements))

    def issubset(self, other: "PrimeSet") -> bool:
        return set(self.elements) <= set(other.elements)

    __le__ = issubset

    def as_set(self) -> frozenset:
        return frozenset(self.elements)

    def __repr__(self) -> str:
        return f"PrimeSet({{{', '.join(map(str, self.elements))}}})"


EMPTY_PRIMES = PrimeSet(())


@lru_cache(maxsize=1 << 16)
def _factor_tuple(x: int) -> tuple:
    out = []
    rem = x
    if x >= 4:
        for p in primes_upto(math.isqrt(x)):
            p = int(p)
            if p * p > rem:
                break
            if rem % p == 0:
                out.append(p)
                while rem % p == 0:
                    rem //= p
    if rem > 1:
        out.append(rem)
    return tuple(out)


def prime_factors(x: int) -> PrimeSet:
    """The set of distinct prime divisors of x.  prime_factors(1) is empty."""
    x = int(x)
    if x < 1:
        raise ValueError("positive integers only")
    if x > MAX_OPERAND:
        raise ValueError(f"operands capped at {MAX_OPERAND}")
    return PrimeSet(_factor_tuple(x))


def is_square_free(b: int) -> bool:
    """True when no prime square divides b."""
    b = int(b)
    if b < 1:
        raise ValueError("positive integers only")
    if b % 4 == 0:
        return False
    for p in primes_upto(math.isqrt(b)):
        p = int(p)
        if b % (p * p) == 0:
            return False
    return True


def are_coprime(x: int, y: int) -> bool:
    return math.gcd(int(x), int(y)) == 1


@dataclass(frozen=True)
class Congruence:
    """The residue class  residue + modulus * Z  with 0 <= residue < modulus."""

    residue: int
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "residue", int(self.residue))
        object.__setattr__(self, "modulus", int(self.modulus))
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if not 0 <= self.residue < self.modulus:
            raise ValueError("residue must lie in [0, modulus)")

    def contains(self, z: int) -> bool:
        return z % self.modulus == self.residue


def crt_solve(congruences: Iterable[Congruence]) -> Congruence:
    """Combine congruences with pairwise coprime moduli into a single one.

    Raises NonCoprimeModuli when two input moduli share a factor.  The
    result's modulus is the product of the input moduli and its residue is
    the least non-negative simultaneous solution.
    """
    r, m = 0, 1
    for c in congruences:
        if math.gcd(m, c.modulus) != 1:
            raise NonCoprimeModuli(f"modulus {c.modulus} shares a factor with {m}")
        if c.modulus == 1:
            continue
        t = ((c.residue - r) * pow(m, -1, c.modulus)) % c.modulus
        r += m * t
        m *= c.modulus
    return Congruence(r, m)


@dataclass(frozen=True)
class PrimeType:
    """Shape of a prime relative to the powers of two.

    tag is one of "Fermat" (p = 2^m + 1), "Mersenne" (p = 2^m - 1), "Both"
    (only p = 3) or "Neither".  witness_exponent is m; for "Both" it is the
    Mersenne exponent (2 for p = 3); None for "Neither".
    """

    tag: str
    witness_exponent: Optional[int] = None


def classify_prime(p: int) -> PrimeType:
    """Classify a prime as 2^m+1, 2^m-1, both, or neither."""
    p = int(p)
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    below, above = p - 1, p + 1
    fermat = below >= 2 and below & (below - 1) == 0
    mersenne = above >= 4 and above & (above - 1) == 0
    if fermat and mersenne:
        return PrimeType("Both", above.bit_length() - 1)
    if fermat:
        return PrimeType("Fermat", below.bit_length() - 1)
    if mersenne:
        return PrimeType("Mersenne", above.bit_length() - 1)
    return PrimeType("Neither", None)


def zsigmondy_inclusion(a: int, n: int) -> bool:
    """Whether every prime divisor of a^n - 1 already divides some a^k - 1, k < n.

    Decided without factoring: repeatedly strip from a^n - 1 its gcd with
    the product of the smaller terms; the support is included iff the
    quotient reaches 1.
    """
    a, n = int(a), int(n)
    if a < 2 or n < 2:
        raise ValueError("need a >= 2 and n >= 2")
    lower = 1
    for k in range(1, n):
        lower *= a**k - 1
    rem = a**n - 1
    g = math.gcd(rem, lower)
    while g > 1:
        rem //= g
        g = math.gcd(rem, lower)
    return rem == 1


def consecutive_perfect_powers(limit: int) -> list:
    """All pairs (u, u+1) of perfect powers m^k (k >= 2) with u+1 <= limit."""
    limit = int(limit)
    if limit < 2:
        raise ValueError("limit must be at least 2")
    powers = set()
    m = 2
    while m * m <= limit:
        v = m * m
        while v <= limit:
            powers.add(v)
            v *= m
        m += 1
    return [(u, u + 1) for u in sorted(powers) if u + 1 in powers]


def first_prime_in_progression(a: int, b: int, max_terms: int = 10**6) -> int:
    """Least prime of the form a + k*b with k >= 1, for coprime a, b.

    The offset a itself is not a candidate: the progression searched is
    a+b, a+2b, ...  Raises NotCoprime when gcd(a, b) > 1 and
    SearchBoundExceeded after max_terms candidates (default 10**6).
    """
    a, b = int(a), int(b)
    if a < 1 or b < 1:
        raise ValueError("need positive a and b")
    if math.gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) > 1; the progression contains at most one prime")
    if max_terms < 1:
        raise ValueError("max_terms must be positive")
    v = a
    for _ in range(max_terms):
        v += b
        if is_prime(v):
            return v
    raise SearchBoundExceeded(f"no prime in the first {max_terms} terms of {a} + k*{b}")
