"""Arithmetic progressions a + b*N0 and closures in the progression topology.

A progression a + b*N0 = {a, a+b, a+2b, ...} is a basic open set of the
topology when b is square-free and coprime to a.  The closure of such a
basic open set inside the positive integers is cut out by finitely many
per-prime conditions, one for each prime divisor p of b:

* if p divides a:   z must be divisible by p               ("forced divisor")
* otherwise:        z must lie in {0, a mod p} modulo p    ("two-class")

CongruenceSet is the normal form for such cut-out sets: a set of forced
prime divisors plus a map p -> k of two-class constraints (0 < k < p).
Since every constraint allows residue 0, a CongruenceSet always contains
the product of its primes — it is never empty.  The EMPTY singleton is
nevertheless available as an explicit bottom for the intersection lattice.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce

from .numtheory import is_prime, is_square_free, prime_factors


@dataclass(frozen=True)
class Progression:
    """The set {a + k*b : k = 0, 1, 2, ...}."""

    a: int
    b: int
    kirch_basic: bool = False

    def __post_init__(self):
        object.__setattr__(self, "a", int(self.a))
        object.__setattr__(self, "b", int(self.b))
        if self.a < 1 or self.b < 1:
            raise ValueError("need a >= 1 and b >= 1")

    def __contains__(self, z) -> bool:
        z = int(z)
        return z >= self.a and (z - self.a) % self.b == 0


def kirch_basic_open(a: int, b: int) -> Progression:
    """Build a + b*N0, flagging whether it is a basic open set.

    The flag is set exactly when b is square-free and coprime to a;
    construction itself succeeds for any positive a, b.
    """
    a, b = int(a), int(b)
    if a < 1 or b < 1:
        raise ValueError("need a >= 1 and b >= 1")
    return Progression(a, b, math.gcd(a, b) == 1 and is_square_free(b))


def progressions_intersect(p1: Progression, p2: Progression) -> bool:
    """Whether two progressions meet; by CRT this is a1 = a2 mod gcd(b1, b2)."""
    return (p1.a - p2.a) % math.gcd(p1.b, p2.b) == 0


class _EmptySet:
    """The empty set of integers, as a first-class intersection result."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    @property
    def is_empty(self) -> bool:
        return True

    def contains(self, z: int) -> bool:
        return False

    __contains__ = contains

    def members(self, lo: int, hi: int) -> list:
        if lo < 1 or lo > hi:
            raise ValueError("need 1 <= lo <= hi")
        return []

    def to_json_dict(self) -> dict:
        return {"empty": True}

    def __repr__(self) -> str:
        return "EMPTY"


EMPTY = _EmptySet()


@dataclass(frozen=True)
class CongruenceSet:
    """{z : p | z for forced p} intersect {z : z mod p in {0, k}} over constraints.

    forced_divisors: ascending tuple of primes that must divide z.
    two_class_constraints: ascending tuple of (p, k) pairs, 0 < k < p,
    with p not among the forced divisors.
    """

    forced_divisors: tuple = ()
    two_class_constraints: tuple = ()
    _two_map: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        forced = tuple(sorted(int(p) for p in self.forced_divisors))
        pairs = tuple(sorted((int(p), int(k)) for p, k in self.two_class_constraints))
        object.__setattr__(self, "forced_divisors", forced)
        object.__setattr__(self, "two_class_constraints", pairs)
        seen = set()
        for p in forced:
            if not is_prime(p):
                raise ValueError(f"forced divisor {p} is not prime")
            if p in seen:
                raise ValueError(f"prime {p} mentioned twice")
            seen.add(p)
        for p, k in pairs:
            if not is_prime(p):
                raise ValueError(f"constraint prime {p} is not prime")
            if p in seen:
                raise ValueError(f"prime {p} mentioned twice")
            seen.add(p)
            if not 0 < k < p:
                raise ValueError(f"two-class residue must satisfy 0 < k < p, got {k} mod {p}")
        object.__setattr__(self, "_two_map", dict(pairs))

    @property
    def is_empty(self) -> bool:
        return False

    def primes_mentioned(self) -> tuple:
        return tuple(sorted(self.forced_divisors + tuple(self._two_map)))

    @property
    def period(self) -> int:
        return reduce(lambda acc, p: acc * p, self.primes_mentioned(), 1)

    def allowed_residues(self, p: int):
        """Residues permitted mod p: (0,), (0, k), or None when unconstrained."""
        if p in self._two_map:
            return (0, self._two_map[p])
        if p in self.forced_divisors:
            return (0,)
        return None

    def contains(self, z: int) -> bool:
        z = int(z)
        if z < 1:
            return False
        for p in self.forced_divisors:
            if z % p != 0:
                return False
        for p, k in self.two_class_constraints:
            if z % p not in (0, k):
                return False
        return True

    __contains__ = contains

    def members(self, lo: int, hi: int) -> list:
        """All members in the window [lo, hi], ascending."""
        lo, hi = int(lo), int(hi)
        if lo < 1 or lo > hi:
            raise ValueError("need 1 <= lo <= hi")
        return [z for z in range(lo, hi + 1) if self.contains(z)]

    def to_json_dict(self) -> dict:
        return {
            "forced": list(self.forced_divisors),
            "two_class": {str(p): str(k) for p, k in self.two_class_constraints},
        }


def closure(a: int, b: int) -> CongruenceSet:
    """Closure of a + b*N0 within the positive integers, in normal form.

    One condition per prime divisor p of b; the vacuous parity condition
    (odd a, even b: z mod 2 in {0, 1}) is dropped from the normal form.
    """
    a, b = int(a), int(b)
    if a < 1 or b < 1:
        raise ValueError("need a >= 1 and b >= 1")
    forced = []
    two_class = []
    for p in prime_factors(b):
        r = a % p
        if r == 0:
            forced.append(p)
        elif p != 2:
            two_class.append((p, r))
    return CongruenceSet(tuple(forced), tuple(two_class))


def members(s, lo: int, hi: int) -> list:
    """Members of a CongruenceSet (or EMPTY) in the window [lo, hi]."""
    return s.members(lo, hi)


def intersect(s1, s2):
    """Intersection of two congruence sets, again in normal form.

    The per-prime allowed-residue sets are intersected; since residue 0
    is allowed everywhere the meet is never empty, but an EMPTY operand
    (or an inconsistent meet, unreachable from valid inputs) yields EMPTY.
    """
    if s1.is_empty or s2.is_empty:
        return EMPTY
    forced = []
    two_class = []
    for p in sorted(set(s1.primes_mentioned()) | set(s2.primes_mentioned())):
        r1 = s1.allowed_residues(p)
        r2 = s2.allowed_residues(p)
        meet = set(r1 if r2 is None else r2 if r1 is None else set(r1) & set(r2))
        if not meet:
            return EMPTY
        if meet == {0}:
            forced.append(p)
        else:
            k = max(meet)
            two_class.append((p, k))
    return CongruenceSet(tuple(forced), tuple(two_class))
