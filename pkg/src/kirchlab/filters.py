"""Superconnecting filters of the progression topology, by finite descriptor.

For a finite set E of at least two positive integers, the filter of dense
open supersets is determined by three pieces of data:

* A(E)   — the primes p for which E fits inside {0, k} + p*Z for some k
           ("signature primes"; 2 always qualifies since {0,1}+2Z is all of Z);
* Pi(E)  — the primes dividing every element of E;
* alpha  — the canonical residue map on A(E): alpha(2) = 1, alpha(p) = 0 for
           odd p in Pi(E), and otherwise the unique nonzero residue shared
           by the elements of E mod p.

Singletons {x} behave degenerately: every prime qualifies, so A is the
sentinel ALL_PRIMES and alpha is undefined.  Two filters compare by a
finite criterion on their descriptors (filter_le below); an independent
search-based route lives in the verify module.

Sets are represented as in progressions.CongruenceSet, and realizability
(descriptors -> witness sets) uses the CRT.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, Optional, Union

import numpy as np

from .numtheory import (
    MAX_OPERAND,
    Congruence,
    PrimeSet,
    crt_solve,
    prime_factors,
    primes_upto,
)
from .progressions import CongruenceSet


class TooSmall(ValueError):
    """The operation needs a larger input set."""


class BadShape(ValueError):
    """Descriptor data violates the admissibility conditions."""


class OverlapError(ValueError):
    """Extra generator primes must avoid the signature primes."""


class WrongClass(ValueError):
    """The operation applies to a different classification tag."""


class Overflow(ValueError):
    """The computation would exceed the documented operand capacity."""


class _AllPrimes:
    """Sentinel for 'every prime qualifies' (singleton descriptors)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __contains__(self, p) -> bool:
        from .numtheory import is_prime

        return is_prime(int(p))

    def __repr__(self) -> str:
        return "ALL_PRIMES"


ALL_PRIMES = _AllPrimes()


def _element_tuple(E: Iterable[int]) -> tuple:
    elems = tuple(sorted({int(e) for e in E}))
    if not elems:
        raise TooSmall("need a nonempty set")
    if elems[0] < 1:
        raise ValueError("positive integers only")
    if elems[-1] > MAX_OPERAND:
        raise Overflow(f"elements capped at {MAX_OPERAND}")
    return elems


@dataclass(frozen=True)
class FilterDescriptor:
    """Finite data determining the filter of a set E.

    E is the (sorted) witness set; A is a PrimeSet or ALL_PRIMES; Pi is the
    common-divisor support; alpha is a tuple of (p, residue) pairs over A,
    or None when A is ALL_PRIMES.
    """

    E: tuple
    A: Union[PrimeSet, _AllPrimes]
    Pi: PrimeSet
    alpha: Optional[tuple]

    @property
    def alpha_map(self) -> dict:
        return dict(self.alpha or ())

    def to_json_dict(self) -> dict:
        out = {"E": list(self.E)}
        if self.A is ALL_PRIMES:
            out["A"] = "all"
            out["Pi"] = list(self.Pi)
        else:
            out["A"] = list(self.A)
            out["Pi"] = list(self.Pi)
            out["alpha"] = {str(p): str(k) for p, k in self.alpha}
        return out


def compute_A(E: Iterable[int]) -> PrimeSet:
    """Signature primes of E, by direct residue scan over all p <= max(E).

    2 always qualifies.  An odd prime p qualifies iff the nonzero residues
    of E mod p all agree, i.e. E fits in {0, k} + p*Z for k = that residue
    (k = 0 when p divides everything).  Primes above max(E) never qualify
    for |E| >= 2: two distinct elements below p cannot share a class.
    """
    elems = _element_tuple(E)
    if len(elems) < 2:
        raise TooSmall("signature scan needs at least two elements")
    odd = primes_upto(elems[-1])
    odd = odd[1:] if len(odd) and odd[0] == 2 else odd
    if not len(odd):
        return PrimeSet((2,))
    first_nz = np.zeros(len(odd), dtype=np.int64)
    ok = np.ones(len(odd), dtype=bool)
    for e in elems:
        r = e % odd
        nz = r != 0
        ok &= ~(nz & (first_nz != 0) & (first_nz != r))
        first_nz = np.where(nz & (first_nz == 0), r, first_nz)
    return PrimeSet((2, *(int(p) for p in odd[ok])))


def pair_A(x: int, y: int) -> PrimeSet:
    """Signature primes of a doubleton, via factorizations only:

    A({x, y}) = {2} | primes(x) | primes(y) | primes(|x - y|).
    """
    x, y = int(x), int(y)
    if x == y:
        raise ValueError("need two distinct elements")
    if min(x, y) < 1:
        raise ValueError("positive integers only")
    return (
        PrimeSet((2,))
        | prime_factors(x)
        | prime_factors(y)
        | prime_factors(abs(x - y))
    )


@lru_cache(maxsize=1 << 15)
def _descriptor_cached(elems: tuple) -> FilterDescriptor:
    if len(elems) == 1:
        return FilterDescriptor(elems, ALL_PRIMES, prime_factors(elems[0]), None)
    A = compute_A(elems)
    g = reduce(math.gcd, elems)
    Pi = prime_factors(g)
    alpha = []
    for p in A:
        if p == 2:
            alpha.append((2, 1))
        elif p in Pi:
            alpha.append((p, 0))
        else:
            k = next(e % p for e in elems if e % p != 0)
            alpha.append((p, k))
    return FilterDescriptor(elems, A, Pi, tuple(alpha))


def descriptor(E: Iterable[int]) -> FilterDescriptor:
    """Descriptor (E, A, Pi, alpha) of a finite nonempty set."""
    return _descriptor_cached(_element_tuple(E))


def realize(A, alpha) -> tuple:
    """Least witness set realizing prescribed signature data.

    A must contain 2 and at least one odd prime; alpha must be defined
    exactly on A with alpha(2) = 1 and 0 <= alpha(p) < p.  With x the
    product of the odd primes of A and y the least positive solution of
    z = alpha(p) mod p for all p in A, the set {y, x, 2x} has signature
    exactly (A, alpha).  Returned sorted.
    """
    A = A if isinstance(A, PrimeSet) else PrimeSet.of(A)
    alpha = {int(p): int(k) for p, k in dict(alpha).items()}
    if 2 not in A or len(A) < 2:
        raise BadShape("need 2 in A together with at least one odd prime")
    if set(alpha) != set(A.elements):
        raise BadShape("alpha must be defined exactly on A")
    if alpha[2] != 1:
        raise BadShape("alpha(2) must be 1")
    for p, k in alpha.items():
        if not 0 <= k < p:
            raise BadShape(f"alpha({p}) = {k} out of range [0, {p})")
    odd = [p for p in A if p != 2]
    x = reduce(lambda acc, p: acc * p, odd, 1)
    y = crt_solve([Congruence(alpha[p] % p, p) for p in A]).residue
    return tuple(sorted({y, x, 2 * x}))


def generator(d: FilterDescriptor, L=()) -> CongruenceSet:
    """A generating congruence set of the filter of d, forcing extra primes L.

    L must be disjoint from A.  The output forces the primes of L and
    carries the two-class constraint p -> alpha(p) for every odd signature
    prime outside Pi, plus the (vacuous) marker 2 -> 1.
    """
    if d.A is ALL_PRIMES:
        raise BadShape("singleton filters have no congruence-set generators")
    L = L if isinstance(L, PrimeSet) else PrimeSet.of(L)
    clash = [p for p in L if p in d.A]
    if clash:
        raise OverlapError(f"extra primes {clash} already lie in the signature")
    two_class = [(2, 1)]
    for p, k in d.alpha:
        if p != 2 and p not in d.Pi and k != 0:
            two_class.append((p, k))
    return CongruenceSet(tuple(L), tuple(two_class))


def _le_descriptors(dE: FilterDescriptor, dF: FilterDescriptor) -> bool:
    # order criterion on descriptors: A_F within A_E, odd part of Pi_F
    # within Pi_E, and the alphas agree on A_F outside Pi_E
    if not dF.A.issubset(dE.A):
        return False
    if not set(dF.Pi.elements) - {2} <= set(dE.Pi.elements):
        return False
    aE, aF = dE.alpha_map, dF.alpha_map
    return all(aE[p] == aF[p] for p in dF.A if p not in dE.Pi)


def filter_le(E: Iterable[int], F: Iterable[int]) -> bool:
    """Whether the filter of E is contained in the filter of F.

    Singletons are minimal in a strong sense: a singleton filter is below
    another filter only via {x} subset F; a filter with |E| >= 2 is never
    below a singleton filter.
    """
    e, f = _element_tuple(E), _element_tuple(F)
    if len(e) == 1 or len(f) == 1:
        return len(e) == 1 and set(e) <= set(f)
    return _le_descriptors(_descriptor_cached(e), _descriptor_cached(f))


def filter_eq(E: Iterable[int], F: Iterable[int]) -> bool:
    """Whether E and F determine the same filter."""
    return filter_le(E, F) and filter_le(F, E)


@dataclass(frozen=True)
class ClassLabel:
    """Position of a filter in the coarse classification.

    tag: "FInfinity" (top), "FPrime" (co-atoms: one odd signature prime,
    not a common divisor), "FDoublePrime" (next layer down, two shapes),
    or "Other".  Evidence fields: p (and alpha_value) for FPrime; case 1
    with p, or case 2 with p < q, for FDoublePrime.
    """

    tag: str
    p: Optional[int] = None
    q: Optional[int] = None
    case: Optional[int] = None
    alpha_value: Optional[int] = None

    def to_json_dict(self) -> dict:
        out = {"tag": self.tag}
        for name in ("case", "p", "q", "alpha_value"):
            v = getattr(self, name)
            if v is not None:
                out[name] = v
        return out


def classify(E: Iterable[int]) -> ClassLabel:
    """Coarse position of the filter of E (|E| >= 2) in the order.

    FInfinity:    A = {2}.
    FPrime:       A = {2, p}, p odd, p not a common divisor of E.
    FDoublePrime: case 1 — A = {2, p} with p a common divisor;
                  case 2 — A = {2, p, q}, p < q odd, no odd common divisor.
    Other:        anything else.
    """
    elems = _element_tuple(E)
    if len(elems) < 2:
        raise TooSmall("classification needs at least two elements")
    d = _descriptor_cached(elems)
    odd = [p for p in d.A if p != 2]
    pi = set(d.Pi.elements)
    if not odd:
        return ClassLabel("FInfinity")
    if len(odd) == 1:
        p = odd[0]
        if p in pi:
            return ClassLabel("FDoublePrime", p=p, case=1)
        return ClassLabel("FPrime", p=p, alpha_value=d.alpha_map[p])
    if len(odd) == 2 and pi <= {2}:
        return ClassLabel("FDoublePrime", p=odd[0], q=odd[1], case=2)
    return ClassLabel("Other")


def upset_in_Fprime(E: Iterable[int]) -> tuple:
    """The FPrime filters above a FDoublePrime filter, as descriptors.

    Case 1 (A = {2,p}, p | E): the p-1 filters of {a, p, 2p}, a = 1..p-1.
    Case 2 (A = {2,p,q}): exactly two, {x, p, 2p} and {x, q, 2q}, where x
    is the least positive integer with x odd, x = alpha(p) mod p and
    x = alpha(q) mod q.  Raises WrongClass unless E is FDoublePrime.
    """
    elems = _element_tuple(E)
    label = classify(elems)
    if label.tag != "FDoublePrime":
        raise WrongClass(f"up-set enumeration applies to FDoublePrime only, got {label.tag}")
    if label.case == 1:
        p = label.p
        return tuple(descriptor((a, p, 2 * p)) for a in range(1, p))
    p, q = label.p, label.q
    am = _descriptor_cached(elems).alpha_map
    x = crt_solve(
        [Congruence(1, 2), Congruence(am[p], p), Congruence(am[q], q)]
    ).residue
    return (descriptor({x, p, 2 * p}), descriptor({x, q, 2 * q}))


def primes_from_order(x: int, p_bound: int) -> PrimeSet:
    """Odd primes p <= p_bound dividing x, recovered from order relations only:

    p | x  iff  filter({1,x}) <= filter({1,p,2p}) and
                filter({2,x}) <= filter({2,p,2p}).
    """
    x = int(x)
    if x < 3:
        raise ValueError("need x >= 3")
    found = []
    for p in primes_upto(int(p_bound)):
        p = int(p)
        if p == 2:
            continue
        if filter_le((1, x), (1, p, 2 * p)) and filter_le((2, x), (2, p, 2 * p)):
            found.append(p)
    return PrimeSet(tuple(found))


def power_chain_equal_set(x: int, n_max: int) -> set:
    """{n <= n_max : filter({1, x^n}) equals filter({1, x})}.

    Always contains 1.  Raises Overflow when x^n_max exceeds the operand
    capacity (10**9).
    """
    x, n_max = int(x), int(n_max)
    if x < 2 or n_max < 1:
        raise ValueError("need x >= 2 and n_max >= 1")
    if x**n_max > MAX_OPERAND:
        raise Overflow(f"x^n_max = {x**n_max} exceeds the capacity {MAX_OPERAND}")
    return {n for n in range(1, n_max + 1) if filter_eq((1, x**n), (1, x))}
