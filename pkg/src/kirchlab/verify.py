"""Independent oracles and randomized/exhaustive verification suites.

Every nontrivial computation in the library has a second, independent
route to the same answer:

* closure_oracle        — closure membership via progression intersections
                          (no congruence normal form involved);
* congruence_set_subset — containment of congruence sets, decided per prime
                          (exact, since both sets are CRT products);
* filter_le_oracle      — filter containment by generator membership search,
                          not by the descriptor criterion.

The suites run the two routes against each other over exhaustive grids and
seeded random samples, and package the outcome as a SuiteReport.  Reports
are deterministic for a fixed (suite, bounds, seed): the canonical JSON
body excludes timing.

Suites fan out over worker processes when KIRCHLAB_THREADS (or the CPU
count) allows; results merge in deterministic block order.
"""
from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from .numtheory import (
    Congruence,
    PrimeSet,
    classify_prime,
    consecutive_perfect_powers,
    crt_solve,
    is_prime,
    prime_factors,
    primes_upto,
    zsigmondy_inclusion,
)
from .progressions import CongruenceSet, Progression, closure, progressions_intersect
from .filters import (
    TooSmall,
    _descriptor_cached,
    _element_tuple,
    _le_descriptors,
    classify,
    compute_A,
    descriptor,
    filter_eq,
    filter_le,
    generator,
    pair_A,
    power_chain_equal_set,
    realize,
    upset_in_Fprime,
)
from .gamma import degree_infinite, edges_by_definition, edges_closed_form, vertices

_FAILURE_CAP = 50


class UnknownSuite(ValueError):
    """No verification suite is registered under that name."""


def worker_count() -> int:
    """Worker processes to use: KIRCHLAB_THREADS if set, else the CPU count."""
    env = os.environ.get("KIRCHLAB_THREADS")
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"KIRCHLAB_THREADS must be an integer, got {env!r}")
    return os.cpu_count() or 1


# ---------------------------------------------------------------- oracles


def closure_oracle(a: int, b: int, z: int) -> bool:
    """Closure membership from the definition, via progression intersections.

    z lies in the closure of a + b*N0 iff every basic open set around z
    meets the progression; it suffices to intersect the neighborhoods
    z + p*N0 for the primes p of b not dividing z.
    """
    a, b, z = int(a), int(b), int(z)
    if a < 1 or b < 1 or z < 1:
        raise ValueError("need positive a, b, z")
    base = Progression(a, b)
    for p in prime_factors(b):
        if z % p == 0:
            continue
        if not progressions_intersect(Progression(z, p), base):
            return False
    return True


def congruence_set_subset(s1, s2) -> bool:
    """Whether s1 is contained in s2, decided prime by prime.

    Exact: a congruence set is the CRT product of its per-prime residue
    sets (all residues at unmentioned primes), so containment holds iff at
    every prime mentioned by s2 the residues achieved by s1 are allowed.
    """
    if s1.is_empty:
        return True
    if s2.is_empty:
        return False
    for p in s2.primes_mentioned():
        allowed = set(s2.allowed_residues(p))
        got = s1.allowed_residues(p)
        if got is None:
            if len(allowed) < p:
                return False
        elif not set(got) <= allowed:
            return False
    return True


def _member_of_filter(B: CongruenceSet, dF, extra_pool=()) -> bool:
    # B belongs to the filter of dF iff some generator of dF fits inside B.
    # Forcing more primes only shrinks a generator, so the existential over
    # L' is decided by the maximal choice: all primes of B (plus any extra
    # pool) outside the signature of dF.
    pool = set(B.primes_mentioned()) | set(extra_pool)
    pool = PrimeSet.of(p for p in pool if p not in dF.A)
    return congruence_set_subset(generator(dF, pool), B)


def _oracle_descriptors(dE, dF, extra_pool=()) -> bool:
    outside = tuple(p for p in dF.A if p not in dE.A)
    # singletons first: when A_F strays outside A_E a one-prime L0 already
    # fails, which keeps the common no-verdict case cheap
    choices = [(p,) for p in outside]
    choices.append(())
    for size in range(2, len(outside) + 1):
        choices.extend(combinations(outside, size))
    for L0 in choices:
        B = generator(dE, L0)
        if not _member_of_filter(B, dF, extra_pool):
            return False
    return True


def filter_le_oracle(E, F, extra_pool=()) -> bool:
    """Filter containment by generator membership search.

    The filter of E is contained in the filter of F iff every generator
    B = generator(E, L0), L0 ranging over the subsets of A_F \\ A_E,
    belongs to the filter of F — i.e. some generator of F fits inside B.
    extra_pool adds primes to the candidate forcing pool of the membership
    search; by CRT independence it never changes the verdict (exercised by
    the pool-widening checks).
    """
    e, f = _element_tuple(E), _element_tuple(F)
    if min(len(e), len(f)) < 2:
        raise TooSmall("the generator search needs |E|, |F| >= 2")
    return _oracle_descriptors(_descriptor_cached(e), _descriptor_cached(f), extra_pool)


# ---------------------------------------------------------------- reports


@dataclass(frozen=True)
class SuiteReport:
    """Outcome of one verification suite run."""

    suite_name: str
    bounds: dict
    seed: int
    instances_checked: int
    failures: tuple
    failure_count: int
    findings: tuple
    elapsed: float

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def to_json_dict(self, include_elapsed: bool = False) -> dict:
        out = {
            "suite": self.suite_name,
            "bounds": {k: list(v) if isinstance(v, tuple) else v for k, v in self.bounds.items()},
            "seed": self.seed,
            "instances_checked": self.instances_checked,
            "failure_count": self.failure_count,
            "failures": [dict(f) for f in self.failures],
            "findings": [f if not isinstance(f, dict) else dict(f) for f in self.findings],
            "passed": self.passed,
        }
        if include_elapsed:
            out["elapsed"] = self.elapsed
        return out


class _Recorder:
    """Collects failure records, keeping at most _FAILURE_CAP of them."""

    def __init__(self):
        self.records = []
        self.total = 0

    def add(self, input_, expected, got):
        self.total += 1
        if len(self.records) < _FAILURE_CAP:
            self.records.append({"input": input_, "expected": expected, "got": got})


# ---------------------------------------------------------------- suites


def _suite_closure(bounds, rng):
    a_max, b_max = bounds["a_max"], bounds["b_max"]
    rec = _Recorder()
    checked = 0
    for b in range(1, b_max + 1):
        pis = tuple(int(p) for p in prime_factors(b))
        rad = 1
        for p in pis:
            rad *= p
        zs = np.arange(1, rad + 1, dtype=np.int64)
        for a in range(1, a_max + 1):
            cs = closure(a, b)
            formula = np.ones(rad, dtype=bool)
            for p in cs.forced_divisors:
                formula &= zs % p == 0
            for p, k in cs.two_class_constraints:
                r = zs % p
                formula &= (r == 0) | (r == k)
            witness = np.ones(rad, dtype=bool)
            for p in pis:
                witness &= (zs % p == 0) | ((zs - a) % p == 0)
            checked += rad
            if not np.array_equal(formula, witness):
                for z in zs[formula != witness]:
                    rec.add([a, b, int(z)], bool(witness[z - 1]), bool(formula[z - 1]))
    # bind the vectorized routes to the scalar library functions
    for _ in range(bounds["samples"]):
        a = rng.randint(1, a_max)
        b = rng.randint(1, b_max)
        rad = 1
        for p in prime_factors(b):
            rad *= p
        z = rng.randint(1, 4 * rad)
        got = closure(a, b).contains(z)
        want = closure_oracle(a, b, z)
        checked += 1
        if got != want:
            rec.add([a, b, z], want, got)
    return checked, rec, []


def _suite_pairA(bounds, rng):
    n = bounds["max_value"]
    rec = _Recorder()
    rows, cols = np.triu_indices(n, k=1)
    X = (rows + 1).astype(np.int64)
    Y = (cols + 1).astype(np.int64)
    D = Y - X
    odd_ps = [int(p) for p in primes_upto(n) if p != 2]
    # factor table built through the library's factorization route
    table = np.zeros((n + 1, len(odd_ps)), dtype=bool)
    pos = {p: i for i, p in enumerate(odd_ps)}
    for v in range(1, n + 1):
        for p in prime_factors(v):
            if p != 2:
                table[v, pos[p]] = True
    for i, p in enumerate(odd_ps):
        rx, ry = X % p, Y % p
        col_def = (rx == 0) | (ry == 0) | (rx == ry)
        col_fac = table[X, i] | table[Y, i] | table[D, i]
        if not np.array_equal(col_def, col_fac):
            for j in np.nonzero(col_def != col_fac)[0]:
                rec.add([int(X[j]), int(Y[j]), p], bool(col_fac[j]), bool(col_def[j]))
    checked = len(X)
    for _ in range(bounds["samples"]):
        x = rng.randint(1, n - 1)
        y = rng.randint(x + 1, n)
        checked += 1
        got = compute_A((x, y)).elements
        want = pair_A(x, y).elements
        if got != want:
            rec.add([x, y], list(want), list(got))
    return checked, rec, []


def _suite_realize(bounds, rng):
    pool = tuple(bounds["prime_pool"])
    odd = [p for p in pool if p != 2]
    rec = _Recorder()
    checked = 0
    for r in range(1, len(odd) + 1):
        for subset in combinations(odd, r):
            A = PrimeSet.of((2,) + subset)
            for combo in product(*(range(p) for p in subset)):
                alpha = {2: 1, **dict(zip(subset, combo))}
                E = realize(A, alpha)
                d = descriptor(E)
                want_pi = tuple(p for p in subset if alpha[p] == 0)
                checked += 1
                if (
                    tuple(d.A) != tuple(A)
                    or d.alpha_map != alpha
                    or d.Pi.elements != want_pi
                ):
                    rec.add(
                        {"A": list(A), "alpha": {str(p): k for p, k in alpha.items()}},
                        {"A": list(A), "Pi": list(want_pi)},
                        d.to_json_dict(),
                    )
    return checked, rec, []


def _random_set(rng, max_value, sizes):
    return tuple(sorted(rng.sample(range(1, max_value + 1), rng.choice(sizes))))


def _next_odd_primes(after: int, count: int) -> tuple:
    out = []
    p = after
    while len(out) < count:
        p += 1
        if p % 2 and is_prime(p):
            out.append(p)
    return tuple(out)


def _suite_order(bounds, rng):
    n = bounds["max_value"]
    sizes = tuple(bounds["sizes"])
    rec = _Recorder()
    sets_all = [c for size in sizes for c in combinations(range(1, n + 1), size)]
    reps = {}
    for s in sets_all:
        d = _descriptor_cached(s)
        key = (
            d.A.elements,
            tuple(p for p in d.Pi.elements if p != 2),
            tuple((p, k) for p, k in d.alpha if p != 2),
        )
        reps.setdefault(key, d)
    rep_descs = list(reps.values())
    checked = 0
    # both routes are pure functions of the descriptor key, so the key grid
    # covers the full exhaustive pair space
    for dE in rep_descs:
        for dF in rep_descs:
            got = _le_descriptors(dE, dF)
            want = _oracle_descriptors(dE, dF)
            checked += 1
            if got != want:
                rec.add([list(dE.E), list(dF.E)], want, got)
    # raw sample binding the key factoring to the public entry points
    for _ in range(bounds["raw_samples"]):
        E = _random_set(rng, n, sizes)
        F = _random_set(rng, n, sizes)
        checked += 1
        got = filter_le(E, F)
        want = filter_le_oracle(E, F)
        if got != want:
            rec.add([list(E), list(F)], want, got)
    # random pairs over a wider element range
    for _ in range(bounds["random_pairs"]):
        E = _random_set(rng, bounds["random_max"], sizes)
        F = _random_set(rng, bounds["random_max"], sizes)
        checked += 1
        got = filter_le(E, F)
        want = filter_le_oracle(E, F)
        if got != want:
            rec.add([list(E), list(F)], want, got)
    # pool widening must never change oracle verdicts
    for _ in range(bounds["widen_samples"]):
        E = _random_set(rng, bounds["random_max"], sizes)
        F = _random_set(rng, bounds["random_max"], sizes)
        hi = max(max(E), max(F), 100)
        extra = _next_odd_primes(2 * hi, 3)
        checked += 1
        base = filter_le_oracle(E, F)
        wide = filter_le_oracle(E, F, extra_pool=extra)
        if base != wide:
            rec.add([list(E), list(F), list(extra)], base, wide)
    findings = [{"distinct_descriptors": len(rep_descs)}]
    return checked, rec, findings


def _pairs_upto(n):
    # all 1 <= x < y <= n, ordered by y then x, as int64 arrays
    ys = np.repeat(np.arange(2, n + 1, dtype=np.int64), np.arange(1, n, dtype=np.int64))
    counts = np.arange(1, n, dtype=np.int64)
    starts = np.cumsum(counts) - counts
    xs = np.arange(len(ys), dtype=np.int64) - np.repeat(starts, counts) + 1
    return xs, ys


def _classify_block(args):
    n, y_lo, y_hi = args
    xs, ys = _pairs_upto(n)
    lo = int(np.searchsorted(ys, y_lo))
    hi = int(np.searchsorted(ys, y_hi))
    X, Y = xs[lo:hi], ys[lo:hi]
    any_odd = np.zeros(len(X), dtype=bool)
    for p in primes_upto(int(Y[-1]) if len(Y) else 0):
        p = int(p)
        if p == 2:
            continue
        start = int(np.searchsorted(Y, p))  # x < y < p can satisfy nothing
        rx, ry = X[start:] % p, Y[start:] % p
        any_odd[start:] |= (rx == 0) | (ry == 0) | (rx == ry)
    trivial = ~any_odd  # signature {2}: no odd prime qualified
    is_pow2 = (X & (X - 1) == 0) & (Y == 2 * X)
    mismatches = [
        [int(X[j]), int(Y[j]), bool(is_pow2[j]), bool(trivial[j])]
        for j in np.nonzero(trivial != is_pow2)[0]
    ]
    flagged = [[int(X[j]), int(Y[j])] for j in np.nonzero(trivial)[0]]
    return y_lo, len(X), flagged, mismatches


def _suite_classify(bounds, rng):
    n = bounds["max_value"]
    rec = _Recorder()
    workers = worker_count()
    blocks = []
    if workers > 1:
        step = max(64, n // (4 * workers))
        edges = list(range(2, n + 1, step)) + [n + 1]
        args = [(n, edges[i], edges[i + 1]) for i in range(len(edges) - 1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            blocks = sorted(pool.map(_classify_block, args))
    else:
        blocks = [_classify_block((n, 2, n + 1))]
    checked = 0
    flagged = []
    for _, count, block_flagged, mismatches in blocks:
        checked += count
        flagged.extend(block_flagged)
        for x, y, want, got in mismatches:
            rec.add([x, y], want, got)
    flagged.sort()
    # scalar binding: every flagged pair, plus a random sample
    flag_set = {tuple(f) for f in flagged}
    sample = [tuple(f) for f in flagged]
    for _ in range(bounds["samples"]):
        x = rng.randint(1, n - 1)
        sample.append((x, rng.randint(x + 1, n)))
    for x, y in sample:
        got = classify((x, y)).tag == "FInfinity"
        want = (x, y) in flag_set
        checked += 1
        if got != want:
            rec.add([x, y], want, got)
    findings = [{"trivial_signature_pairs": [list(f) for f in flagged]}]
    return checked, rec, findings


def _suite_upsets(bounds, rng):
    plist = tuple(bounds["prime_list"])
    rec = _Recorder()
    checked = 0

    def key_of(d):
        return (
            d.A.elements,
            tuple(p for p in d.Pi.elements if p != 2),
            tuple((p, k) for p, k in d.alpha if p != 2),
        )

    # case 1: the up-set of the filter of {p, 2p} has exactly p - 1 elements
    for p in plist:
        E = (p, 2 * p)
        up = upset_in_Fprime(E)
        checked += 1
        ok = len(up) == p - 1 == len({key_of(d) for d in up})
        for d in up:
            lab = classify(d.E)
            ok = ok and lab.tag == "FPrime" and lab.p == p and filter_le(E, d.E)
        if not ok:
            rec.add(list(E), {"size": p - 1, "all_FPrime": True}, {"size": len(up)})
    # case 2: seeded instances get a two-element up-set of FPrime filters
    odd_small = [int(q) for q in primes_upto(31) if q != 2]
    for _ in range(bounds["instances"]):
        p, q = sorted(rng.sample(odd_small, 2))
        ap, aq = rng.randint(1, p - 1), rng.randint(1, q - 1)
        x = crt_solve([Congruence(1, 2), Congruence(ap, p), Congruence(aq, q)]).residue
        E = tuple(sorted({x, p * q, 2 * p * q}))
        lab = classify(E)
        up = upset_in_Fprime(E)
        checked += 1
        ok = (
            lab.tag == "FDoublePrime"
            and lab.case == 2
            and len(up) == 2
            and all(classify(d.E).tag == "FPrime" for d in up)
            and {classify(d.E).p for d in up} == {p, q}
            and all(filter_le(E, d.E) for d in up)
        )
        if not ok:
            rec.add(list(E), {"case": 2, "upset_size": 2}, lab.to_json_dict())
    # distinguished element: among a corpus of FDoublePrime filters, exactly
    # the ones equal to the filter of {3, 6} have an up-set disjoint from the
    # up-sets of every {r, 2r}, r != 3
    ref_keys = {
        r: {key_of(d) for d in upset_in_Fprime((r, 2 * r))} for r in plist if r != 3
    }
    corpus = [(3, 6), (6, 12), (12, 24)] + [(r, 2 * r) for r in plist if r != 3]
    for p, q in combinations(plist, 2):
        for ap, aq in ((1, 1), (p - 1, q - 1)):
            x = crt_solve(
                [Congruence(1, 2), Congruence(ap, p), Congruence(aq, q)]
            ).residue
            corpus.append(tuple(sorted({x, p * q, 2 * p * q})))
    for E in corpus:
        up_keys = {key_of(d) for d in upset_in_Fprime(E)}
        disjoint = all(not (up_keys & ref) for ref in ref_keys.values())
        want = filter_eq(E, (3, 6))
        checked += 1
        if disjoint != want:
            rec.add(list(E), want, disjoint)
    return checked, rec, []


def _suite_gamma(bounds, rng):
    plist = tuple(bounds["prime_list"])
    bound = bounds["bound"]
    grid = bounds["grid"]
    rec = _Recorder()
    checked = 0
    findings = []
    for p in plist:
        verts = vertices(p, bound)
        by_def = set(edges_by_definition(p, bound))
        closed = set(edges_closed_form(p, bound))
        checked += len(verts) * (len(verts) - 1) // 2
        for x, y in sorted(by_def - closed):
            rec.add([p, x, y], "edge (definition)", "missing (closed form)")
        for x, y in sorted(closed - by_def):
            rec.add([p, x, y], "non-edge (definition)", "edge (closed form)")
        findings.append({"p": p, "vertices": len(verts), "edges": len(by_def)})
    # infinite-graph degrees against the classified fingerprints
    for p in plist:
        tag = classify_prime(p).tag
        for a in range(grid):
            for b in range(1, grid + 1):
                v = 2**a * p**b
                deg = degree_infinite(p, v)
                checked += 1
                if p == 3:
                    ok = deg == 4 if v == 3 else deg >= 5
                    want = "4 at v=3, else >=5"
                elif tag in ("Fermat", "Mersenne"):
                    ok = deg == 2 if v == p else deg >= 3
                    want = "2 at v=p, else >=3"
                else:
                    ok = deg == (1 if a == 0 else 2)
                    want = "1 on pure powers, else 2"
                if not ok:
                    rec.add([p, v], want, deg)
    return checked, rec, findings


def _suite_zsigmondy(bounds, rng):
    a_max, n_max = bounds["max_base"], bounds["max_exponent"]
    rec = _Recorder()
    checked = 0
    exceptional = []
    for a in range(2, a_max + 1):
        for n in range(2, n_max + 1):
            got = zsigmondy_inclusion(a, n)
            want = (n == 2 and a & (a + 1) == 0) or (a, n) == (2, 6)
            checked += 1
            if got:
                exceptional.append([a, n])
            if got != want:
                rec.add([a, n], want, got)
    return checked, rec, [{"inclusions": exceptional}]


def _suite_powers(bounds, rng):
    limit = bounds["limit"]
    rec = _Recorder()
    pairs = consecutive_perfect_powers(limit)
    if pairs != [(8, 9)]:
        rec.add(limit, [[8, 9]], [list(p) for p in pairs])
    n_powers = 0
    m = 2
    while m * m <= limit:
        v = m * m
        while v <= limit:
            n_powers += 1
            v *= m
        m += 1
    return n_powers, rec, [{"consecutive_pairs": [list(p) for p in pairs]}]


def _suite_chains(bounds, rng):
    x_max, n_max = bounds["max_base"], bounds["max_exponent"]
    rec = _Recorder()
    checked = 0
    findings = []
    for x in range(2, x_max + 1):
        S = power_chain_equal_set(x, n_max)
        checked += 1
        if 1 not in S:
            rec.add([x, n_max], "1 in equality set", sorted(S))
        for m in range(1, n_max + 1):
            checked += 1
            if not filter_le((1, x**m), (1, x)):
                rec.add([x, m], "chain below filter({1,x})", False)
        mersenne_like = x & (x + 1) == 0
        if x % 2 and not mersenne_like and S != {1}:
            rec.add([x, n_max], [1], sorted(S))
        if S != {1}:
            findings.append({"x": x, "equal_exponents": sorted(S)})
    return checked, rec, findings


SUITE_DEFAULTS = {
    "closure": {"a_max": 200, "b_max": 200, "samples": 2000},
    "pairA": {"max_value": 500, "samples": 300},
    "realize": {"prime_pool": (2, 3, 5, 7, 11, 13)},
    "order": {
        "max_value": 30,
        "sizes": (2, 3),
        "raw_samples": 300,
        "random_pairs": 500,
        "random_max": 100,
        "widen_samples": 100,
    },
    "classify": {"max_value": 4096, "samples": 800},
    "upsets": {"prime_list": (3, 5, 7, 11, 13), "instances": 20},
    "gamma": {"prime_list": (3, 5, 7, 11, 13, 17, 31), "bound": 10**6, "grid": 20},
    "zsigmondy": {"max_base": 30, "max_exponent": 30},
    "powers": {"limit": 10**6},
    "chains": {"max_base": 50, "max_exponent": 5},
}

# order in which bare `--bound` integers fill a suite's knobs
BOUND_ORDER = {
    "closure": ("a_max", "b_max"),
    "pairA": ("max_value",),
    "realize": (),
    "order": ("max_value", "random_max"),
    "classify": ("max_value",),
    "upsets": ("instances",),
    "gamma": ("bound", "grid"),
    "zsigmondy": ("max_base", "max_exponent"),
    "powers": ("limit",),
    "chains": ("max_base", "max_exponent"),
}

_SUITES = {
    "closure": _suite_closure,
    "pairA": _suite_pairA,
    "realize": _suite_realize,
    "order": _suite_order,
    "classify": _suite_classify,
    "upsets": _suite_upsets,
    "gamma": _suite_gamma,
    "zsigmondy": _suite_zsigmondy,
    "powers": _suite_powers,
    "chains": _suite_chains,
}


def suite_names() -> tuple:
    return tuple(_SUITES)


def run_suite(name: str, bounds: dict = None, seed: int = 0) -> SuiteReport:
    """Run one registered suite and return its report.

    bounds overrides a subset of the suite's default knobs (unknown keys
    are rejected); seed drives every randomized phase, making the report
    body reproducible.
    """
    if name not in _SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; expected one of {', '.join(_SUITES)}")
    cfg = dict(SUITE_DEFAULTS[name])
    if bounds:
        unknown = set(bounds) - set(cfg)
        if unknown:
            raise ValueError(f"unknown bounds for suite {name}: {sorted(unknown)}")
        cfg.update(bounds)
    rng = random.Random(seed)
    t0 = time.perf_counter()
    checked, rec, findings = _SUITES[name](cfg, rng)
    elapsed = time.perf_counter() - t0
    return SuiteReport(
        suite_name=name,
        bounds=cfg,
        seed=seed,
        instances_checked=checked,
        failures=tuple(rec.records),
        failure_count=rec.total,
        findings=tuple(findings),
        elapsed=elapsed,
    )
