"""Unit tests for the basic number-theory layer."""

import pytest

from kirchlab import (
    Congruence,
    NonCoprimeModuli,
    NotCoprime,
    NotPrime,
    PrimeSet,
    SearchBoundExceeded,
    classify_prime,
    consecutive_perfect_powers,
    crt_solve,
    first_prime_in_progression,
    is_prime,
    is_square_free,
    are_coprime,
    prime_factors,
    primes_upto,
    zsigmondy_inclusion,
)


def _brute_primes(n):
    flags = [True] * (n + 1)
    flags[0:2] = [False, False]
    for p in range(2, int(n**0.5) + 1):
        if flags[p]:
            for q in range(p * p, n + 1, p):
                flags[q] = False
    return [i for i in range(n + 1) if flags[i]]


def test_primes_upto_matches_reference_sieve():
    assert list(primes_upto(100)) == _brute_primes(100)
    assert list(primes_upto(2)) == [2]
    assert list(primes_upto(1)) == []
    assert list(primes_upto(0)) == []


def test_primes_upto_grows_monotonically():
    small = list(primes_upto(50))
    big = list(primes_upto(10_000))
    assert big[: len(small)] == small
    assert big[-1] == 9973


def test_is_prime_small_values():
    reference = set(_brute_primes(2000))
    for n in range(-5, 2001):
        assert is_prime(n) == (n in reference), n


def test_is_prime_larger_witnesses():
    assert is_prime(999_999_937)
    assert not is_prime(999_999_937 - 1)
    assert is_prime(2**31 - 1)


def test_prime_factors_recovers_every_integer_up_to_1e5():
    # Product of the returned primes (with multiplicity stripped off)
    # must reconstruct x exactly.
    for x in range(2, 100_001):
        fs = prime_factors(x)
        rem = x
        for p in fs:
            assert x % p == 0
            while rem % p == 0:
                rem //= p
        assert rem == 1, x


def test_prime_factors_examples():
    assert prime_factors(1).elements == ()
    assert prime_factors(12).elements == (2, 3)
    assert prime_factors(97).elements == (97,)
    assert prime_factors(2 * 3 * 5 * 7 * 11).elements == (2, 3, 5, 7, 11)


def test_prime_factors_rejects_nonpositive_and_huge():
    with pytest.raises(ValueError):
        prime_factors(0)
    with pytest.raises(ValueError):
        prime_factors(-6)
    with pytest.raises(ValueError):
        prime_factors(10**9 + 1)


def test_is_square_free_matches_definition():
    for n in range(1, 3000):
        brute = all(n % (p * p) != 0 for p in _brute_primes(int(n**0.5) + 1))
        assert is_square_free(n) == brute, n


def test_are_coprime():
    assert are_coprime(3, 8)
    assert are_coprime(1, 1)
    assert not are_coprime(6, 9)
    assert not are_coprime(0, 5)  # gcd(0, 5) = 5


def test_prime_set_behaves_like_a_set():
    s = PrimeSet.of([5, 3, 3, 2])
    assert s.elements == (2, 3, 5)
    assert 3 in s and 7 not in s
    assert len(s) == 3
    assert bool(s)
    assert not bool(PrimeSet.of(()))
    t = PrimeSet.of((3, 7))
    assert (s | t).elements == (2, 3, 5, 7)
    assert (s & t).elements == (3,)
    assert (s - t).elements == (2, 5)
    assert PrimeSet.of((3,)) <= s
    assert not (t <= s)
    assert s.as_set() == {2, 3, 5}


def test_prime_set_rejects_non_primes():
    with pytest.raises(NotPrime):
        PrimeSet.of((4,))
    with pytest.raises(ValueError):
        PrimeSet.of((1,))


def test_crt_examples():
    got = crt_solve([Congruence(2, 3), Congruence(3, 5)])
    assert (got.residue, got.modulus) == (8, 15)
    got = crt_solve([Congruence(1, 2), Congruence(0, 3), Congruence(0, 5)])
    assert (got.residue, got.modulus) == (15, 30)
    got = crt_solve([])
    assert (got.residue, got.modulus) == (0, 1)


def test_crt_brute_force_cross_check():
    moduli = (2, 3, 5, 7)
    for a in range(2):
        for b in range(3):
            for c in range(5):
                for d in range(7):
                    sol = crt_solve(
                        [Congruence(a, 2), Congruence(b, 3), Congruence(c, 5), Congruence(d, 7)]
                    )
                    assert sol.modulus == 210
                    z = sol.residue if sol.residue else 210
                    assert z % 2 == a and z % 3 == b and z % 5 == c and z % 7 == d


def test_crt_rejects_shared_factor():
    with pytest.raises(NonCoprimeModuli):
        crt_solve([Congruence(1, 6), Congruence(2, 4)])


def test_congruence_validation():
    with pytest.raises(ValueError):
        Congruence(3, 3)
    with pytest.raises(ValueError):
        Congruence(-1, 5)
    with pytest.raises(ValueError):
        Congruence(0, 0)


@pytest.mark.parametrize(
    "p, tag, m",
    [
        (3, "Both", 2),
        (5, "Fermat", 2),
        (7, "Mersenne", 3),
        (17, "Fermat", 4),
        (31, "Mersenne", 5),
        (11, "Neither", None),
        (13, "Neither", None),
        (257, "Fermat", 8),
        (8191, "Mersenne", 13),
        (65537, "Fermat", 16),
    ],
)
def test_classify_prime_examples(p, tag, m):
    got = classify_prime(p)
    assert got.tag == tag
    assert got.witness_exponent == m


def test_classify_prime_witness_structure():
    # Every Fermat witness exponent is a power of two; every Mersenne
    # witness exponent is prime.  Check everything below 1e5.
    for p in primes_upto(100_000):
        p = int(p)
        if p == 2:
            continue
        tag, m = classify_prime(p).tag, classify_prime(p).witness_exponent
        if tag == "Fermat":
            assert 2**m + 1 == p and (m & (m - 1)) == 0
        elif tag == "Mersenne":
            assert 2**m - 1 == p and is_prime(m)
        elif tag == "Both":
            assert p == 3
        else:
            assert tag == "Neither" and m is None


def test_classify_prime_handles_two_and_rejects_composites():
    assert classify_prime(2).tag == "Neither"
    with pytest.raises(NotPrime):
        classify_prime(9)


def test_zsigmondy_inclusion_examples():
    assert zsigmondy_inclusion(2, 6)  # 63 = 3^2 * 7, support of 2^1..2^5 covers it
    assert zsigmondy_inclusion(3, 2)  # 8 has only the prime 2, present in 3^1-1
    assert not zsigmondy_inclusion(2, 5)  # 31 is new
    assert not zsigmondy_inclusion(10, 3)
    with pytest.raises(ValueError):
        zsigmondy_inclusion(1, 5)
    with pytest.raises(ValueError):
        zsigmondy_inclusion(2, 1)


def test_consecutive_perfect_powers_small_limit():
    assert consecutive_perfect_powers(10) == [(8, 9)]
    assert consecutive_perfect_powers(8) == []
    with pytest.raises(ValueError):
        consecutive_perfect_powers(1)


def test_first_prime_in_progression_examples():
    assert first_prime_in_progression(3, 4) == 7  # skips the lower endpoint itself
    assert first_prime_in_progression(1, 10) == 11
    assert first_prime_in_progression(4, 9) == 13
    with pytest.raises(NotCoprime):
        first_prime_in_progression(2, 4)
    with pytest.raises(SearchBoundExceeded):
        first_prime_in_progression(1, 8, max_terms=1)  # 9 is composite
