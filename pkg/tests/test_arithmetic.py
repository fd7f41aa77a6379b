from math import gcd, prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import divisors_between, trial_division
from znperfect.arithmetic import (
    MAX_N,
    Divisor,
    Factorization,
    divisor_gcd,
    divisor_lcm,
    factorize,
    nontrivial_divisors,
)

N12 = factorize(12)


def test_factorize_examples():
    assert factorize(1).primes == ()
    assert factorize(1).k == 0
    assert factorize(12).primes == ((2, 2), (3, 1))
    assert factorize(2310).primes == ((2, 1), (3, 1), (5, 1), (7, 1), (11, 1))


@pytest.mark.parametrize("n", [0, -5])
def test_factorize_rejects_nonpositive(n):
    with pytest.raises(ValueError):
        factorize(n)


def test_factorize_range_error():
    with pytest.raises(OverflowError):
        factorize(MAX_N + 1)


def test_factorize_top_of_range():
    # largest prime below 2**63 and a 64-bit prime power
    assert factorize(2**63 - 25).primes == ((2**63 - 25, 1),)
    assert factorize(2**62).primes == ((2, 62),)
    f = factorize(MAX_N)
    assert f.n == MAX_N and prod(p**a for p, a in f.primes) == MAX_N


def test_factorize_matches_trial_division_oracle():
    for n in range(1, 20001):
        assert list(factorize(n).primes) == trial_division(n), n


def test_factorize_round_trip_to_a_million():
    for n in range(1, 10**6 + 1, 7):
        f = factorize(n)
        assert prod(p**a for p, a in f.primes) == n


def test_factorization_validates():
    with pytest.raises(ValueError):
        Factorization(((3, 1), (2, 1)), 6)
    with pytest.raises(ValueError):
        Factorization(((2, 1),), 4)


def test_lcm_gcd_examples():
    a, b = N12.divisor((1, 0)), N12.divisor((0, 1))
    assert divisor_lcm(a, b).exponents == (1, 1)
    assert divisor_lcm(a, b).value == 6
    assert divisor_lcm(a, a) == a
    assert divisor_lcm(N12.divisor((2, 0)), b).value == 12
    assert divisor_gcd(a, b).exponents == (0, 0)
    assert divisor_gcd(a, b).value == 1
    assert divisor_gcd(N12.divisor((2, 1)), N12.divisor((1, 1))).value == 6
    assert divisor_gcd(a, a) == a


def test_mismatched_factorizations_rejected():
    other = factorize(18)
    with pytest.raises(ValueError):
        divisor_lcm(N12.divisor((1, 0)), other.divisor((1, 0)))
    with pytest.raises(ValueError):
        divisor_gcd(N12.divisor((1, 0)), other.divisor((1, 0)))


def test_divisor_bounds_checked():
    with pytest.raises(ValueError):
        Divisor(N12, (3, 0))
    with pytest.raises(ValueError):
        Divisor(N12, (1,))


def test_nontrivial_divisors_examples():
    assert [d.value for d in nontrivial_divisors(factorize(12))] == [2, 3, 4, 6]
    assert nontrivial_divisors(factorize(7)) == []
    assert nontrivial_divisors(factorize(1)) == []
    assert [d.value for d in nontrivial_divisors(factorize(30))] == [2, 3, 5, 6, 10, 15]


def test_nontrivial_divisor_count_against_scan():
    for n in range(2, 10001):
        f = factorize(n)
        assert len(nontrivial_divisors(f)) == f.divisor_count - 2 == len(divisors_between(n)), n


def test_nontrivial_divisors_match_scan_values():
    for n in (360, 720, 1001, 2310):
        assert [d.value for d in nontrivial_divisors(factorize(n))] == divisors_between(n)


@st.composite
def divisor_triples(draw):
    n = draw(st.integers(min_value=2, max_value=50000))
    f = factorize(n)
    vec = st.tuples(*[st.integers(0, a) for a in f.exponents])
    return f, [f.divisor(draw(vec)) for _ in range(3)]


@given(divisor_triples())
def test_lcm_gcd_laws(args):
    f, (a, b, c) = args
    assert divisor_lcm(a, b).value * divisor_gcd(a, b).value == a.value * b.value
    assert divisor_lcm(a, b).value == a.value * b.value // gcd(a.value, b.value)
    assert divisor_gcd(a, b).value == gcd(a.value, b.value)
    assert divisor_lcm(a, b) == divisor_lcm(b, a)
    assert divisor_gcd(a, b) == divisor_gcd(b, a)
    assert divisor_lcm(divisor_lcm(a, b), c) == divisor_lcm(a, divisor_lcm(b, c))
    assert divisor_gcd(divisor_gcd(a, b), c) == divisor_gcd(a, divisor_gcd(b, c))
    assert divisor_lcm(a, a) == a and divisor_gcd(a, a) == a
    assert f.n % a.value == 0


@given(divisor_triples())
def test_lcm_monotone(args):
    f, (a, b, c) = args
    if all(x <= y for x, y in zip(a.exponents, b.exponents)):
        lac, lbc = divisor_lcm(a, c), divisor_lcm(b, c)
        assert all(x <= y for x, y in zip(lac.exponents, lbc.exponents))
        assert lbc.value % lac.value == 0


# capped at 2**40: a 63-bit semiprime with two ~31-bit factors takes ~1e9 trial divisions
@given(st.integers(min_value=1, max_value=2**40))
def test_factorize_round_trip_random(n):
    f = factorize(n)
    assert f.n == n
    assert all(trial_division(p) == [(p, 1)] for p, _ in f.primes if p < 10**6)


def test_str_form():
    assert str(factorize(12)) == "2^2 * 3"
    assert str(factorize(1)) == "1"
