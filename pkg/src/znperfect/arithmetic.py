"""Prime factorization of n and the exponent-vector algebra of its divisors.

A divisor of ``n = p1^a1 * ... * pk^ak`` is stored as its exponent vector
``(e1, ..., ek)`` relative to one shared :class:`Factorization`. gcd and lcm
are then componentwise min and max.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import isqrt, prod

MAX_N = 2**63 - 1


@dataclass(frozen=True)
class Factorization:
    """Sorted prime factorization ``((p1, a1), ..., (pk, ak))`` of ``n``."""

    primes: tuple[tuple[int, int], ...]
    n: int

    def __post_init__(self) -> None:
        last = 1
        for p, a in self.primes:
            if p <= last or a < 1:
                raise ValueError(f"malformed factorization entry ({p}, {a})")
            last = p
        if prod(p**a for p, a in self.primes) != self.n:
            raise ValueError("factorization does not multiply out to n")

    @property
    def k(self) -> int:
        return len(self.primes)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(a for _, a in self.primes)

    @property
    def divisor_count(self) -> int:
        return prod(a + 1 for _, a in self.primes)

    def divisor(self, exponents) -> Divisor:
        return Divisor(self, tuple(exponents))

    def divisor_of(self, m: int) -> Divisor:
        """Exponent vector of the integer divisor ``m`` of ``n``."""
        if m < 1 or self.n % m:
            raise ValueError(f"{m} does not divide {self.n}")
        exps = []
        for p, _ in self.primes:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            exps.append(e)
        return Divisor(self, tuple(exps))

    def __str__(self) -> str:
        if not self.primes:
            return "1"
        return " * ".join(str(p) if a == 1 else f"{p}^{a}" for p, a in self.primes)


@dataclass(frozen=True)
class Divisor:
    """A divisor of ``factorization.n`` given by its exponent vector."""

    factorization: Factorization
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        alphas = self.factorization.exponents
        if len(self.exponents) != len(alphas):
            raise ValueError("exponent vector length does not match factorization")
        if any(not 0 <= e <= a for e, a in zip(self.exponents, alphas)):
            raise ValueError(f"exponents {self.exponents} exceed {alphas}")

    @property
    def value(self) -> int:
        return prod(p**e for (p, _), e in zip(self.factorization.primes, self.exponents))

    @property
    def is_trivial(self) -> bool:
        return self.exponents == self.factorization.exponents or not any(self.exponents)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"Divisor({self.value} | {self.factorization.n})"


def factorize(n: int) -> Factorization:
    """Factor ``n`` by deterministic trial division.

    Raises ``ValueError`` for ``n < 1`` and ``OverflowError`` above ``2**63 - 1``.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"expected an integer, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if n > MAX_N:
        raise OverflowError(f"n={n} exceeds the supported range 1..2**63-1")
    primes = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            primes.append((p, a))
    # candidates 6j +/- 1; a large cofactor is tested for primality only when it changes
    p, step = 5, 2
    cofactor_checked = False
    while p <= isqrt(m):
        if not cofactor_checked and m > 10**12:
            if _is_prime_64(m):
                break
            cofactor_checked = True
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            primes.append((p, a))
            cofactor_checked = False
        p += step
        step = 6 - step
    if m > 1:
        primes.append((m, 1))
    return Factorization(tuple(primes), n)


# Deterministic Miller-Rabin bases, exact for all m < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime_64(m: int) -> bool:
    d, r = m - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for b in _MR_BASES:
        x = pow(b, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _check_same(a: Divisor, b: Divisor) -> None:
    if a.factorization != b.factorization:
        raise ValueError("divisors belong to different factorizations")


def divisor_lcm(a: Divisor, b: Divisor) -> Divisor:
    _check_same(a, b)
    return Divisor(a.factorization, tuple(map(max, a.exponents, b.exponents)))


def divisor_gcd(a: Divisor, b: Divisor) -> Divisor:
    _check_same(a, b)
    return Divisor(a.factorization, tuple(map(min, a.exponents, b.exponents)))


def nontrivial_divisors(f: Factorization) -> list[Divisor]:
    """All divisors other than 1 and n, ascending by value."""
    ranges = [range(a + 1) for a in f.exponents]
    divs = [Divisor(f, exps) for exps in product(*ranges)]
    divs = [d for d in divs if not d.is_trivial]
    divs.sort(key=lambda d: d.value)
    return divs
