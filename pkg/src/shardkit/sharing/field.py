"""Exact arithmetic in GF(p).

Every operation reduces mod p. Multiplications and inversions can be
tallied on a caller-owned `OpCounter`; additions are never counted.
"""
import random
import secrets
from dataclasses import dataclass
from typing import Optional, Protocol

from shardkit.errors import ModulusMismatchError, ParameterError, ZeroInverseError

MERSENNE_61 = (1 << 61) - 1
DEFAULT_PRIME = MERSENNE_61

# Deterministic Miller-Rabin witnesses, exact for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class RandomSource(Protocol):
    def randrange(self, stop: int) -> int: ...


def make_rng(seed: Optional[int] = None) -> RandomSource:
    """Seeded `random.Random`, or OS entropy when no seed is given."""
    if seed is None:
        return secrets.SystemRandom()
    return random.Random(seed)


class ReplayRandom:
    """Hands out a fixed sequence of draws, one per `randrange` call."""

    def __init__(self, draws):
        self._draws = list(draws)
        self._next = 0

    def randrange(self, stop: int) -> int:
        if self._next >= len(self._draws):
            raise ParameterError(f"replay exhausted after {len(self._draws)} draws")
        value = self._draws[self._next]
        if not 0 <= value < stop:
            raise ParameterError(f"replayed draw {value} is outside [0, {stop})")
        self._next += 1
        return value

    @property
    def consumed(self) -> int:
        return self._next


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeModulus:
    p: int

    def __post_init__(self):
        if self.p < 5:
            raise ParameterError(f"prime must be at least 5, got {self.p}")
        if not is_prime(self.p):
            raise ParameterError(f"{self.p} is not prime")

    @property
    def bit_length(self) -> int:
        return self.p.bit_length()

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value % self.p, self)

    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def __str__(self):
        return f"GF({self.p})"


@dataclass(frozen=True)
class FieldElement:
    value: int
    modulus: PrimeModulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.p:
            raise ParameterError(f"{self.value} is not a residue mod {self.modulus.p}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return add(self, other)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return sub(self, other)

    def __neg__(self) -> "FieldElement":
        return neg(self)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FieldElement({self.value}, GF({self.modulus.p}))"


@dataclass
class OpCounter:
    multiplications: int = 0
    inversions: int = 0


def _check(a: FieldElement, b: FieldElement) -> int:
    if a.modulus.p != b.modulus.p:
        raise ModulusMismatchError(f"cannot combine GF({a.modulus.p}) with GF({b.modulus.p})")
    return a.modulus.p


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    p = _check(a, b)
    return FieldElement((a.value + b.value) % p, a.modulus)


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    p = _check(a, b)
    return FieldElement((a.value - b.value) % p, a.modulus)


def neg(a: FieldElement) -> FieldElement:
    return FieldElement(-a.value % a.modulus.p, a.modulus)


def mul(a: FieldElement, b: FieldElement, counter: Optional[OpCounter] = None) -> FieldElement:
    p = _check(a, b)
    if counter is not None:
        counter.multiplications += 1
    return FieldElement(a.value * b.value % p, a.modulus)


def _euclid_divide(num: int, den: int, p: int) -> int:
    # Extended Euclid on (p, den) with the Bezout coefficient of den
    # seeded by num instead of 1, so it ends at num * den^-1 mod p.
    r0, r1 = p, den
    s0, s1 = 0, num
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, (s0 - q * s1) % p
    return s0 % p


def inv(a: FieldElement, counter: Optional[OpCounter] = None) -> FieldElement:
    if a.value == 0:
        raise ZeroInverseError()
    if counter is not None:
        counter.inversions += 1
    return FieldElement(_euclid_divide(1, a.value, a.modulus.p), a.modulus)


def div(a: FieldElement, b: FieldElement, counter: Optional[OpCounter] = None) -> FieldElement:
    """a / b in one extended-Euclid run; counted as one inversion."""
    p = _check(a, b)
    if b.value == 0:
        raise ZeroInverseError()
    if counter is not None:
        counter.inversions += 1
    return FieldElement(_euclid_divide(a.value, b.value, p), a.modulus)


def sample_uniform(rng: RandomSource, modulus: PrimeModulus) -> FieldElement:
    return FieldElement(rng.randrange(modulus.p), modulus)
