"""Exact integer and rational primitives.

Factorization is plain trial division behind a hard bound; anything larger
raises :class:`InputTooLargeError` instead of returning a guess.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    InputTooLargeError,
    NonFundamentalDiscriminantError,
    NonNegativeDiscriminantError,
)

DEFAULT_FACTOR_BOUND = 10**12


def factor_bound() -> int:
    """Current factorization bound; ARITHDEG_FACTOR_BOUND may only raise it."""
    raw = os.environ.get("ARITHDEG_FACTOR_BOUND")
    if not raw:
        return DEFAULT_FACTOR_BOUND
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_FACTOR_BOUND
    return max(DEFAULT_FACTOR_BOUND, value)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    i = 5
    while i * i <= n:
        if n % i == 0 or n % (i + 2) == 0:
            return False
        i += 6
    return True


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def _trial_division(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 5
    step = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += step
        step = 6 - step
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class FactoredRational:
    """Nonzero rational ``sign * prod(p**e)`` in canonical form.

    ``exponents`` is a tuple of ``(prime, exponent)`` pairs sorted by prime
    with no zero exponents, so equal rationals compare (and hash) equal.
    """

    sign: int
    exponents: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        items = self.exponents
        if isinstance(items, Mapping):
            items = tuple(items.items())
        items = tuple(sorted((int(p), int(e)) for p, e in items if e != 0))
        primes = [p for p, _ in items]
        if len(set(primes)) != len(primes):
            raise ValueError("duplicate prime in exponent mapping")
        for p in primes:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "exponents", items)

    @classmethod
    def of(cls, value: int | Fraction | FactoredRational) -> FactoredRational:
        if isinstance(value, FactoredRational):
            return value
        if isinstance(value, Fraction):
            return factorize(value.numerator) / factorize(value.denominator)
        return factorize(value)

    @classmethod
    def product(cls, factors: Iterable[FactoredRational]) -> FactoredRational:
        out = ONE
        for f in factors:
            out = out * f
        return out

    def as_dict(self) -> dict[int, int]:
        return dict(self.exponents)

    def ord(self, p: int) -> int:
        for q, e in self.exponents:
            if q == p:
                return e
        return 0

    def support(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.exponents)

    @property
    def numerator(self) -> int:
        n = self.sign
        for p, e in self.exponents:
            if e > 0:
                n *= p**e
        return n

    @property
    def denominator(self) -> int:
        d = 1
        for p, e in self.exponents:
            if e < 0:
                d *= p ** (-e)
        return d

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def is_integer(self) -> bool:
        return all(e > 0 for _, e in self.exponents)

    def residue(self, modulus: int) -> int:
        """The rational reduced mod ``modulus`` (denominator must be a unit)."""
        den = self.denominator
        if math.gcd(den, modulus) != 1:
            raise ValueError(f"denominator {den} is not invertible mod {modulus}")
        return self.numerator * pow(den, -1, modulus) % modulus

    def without(self, p: int) -> FactoredRational:
        """This rational with its p-part removed (the unit part at p)."""
        return FactoredRational(self.sign, tuple((q, e) for q, e in self.exponents if q != p))

    def __mul__(self, other: FactoredRational) -> FactoredRational:
        if not isinstance(other, FactoredRational):
            return NotImplemented
        merged = dict(self.exponents)
        for p, e in other.exponents:
            merged[p] = merged.get(p, 0) + e
        return FactoredRational(self.sign * other.sign, merged)

    def __truediv__(self, other: FactoredRational) -> FactoredRational:
        if not isinstance(other, FactoredRational):
            return NotImplemented
        return self * other.inverse()

    def __neg__(self) -> FactoredRational:
        return FactoredRational(-self.sign, self.exponents)

    def __pow__(self, k: int) -> FactoredRational:
        sign = self.sign if k % 2 else 1
        return FactoredRational(sign, tuple((p, e * k) for p, e in self.exponents))

    def inverse(self) -> FactoredRational:
        return FactoredRational(self.sign, tuple((p, -e) for p, e in self.exponents))

    def __str__(self) -> str:
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"


ONE = FactoredRational(1)


def prime_power(p: int, k: int) -> FactoredRational:
    return FactoredRational(1, ((p, k),))


def factorize(n: int) -> FactoredRational:
    """Factor a nonzero integer by trial division.

    >>> factorize(-114).as_dict()
    {2: 1, 3: 1, 19: 1}
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"factorize expects an int, got {type(n).__name__}")
    if n == 0:
        raise ValueError("cannot factor 0")
    bound = factor_bound()
    if abs(n) > bound:
        raise InputTooLargeError(f"|{n}| exceeds the factorization bound {bound}")
    return FactoredRational(1 if n > 0 else -1, _trial_division(abs(n)))


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), the usual extension of the Jacobi symbol."""
    if n == 0:
        if a == 0:
            raise ValueError("kronecker(0, 0) is undefined")
        return 1 if abs(a) == 1 else 0
    if a % 2 == 0 and n % 2 == 0:
        return 0
    t = 1
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v % 2 and a % 8 in (3, 5):
        t = -t
    if n < 0:
        n = -n
        if a < 0:
            t = -t
    # n is now odd and positive: Jacobi symbol by reciprocity
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                t = -t
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            t = -t
        a %= n
    return t if n == 1 else 0


def is_squarefree(n: int) -> bool:
    return n != 0 and all(e == 1 for _, e in factorize(n).exponents)


@dataclass(frozen=True)
class FieldData:
    """Imaginary quadratic field K, recorded by its discriminant."""

    d_K: int
    s: int

    @property
    def primes(self) -> tuple[int, ...]:
        return factorize(self.d_K).support()

    @property
    def unit_count(self) -> int:
        return {-3: 6, -4: 4}.get(self.d_K, 2)


def validate_field(d_K: int) -> FieldData:
    if d_K >= 0:
        raise NonNegativeDiscriminantError(
            f"d_K = {d_K} must be negative (K imaginary quadratic)")
    if d_K % 4 == 1:
        if not is_squarefree(d_K):
            raise NonFundamentalDiscriminantError(
                f"d_K = {d_K} is 1 mod 4 but not squarefree")
    elif d_K % 4 == 0:
        k = d_K // 4
        if k % 4 not in (2, 3):
            raise NonFundamentalDiscriminantError(
                f"d_K = {d_K}: d_K/4 = {k} is {k % 4} mod 4, need 2 or 3")
        if not is_squarefree(k):
            raise NonFundamentalDiscriminantError(
                f"d_K = {d_K}: d_K/4 = {k} is not squarefree")
    else:
        raise NonFundamentalDiscriminantError(
            f"d_K = {d_K} is {d_K % 4} mod 4, not a discriminant")
    return FieldData(d_K=d_K, s=len(factorize(d_K).exponents))


class Splitting(str, enum.Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SplittingData:
    prime: int
    kind: Splitting
    e: int
    f: int


_SHAPES = {
    Splitting.SPLIT: (1, 1),
    Splitting.INERT: (1, 2),
    Splitting.RAMIFIED: (2, 1),
}


def splitting_type(field: FieldData, ell: int) -> SplittingData:
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    d = field.d_K
    if d % ell == 0:
        kind = Splitting.RAMIFIED
    elif ell == 2:
        kind = Splitting.SPLIT if d % 8 == 1 else Splitting.INERT
    else:
        kind = Splitting.SPLIT if kronecker(d, ell) == 1 else Splitting.INERT
    e, f = _SHAPES[kind]
    return SplittingData(prime=ell, kind=kind, e=e, f=f)
