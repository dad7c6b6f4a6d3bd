"""Hilbert symbols over Q, local invariants of B, and the Diff sets."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .arithmetic import (
    FactoredRational,
    FieldData,
    Splitting,
    factorize,
    is_prime,
    kronecker,
    splitting_type,
)
from .errors import (
    DegenerateQuaternionError,
    NotInertError,
    OracleOverflowError,
    QuaternionDiscriminantError,
)

RationalLike = Union[int, Fraction, FactoredRational]


@dataclass(frozen=True)
class Place:
    """A place of Q: ``prime`` is a prime number, or None for infinity."""

    prime: int | None = None

    def __post_init__(self):
        if self.prime is not None and not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")

    @classmethod
    def finite(cls, p: int) -> Place:
        return cls(p)

    @property
    def is_infinite(self) -> bool:
        return self.prime is None

    def __str__(self) -> str:
        return "inf" if self.prime is None else str(self.prime)


INFINITY = Place(None)


def _place(v: Place | int) -> Place:
    return v if isinstance(v, Place) else Place(v)


def _legendre(u: int, p: int) -> int:
    return kronecker(u % p, p)


def _hilbert_odd(a: FactoredRational, b: FactoredRational, p: int) -> int:
    alpha, beta = a.ord(p), b.ord(p)
    u = a.without(p).residue(p)
    v = b.without(p).residue(p)
    sign = -1 if (alpha * beta) % 2 and p % 4 == 3 else 1
    if beta % 2:
        sign *= _legendre(u, p)
    if alpha % 2:
        sign *= _legendre(v, p)
    return sign


def _hilbert_two(a: FactoredRational, b: FactoredRational) -> int:
    alpha, beta = a.ord(2), b.ord(2)
    u = a.without(2).residue(8)
    v = b.without(2).residue(8)

    def eps(x):
        return ((x - 1) // 2) % 2

    def omega(x):
        return ((x * x - 1) // 8) % 2

    exponent = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
    return -1 if exponent % 2 else 1


def hilbert_symbol(a: RationalLike, b: RationalLike, v: Place | int) -> int:
    """(a, b)_v for nonzero rationals a, b."""
    a = FactoredRational.of(a)
    b = FactoredRational.of(b)
    v = _place(v)
    if v.is_infinite:
        return -1 if a.sign < 0 and b.sign < 0 else 1
    if v.prime == 2:
        return _hilbert_two(a, b)
    return _hilbert_odd(a, b, v.prime)


# -- brute-force oracle ------------------------------------------------------

ORACLE_MAX_PRIME = 1000


def _strip_squares(n: int, p: int) -> tuple[int, int]:
    """Divide out p**2 as often as possible; return (reduced n, ord_p)."""
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return n * p ** (k % 2), k % 2


def _has_primitive_solution(a: int, b: int, p: int, k: int) -> bool:
    # A primitive solution can be scaled so its first unit coordinate is 1.
    # In each chart the two free coordinates s, t enter additively:
    # a x^2 + b y^2 - z^2 = g(s) + h(t).
    pp = p * p
    charts = (
        (lambda s: a + b * s * s, lambda t: -t * t),                # x = 1, y = s, z = t
        (lambda s: a * pp * s * s + b, lambda t: -t * t),           # x = p s, y = 1, z = t
        (lambda s: a * pp * s * s - 1, lambda t: b * pp * t * t),   # x = p s, y = p t, z = 1
    )
    return any(_lift_search(g, h, p, k) for g, h in charts)


def _lift_search(g, h, p, k) -> bool:
    # depth-first over residues (s, t) mod p**j, one p-adic digit per level
    stack = [(0, 0, 0)]
    while stack:
        s, t, j = stack.pop()
        if j == k:
            return True
        step = p**j
        mod = step * p
        by_value: dict[int, list[int]] = {}
        for dt in range(p):
            t2 = t + dt * step
            by_value.setdefault(h(t2) % mod, []).append(t2)
        for ds in range(p):
            s2 = s + ds * step
            for t2 in by_value.get(-g(s2) % mod, ()):
                stack.append((s2, t2, j + 1))
    return False


def hilbert_oracle(a: int, b: int, ell: int) -> int:
    """Decide (a, b)_ell by searching for a primitive solution of
    z^2 = a x^2 + b y^2 modulo ell^k.

    Square factors ell^2 are stripped from a and b first (substitute
    x -> ell x), so both valuations are 0 or 1; then
    k = 3 + 2(ord(a) + ord(b)) (+3 at ell = 2).
    """
    if a == 0 or b == 0:
        raise ValueError("hilbert_oracle needs nonzero a and b")
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if ell > ORACLE_MAX_PRIME:
        raise OracleOverflowError(
            f"prime {ell} above the oracle limit {ORACLE_MAX_PRIME}")
    a, alpha = _strip_squares(a, ell)
    b, beta = _strip_squares(b, ell)
    k = 3 + 2 * (alpha + beta) + (3 if ell == 2 else 0)
    mod = ell**k
    return 1 if _has_primitive_solution(a % mod, b % mod, ell, k) else -1


# -- quaternion algebra ------------------------------------------------------

@dataclass(frozen=True)
class QuaternionData:
    d_B: int
    ramified_primes: tuple[int, ...]
    r: int
    degenerate: bool


def validate_quaternion(d_B: int, field: FieldData,
                        allow_degenerate: bool = False) -> QuaternionData:
    """Check d_B against K: squarefree, even r, every ramified prime inert."""
    if d_B < 1:
        raise QuaternionDiscriminantError(f"d_B = {d_B} must be a positive integer")
    if d_B == 1:
        if not allow_degenerate:
            raise DegenerateQuaternionError(
                "d_B = 1 is the matrix algebra; pass allow_degenerate to use it")
        return QuaternionData(d_B=1, ramified_primes=(), r=0, degenerate=True)
    fac = factorize(d_B)
    if not all(e == 1 for _, e in fac.exponents):
        raise QuaternionDiscriminantError(f"d_B = {d_B} is not squarefree")
    primes = fac.support()
    if len(primes) % 2:
        raise QuaternionDiscriminantError(
            f"d_B = {d_B} has {len(primes)} prime factors; an indefinite "
            "quaternion algebra needs an even number")
    for p in primes:
        kind = splitting_type(field, p).kind
        if kind is not Splitting.INERT:
            raise NotInertError(p, kind.value)
    return QuaternionData(d_B=d_B, ramified_primes=primes, r=len(primes),
                          degenerate=False)


def inv_B(q: QuaternionData, v: Place | int) -> int:
    v = _place(v)
    if v.is_infinite:
        return 1
    return -1 if q.d_B % v.prime == 0 else 1


# -- Diff sets ---------------------------------------------------------------

@dataclass(frozen=True)
class DiffSet:
    primes: tuple[int, ...]
    variant: str  # "plain" or "quaternionic"

    def __len__(self) -> int:
        return len(self.primes)

    def __contains__(self, p) -> bool:
        return p in self.primes

    @property
    def singleton(self) -> int | None:
        return self.primes[0] if len(self.primes) == 1 else None


def _candidate_primes(*values: int) -> list[int]:
    out: set[int] = {2}
    for n in values:
        out.update(factorize(n).support())
    return sorted(out)


def diff_set(field: FieldData, m: int) -> DiffSet:
    """Primes where (d_K, -m) = -1.  Odd primes prime to m d_K give +1."""
    if m < 1:
        raise ValueError(f"m = {m} must be a positive integer")
    d = factorize(field.d_K)
    minus_m = -factorize(m)
    primes = tuple(ell for ell in _candidate_primes(m, field.d_K)
                   if hilbert_symbol(d, minus_m, ell) == -1)
    return DiffSet(primes, "plain")


def diff_B_set(field: FieldData, q: QuaternionData, m: int) -> DiffSet:
    if m < 1:
        raise ValueError(f"m = {m} must be a positive integer")
    d = factorize(field.d_K)
    minus_m = -factorize(m)
    primes = tuple(ell for ell in _candidate_primes(m, field.d_K, q.d_B)
                   if hilbert_symbol(d, minus_m, ell) * inv_B(q, ell) == -1)
    return DiffSet(primes, "plain" if q.degenerate else "quaternionic")
