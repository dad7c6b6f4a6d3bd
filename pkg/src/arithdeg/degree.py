"""Arithmetic degrees of the special cycles Y_m (QM surfaces) and Z_m
(CM elliptic curves).

A degree is always an integer multiple of log p for one prime p, so it is
carried as ``(degree_coefficient, p)``.  :func:`degree_Y` evaluates the
closed formula and, independently, the product
``f_p * #points * length``; the two must agree exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arithmetic import (
    FactoredRational,
    FieldData,
    Splitting,
    SplittingData,
    factorize,
    is_prime,
    prime_power,
    splitting_type,
)
from .errors import ConsistencyError, NonPrimeDiscriminantError, SplitPrimeError
from .ideals import r_global, r_local
from .local import DiffSet, QuaternionData, diff_B_set, diff_set, validate_quaternion


@dataclass(frozen=True)
class Setting:
    field: FieldData
    quaternion: QuaternionData

    @classmethod
    def build(cls, field: FieldData, d_B: int, allow_degenerate: bool = False) -> Setting:
        return cls(field, validate_quaternion(d_B, field, allow_degenerate))

    @property
    def r(self) -> int:
        return self.quaternion.r

    @property
    def s(self) -> int:
        return self.field.s


@dataclass(frozen=True)
class DegreeReport:
    stack: str  # "Y" or "Z"
    m: int
    d_K: int
    d_B: int
    degenerate: bool
    diff: DiffSet
    supported: bool
    p: int | None
    splitting_at_p: SplittingData | None
    epsilon_p: int | None
    argument_M: FactoredRational | None
    R_of_M: int
    point_count_coefficient: int
    length: Fraction
    degree_coefficient: int

    @property
    def degree_display(self) -> str:
        if self.degree_coefficient == 0:
            return "0"
        return f"{self.degree_coefficient}·log({self.p})"

    @property
    def degree_approx(self) -> float:
        if self.degree_coefficient == 0:
            return 0.0
        return float(f"{self.degree_coefficient * math.log(self.p):.15g}")


def _nonsplit(field: FieldData, p: int) -> SplittingData:
    sp = splitting_type(field, p)
    if sp.kind is Splitting.SPLIT:
        raise SplitPrimeError(p)
    return sp


def epsilon(setting: Setting, p: int) -> int:
    return 1 - (1 if setting.quaternion.d_B % p == 0 else 0)


def beta_valuation(setting: Setting, ell: int, p: int) -> int:
    """ord_ell of the scalar relating deg* on L_ell to the norm form."""
    sp = _nonsplit(setting.field, p)
    if ell == p:
        return 2 - sp.e * epsilon(setting, p)
    return 1 if setting.quaternion.d_B % ell == 0 else 0


def argument_M(setting: Setting, m: int, p: int) -> FactoredRational:
    """m * d_B^-1 * p^((e_p - 1) eps_p - 1)."""
    sp = _nonsplit(setting.field, p)
    exp = (sp.e - 1) * epsilon(setting, p) - 1
    return factorize(m) / factorize(setting.quaternion.d_B) * prime_power(p, exp)


def orbital_integral(setting: Setting, ell: int, m: int, p: int) -> int:
    e_ell = splitting_type(setting.field, ell).e
    return e_ell * r_local(setting.field, ell, argument_M(setting, m, p))


def _check_beta_agreement(setting: Setting, m: int, p: int, M: FactoredRational) -> None:
    # M must equal m / prod(ell^ord(beta_ell)) valuation by valuation
    mf = factorize(m)
    for ell in set(mf.support()) | set(M.support()) | {p} | set(setting.quaternion.ramified_primes):
        if M.ord(ell) != mf.ord(ell) - beta_valuation(setting, ell, p):
            raise ConsistencyError(
                f"ord_{ell}(M) = {M.ord(ell)} disagrees with ord_{ell}(m) - "
                f"ord_{ell}(beta) = {mf.ord(ell) - beta_valuation(setting, ell, p)}")


def point_count(setting: Setting, m: int) -> tuple[int, int | None]:
    """(#geometric points of Y_m over the supporting prime, that prime)."""
    diff = diff_B_set(setting.field, setting.quaternion, m)
    p = diff.singleton
    if p is None:
        return 0, None
    M = argument_M(setting, m, p)
    count = 2 ** (setting.r + setting.s) * r_global(setting.field, M)

    # same count as 2^r times the product of local orbital integrals
    places = set(M.support()) | set(setting.field.primes) | {p}
    product = 1
    for ell in places:
        product *= orbital_integral(setting, ell, m, p)
    if 2**setting.r * product != count:
        raise ConsistencyError(
            f"orbital product {2**setting.r * product} != point count {count}")

    vanishing_allowed = setting.quaternion.d_B % p == 0 and m % p != 0
    if count == 0 and not vanishing_allowed:
        raise ConsistencyError(
            f"point count vanishes at p = {p} for m = {m} outside the p | d_B, "
            "ord_p(m) = 0 case")
    if count > 0 and vanishing_allowed:
        raise ConsistencyError(f"point count {count} should vanish at p = {p}, m = {m}")
    return count, p


def local_length(setting: Setting, m: int, p: int) -> Fraction:
    """Length of the strictly Henselian local ring at a point of Y_m over p."""
    sp = _nonsplit(setting.field, p)
    eps = epsilon(setting, p)
    o = (factorize(m) * factorize(setting.field.d_K)).ord(p)
    return eps + sp.e * Fraction(o - eps, 2)


def kry_length(field: FieldData, m: int, p: int) -> Fraction:
    """Gross's length 1 + ord_p(m d_K / p) / f_p for the elliptic-curve cycle."""
    sp = _nonsplit(field, p)
    o = (factorize(m) * factorize(field.d_K)).ord(p) - 1
    return 1 + Fraction(o, sp.f)


def closed_form_Y(setting: Setting, m: int, p: int) -> int:
    sp = _nonsplit(setting.field, p)
    eps = epsilon(setting, p)
    o = (factorize(m) * factorize(setting.field.d_K)).ord(p)
    R = r_global(setting.field, argument_M(setting, m, p))
    return 2 ** (setting.r + setting.s) * R * (o + eps * sp.f - eps)


def _empty_report(stack, m, d_K, d_B, degenerate, diff) -> DegreeReport:
    return DegreeReport(
        stack=stack, m=m, d_K=d_K, d_B=d_B, degenerate=degenerate, diff=diff,
        supported=False, p=None, splitting_at_p=None, epsilon_p=None,
        argument_M=None, R_of_M=0, point_count_coefficient=0,
        length=Fraction(0), degree_coefficient=0)


def degree_Y(setting: Setting, m: int) -> DegreeReport:
    if m < 1:
        raise ValueError(f"m = {m} must be a positive integer")
    field, q = setting.field, setting.quaternion
    diff = diff_B_set(field, q, m)
    p = diff.singleton
    if p is None:
        return _empty_report("Y", m, field.d_K, q.d_B, q.degenerate, diff)

    sp = _nonsplit(field, p)
    M = argument_M(setting, m, p)
    _check_beta_agreement(setting, m, p, M)
    for ell in q.ramified_primes:
        if ell != p and M.ord(ell) < 0:
            raise ConsistencyError(f"ord_{ell}(M) = {M.ord(ell)} < 0 under singleton Diff_B")
    R = r_global(field, M)
    count, _ = point_count(setting, m)
    if count == 0:
        length = Fraction(0)
    else:
        length = local_length(setting, m, p)
        if length.denominator != 1 or length < 0:
            raise ConsistencyError(f"length {length} is not a nonnegative integer")
    via_points = sp.f * count * length
    closed = closed_form_Y(setting, m, p)
    if via_points != closed:
        raise ConsistencyError(
            f"closed form {closed} != f_p * count * length = {via_points} (m = {m})")
    return DegreeReport(
        stack="Y", m=m, d_K=field.d_K, d_B=q.d_B, degenerate=q.degenerate,
        diff=diff, supported=True, p=p, splitting_at_p=sp,
        epsilon_p=epsilon(setting, p), argument_M=M, R_of_M=R,
        point_count_coefficient=count, length=length, degree_coefficient=closed)


def _require_prime_discriminant(field: FieldData) -> None:
    if not is_prime(-field.d_K):
        raise NonPrimeDiscriminantError(
            f"-d_K = {-field.d_K} is not prime; the elliptic-curve formula "
            "assumes it is")


def degree_Z(field: FieldData, m: int) -> DegreeReport:
    """Degree of Z_m; coefficient 2 R(m p^(e_p - 2)) (ord_p(m) + 1)."""
    _require_prime_discriminant(field)
    if m < 1:
        raise ValueError(f"m = {m} must be a positive integer")
    diff = diff_set(field, m)
    p = diff.singleton
    if p is None:
        return _empty_report("Z", m, field.d_K, 1, True, diff)
    sp = _nonsplit(field, p)
    M = factorize(m) * prime_power(p, sp.e - 2)
    R = r_global(field, M)
    count = 2 * R
    coefficient = 2 * R * (factorize(m).ord(p) + 1)
    length = kry_length(field, m, p) if count else Fraction(0)
    if count and length.denominator != 1:
        raise ConsistencyError(f"length {length} is not an integer")
    if sp.f * count * length != coefficient:
        raise ConsistencyError(
            f"closed form {coefficient} != f_p * count * length = "
            f"{sp.f * count * length} (m = {m})")
    return DegreeReport(
        stack="Z", m=m, d_K=field.d_K, d_B=1, degenerate=True, diff=diff,
        supported=True, p=p, splitting_at_p=sp, epsilon_p=1, argument_M=M,
        R_of_M=R, point_count_coefficient=count, length=length,
        degree_coefficient=coefficient)


def kry_reduction_check(field: FieldData, m: int) -> bool:
    """Does Y_m with d_B = 1 reproduce Z_m (same prime, same coefficient)?"""
    _require_prime_discriminant(field)
    y = degree_Y(Setting.build(field, 1, allow_degenerate=True), m)
    z = degree_Z(field, m)
    if y.degree_coefficient != z.degree_coefficient:
        return False
    return y.degree_coefficient == 0 or y.p == z.p
