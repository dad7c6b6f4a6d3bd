"""Counting ideals of O_K by norm, locally and globally.

``r_oracle`` is deliberately naive: it enumerates index-n sublattices of
Z + Z*omega in Hermite normal form and keeps the omega-stable ones.
"""

from __future__ import annotations

from .arithmetic import (
    FactoredRational,
    FieldData,
    Splitting,
    kronecker,
    splitting_type,
)
from .errors import OracleOverflowError

ORACLE_BOUND = 10**5


def _positive(x) -> FactoredRational:
    x = FactoredRational.of(x)
    if x.sign < 0:
        raise ValueError(f"norm argument {x} must be positive")
    return x


def r_local(field: FieldData, ell: int, x) -> int:
    """Number of ideals of O_K tensor Z_ell with norm x Z_ell."""
    k = _positive(x).ord(ell)
    if k < 0:
        return 0
    kind = splitting_type(field, ell).kind
    if kind is Splitting.SPLIT:
        return k + 1
    if kind is Splitting.INERT:
        return 1 if k % 2 == 0 else 0
    return 1


def r_global(field: FieldData, x) -> int:
    """Number of ideals of O_K of norm x; zero unless x is a positive integer."""
    x = _positive(x)
    count = 1
    for ell, _ in x.exponents:
        count *= r_local(field, ell, x)
        if count == 0:
            break
    return count


def omega_matrix(field: FieldData) -> tuple[tuple[int, int], tuple[int, int]]:
    """Multiplication by omega = (d_K + sqrt d_K)/2 on coordinates in {1, omega}.

    omega^2 = d_K omega - (d_K^2 - d_K)/4, so x + y omega maps to
    -N y + (x + d_K y) omega.
    """
    d = field.d_K
    norm = (d * d - d) // 4
    return ((0, -norm), (1, d))


def _in_lattice(x: int, y: int, a: int, b: int, c: int) -> bool:
    # lattice spanned by (a, 0) and (b, c)
    if y % c:
        return False
    return (x - (y // c) * b) % a == 0


def r_oracle(field: FieldData, n: int) -> int:
    if n < 1:
        raise ValueError(f"n = {n} must be positive")
    if n > ORACLE_BOUND:
        raise OracleOverflowError(f"n = {n} above the oracle bound {ORACLE_BOUND}")
    (m00, m01), (m10, m11) = omega_matrix(field)
    count = 0
    # Hermite normal form: columns (a, 0), (b, c) with a c = n, 0 <= b < a
    for a in range(1, n + 1):
        if n % a:
            continue
        c = n // a
        # omega * (a, 0) = (0, a) needs c | a whatever b is
        if a % c:
            continue
        for b in range(a):
            # omega * (a, 0) and omega * (b, c) must stay in the lattice
            if (_in_lattice(m00 * a, m10 * a, a, b, c)
                    and _in_lattice(m00 * b + m01 * c, m10 * b + m11 * c, a, b, c)):
                count += 1
    return count


def divisor_sum_count(field: FieldData, n: int) -> int:
    """sum over d | n of kronecker(d_K, d)."""
    if n < 1:
        raise ValueError(f"n = {n} must be positive")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += kronecker(field.d_K, d)
            if d * d != n:
                total += kronecker(field.d_K, n // d)
        d += 1
    return total
