from fractions import Fraction

import pytest

from arithdeg import (
    Setting,
    argument_M,
    beta_valuation,
    degree_Y,
    degree_Z,
    epsilon,
    hilbert_oracle,
    kry_length,
    kry_reduction_check,
    local_length,
    orbital_integral,
    point_count,
    r_oracle,
    validate_field,
)
from arithdeg.arithmetic import FactoredRational, factorize
from arithdeg.errors import NonPrimeDiscriminantError, SplitPrimeError


def _ord(n, p):
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def _brute_shape(d_K, p):
    # (e, f) from counting roots of x^2 - d_K mod p (p odd) or d_K mod 8
    if d_K % p == 0:
        return 2, 1
    if p == 2:
        return (1, 1) if d_K % 8 == 1 else (1, 2)
    roots = sum(1 for x in range(p) if (x * x - d_K) % p == 0)
    return (1, 1) if roots == 2 else (1, 2)


def brute_degree_Y(d_K, d_B, m):
    """Closed formula evaluated with the oracles only."""
    candidates = sorted({2} | set(factorize(m * d_K * d_B).support()))
    diff = [ell for ell in candidates
            if hilbert_oracle(d_K, -m, ell) * (-1 if d_B % ell == 0 else 1) == -1]
    if len(diff) != 1:
        return 0, None
    p = diff[0]
    e, f = _brute_shape(d_K, p)
    eps = 1 - _ord(d_B, p)
    M = Fraction(m, d_B) * Fraction(p) ** ((e - 1) * eps - 1)
    R = r_oracle(validate_field(d_K), M.numerator) if M.denominator == 1 else 0
    r = len(factorize(d_B).support())
    s = len(factorize(d_K).support())
    return 2 ** (r + s) * R * (_ord(m * -d_K, p) + eps * f - eps), p


@pytest.fixture
def s6(k19):
    return Setting.build(k19, 6)


@pytest.fixture
def s1(k19):
    return Setting.build(k19, 1, allow_degenerate=True)


def test_epsilon(s6, s1):
    assert epsilon(s6, 2) == 0
    assert epsilon(s6, 3) == 0
    assert epsilon(s6, 19) == 1
    assert all(epsilon(s1, p) == 1 for p in (2, 3, 19))


def test_beta_valuation(s6, k19):
    assert beta_valuation(s6, 5, 19) == 0
    assert beta_valuation(s6, 2, 19) == 1
    assert beta_valuation(s6, 2, 2) == 2
    assert beta_valuation(s6, 19, 19) == 0
    assert beta_valuation(Setting.build(validate_field(-43), 6), 43, 5) == 0
    with pytest.raises(SplitPrimeError):
        beta_valuation(s6, 2, 5)


def test_argument_M(s6, s1):
    assert argument_M(s6, 6, 19) == FactoredRational(1)
    assert argument_M(s6, 12, 2) == FactoredRational(1)
    assert argument_M(s1, 1, 19) == FactoredRational(1)
    assert argument_M(s6, 2, 3).to_fraction() == Fraction(1, 9)
    with pytest.raises(SplitPrimeError):
        argument_M(s6, 1, 5)


def test_orbital_integral(s6):
    assert orbital_integral(s6, 19, 6, 19) == 2
    assert orbital_integral(s6, 5, 6, 19) == 1
    assert orbital_integral(s6, 2, 6, 19) == 1
    # split place: ord_5(M) = 2 gives 3 lattice points
    assert orbital_integral(s6, 5, 150, 19) == 3


def test_point_count(s6, k19):
    assert point_count(s6, 6) == (8, 19)
    assert point_count(s6, 1) == (0, None)
    # Diff_B(3) = {2}, 2 | d_B and ord_2(3) = 0: no points
    assert point_count(s6, 3) == (0, 2)
    # Diff_B(2) = {3}: the vanishing case at 3
    assert point_count(s6, 2) == (0, 3)


def test_local_length(s6, s1):
    assert local_length(s6, 6, 19) == 1
    # p | d_B inert, ord_p(m) = 2: length ord_p(m) / 2
    assert local_length(s6, 12, 2) == 1
    assert local_length(s6, 48, 2) == 2
    assert local_length(s1, 19, 19) == 2
    with pytest.raises(SplitPrimeError):
        local_length(s6, 6, 5)


def test_kry_length(k19):
    assert kry_length(k19, 1, 19) == 1
    assert kry_length(k19, 19, 19) == 2
    assert kry_length(k19, 4, 2) == Fraction(3, 2)


def test_degree_Y_worked_example(s6):
    rep = degree_Y(s6, 6)
    assert rep.diff.primes == (19,)
    assert rep.p == 19 and rep.supported
    assert rep.argument_M == FactoredRational(1)
    assert (rep.R_of_M, rep.point_count_coefficient, rep.length) == (1, 8, 1)
    assert rep.degree_coefficient == 8
    assert rep.degree_display == "8·log(19)"
    assert rep.epsilon_p == 1


def test_degree_Y_zero_branches(s6):
    rep = degree_Y(s6, 1)
    assert rep.degree_coefficient == 0 and rep.p is None and len(rep.diff) == 3
    assert rep.degree_display == "0"
    rep = degree_Y(s6, 2)
    assert rep.degree_coefficient == 0 and rep.p == 3
    assert rep.R_of_M == 0 and rep.point_count_coefficient == 0 and rep.length == 0
    assert rep.argument_M.to_fraction() == Fraction(1, 9)


def test_degree_Y_matches_brute_force():
    for d_K, d_B in ((-19, 6), (-19, 1), (-43, 10), (-67, 6), (-4, 1), (-20, 1)):
        field = validate_field(d_K)
        setting = Setting.build(field, d_B, allow_degenerate=True)
        for m in range(1, 121):
            rep = degree_Y(setting, m)
            coeff, p = brute_degree_Y(d_K, d_B, m)
            assert rep.degree_coefficient == coeff, (d_K, d_B, m)
            if coeff:
                assert rep.p == p


def test_degree_Z(k19):
    rep = degree_Z(k19, 1)
    assert (rep.degree_coefficient, rep.p, rep.degree_display) == (2, 19, "2·log(19)")
    rep = degree_Z(k19, 4)
    assert rep.diff.primes == (19,)
    # 2 R(4) (ord_19(4) + 1) with R(4) = 1
    assert rep.degree_coefficient == 2
    rep = degree_Z(k19, 2)
    assert rep.diff.primes == (2,)
    # 2 R(2 / 2) (1 + 1)
    assert rep.degree_coefficient == 4 and rep.p == 2
    with pytest.raises(NonPrimeDiscriminantError):
        degree_Z(validate_field(-20), 1)
    with pytest.raises(NonPrimeDiscriminantError):
        degree_Z(validate_field(-4), 1)


def test_kry_reduction(k19):
    assert kry_reduction_check(k19, 1)
    assert kry_reduction_check(k19, 19)
    k7 = validate_field(-7)
    for m in range(1, 501):
        assert kry_reduction_check(k7, m), m
    with pytest.raises(NonPrimeDiscriminantError):
        kry_reduction_check(validate_field(-8), 1)


SETTINGS = [(-19, 6), (-19, 1), (-43, 6), (-43, 10), (-67, 10), (-163, 6), (-43, 1),
            (-4, 1), (-20, 1), (-24, 1), (-91, 6)]


@pytest.mark.parametrize("d_K,d_B", SETTINGS)
def test_degree_invariants(d_K, d_B):
    field = validate_field(d_K)
    setting = Setting.build(field, d_B, allow_degenerate=True)
    for m in range(1, 1001):
        rep = degree_Y(setting, m)
        if rep.degree_coefficient > 0:
            assert len(rep.diff) == 1
            assert not (d_B % rep.p == 0 and m % rep.p != 0)
        if len(rep.diff) > 1:
            assert rep.degree_coefficient == 0 and rep.p is None
        if rep.p is None:
            continue
        p = rep.p
        sp = rep.splitting_at_p
        assert sp.kind.value != "split"
        assert rep.point_count_coefficient == 2 ** (setting.r + setting.s) * rep.R_of_M
        if rep.point_count_coefficient:
            assert rep.length.denominator == 1
            assert rep.degree_coefficient == sp.f * rep.point_count_coefficient * rep.length
        if d_B % p == 0 and rep.point_count_coefficient:
            assert _ord(m, p) % 2 == 0 and _ord(m, p) >= 2
            assert rep.length == _ord(m, p) // 2
        for q in setting.quaternion.ramified_primes:
            if q != p:
                assert rep.argument_M.ord(q) >= 0
