"""Exact scalar rings: rational polynomials and scaled ell-adic residues."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polydist.scalars import (
    QQ,
    NonInvertibleError,
    PadicRing,
    PolyRing,
    RingMismatchError,
    UnknownSymbolError,
    padic_valuation,
    rational_to_padic,
)

fractions = st.fractions(
    min_value=-50, max_value=50, max_denominator=40
)


def test_rational_field_basics():
    assert QQ.zero == 0
    assert QQ.one == 1
    assert QQ.from_int(-3) == Fraction(-3)
    assert QQ.coerce(Fraction(2, 4)) == Fraction(1, 2)
    assert QQ.is_zero(Fraction(0))


def small_polys(ring):
    """Strategy producing small random polynomials over `ring`."""
    gens = [ring.sym(g) for g in ring.gens]

    def build(coeffs):
        p = ring.zero
        for c, g in zip(coeffs, gens):
            p = p + g * c
        return p + coeffs[-1]

    return st.lists(
        fractions, min_size=len(gens) + 1, max_size=len(gens) + 1
    ).map(build)


RING = PolyRing(["a", "b", "c"])
POLYS = small_polys(RING)


@given(POLYS, POLYS, POLYS)
@settings(max_examples=60)
def test_poly_ring_axioms(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + RING.zero == p
    assert p * RING.one == p
    assert p - p == RING.zero


@given(POLYS, POLYS)
@settings(max_examples=40)
def test_substitute_is_a_homomorphism(p, q):
    point = {"a": Fraction(2), "b": Fraction(-1, 3), "c": Fraction(5, 7)}
    assert (p + q).substitute(point) == p.substitute(point) + q.substitute(point)
    assert (p * q).substitute(point) == p.substitute(point) * q.substitute(point)


def test_substitute_partial_and_symbols():
    a, b = RING.sym("a"), RING.sym("b")
    p = a * a * b - b * 3 + 1
    half = p.substitute({"a": Fraction(1, 2)})
    assert half == b * Fraction(1, 4) - b * 3 + 1
    assert p.symbols() == ["a", "b"]
    assert p.substitute({"a": 2, "b": 1}) == RING.from_int(2)


def test_coefficient_of_reads_linear_part():
    a, b = RING.sym("a"), RING.sym("b")
    p = a * 7 + b * a + 4
    assert p.coefficient_of("a") == b + 7
    assert p.coefficient_of("b") == a
    assert p.coefficient_of("c") == RING.zero


def test_unknown_symbol():
    with pytest.raises(UnknownSymbolError):
        RING.sym("zz")


def test_mixed_ring_arithmetic_rejected():
    other = PolyRing(["a"])
    with pytest.raises(RingMismatchError):
        RING.sym("a") + other.sym("a")


def test_poly_str_is_deterministic():
    a, b = RING.sym("a"), RING.sym("b")
    p = b + a * a - a * Fraction(1, 2)
    assert str(p) == str(b + a * a - a * Fraction(1, 2))


def test_padic_valuation():
    assert padic_valuation(24, 2) == 3
    assert padic_valuation(24, 3) == 1
    assert padic_valuation(1, 5) == 0
    with pytest.raises(ValueError):
        padic_valuation(0, 3)


def test_frozen_padic_units():
    # hand-checked residues
    r25 = PadicRing(5, 2)
    inv24 = r25.from_fraction(Fraction(1, 24))
    assert inv24.v == 0 and inv24.unit == pow(24, -1, 25) == 24

    r27 = PadicRing(3, 3)
    half = r27.from_fraction(Fraction(1, 2))
    assert half.v == 0 and half.unit == 14  # 2*14 = 28 = 1 mod 27

    third = r27.from_fraction(Fraction(1, 3))
    assert third.v == 1 and third.unit == 1

    # -1/24 = -(24^{-1}): at ell=5, N=2 the unit is -24 = 1 mod 25
    m = rational_to_padic(Fraction(-1, 24), 5, 2)
    assert m.v == 0 and m.unit == (-pow(24, -1, 25)) % 25 == 1


unit_fractions = fractions.filter(lambda q: q.denominator % 3 and q.denominator % 5)


@given(unit_fractions, unit_fractions)
@settings(max_examples=80)
def test_rational_to_padic_additive(x, y):
    # exact at valuation >= 0: plain arithmetic mod ell^N
    a = rational_to_padic(x, 3, 4)
    b = rational_to_padic(y, 3, 4)
    assert a + b == rational_to_padic(x + y, 3, 4)


@given(unit_fractions, unit_fractions)
@settings(max_examples=80)
def test_rational_to_padic_multiplicative(x, y):
    a = rational_to_padic(x, 5, 3)
    b = rational_to_padic(y, 5, 3)
    assert a * b == rational_to_padic(x * y, 5, 3)


def test_scaled_sum_degrades_precision_as_documented():
    """Summing at scale ell^-v leaves the result known only mod ell^(N-v).

    -1/9 + -2/9 at (ell, N) = (3, 4): the stripped unit 26 and the directly
    converted unit 80 agree mod 27 but not mod 81 — fixed-modulus residues
    cannot do better once a power of ell cancels.
    """
    a = rational_to_padic(Fraction(-1, 9), 3, 4)
    b = rational_to_padic(Fraction(-2, 9), 3, 4)
    s = a + b
    direct = rational_to_padic(Fraction(-1, 3), 3, 4)
    assert s.v == direct.v == 1
    assert s.unit % 27 == direct.unit % 27
    assert s.unit != direct.unit


def test_padic_inverse_of_divisible_unit_fails():
    r = PadicRing(3, 2)
    with pytest.raises(NonInvertibleError):
        r.from_int(3).inverse()
    got = r.from_int(2).inverse()
    assert got == r.from_fraction(Fraction(1, 2))


def test_padic_negative_valuation_folds_into_residue():
    # 1/9 + 8/9 = 1 must hold once N leaves room for the two stripped digits
    r = PadicRing(3, 4)
    a = r.from_fraction(Fraction(1, 9))
    b = r.from_fraction(Fraction(8, 9))
    assert a + b == r.one
    # at N = 2 the same sum has no correct digits left and collapses to 0
    tight = PadicRing(3, 2)
    s = tight.from_fraction(Fraction(1, 9)) + tight.from_fraction(Fraction(8, 9))
    assert s == tight.zero
