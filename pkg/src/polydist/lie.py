"""Lie-theoretic calculus on the truncated series algebra.

Contents:

- the iterated-bracket elements ad(X)^(m-1)(Y_s) expanded in the word basis;
- reduction modulo the monomial ideals used throughout: ``IY`` (words with
  at least two puncture letters — at any level) and ``JY`` (level-1 words
  containing XY or YY, whose survivors are X^i and Y.X^i);
- exp/log/BCH computed from their definitions, optionally inside one of
  those quotients (reduce after every product — the ideals are monomial
  two-sided ideals, so this is exact quotient arithmetic);
- ``PolylogPart``: the coordinates (x-coefficient, per-branch depth
  coefficients) of a Lie-like element modulo IY, with an exact residual
  check on extraction;
- one-variable truncated generating series (``GenSeries``) and the
  Bernoulli machinery: beta(t) = t/(e^t - 1), Bernoulli numbers and
  polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .ncseries import NCSeries, SeriesError
from .words import Word, x_letter, y_letter

MOD_IY = "IY"
MOD_JY = "JY"


class NotPolylogError(ValueError):
    """Raised when an element is not of polylog shape modulo IY."""

    def __init__(self, message, word=None):
        super().__init__(message)
        self.word = word


# ---------------------------------------------------------------------------
# monomial-ideal reduction
# ---------------------------------------------------------------------------


def _survives_iy(w):
    return sum(1 for l in w.letters if not l.is_x) < 2


def _survives_jy(w):
    # no Y may follow anything: survivors are X^i and Y.X^i
    for i, l in enumerate(w.letters):
        if not l.is_x and i > 0:
            return False
    return True


def reduce_mod_ideal(series, which):
    """Project away the span of the monomial ideal ``which`` (IY or JY)."""
    if which == MOD_IY:
        keep = _survives_iy
    elif which == MOD_JY:
        if series.level != 1:
            raise SeriesError("the XY/YY quotient is defined at level 1 only")
        keep = _survives_jy
    else:
        raise ValueError(f"unknown ideal {which!r}")
    return NCSeries(
        series.ring,
        series.level,
        series.flavor,
        series.trunc,
        {w: c for w, c in series.coeffs.items() if keep(w)},
    )


def mul_mod(a, b, which=None):
    prod = a * b
    return prod if which is None else reduce_mod_ideal(prod, which)


def exp_mod(s, which=None):
    """exp, reducing after every product when ``which`` is given."""
    if not s.ring.is_zero(s.constant_term()):
        raise SeriesError("exp needs zero constant term")
    if which is not None:
        s = reduce_mod_ideal(s, which)
    acc = NCSeries.one(s.ring, s.level, s.flavor, s.trunc)
    term = acc
    for k in range(1, s.trunc + 1):
        term = mul_mod(term, s, which).scale(Fraction(1, k))
        if term.is_zero():
            break
        acc = acc + term
    return acc


def log_mod(g, which=None):
    """log, reducing after every product when ``which`` is given."""
    if which is not None:
        g = reduce_mod_ideal(g, which)
    u = g - NCSeries.one(g.ring, g.level, g.flavor, g.trunc)
    if not g.ring.is_zero(u.constant_term()):
        raise SeriesError("log needs constant term one")
    acc = NCSeries.zero(g.ring, g.level, g.flavor, g.trunc)
    power = NCSeries.one(g.ring, g.level, g.flavor, g.trunc)
    for k in range(1, g.trunc + 1):
        power = mul_mod(power, u, which)
        if power.is_zero():
            break
        acc = acc + power.scale(Fraction(-1 if k % 2 == 0 else 1, k))
    return acc


def bch(s, t, which=None):
    """log(exp(s) * exp(t)) — by definition, never by table.

    ``which`` selects quotient arithmetic (IY/JY) for speed; the result then
    equals the reduction of the full BCH series.
    """
    s._check(t)
    return log_mod(mul_mod(exp_mod(s, which), exp_mod(t, which), which), which)


# ---------------------------------------------------------------------------
# iterated brackets and polylog coordinates
# ---------------------------------------------------------------------------


def ad_pow(ring, m, trunc, level=1, flavor="std", y_index=0):
    """ad(X)^(m-1) applied to Y_{y_index}, expanded in the word basis.

    Equals sum_j (-1)^j C(m-1, j) X^(m-1-j) . Y . X^j, a degree-m element.
    """
    if m < 1:
        raise ValueError("bracket depth m must be >= 1")
    if m > trunc:
        raise SeriesError(f"degree {m} exceeds truncation {trunc}")
    x = x_letter(level, flavor)
    y = y_letter(y_index, level, flavor)
    coeffs = {}
    for j in range(m):
        w = Word(level, flavor, (x,) * (m - 1 - j) + (y,) + (x,) * j)
        c = ring.from_int((-1) ** j * comb(m - 1, j))
        coeffs[w] = c
    return NCSeries(ring, level, flavor, trunc, coeffs)


class PolylogPart:
    """Coordinates of a Lie-like element modulo IY.

    x_coeff is the coefficient of the single X letter; branches[s] is the
    tuple (c_1, ..., c_depth) with c_m the coefficient of
    ad(X)^(m-1)(Y_s).
    """

    __slots__ = ("ring", "level", "flavor", "depth", "x_coeff", "branches")

    def __init__(self, ring, level, flavor, depth, x_coeff, branches):
        self.ring = ring
        self.level = level
        self.flavor = flavor
        self.depth = depth
        self.x_coeff = x_coeff
        self.branches = {s: tuple(v) for s, v in branches.items()}

    def y_coeffs(self, s=0):
        return self.branches[s]

    def __eq__(self, other):
        if not isinstance(other, PolylogPart):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.level == other.level
            and self.flavor == other.flavor
            and self.depth == other.depth
            and self.x_coeff == other.x_coeff
            and self.branches == other.branches
        )

    def rebuild(self, trunc=None):
        """The element c0·X + sum_s sum_m c_{s,m} ad(X)^(m-1)(Y_s)."""
        trunc = self.depth if trunc is None else trunc
        x = x_letter(self.level, self.flavor)
        out = NCSeries.monomial(
            self.ring, Word(self.level, self.flavor, (x,)), trunc, self.x_coeff
        )
        for s, coeffs in sorted(self.branches.items()):
            for m, c in enumerate(coeffs, start=1):
                if m > trunc or self.ring.is_zero(c):
                    continue
                out = out + ad_pow(
                    self.ring, m, trunc, self.level, self.flavor, s
                ).scale(c)
        return out

    def __repr__(self):
        return (
            f"PolylogPart(x={self.x_coeff}, "
            + ", ".join(
                f"Y{s}: [" + ", ".join(str(c) for c in v) + "]"
                for s, v in sorted(self.branches.items())
            )
            + ")"
        )


def polylog_part(lam, depth=None):
    """Extract PolylogPart coordinates of ``lam`` modulo IY, exactly.

    The input must be congruent mod IY to
    c0·X + sum_{s,m} c_{s,m} ad(X)^(m-1)(Y_s) with m <= depth; otherwise
    NotPolylogError reports the first offending word.
    """
    depth = lam.trunc if depth is None else depth
    if depth > lam.trunc:
        raise SeriesError(f"depth {depth} exceeds truncation {lam.trunc}")
    reduced = reduce_mod_ideal(lam, MOD_IY)
    x = x_letter(lam.level, lam.flavor)
    x_coeff = reduced.coefficient(Word(lam.level, lam.flavor, (x,)))
    branches = {}
    for s in range(lam.level):
        y = y_letter(s, lam.level, lam.flavor)
        coeffs = []
        for m in range(1, depth + 1):
            w = Word(lam.level, lam.flavor, (y,) + (x,) * (m - 1))
            c = reduced.coefficient(w)
            if m % 2 == 0:
                c = -c
            coeffs.append(c)
        branches[s] = tuple(coeffs)
    part = PolylogPart(lam.ring, lam.level, lam.flavor, depth, x_coeff, branches)
    residual = reduced - reduce_mod_ideal(part.rebuild(lam.trunc), MOD_IY)
    if not residual.is_zero():
        bad = residual.support()[0]
        raise NotPolylogError(
            f"element is not of polylog shape mod IY: residual at word {bad}",
            word=bad,
        )
    return part


# ---------------------------------------------------------------------------
# one-variable truncated generating series
# ---------------------------------------------------------------------------


class GenSeries:
    """Truncated power series in one central variable t over a ring.

    coeffs[k] is the t^k coefficient; len(coeffs) - 1 is the degree bound.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = [ring.coerce(c) for c in coeffs]
        if not self.coeffs:
            raise ValueError("need at least the constant coefficient")

    @classmethod
    def zero(cls, ring, degree):
        return cls(ring, [ring.zero] * (degree + 1))

    @classmethod
    def one(cls, ring, degree):
        return cls(ring, [ring.one] + [ring.zero] * degree)

    @classmethod
    def exp_linear(cls, ring, c, degree):
        """exp(c*t) truncated: sum_k c^k/k! t^k."""
        c = ring.coerce(c)
        coeffs = [ring.one]
        term = ring.one
        for k in range(1, degree + 1):
            term = term * c * Fraction(1, k)
            coeffs.append(term)
        return cls(ring, coeffs)

    @property
    def degree_bound(self):
        return len(self.coeffs) - 1

    def coefficient(self, k):
        return self.coeffs[k]

    def _align(self, other):
        if not isinstance(other, GenSeries):
            raise TypeError("expected GenSeries")
        if other.ring != self.ring:
            raise ValueError("generating series over different rings")
        return min(self.degree_bound, other.degree_bound)

    def __add__(self, other):
        d = self._align(other)
        return GenSeries(
            self.ring, [self.coeffs[k] + other.coeffs[k] for k in range(d + 1)]
        )

    def __sub__(self, other):
        d = self._align(other)
        return GenSeries(
            self.ring, [self.coeffs[k] - other.coeffs[k] for k in range(d + 1)]
        )

    def __neg__(self):
        return GenSeries(self.ring, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, GenSeries):
            d = self._align(other)
            out = [self.ring.zero] * (d + 1)
            for i in range(d + 1):
                a = self.coeffs[i]
                if self.ring.is_zero(a):
                    continue
                for j in range(d + 1 - i):
                    out[i + j] = out[i + j] + a * other.coeffs[j]
            return GenSeries(self.ring, out)
        return self.scale(other)

    def scale(self, c):
        c = self.ring.coerce(c)
        return GenSeries(self.ring, [c * v for v in self.coeffs])

    def truncate(self, degree):
        if degree > self.degree_bound:
            raise ValueError("cannot extend a truncated series")
        return GenSeries(self.ring, self.coeffs[: degree + 1])

    def mul_t(self):
        """Multiply by t, keeping the same degree bound (top term drops off)."""
        return GenSeries(self.ring, [self.ring.zero] + self.coeffs[:-1])

    def compose_linear(self, c):
        """Substitute t -> c*t."""
        c = self.ring.coerce(c)
        out = []
        power = self.ring.one
        for k, a in enumerate(self.coeffs):
            out.append(a * power)
            power = power * c
        return GenSeries(self.ring, out)

    def inverse(self):
        """Multiplicative inverse; requires constant coefficient exactly one."""
        if self.coeffs[0] != self.ring.one:
            raise ValueError("inverse needs constant coefficient one")
        d = self.degree_bound
        out = [self.ring.one] + [self.ring.zero] * d
        for k in range(1, d + 1):
            acc = self.ring.zero
            for j in range(1, k + 1):
                acc = acc + self.coeffs[j] * out[k - j]
            out[k] = -acc
        return GenSeries(self.ring, out)

    def __eq__(self, other):
        if not isinstance(other, GenSeries):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __str__(self):
        return " + ".join(f"({c})*t^{k}" for k, c in enumerate(self.coeffs))

    __repr__ = __str__


def apply_adx_series(g, trunc, level=1, flavor="std", y_index=0):
    """g(ad X)(Y_s) = sum_k g_k ad(X)^k(Y_s) as a word series."""
    out = NCSeries.zero(g.ring, level, flavor, trunc)
    for k, c in enumerate(g.coeffs):
        if k + 1 > trunc:
            break
        if g.ring.is_zero(c):
            continue
        out = out + ad_pow(g.ring, k + 1, trunc, level, flavor, y_index).scale(c)
    return out


# ---------------------------------------------------------------------------
# Bernoulli machinery
# ---------------------------------------------------------------------------


def beta_series(ring, degree):
    """beta(t) = t/(e^t - 1) truncated: the inverse of sum_k t^k/(k+1)!."""
    from .scalars import QQ

    expm1_over_t = GenSeries(
        QQ, [Fraction(1, _factorial(k + 1)) for k in range(degree + 1)]
    )
    beta = expm1_over_t.inverse()
    if ring == QQ:
        return beta
    return GenSeries(ring, [ring.from_fraction(c) for c in beta.coeffs])


@lru_cache(maxsize=None)
def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


@lru_cache(maxsize=None)
def bernoulli_number(k):
    """B_k with B_1 = -1/2 (the t/(e^t-1) convention)."""
    from .scalars import QQ

    beta = beta_series(QQ, k)
    return beta.coeffs[k] * _factorial(k)


def bernoulli_poly(k, ring, symbol="T"):
    """B_k(T) = sum_j C(k, j) B_j T^(k-j) over the given polynomial ring."""
    t = ring.sym(symbol)
    out = ring.zero
    for j in range(k + 1):
        out = out + Fraction(comb(k, j)) * bernoulli_number(j) * t ** (k - j)
    return out


def bernoulli_poly_eval(k, x):
    """B_k evaluated at an exact rational."""
    x = Fraction(x)
    out = Fraction(0)
    for j in range(k + 1):
        out += comb(k, j) * bernoulli_number(j) * x ** (k - j)
    return out
