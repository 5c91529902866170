"""Exact scalars: rationals (stdlib Fraction) and sparse polynomials over them.

A MultiPoly monomial is a tuple of (variable, exponent) pairs sorted by
variable, so polynomials in many generic variables stay small.

>>> t1, t2 = MultiPoly.var(1), MultiPoly.var(2)
>>> t1 * t2 + t2 * t1
MultiPoly('2*t1*t2')
>>> len(((t1 + t2) * (t1 + t2)).terms)
3
"""
from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction


class ScalarParseError(ValueError):
    pass


def rat(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def rat_add(a, b) -> Fraction:
    return rat(a) + rat(b)


def rat_mul(a, b) -> Fraction:
    return rat(a) * rat(b)


def rat_neg(a) -> Fraction:
    return -rat(a)


def rat_inv(a) -> Fraction:
    a = rat(a)
    if a == 0:
        raise ZeroDivisionError("inverse of zero")
    return 1 / a


_RAT = re.compile(r"\s*(-?\d+)(?:\s*/\s*(\d+))?\s*")


def parse_rational(text: str) -> Fraction:
    m = _RAT.fullmatch(text)
    if not m:
        raise ScalarParseError(f"bad rational literal {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ScalarParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q) -> str:
    q = rat(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _mono_mul(m1: tuple, m2: tuple) -> tuple:
    if not m1:
        return m2
    if not m2:
        return m1
    out = dict(m1)
    for v, e in m2:
        out[v] = out.get(v, 0) + e
    return tuple(sorted(out.items()))


class MultiPoly:
    """Sparse commutative polynomial with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = rat(c)
                if c:
                    self.terms[m] = c

    @classmethod
    def var(cls, v) -> "MultiPoly":
        return cls({((v, 1),): Fraction(1)})

    @classmethod
    def const(cls, c) -> "MultiPoly":
        return cls({(): c})

    @staticmethod
    def _lift(x) -> "MultiPoly":
        if isinstance(x, MultiPoly):
            return x
        return MultiPoly.const(x)

    def __add__(self, other):
        other = MultiPoly._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        p = MultiPoly()
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = MultiPoly()
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-MultiPoly._lift(other))

    def __rsub__(self, other):
        return MultiPoly._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = rat(other)
            p = MultiPoly()
            if c:
                p.terms = {m: a * c for m, a in self.terms.items()}
            return p
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        p = MultiPoly()
        p.terms = out
        return p

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return self.terms == MultiPoly._lift(other).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: (sum(e for _, e in t[0]), t[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(f"t{v}" if e == 1 else f"t{v}^{e}" for v, e in m)
            if not mono:
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{format_rational(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r})"


def poly_add(p, q) -> MultiPoly:
    return MultiPoly._lift(p) + q


def poly_mul(p, q) -> MultiPoly:
    return MultiPoly._lift(p) * MultiPoly._lift(q)


def poly_is_zero(p) -> bool:
    return MultiPoly._lift(p).is_zero()


def is_zero_scalar(x) -> bool:
    return not x
