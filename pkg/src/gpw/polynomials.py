"""Free graded associative polynomials in degree-tagged variables x<i>@<degree>.

>>> p = parse("[x1@e, x2@e]")
>>> str(p)
'x1@e*x2@e - x2@e*x1@e'
>>> str(left_normed(3))
'x1@e*x2@e*x3@e - x2@e*x1@e*x3@e - x3@e*x1@e*x2@e + x3@e*x2@e*x1@e'
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import AlgebraElement, AlgebraMismatchError, GradedAlgebra, add_vec, mul_vec
from .groups import FiniteAbelianGroup, GroupElement, GroupMismatchError, format_element, trivial_group
from .scalars import format_rational


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class EvaluationContractError(ValueError):
    pass


class UnsupportedOperationError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class GradedVariable:
    index: int
    degree: GroupElement

    def sort_key(self):
        return (self.index, self.degree.coords)

    def __str__(self):
        return f"x{self.index}@{format_element(self.degree)}"


def monomial_key(m: tuple):
    return (len(m), [v.sort_key() for v in m])


def monomial_degree(m: tuple, group: FiniteAbelianGroup) -> GroupElement:
    d = group.identity
    for v in m:
        d = d + v.degree
    return d


class GradedPolynomial:
    """Finite rational combination of nonempty words in graded variables."""

    __slots__ = ("group", "terms")

    def __init__(self, group: FiniteAbelianGroup, terms: Optional[dict] = None):
        self.group = group
        self.terms = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if not m:
                raise ValueError("constant terms are not allowed")
            for v in m:
                group.check(v.degree)
            c = Fraction(c)
            if c:
                s = self.terms.get(m, 0) + c
                if s:
                    self.terms[m] = s
                else:
                    self.terms.pop(m)

    @classmethod
    def variable(cls, index: int, degree: GroupElement, group: FiniteAbelianGroup = None):
        group = group or FiniteAbelianGroup(degree.moduli)
        return cls(group, {(GradedVariable(index, degree),): 1})

    @classmethod
    def zero(cls, group: FiniteAbelianGroup):
        return cls(group)

    def _coerce(self, other) -> "GradedPolynomial":
        if not isinstance(other, GradedPolynomial):
            raise TypeError("expected a GradedPolynomial")
        if other.group != self.group:
            raise GroupMismatchError("polynomials over different groups")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return GradedPolynomial(self.group, out)

    def __neg__(self):
        return GradedPolynomial(self.group, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, GradedPolynomial):
            other = self._coerce(other)
            out = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    out[m1 + m2] = out.get(m1 + m2, 0) + c1 * c2
            return GradedPolynomial(self.group, out)
        c = Fraction(other)
        return GradedPolynomial(self.group, {m: a * c for m, a in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        return isinstance(other, GradedPolynomial) and self.group == other.group and self.terms == other.terms

    def __hash__(self):
        return hash((self.group, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self) -> list:
        return sorted(self.terms, key=monomial_key)

    def items(self) -> list:
        return [(m, self.terms[m]) for m in self.monomials()]

    def variables(self) -> list:
        return sorted({v for m in self.terms for v in m}, key=GradedVariable.sort_key)

    @property
    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def is_multilinear(self) -> bool:
        if not self.terms:
            return True
        vs = set(self.variables())
        return all(len(m) == len(set(m)) == len(vs) and set(m) == vs for m in self.terms)

    def is_ungraded(self) -> bool:
        return not self.group.factors

    def rename(self, mapping: dict) -> "GradedPolynomial":
        # several words may collapse onto one, so accumulate
        out = {}
        for m, c in self.terms.items():
            w = tuple(mapping.get(v, v) for v in m)
            out[w] = out.get(w, 0) + c
        return GradedPolynomial(self.group, out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for n, (m, c) in enumerate(self.items()):
            word = "*".join(str(v) for v in m)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            body = word if a == 1 else f"{format_rational(a)}*{word}"
            if n == 0:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)

    def __repr__(self):
        return f"GradedPolynomial({str(self)!r})"


def variable(index: int, degree: GroupElement, group: FiniteAbelianGroup = None) -> GradedPolynomial:
    return GradedPolynomial.variable(index, degree, group)


def commutator(p: GradedPolynomial, q: GradedPolynomial) -> GradedPolynomial:
    return p * q - q * p


# ---------------------------------------------------------------- parsing


class _Parser:
    def __init__(self, text: str, group: FiniteAbelianGroup):
        self.text = text
        self.pos = 0
        self.group = group

    def error(self, msg):
        raise PolynomialSyntaxError(msg, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        tok = self.text[start:self.pos]
        if not tok or tok == "-":
            self.pos = start
            self.error("expected an integer")
        return int(tok)

    def parse(self) -> GradedPolynomial:
        p = self.poly()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return p

    def poly(self) -> GradedPolynomial:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        total = self.term() * sign
        while self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
            total = total + self.term() * sign
        return total

    def term(self) -> GradedPolynomial:
        coeff = Fraction(1)
        explicit = self.peek().isdigit()
        if explicit:
            num = self.integer()
            den = 1
            if self.peek() == "/":
                self.pos += 1
                den = self.integer()
                if den <= 0:
                    self.error("denominator must be positive")
            coeff = Fraction(num, den)
            if self.peek() == "*":
                self.pos += 1
        factors = []
        while True:
            ch = self.peek()
            if ch in ("x", "[", "("):
                factors.append(self.factor())
                if self.peek() == "*":
                    self.pos += 1
                    if self.peek() not in ("x", "[", "("):
                        self.error("expected a factor after '*'")
            else:
                break
        if not factors:
            if explicit and coeff == 0:  # the printed form of the zero polynomial
                return GradedPolynomial.zero(self.group)
            self.error("expected a factor")
        out = factors[0]
        for f in factors[1:]:
            out = out * f
        return out * coeff

    def factor(self) -> GradedPolynomial:
        ch = self.peek()
        if ch == "x":
            return self.var()
        if ch == "(":
            self.pos += 1
            p = self.poly()
            self.expect(")")
            return p
        self.expect("[")
        items = [self.poly()]
        while self.peek() == ",":
            self.pos += 1
            items.append(self.poly())
        self.expect("]")
        if len(items) < 2:
            self.error("a bracket needs at least two entries")
        out = items[0]
        for q in items[1:]:
            out = commutator(out, q)
        return out

    def var(self) -> GradedPolynomial:
        self.expect("x")
        if not self.text[self.pos:self.pos + 1].isdigit():
            self.error("expected a variable index")
        idx = self.integer()
        if idx < 1:
            self.error("variable index must be positive")
        self.expect("@")
        return GradedPolynomial.variable(idx, self.degree(), self.group)

    def degree(self) -> GroupElement:
        ch = self.peek()
        if ch == "e":
            self.pos += 1
            return self.group.identity
        if ch != "(":
            self.error("unknown degree literal")
        start = self.pos
        self.pos += 1
        coords = [self.integer()]
        while self.peek() == ",":
            self.pos += 1
            coords.append(self.integer())
        self.expect(")")
        if len(coords) != len(self.group.factors):
            self.pos = start
            self.error(f"unknown degree literal for group with {len(self.group.factors)} factors")
        return self.group.element(coords)


def parse(text: str, group: FiniteAbelianGroup = None) -> GradedPolynomial:
    """Parse a polynomial; degrees are read in `group` (trivial group by default)."""
    return _Parser(text, group or trivial_group()).parse()


# ---------------------------------------------------------- decompositions


def g_homogeneous_components(g: GradedPolynomial) -> dict:
    out = {}
    for m, c in g.terms.items():
        out.setdefault(monomial_degree(m, g.group), {})[m] = c
    return {d: GradedPolynomial(g.group, t) for d, t in sorted(out.items())}


def multidegree(m: tuple) -> tuple:
    counts = {}
    for v in m:
        counts[v] = counts.get(v, 0) + 1
    return tuple(sorted(((v.sort_key(), n) for v, n in counts.items())))


def multihomogeneous_components(g: GradedPolynomial) -> list:
    out = {}
    for m, c in g.terms.items():
        out.setdefault(multidegree(m), {})[m] = c
    return [GradedPolynomial(g.group, out[k]) for k in sorted(out)]


@dataclass(frozen=True)
class Polarization:
    """Full linearization of a multihomogeneous polynomial.

    Substituting every fresh copy back by its origin gives constant * source.
    """

    source: GradedPolynomial
    poly: GradedPolynomial
    constant: int
    origin: tuple  # pairs (copy variable, original variable)


def polarize(f: GradedPolynomial) -> Polarization:
    if f.is_zero():
        return Polarization(f, f, 1, ())
    m0 = next(iter(f.terms))
    counts = dict(multidegree_counts(m0))
    for m in f.terms:
        if dict(multidegree_counts(m)) != counts:
            raise ValueError("polarize expects a multihomogeneous polynomial")
    next_index = max(v.index for v in f.variables()) + 1
    copies = {}
    for v in f.variables():
        cs = [v]
        for _ in range(counts[v] - 1):
            cs.append(GradedVariable(next_index, v.degree))
            next_index += 1
        copies[v] = cs
    out = {}
    for m, c in f.terms.items():
        positions = {}
        for p, v in enumerate(m):
            positions.setdefault(v, []).append(p)
        choices = [
            [(positions[v], perm) for perm in itertools.permutations(copies[v])] for v in positions
        ]
        for combo in itertools.product(*choices):
            word = list(m)
            for places, perm in combo:
                for p, x in zip(places, perm):
                    word[p] = x
            w = tuple(word)
            out[w] = out.get(w, 0) + c
    constant = math.prod(math.factorial(n) for n in counts.values())
    origin = tuple((x, v) for v, cs in copies.items() for x in cs)
    return Polarization(f, GradedPolynomial(f.group, out), constant, origin)


def multidegree_counts(m: tuple):
    counts = {}
    for v in m:
        counts[v] = counts.get(v, 0) + 1
    return counts.items()


def multilinearize(g: GradedPolynomial) -> list:
    return [polarize(c).poly for c in multihomogeneous_components(g)]


# ---------------------------------------------------------------- builders


class FGTable:
    """Scalar table f on pairs of group elements; missing entries read as 0."""

    def __init__(self, entries: Optional[dict] = None):
        self.entries = {k: Fraction(v) for k, v in (entries or {}).items()}

    def __getitem__(self, key) -> Fraction:
        return self.entries.get(key, Fraction(0))

    def __setitem__(self, key, value):
        self.entries[key] = Fraction(value)

    def nonzero(self) -> dict:
        return {k: v for k, v in sorted(self.entries.items()) if v}

    def case(self, xi, zeta) -> str:
        a, b = self[(xi, zeta)], self[(zeta, xi)]
        if a and b:
            return "both nonzero"
        if a or b:
            return "one-sided"
        return "both zero"

    def __eq__(self, other):
        return isinstance(other, FGTable) and self.nonzero() == other.nonzero()


def fg_expand(table: FGTable, xi: GroupElement, zeta: GroupElement) -> GradedPolynomial:
    """f(xi,zeta) x1@xi x2@zeta - f(zeta,xi) x2@zeta x1@xi."""
    G = FiniteAbelianGroup(xi.moduli)
    x = GradedPolynomial.variable(1, xi, G)
    y = GradedPolynomial.variable(2, zeta, G)
    return x * y * table[(xi, zeta)] - y * x * table[(zeta, xi)]


def fg_bracket(table: FGTable, p: GradedVariable, q: GradedVariable, group) -> GradedPolynomial:
    x = GradedPolynomial.variable(p.index, p.degree, group)
    y = GradedPolynomial.variable(q.index, q.degree, group)
    return x * y * table[(p.degree, q.degree)] - y * x * table[(q.degree, p.degree)]


def left_normed(n: int) -> GradedPolynomial:
    if n < 2:
        raise ValueError("left_normed needs n >= 2")
    G = trivial_group()
    out = GradedPolynomial.variable(1, G.identity, G)
    for i in range(2, n + 1):
        out = commutator(out, GradedPolynomial.variable(i, G.identity, G))
    return out


def product_of_commutators(d: int) -> GradedPolynomial:
    if d < 1:
        raise ValueError("product_of_commutators needs d >= 1")
    G = trivial_group()
    x = lambda i: GradedPolynomial.variable(i, G.identity, G)
    out = commutator(x(1), x(2))
    for t in range(2, d + 1):
        out = out * commutator(x(2 * t - 1), x(2 * t))
    return out


# -------------------------------------------------------------- evaluation


def _vector_of(A: GradedAlgebra, value):
    if isinstance(value, AlgebraElement):
        if value.owner is not A:
            raise AlgebraMismatchError("assigned element belongs to another algebra")
        return value.coeffs
    return value


def evaluation_mode(g: GradedPolynomial, A: GradedAlgebra) -> str:
    if g.group == A.group:
        return "graded"
    if g.is_ungraded():
        return "ungraded"
    raise GroupMismatchError("polynomial degrees are not in the algebra's grading group")


def eval_vectors(g: GradedPolynomial, A: GradedAlgebra, vectors: dict) -> dict:
    """Evaluate on coefficient dicts (no degree checks); shares word prefixes."""
    cache = {}
    total = {}
    for m, c in g.terms.items():
        acc = None
        for n in range(len(m), 0, -1):
            if m[:n] in cache:
                acc, start = cache[m[:n]], n
                break
        if acc is None:
            acc, start = vectors[m[0]], 1
            cache[m[:1]] = acc
        for n in range(start, len(m)):
            if not acc:
                break
            acc = mul_vec(A, acc, vectors[m[n]])
            cache[m[:n + 1]] = acc
        if acc:
            total = add_vec(total, acc, c)
    return total


def evaluate(g: GradedPolynomial, A: GradedAlgebra, assignment: dict) -> AlgebraElement:
    mode = evaluation_mode(g, A)
    vectors = {}
    for v in g.variables():
        if v not in assignment:
            raise EvaluationContractError(f"no value assigned to {v}")
        vec = _vector_of(A, assignment[v])
        if mode == "graded":
            bad = [k for k in vec if A.degrees[k] != v.degree]
            if bad:
                raise EvaluationContractError(
                    f"value for {v} is not homogeneous of degree {format_element(v.degree)}"
                )
        vectors[v] = vec
    return AlgebraElement(A, eval_vectors(g, A, vectors))


def sigma_bracket(B: GradedAlgebra, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Cocycle-normalized commutator, extended bilinearly from basis pairs."""
    meta = getattr(B, "meta", None)
    if meta is None or not hasattr(meta, "cocycle"):
        raise UnsupportedOperationError("algebra carries no cocycle metadata")
    u, v = _vector_of(B, a), _vector_of(B, b)
    sigma = meta.cocycle
    out = {}
    for p, cp in u.items():
        hp = meta.entries[p][2]
        for q, cq in v.items():
            hq = meta.entries[q][2]
            left = mul_vec(B, {p: Fraction(1)}, {q: Fraction(1)})
            right = mul_vec(B, {q: Fraction(1)}, {p: Fraction(1)})
            out = add_vec(out, left, cp * cq / sigma(hp, hq))
            out = add_vec(out, right, -cp * cq / sigma(hq, hp))
    return AlgebraElement(B, out)
