"""Finite abelian groups written as products of cyclic groups.

Elements are stored as reduced residue tuples, so equality and ordering are
structural and elements can be used directly as dictionary keys.

>>> G = make_group([3, 5])
>>> G.order
15
>>> G.order_of(G.element((1, 0)))
3
>>> format_group(G)
'Z3xZ5'
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence


class GroupError(ValueError):
    pass


class InvalidGroupError(GroupError):
    pass


class GroupMismatchError(GroupError):
    pass


@dataclass(frozen=True, order=True)
class GroupElement:
    moduli: tuple
    coords: tuple

    def __post_init__(self):
        if len(self.moduli) != len(self.coords):
            raise GroupMismatchError("coordinate count does not match the group")

    def _check(self, other: "GroupElement"):
        if not isinstance(other, GroupElement) or other.moduli != self.moduli:
            raise GroupMismatchError(f"{other!r} is not in the group of {self!r}")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(
            self.moduli,
            tuple((a + b) % n for a, b, n in zip(self.coords, other.coords, self.moduli)),
        )

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.moduli, tuple((-a) % n for a, n in zip(self.coords, self.moduli)))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def scale(self, m: int) -> "GroupElement":
        return GroupElement(self.moduli, tuple((m * a) % n for a, n in zip(self.coords, self.moduli)))

    @property
    def is_identity(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"GroupElement{format_element(self)}" if self.coords else "GroupElement(e)"


def format_element(a: GroupElement) -> str:
    if a.is_identity:
        return "e"
    return "(" + ",".join(str(c) for c in a.coords) + ")"


@dataclass(frozen=True)
class FiniteAbelianGroup:
    factors: tuple

    def __post_init__(self):
        for n in self.factors:
            if not isinstance(n, int) or n < 1:
                raise InvalidGroupError(f"invalid cyclic factor {n!r}")

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def identity(self) -> GroupElement:
        return GroupElement(self.factors, (0,) * len(self.factors))

    def element(self, coords: Sequence[int]) -> GroupElement:
        coords = tuple(coords)
        if len(coords) != len(self.factors):
            raise GroupMismatchError(
                f"element {coords} has {len(coords)} coordinates, group has {len(self.factors)}"
            )
        return GroupElement(self.factors, tuple(c % n for c, n in zip(coords, self.factors)))

    def elements(self) -> list:
        return [
            GroupElement(self.factors, c)
            for c in itertools.product(*(range(n) for n in self.factors))
        ]

    def contains(self, a) -> bool:
        return isinstance(a, GroupElement) and a.moduli == self.factors

    def check(self, a) -> GroupElement:
        if not self.contains(a):
            raise GroupMismatchError(f"{a!r} is not an element of {format_group(self)}")
        return a

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return self.check(a) + self.check(b)

    def inverse(self, a: GroupElement) -> GroupElement:
        return -self.check(a)

    def order_of(self, a: GroupElement) -> int:
        self.check(a)
        m = 1
        for c, n in zip(a.coords, self.factors):
            m = math.lcm(m, n // math.gcd(c, n))
        return m

    def parse_element(self, text: str) -> GroupElement:
        text = text.strip()
        if text == "e":
            return self.identity
        m = re.fullmatch(r"\(\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\)", text)
        if not m:
            raise GroupError(f"bad element literal {text!r}")
        coords = [int(t) for t in m.group(1).split(",")] if m.group(1) else []
        return self.element(coords)

    def __str__(self) -> str:
        return format_group(self)


def make_group(factors: Iterable[int]) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(tuple(factors))


def trivial_group() -> FiniteAbelianGroup:
    return FiniteAbelianGroup(())


def format_group(G: FiniteAbelianGroup) -> str:
    if not G.factors:
        return "Z1"
    return "x".join(f"Z{n}" for n in G.factors)


def parse_group(text: str) -> FiniteAbelianGroup:
    text = text.strip()
    if not re.fullmatch(r"Z\d+(xZ\d+)*", text):
        raise GroupError(f"bad group literal {text!r}")
    factors = [int(p[1:]) for p in text.split("x")]
    if factors == [1]:
        return trivial_group()
    return make_group(factors)


def split_elements(text: str) -> list:
    """Split a comma separated list of element literals, keeping tuples intact."""
    return re.findall(r"e|\([^)]*\)", text)


def product_with_z2(G: FiniteAbelianGroup) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(G.factors + (2,))


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteAbelianGroup
    gens: tuple
    elements: frozenset = field(compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, a) -> bool:
        return a in self.elements

    def sorted_elements(self) -> list:
        return sorted(self.elements)


def subgroup_generated(G: FiniteAbelianGroup, gens: Sequence[GroupElement]) -> Subgroup:
    gens = tuple(G.check(g) for g in gens)
    seen = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a + g
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return Subgroup(G, gens, frozenset(seen))


def index(sub: Subgroup) -> int:
    return sub.parent.order // sub.order


def cosets(sub: Subgroup) -> list:
    """Cosets as sorted element lists, ordered by their least element."""
    out = []
    covered = set()
    for a in sub.parent.elements():
        if a in covered:
            continue
        cell = sorted(a + h for h in sub.elements)
        covered.update(cell)
        out.append(cell)
    return out


@dataclass(frozen=True)
class Projection:
    """Surjective homomorphism G -> Q given by a full lookup table."""

    domain: FiniteAbelianGroup
    codomain: FiniteAbelianGroup
    table: tuple  # pairs (a, image), sorted by a

    def __post_init__(self):
        object.__setattr__(self, "_map", dict(self.table))

    def __call__(self, a: GroupElement) -> GroupElement:
        self.domain.check(a)
        return self._map[a]

    def as_dict(self) -> dict:
        return dict(self.table)


def projection_from_function(domain, codomain, fn: Callable) -> Projection:
    return Projection(domain, codomain, tuple((a, codomain.check(fn(a))) for a in domain.elements()))


def _max_order_decomposition(G: FiniteAbelianGroup, K: frozenset) -> list:
    """Return (g, m) pairs with G/K = direct sum of the cyclic groups <g + K> of order m.

    Uses the classical argument: an element a of maximal order in the quotient
    splits off, and every element of the smaller quotient lifts with the same order.
    """
    if len(K) == G.order:
        return []

    def order_mod(g):
        m, x = 1, g
        while x not in K:
            x = x + g
            m += 1
        return m

    best = max(G.elements(), key=lambda g: (order_mod(g), [-c for c in g.coords]))
    m = order_mod(best)
    multiples = {}
    x = G.identity
    for c in range(m):
        multiples[c] = x
        x = x + best
    K2 = frozenset(k + multiples[c] for k in K for c in range(m))
    out = [(best, m)]
    for g, mg in _max_order_decomposition(G, K2):
        target = g.scale(mg)
        c = next(c for c in range(m) if target - multiples[c] in K)
        if c % mg:
            raise AssertionError("lifting lemma violated")
        out.append((g - best.scale(c // mg), mg))
    return out


def quotient(G: FiniteAbelianGroup, sub: Subgroup):
    """Return (Q, projection) with Q isomorphic to G/sub."""
    if sub.order == 1:
        return G, projection_from_function(G, G, lambda a: a)
    K = frozenset(sub.elements)
    basis = _max_order_decomposition(G, K)
    Q = make_group([m for _, m in basis])
    lookup = {}
    for coords in itertools.product(*(range(m) for _, m in basis)):
        x = G.identity
        for (g, _), c in zip(basis, coords):
            x = x + g.scale(c)
        for k in K:
            lookup[x + k] = Q.element(coords)
    return Q, projection_from_function(G, Q, lookup.__getitem__)


def is_cyclic(G: FiniteAbelianGroup) -> bool:
    return any(G.order_of(a) == G.order for a in G.elements())
