"""Finite-dimensional G-graded associative algebras given by structure constants."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .groups import FiniteAbelianGroup, GroupElement, format_element
from .scalars import format_rational


class AlgebraError(ValueError):
    pass


class AlgebraMismatchError(AlgebraError):
    pass


class InvalidAlgebraError(AlgebraError):
    pass


class InconsistencyError(AlgebraError):
    pass


def _normalize_products(products, dim) -> dict:
    out = {}
    for (i, j), entries in products.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise AlgebraError(f"product index ({i}, {j}) out of range")
        acc = {}
        for k, c in entries:
            if not 0 <= k < dim:
                raise AlgebraError(f"result index {k} out of range")
            acc[k] = acc.get(k, 0) + Fraction(c)
        row = tuple(sorted((k, c) for k, c in acc.items() if c))
        if row:
            out[(i, j)] = row
    return out


@dataclass(frozen=True, eq=False)
class GradedAlgebra:
    group: FiniteAbelianGroup
    labels: tuple
    degrees: tuple
    products: dict
    unit: Optional[int] = None
    meta: object = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if len(self.labels) != len(self.degrees):
            raise AlgebraError("labels and degrees differ in length")
        if len(set(self.labels)) != len(self.labels):
            raise AlgebraError("basis labels must be distinct")
        for d in self.degrees:
            self.group.check(d)
        object.__setattr__(self, "products", _normalize_products(self.products, len(self.labels)))
        if self.unit is not None and not 0 <= self.unit < len(self.labels):
            raise AlgebraError("unit index out of range")
        comps = {}
        for i, d in enumerate(self.degrees):
            comps.setdefault(d, []).append(i)
        object.__setattr__(self, "_components", {d: tuple(v) for d, v in comps.items()})

    @property
    def dim(self) -> int:
        return len(self.labels)

    def degree(self, i: int) -> GroupElement:
        return self.degrees[i]

    def component_basis(self, xi: GroupElement) -> tuple:
        self.group.check(xi)
        return self._components.get(xi, ())

    def support(self) -> set:
        return set(self._components)

    def sorted_support(self) -> list:
        return sorted(self._components)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise AlgebraError(f"no basis element named {label!r}") from None

    def basis_product(self, i: int, j: int) -> tuple:
        return self.products.get((i, j), ())

    def basis(self, i) -> "AlgebraElement":
        if isinstance(i, str):
            i = self.index_of(i)
        return AlgebraElement(self, {i: Fraction(1)})

    def element(self, coeffs) -> "AlgebraElement":
        if isinstance(coeffs, dict):
            data = {}
            for key, c in coeffs.items():
                i = self.index_of(key) if isinstance(key, str) else key
                data[i] = data.get(i, 0) + c
            return AlgebraElement(self, data)
        return AlgebraElement(self, dict(enumerate(coeffs)))

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def same_structure(self, other: "GradedAlgebra") -> bool:
        return (
            self.group == other.group
            and self.degrees == other.degrees
            and self.products == other.products
            and self.unit == other.unit
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedAlgebra)
            and self.same_structure(other)
            and self.labels == other.labels
        )

    __hash__ = object.__hash__


def mul_vec(A: GradedAlgebra, u: dict, v: dict) -> dict:
    """Product of two coefficient dicts; coefficients may be any ring values."""
    out = {}
    prods = A.products
    for i, a in u.items():
        for j, b in v.items():
            entries = prods.get((i, j))
            if not entries:
                continue
            ab = a * b
            for k, c in entries:
                s = out.get(k, 0) + ab * c
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
    return out


def add_vec(u: dict, v: dict, c=1) -> dict:
    out = dict(u)
    for k, x in v.items():
        s = out.get(k, 0) + c * x
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def bracket_vec(A: GradedAlgebra, u: dict, v: dict) -> dict:
    return add_vec(mul_vec(A, u, v), mul_vec(A, v, u), -1)


class AlgebraElement:
    __slots__ = ("owner", "coeffs")

    def __init__(self, owner: GradedAlgebra, coeffs: dict):
        self.owner = owner
        self.coeffs = {k: c for k, c in coeffs.items() if c}
        for k in self.coeffs:
            if not 0 <= k < owner.dim:
                raise AlgebraError(f"coordinate {k} out of range")

    def _same(self, other: "AlgebraElement"):
        if not isinstance(other, AlgebraElement) or other.owner is not self.owner:
            raise AlgebraMismatchError("elements belong to different algebras")

    def coefficients(self) -> list:
        return [self.coeffs.get(i, 0) for i in range(self.owner.dim)]

    def __add__(self, other):
        self._same(other)
        return AlgebraElement(self.owner, add_vec(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._same(other)
        return AlgebraElement(self.owner, add_vec(self.coeffs, other.coeffs, -1))

    def __neg__(self):
        return AlgebraElement(self.owner, {k: -c for k, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return AlgebraElement(self.owner, {k: c * other for k, c in self.coeffs.items()})

    def __rmul__(self, other):
        return AlgebraElement(self.owner, {k: other * c for k, c in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        return isinstance(other, AlgebraElement) and other.owner is self.owner and self.coeffs == other.coeffs

    __hash__ = None

    def degrees(self) -> set:
        return {self.owner.degrees[k] for k in self.coeffs}

    def is_homogeneous_of(self, xi: GroupElement) -> bool:
        return all(self.owner.degrees[k] == xi for k in self.coeffs)

    def __str__(self):
        return format_vector(self.owner, self.coeffs)

    def __repr__(self):
        return f"AlgebraElement({self})"


def format_vector(A: GradedAlgebra, v: dict) -> str:
    if not v:
        return "0"
    parts = []
    for k in sorted(v):
        c = v[k]
        label = A.labels[k]
        if isinstance(c, Fraction) or isinstance(c, int):
            if c == 1:
                parts.append(f"+ {label}")
            elif c == -1:
                parts.append(f"- {label}")
            elif c < 0:
                parts.append(f"- {format_rational(-c)}*{label}")
            else:
                parts.append(f"+ {format_rational(c)}*{label}")
        else:
            parts.append(f"+ ({c})*{label}")
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._same(b)
    return AlgebraElement(a.owner, mul_vec(a.owner, a.coeffs, b.coeffs))


def homogeneous_component(a: AlgebraElement, xi: GroupElement) -> AlgebraElement:
    A = a.owner
    A.group.check(xi)
    return AlgebraElement(A, {k: c for k, c in a.coeffs.items() if A.degrees[k] == xi})


def component_basis(A: GradedAlgebra, xi: GroupElement) -> tuple:
    return A.component_basis(xi)


def support(A: GradedAlgebra) -> set:
    return A.support()


@dataclass(frozen=True)
class Violation:
    kind: str  # "grading", "associativity" or "unit"
    indices: tuple

    def __str__(self):
        return f"{self.kind} violation at {self.indices}"


def validate(A: GradedAlgebra) -> list:
    """All grading-law, associativity and unit violations (empty list = valid)."""
    report = []
    deg = A.degrees
    for (i, j), entries in sorted(A.products.items()):
        target = deg[i] + deg[j]
        for k, _ in entries:
            if deg[k] != target:
                report.append(Violation("grading", (i, j, k)))
    by_left, by_right = {}, {}
    for (i, j), entries in A.products.items():
        by_left.setdefault(i, []).append((j, entries))
        by_right.setdefault(j, []).append((i, entries))
    left, right = {}, {}
    # (e_i e_j) e_k: expand e_i e_j = sum c_m e_m, then e_m e_k
    for (i, j), entries in A.products.items():
        for m, c in entries:
            for k, mk in by_left.get(m, ()):
                acc = left.setdefault((i, j, k), {})
                for r, d in mk:
                    s = acc.get(r, 0) + c * d
                    if s:
                        acc[r] = s
                    else:
                        acc.pop(r, None)
    # e_i (e_j e_k)
    for (j, k), entries in A.products.items():
        for m, c in entries:
            for i, im in by_right.get(m, ()):
                acc = right.setdefault((i, j, k), {})
                for r, d in im:
                    s = acc.get(r, 0) + c * d
                    if s:
                        acc[r] = s
                    else:
                        acc.pop(r, None)
    for key in sorted(set(left) | set(right)):
        if left.get(key, {}) != right.get(key, {}):
            report.append(Violation("associativity", key))
    if A.unit is not None:
        u = A.unit
        for i in range(A.dim):
            one = ((i, Fraction(1)),)
            if A.basis_product(u, i) != one or A.basis_product(i, u) != one:
                report.append(Violation("unit", (i,)))
    return report


def checked(A: GradedAlgebra) -> GradedAlgebra:
    problems = validate(A)
    if problems:
        raise InvalidAlgebraError("; ".join(str(p) for p in problems[:5]))
    return A


def regrade(A: GradedAlgebra, group: FiniteAbelianGroup, fn: Callable) -> GradedAlgebra:
    """Same multiplication, degrees pushed through fn (a homomorphism into group)."""
    return checked(
        GradedAlgebra(group, A.labels, [fn(d) for d in A.degrees], A.products, A.unit)
    )


def direct_product(A: GradedAlgebra, B: GradedAlgebra) -> GradedAlgebra:
    if A.group != B.group:
        raise AlgebraMismatchError("direct product needs a common grading group")
    if set(A.labels) & set(B.labels):
        labels = [f"L.{x}" for x in A.labels] + [f"R.{x}" for x in B.labels]
    else:
        labels = list(A.labels) + list(B.labels)
    n = A.dim
    products = dict(A.products)
    for (i, j), entries in B.products.items():
        products[(i + n, j + n)] = tuple((k + n, c) for k, c in entries)
    return GradedAlgebra(A.group, labels, list(A.degrees) + list(B.degrees), products)


def describe_degree(xi: GroupElement) -> str:
    return format_element(xi)
