"""Builders for the graded algebras used throughout the package."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import AlgebraError, GradedAlgebra, checked, direct_product, regrade
from .groups import (
    FiniteAbelianGroup,
    GroupElement,
    Projection,
    Subgroup,
    make_group,
    trivial_group,
)
from .linalg import nullspace


class InvalidCocycleError(ValueError):
    pass


class InvalidInputError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Cocycle:
    group: FiniteAbelianGroup
    elements: tuple  # the subgroup H, sorted
    table: dict  # (h1, h2) -> nonzero Fraction

    def __call__(self, a: GroupElement, b: GroupElement) -> Fraction:
        return self.table[(a, b)]

    def is_symmetric(self) -> bool:
        return all(self.table[(a, b)] == self.table[(b, a)] for a, b in self.table)


def _element_list(group, H) -> tuple:
    if isinstance(H, Subgroup):
        elems = H.elements
    else:
        elems = H
    return tuple(sorted(group.check(h) for h in elems))


def make_cocycle(group: FiniteAbelianGroup, H, table: dict) -> Cocycle:
    elems = _element_list(group, H)
    hs = set(elems)
    if group.identity not in hs or any(a + b not in hs for a in elems for b in elems):
        raise InvalidCocycleError("cocycle domain is not a subgroup")
    clean = {}
    for a in elems:
        for b in elems:
            if (a, b) not in table:
                raise InvalidCocycleError(f"missing cocycle value at ({a}, {b})")
            v = Fraction(table[(a, b)])
            if v == 0:
                raise InvalidCocycleError(f"zero cocycle value at ({a}, {b})")
            clean[(a, b)] = v
    for a in elems:
        for b in elems:
            for c in elems:
                if clean[(a, b)] * clean[(a + b, c)] != clean[(b, c)] * clean[(a, b + c)]:
                    raise InvalidCocycleError(f"cocycle identity fails at ({a}, {b}, {c})")
    return Cocycle(group, elems, clean)


def trivial_cocycle(group: FiniteAbelianGroup, H) -> Cocycle:
    elems = _element_list(group, H)
    return make_cocycle(group, elems, {(a, b): 1 for a in elems for b in elems})


def cocycle_from_coboundary(group: FiniteAbelianGroup, H, t: dict) -> Cocycle:
    elems = _element_list(group, H)
    table = {}
    for a in elems:
        for b in elems:
            if not t[a] or not t[b]:
                raise InvalidCocycleError("coboundary needs nonzero values")
            table[(a, b)] = Fraction(t[a]) * Fraction(t[b]) / Fraction(t[a + b])
    return make_cocycle(group, elems, table)


def pauli_cocycle() -> Cocycle:
    K = make_group([2, 2])
    table = {
        (a, b): (-1) ** (a.coords[1] * b.coords[0]) for a in K.elements() for b in K.elements()
    }
    return make_cocycle(K, K.elements(), table)


def _digits(coords) -> str:
    if all(c < 10 for c in coords):
        return "".join(str(c) for c in coords)
    return "_".join(str(c) for c in coords)


def _pair(i, j, k) -> str:
    return f"{i}{j}" if k < 10 else f"{i}_{j}"


@dataclass(frozen=True, eq=False)
class CanonicalData:
    """Matrix-over-twisted-group-algebra description of each basis element."""

    k: int
    cocycle: Cocycle
    theta: tuple
    entries: tuple  # basis index -> (i, j, h), 1-based matrix indices


def twisted_group_algebra(cocycle: Cocycle) -> GradedAlgebra:
    G = cocycle.group
    elems = cocycle.elements
    pos = {h: n for n, h in enumerate(elems)}
    products = {}
    for a in elems:
        for b in elems:
            products[(pos[a], pos[b])] = ((pos[a + b], cocycle(a, b)),)
    unit = pos[G.identity] if cocycle(G.identity, G.identity) == 1 else None
    meta = CanonicalData(1, cocycle, (G.identity,), tuple((1, 1, h) for h in elems))
    return checked(
        GradedAlgebra(G, [f"eta{_digits(h.coords)}" for h in elems], elems, products, unit, meta)
    )


def elementary_canonical(
    group: FiniteAbelianGroup, k: int, H, cocycle: Optional[Cocycle], theta: Sequence[GroupElement]
) -> GradedAlgebra:
    """M_k over a twisted group algebra, degree(E_ij eta_h) = theta_j - theta_i + h."""
    theta = tuple(group.check(t) for t in theta)
    if k < 1 or len(theta) != k:
        raise InvalidInputError("theta must have exactly k >= 1 entries")
    if cocycle is None:
        cocycle = trivial_cocycle(group, H)
    elems = _element_list(group, H)
    if tuple(cocycle.elements) != elems or cocycle.group != group:
        raise InvalidCocycleError("cocycle is defined on a different subgroup")
    entries = [(i, j, h) for i in range(1, k + 1) for j in range(1, k + 1) for h in elems]
    pos = {e: n for n, e in enumerate(entries)}
    labels = []
    for i, j, h in entries:
        if len(elems) == 1:
            labels.append(f"E{_pair(i, j, k)}")
        elif k == 1:
            labels.append(f"eta{_digits(h.coords)}")
        else:
            labels.append(f"E{_pair(i, j, k)}.eta{_digits(h.coords)}")
    degrees = [theta[j - 1] - theta[i - 1] + h for i, j, h in entries]
    products = {}
    for (i, j, a) in entries:
        for s in range(1, k + 1):
            for b in elems:
                products[(pos[(i, j, a)], pos[(j, s, b)])] = ((pos[(i, s, a + b)], cocycle(a, b)),)
    unit = None
    if k == 1 and cocycle(group.identity, group.identity) == 1:
        unit = pos[(1, 1, group.identity)]
    meta = CanonicalData(k, cocycle, theta, tuple(entries))
    return checked(GradedAlgebra(group, labels, degrees, products, unit, meta))


def elementary_matrix_grading(group: FiniteAbelianGroup, k: int, theta) -> GradedAlgebra:
    """M_k with degree(E_ij) = theta_j - theta_i."""
    theta = tuple(group.check(t) for t in theta)
    if k < 1 or len(theta) != k:
        raise InvalidInputError("theta must have exactly k >= 1 entries")
    e = group.identity
    idx = lambda i, j: (i - 1) * k + (j - 1)
    labels, degrees, products = [], [], {}
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            labels.append(f"E{_pair(i, j, k)}")
            degrees.append(theta[j - 1] - theta[i - 1])
            for s in range(1, k + 1):
                products[(idx(i, j), idx(j, s))] = ((idx(i, s), 1),)
    meta = CanonicalData(
        k,
        trivial_cocycle(group, [e]),
        theta,
        tuple((i, j, e) for i in range(1, k + 1) for j in range(1, k + 1)),
    )
    return checked(GradedAlgebra(group, labels, degrees, products, 0 if k == 1 else None, meta))


def matrix_algebra(k: int) -> GradedAlgebra:
    G = trivial_group()
    return elementary_matrix_grading(G, k, [G.identity] * k)


def upper_triangular(k: int, group: FiniteAbelianGroup = None, theta=None) -> GradedAlgebra:
    group = group or trivial_group()
    theta = tuple(theta) if theta is not None else (group.identity,) * k
    pairs = [(i, j) for i in range(1, k + 1) for j in range(i, k + 1)]
    pos = {p: n for n, p in enumerate(pairs)}
    products = {}
    for (i, j) in pairs:
        for s in range(j, k + 1):
            products[(pos[(i, j)], pos[(j, s)])] = ((pos[(i, s)], 1),)
    return checked(
        GradedAlgebra(
            group,
            [f"E{_pair(i, j, k)}" for i, j in pairs],
            [theta[j - 1] - theta[i - 1] for i, j in pairs],
            products,
        )
    )


def _express(basis: list, target: list) -> list:
    """Coefficients c with sum c_i basis_i = target (basis independent)."""
    n = len(basis)
    eqs = []
    for pos in range(len(target)):
        row = {i: Fraction(b[pos]) for i, b in enumerate(basis) if b[pos]}
        if target[pos]:
            row[n] = -Fraction(target[pos])
        if row:
            eqs.append(row)
    sols = [s for s in nullspace(eqs, n + 1) if s.get(n)]
    if not sols:
        raise AlgebraError("product leaves the span of the given matrices")
    s = sols[0]
    return [s.get(i, 0) / s[n] for i in range(n)]


def _matmul(a, b, k):
    return [
        sum(a[i * k + m] * b[m * k + j] for m in range(k)) for i in range(k) for j in range(k)
    ]


def algebra_from_matrices(group, labels, degrees, mats, k, unit=None) -> GradedAlgebra:
    """Subalgebra of M_k spanned by the given flattened k x k matrices."""
    products = {}
    for a, ma in enumerate(mats):
        for b, mb in enumerate(mats):
            coeffs = _express(mats, _matmul(ma, mb, k))
            products[(a, b)] = tuple((c, x) for c, x in enumerate(coeffs) if x)
    return checked(GradedAlgebra(group, labels, degrees, products, unit))


def pauli_m2() -> GradedAlgebra:
    K = make_group([2, 2])
    mats = [[1, 0, 0, 1], [1, 0, 0, -1], [0, 1, 1, 0], [0, 1, -1, 0]]
    return algebra_from_matrices(
        K,
        ["I", "E11-E22", "E12+E21", "E12-E21"],
        [K.element(c) for c in ((0, 0), (1, 1), (0, 1), (1, 0))],
        mats,
        2,
        unit=0,
    )


def quaternions() -> GradedAlgebra:
    K = make_group([2, 2])
    # index: 0=1, 1=i, 2=j, 3=k; table of e_a e_b = sign * e_c
    table = {
        (1, 1): (0, -1), (2, 2): (0, -1), (3, 3): (0, -1),
        (1, 2): (3, 1), (2, 1): (3, -1),
        (2, 3): (1, 1), (3, 2): (1, -1),
        (3, 1): (2, 1), (1, 3): (2, -1),
    }
    products = {(0, a): ((a, 1),) for a in range(4)}
    products.update({(a, 0): ((a, 1),) for a in range(4)})
    products.update({ab: ((c, s),) for ab, (c, s) in table.items()})
    return checked(
        GradedAlgebra(
            K,
            ["1", "i", "j", "k"],
            [K.element(c) for c in ((0, 0), (0, 1), (1, 0), (1, 1))],
            products,
            0,
        )
    )


def witness_w3() -> GradedAlgebra:
    G = make_group([3])
    return checked(
        GradedAlgebra(
            G, ["u", "v", "w"], [G.element((1,)), G.element((2,)), G.element((0,))], {(0, 1): ((2, 1),)}
        )
    )


def lifted_w3() -> GradedAlgebra:
    """witness_w3 over Z3 x Z2 with u, v odd and w even."""
    G = make_group([3, 2])
    return checked(
        GradedAlgebra(
            G, ["u", "v", "w"], [G.element((1, 1)), G.element((2, 1)), G.element((0, 0))], {(0, 1): ((2, 1),)}
        )
    )


def nil_one_dim(label: str = "x", group: FiniteAbelianGroup = None, degree=None) -> GradedAlgebra:
    group = group or make_group([2])
    degree = degree if degree is not None else group.element([1] * len(group.factors))
    return checked(GradedAlgebra(group, [label], [degree], {}))


def unitization(A: GradedAlgebra, label: str = "1") -> GradedAlgebra:
    if label in A.labels:
        raise InvalidInputError(f"label {label!r} already used")
    n = A.dim
    products = {(0, 0): ((0, 1),)}
    for i in range(n):
        products[(0, i + 1)] = ((i + 1, 1),)
        products[(i + 1, 0)] = ((i + 1, 1),)
    for (i, j), entries in A.products.items():
        products[(i + 1, j + 1)] = tuple((k + 1, c) for k, c in entries)
    return checked(
        GradedAlgebra(A.group, [label] + list(A.labels), [A.group.identity] + list(A.degrees), products, 0)
    )


def _grassmann_monomials(n: int) -> list:
    out = []
    for size in range(1, n + 1):
        out.extend(itertools.combinations(range(1, n + 1), size))
    return out


def _wedge(s: tuple, t: tuple):
    """Product of exterior monomials: (sign, merged) or None when zero."""
    if set(s) & set(t):
        return None
    inversions = sum(1 for a in s for b in t if a > b)
    return (-1) ** inversions, tuple(sorted(s + t))


def _monomial_label(s: tuple, n: int) -> str:
    return "e" + ("".join(map(str, s)) if n < 10 else "_".join(map(str, s)))


def grassmann(n: int) -> GradedAlgebra:
    """Non-unital Grassmann algebra on n generators, graded by parity over Z2."""
    if n < 1:
        raise InvalidInputError("grassmann needs n >= 1")
    Z2 = make_group([2])
    monos = _grassmann_monomials(n)
    pos = {m: i for i, m in enumerate(monos)}
    products = {}
    for s in monos:
        for t in monos:
            w = _wedge(s, t)
            if w:
                products[(pos[s], pos[t])] = ((pos[w[1]], w[0]),)
    return checked(
        GradedAlgebra(Z2, [_monomial_label(m, n) for m in monos], [Z2.element([len(m) % 2]) for m in monos], products)
    )


def grassmann_envelope(A: GradedAlgebra, n: int) -> GradedAlgebra:
    """(A_0 (x) E_0) + (A_1 (x) E_1) over the Grassmann algebra truncated at n generators."""
    if not A.group.factors or A.group.factors[-1] != 2:
        raise InvalidInputError("envelope input must be graded by a group whose last factor is Z2")
    if n < 2:
        raise InvalidInputError("envelope truncation needs n >= 2")
    G = make_group(A.group.factors[:-1])
    monos = _grassmann_monomials(n)
    basis = [(a, m) for a in range(A.dim) for m in monos if len(m) % 2 == A.degrees[a].coords[-1]]
    pos = {b: i for i, b in enumerate(basis)}
    products = {}
    for (a, s) in basis:
        for (b, t) in basis:
            entries = A.basis_product(a, b)
            if not entries:
                continue
            w = _wedge(s, t)
            if not w:
                continue
            sign, u = w
            out = []
            for c, x in entries:
                if (c, u) not in pos:
                    raise InvalidInputError("envelope input violates the grading law")
                out.append((pos[(c, u)], sign * x))
            products[(pos[(a, s)], pos[(b, t)])] = tuple(out)
    labels = [f"{A.labels[a]}|{_monomial_label(m, n)}" for a, m in basis]
    degrees = [G.element(A.degrees[a].coords[:-1]) for a, _ in basis]
    return checked(GradedAlgebra(G, labels, degrees, products))


def coarsen(A: GradedAlgebra, projection: Projection) -> GradedAlgebra:
    if projection.domain != A.group:
        raise InvalidInputError("projection is defined on a different group")
    return regrade(A, projection.codomain, projection)


def extend_by_zeros(A: GradedAlgebra, group: FiniteAbelianGroup) -> GradedAlgebra:
    """Push A's grading into a larger product group by padding coordinates with zeros."""
    pad = len(group.factors) - len(A.group.factors)
    if pad < 0 or group.factors[: len(A.group.factors)] != A.group.factors:
        raise InvalidInputError("target group does not extend the grading group")
    return regrade(A, group, lambda d: group.element(d.coords + (0,) * pad))


def quaternion_nil_family(n: int) -> GradedAlgebra:
    """Quaternions times n copies of a one-dimensional nil algebra over (Z2)^(n+2)."""
    if n < 1:
        raise InvalidInputError("family index must be >= 1")
    G = make_group([2] * (n + 2))
    A = extend_by_zeros(quaternions(), G)
    for t in range(1, n + 1):
        coords = [0] * (n + 2)
        coords[1 + t] = 1
        A = direct_product(A, nil_one_dim(f"x{t}", G, G.element(coords)))
    return checked(A)


def z3xz5_grading() -> GradedAlgebra:
    G = make_group([3, 5])
    theta = [G.element(c) for c in ((0, 0), (1, 0), (0, 1), (0, 4))]
    return elementary_matrix_grading(G, 4, theta)


def z3xz5_merged_grading() -> GradedAlgebra:
    G = make_group([3, 5])
    theta = [G.element(c) for c in ((0, 0), (1, 0), (0, 1), (0, 1))]
    return elementary_matrix_grading(G, 4, theta)


def group_algebra(m: int) -> GradedAlgebra:
    G = make_group([m])
    return twisted_group_algebra(trivial_cocycle(G, G.elements()))


FIXTURE_HELP = (
    "pauli-m2, quaternion, example-3-16, example-3-18, grassmann:<n>, w3, nilspan, prop328:<n>, "
    "m:<k>, ut:<k>, group-algebra:<m>, w3-unital, w3-lifted, envelope-w3:<n>"
)


def fixture(name: str) -> GradedAlgebra:
    simple = {
        "pauli-m2": pauli_m2,
        "quaternion": quaternions,
        "quaternions": quaternions,
        "example-3-16": z3xz5_grading,
        "example-3-18": z3xz5_merged_grading,
        "w3": witness_w3,
        "nilspan": nil_one_dim,
        "w3-unital": lambda: unitization(witness_w3()),
        "w3-lifted": lifted_w3,
    }
    if name in simple:
        return simple[name]()
    head, _, arg = name.partition(":")
    param = {
        "grassmann": grassmann,
        "prop328": quaternion_nil_family,
        "m": matrix_algebra,
        "ut": upper_triangular,
        "group-algebra": group_algebra,
        "envelope-w3": lambda n: grassmann_envelope(lifted_w3(), n),
    }
    if head in param and arg.isdigit():
        return param[head](int(arg))
    raise KeyError(f"unknown fixture {name!r}; known: {FIXTURE_HELP}")
