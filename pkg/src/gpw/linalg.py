"""Sparse exact linear algebra over the rationals.

Vectors are dicts {coordinate: Fraction} without zero entries.  Subspaces are
stored in reduced row echelon form, so equality is a structural comparison.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable


def clean(v: dict) -> dict:
    return {k: Fraction(c) for k, c in v.items() if c}


def axpy(target: dict, c, src: dict) -> None:
    """target += c * src, in place, dropping zeros."""
    if not c:
        return
    for k, x in src.items():
        s = target.get(k, 0) + c * x
        if s:
            target[k] = s
        else:
            target.pop(k, None)


def scaled(v: dict, c) -> dict:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


class Echelon:
    """Incrementally maintained row echelon basis (pivot = least coordinate)."""

    def __init__(self, vectors: Iterable[dict] = ()):
        self.rows = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        v = dict(v)
        rows = self.rows
        while True:
            hits = [k for k in v if k in rows]
            if not hits:
                return v
            k = min(hits)
            axpy(v, -v[k], rows[k])

    def add(self, v: dict) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = 1 / Fraction(r[p])
        self.rows[p] = {k: x * inv for k, x in r.items()}
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def rref(self) -> list:
        done = {}
        for p in sorted(self.rows, reverse=True):
            row = dict(self.rows[p])
            for q in [q for q in row if q != p and q in done]:
                axpy(row, -row[q], done[q])
            done[p] = row
        return [done[p] for p in sorted(done)]


class Subspace:
    """Exact subspace of Q^n kept in reduced row echelon form."""

    __slots__ = ("ambient", "rows", "_pivots")

    def __init__(self, ambient: int, vectors: Iterable[dict] = ()):
        self.ambient = ambient
        ech = Echelon(vectors)
        self.rows = tuple(tuple(sorted(r.items())) for r in ech.rref())
        self._pivots = {r[0][0]: dict(r) for r in self.rows}

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient)

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls(ambient, ({i: 1} for i in range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def basis(self) -> list:
        return [dict(r) for r in self.rows]

    def pivots(self) -> list:
        return [r[0][0] for r in self.rows]

    def reduce(self, v: dict) -> dict:
        v = dict(v)
        for p, row in self._pivots.items():
            if p in v:
                axpy(v, -v[p], row)
        return v

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(dict(r)) for r in self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.ambient == other.ambient and self.rows == other.rows

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient, self.basis() + other.basis())

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim} in Q^{self.ambient})"


def nullspace(equations: Iterable[dict], ncols: int) -> list:
    """Basis of {x in Q^ncols : sum_k eq[k] x_k = 0 for every equation}."""
    ech = Echelon(equations)
    rows = ech.rref()
    pivots = {min(r): r for r in rows}
    out = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = {f: Fraction(1)}
        for p, r in pivots.items():
            c = r.get(f)
            if c:
                v[p] = -c
        out.append(v)
    return out


def combine(coeffs: dict, vectors: list) -> dict:
    out = {}
    for i, c in coeffs.items():
        axpy(out, c, vectors[i])
    return out


def intersect(U: Subspace, V: Subspace) -> Subspace:
    bu, bv = U.basis(), V.basis()
    n = len(bu)
    eqs = {}
    for i, u in enumerate(bu):
        for k, x in u.items():
            eqs.setdefault(k, {})[i] = x
    for j, v in enumerate(bv):
        for k, x in v.items():
            eqs.setdefault(k, {})[n + j] = -x
    sols = nullspace(list(eqs.values()), n + len(bv))
    vecs = [combine({i: c for i, c in s.items() if i < n}, bu) for s in sols]
    return Subspace(U.ambient, vecs)


def restrict_to_coordinates(U: Subspace, coords) -> Subspace:
    """The part of U supported on the given coordinate set."""
    coords = set(coords)
    return intersect(U, Subspace(U.ambient, ({i: 1} for i in coords)))
