"""Structural invariants of a graded algebra, computed with exact subspaces."""
from __future__ import annotations

from fractions import Fraction

from .algebra import GradedAlgebra, InconsistencyError, add_vec, bracket_vec, mul_vec
from .linalg import Echelon, Subspace, nullspace, restrict_to_coordinates

NOT_NILPOTENT = "not nilpotent"


def _unit(i):
    return {i: Fraction(1)}


def whole(A: GradedAlgebra) -> Subspace:
    return Subspace.full(A.dim)


def subspace_product(A: GradedAlgebra, U: Subspace, V: Subspace) -> Subspace:
    ech = Echelon()
    bu, bv = U.basis(), V.basis()
    for u in bu:
        for v in bv:
            w = mul_vec(A, u, v)
            if w:
                ech.add(w)
                if len(ech) == A.dim:
                    return Subspace(A.dim, ech.rows.values())
    return Subspace(A.dim, ech.rows.values())


def subspace_bracket(A: GradedAlgebra, U: Subspace, V: Subspace) -> Subspace:
    ech = Echelon()
    for u in U.basis():
        for v in V.basis():
            w = bracket_vec(A, u, v)
            if w:
                ech.add(w)
    return Subspace(A.dim, ech.rows.values())


def powers(A: GradedAlgebra, U: Subspace) -> list:
    """U, U^2, U^3, ... for a subalgebra U, until the chain stabilizes."""
    chain = [U]
    while True:
        nxt = subspace_product(A, chain[-1], U)
        if nxt == chain[-1]:
            return chain
        chain.append(nxt)
        if nxt.is_zero():
            return chain


def power_chain(A: GradedAlgebra) -> list:
    return powers(A, whole(A))


def _index_from_chain(chain):
    if chain[-1].is_zero():
        return len(chain)
    return NOT_NILPOTENT


def nilpotency_index(A: GradedAlgebra):
    """Least n with A^n = 0, or NOT_NILPOTENT."""
    return _index_from_chain(power_chain(A))


def subalgebra_nilpotency(A: GradedAlgebra, U: Subspace):
    return _index_from_chain(powers(A, U))


def center(A: GradedAlgebra) -> Subspace:
    # z = sum z_j e_j commutes with e_i  <=>  sum_j z_j (c_ji^k - c_ij^k) = 0 for all i, k
    eqs = {}
    for (a, b), entries in A.products.items():
        # contributes to [e_j, e_i] with j = a, i = b (+) and j = b, i = a (-)
        for k, c in entries:
            e = eqs.setdefault((b, k), {})
            e[a] = e.get(a, 0) + c
            e = eqs.setdefault((a, k), {})
            e[b] = e.get(b, 0) - c
    rows = [{j: c for j, c in e.items() if c} for e in eqs.values()]
    return Subspace(A.dim, nullspace([r for r in rows if r], A.dim))


def neutral_component(A: GradedAlgebra) -> Subspace:
    return Subspace(A.dim, (_unit(i) for i in A.component_basis(A.group.identity)))


def is_neutral_central(A: GradedAlgebra) -> bool:
    return neutral_component(A).is_subspace_of(center(A))


def ideal_closure(A: GradedAlgebra, vectors) -> Subspace:
    ech = Echelon()
    queue = []
    for v in vectors:
        if ech.add(v):
            queue.append(v)
    while queue and len(ech) < A.dim:
        v = queue.pop()
        for i in range(A.dim):
            for w in (mul_vec(A, v, _unit(i)), mul_vec(A, _unit(i), v)):
                if w and ech.add(w):
                    queue.append(w)
    return Subspace(A.dim, ech.rows.values())


def commutator_space(A: GradedAlgebra) -> Subspace:
    """span{[e_i, e_j]}: the linear span of all commutators."""
    ech = Echelon()
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            w = bracket_vec(A, _unit(i), _unit(j))
            if w:
                ech.add(w)
    return Subspace(A.dim, ech.rows.values())


def commutator_ideal(A: GradedAlgebra) -> Subspace:
    return ideal_closure(A, commutator_space(A).basis())


def commutator_ideal_nilpotency(A: GradedAlgebra):
    I = commutator_ideal(A)
    if I.is_zero():
        return 1
    return subalgebra_nilpotency(A, I)


def commutator_products(A: GradedAlgebra, d: int) -> Subspace:
    """span of all products c_1 ... c_d with each c_i a commutator."""
    C = commutator_space(A)
    P = C
    for _ in range(d - 1):
        P = subspace_product(A, P, C)
    return P


def _stabilize(first, step):
    series = [first]
    while True:
        nxt = step(series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def lower_central_series(A: GradedAlgebra) -> list:
    W = whole(A)
    return _stabilize(commutator_space(A), lambda L: subspace_bracket(A, W, L))


def derived_series(A: GradedAlgebra) -> list:
    return _stabilize(commutator_space(A), lambda D: subspace_bracket(A, D, D))


def lie_series(A: GradedAlgebra):
    return lower_central_series(A), derived_series(A)


def is_lie_nilpotent(A: GradedAlgebra) -> bool:
    return lower_central_series(A)[-1].is_zero()


def is_lie_solvable(A: GradedAlgebra) -> bool:
    return derived_series(A)[-1].is_zero()


def left_trace(A: GradedAlgebra, v: dict):
    """Trace of left multiplication by v."""
    t = 0
    for i, a in v.items():
        for j in range(A.dim):
            for k, c in A.basis_product(i, j):
                if k == j:
                    t += a * c
    return t


def largest_ideal_in(A: GradedAlgebra, U: Subspace) -> Subspace:
    """Largest two-sided ideal contained in U."""
    while True:
        basis = U.basis()
        if not basis:
            return U
        eqs = {}
        for a, u in enumerate(basis):
            for i in range(A.dim):
                for side, w in ((0, mul_vec(A, u, _unit(i))), (1, mul_vec(A, _unit(i), u))):
                    r = U.reduce(w)
                    for k, c in r.items():
                        e = eqs.setdefault((side, i, k), {})
                        e[a] = e.get(a, 0) + c
        sols = nullspace([e for e in eqs.values() if any(e.values())], len(basis))
        vecs = []
        for s in sols:
            v = {}
            for a, c in s.items():
                v = add_vec(v, basis[a], c)
            vecs.append(v)
        V = Subspace(A.dim, vecs)
        if V == U:
            return U
        U = V


def jacobson_radical(A: GradedAlgebra) -> Subspace:
    """Radical via the trace form, valid in characteristic zero.

    x is radical iff tr(L_{xy}) = 0 for every y in the unitization of A,
    i.e. tr(L_x) = 0 and tr(L_{x e_j}) = 0 for every basis element e_j.
    """
    tr = [left_trace(A, _unit(m)) for m in range(A.dim)]
    eqs = [{i: tr[i] for i in range(A.dim) if tr[i]}]
    for j in range(A.dim):
        row = {}
        for i in range(A.dim):
            t = sum((c * tr[k] for k, c in A.basis_product(i, j)), Fraction(0))
            if t:
                row[i] = t
        eqs.append(row)
    K = Subspace(A.dim, nullspace([e for e in eqs if e], A.dim))
    J = largest_ideal_in(A, K)
    if subalgebra_nilpotency(A, J) == NOT_NILPOTENT:
        raise InconsistencyError("trace-form radical is not nilpotent; input algebra is invalid")
    return J


def graded_part(A: GradedAlgebra, U: Subspace) -> Subspace:
    """Sum over the support of U intersected with each homogeneous component."""
    total = Subspace.zero(A.dim)
    for xi in A.sorted_support():
        total = total + restrict_to_coordinates(U, A.component_basis(xi))
    return total


def is_graded_subspace(A: GradedAlgebra, U: Subspace) -> bool:
    return graded_part(A, U) == U


def is_ideal(A: GradedAlgebra, U: Subspace) -> bool:
    for u in U.basis():
        for i in range(A.dim):
            if not U.contains(mul_vec(A, u, _unit(i))) or not U.contains(mul_vec(A, _unit(i), u)):
                return False
    return True


def is_commutative(A: GradedAlgebra) -> bool:
    return all(A.basis_product(i, j) == A.basis_product(j, i) for i, j in A.products)
