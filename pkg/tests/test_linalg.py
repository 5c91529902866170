from fractions import Fraction

import sympy

from gpw.linalg import Subspace, intersect, nullspace, restrict_to_coordinates


def _dense(vectors, n):
    return sympy.Matrix([[v.get(i, 0) for i in range(n)] for v in vectors])


def test_rref_is_canonical():
    U = Subspace(3, [{0: 1, 1: 2}, {1: 1, 2: 1}])
    V = Subspace(3, [{0: 1, 1: 3, 2: 1}, {0: 2, 1: 4}])
    assert U == V and hash(U) == hash(V)
    assert U.dim == 2


def test_nullspace_against_sympy():
    eqs = [{0: 1, 1: 2, 3: -1}, {1: Fraction(1, 2), 2: 1}, {0: 1, 3: -1, 1: 2}]
    sols = nullspace(eqs, 4)
    M = _dense(eqs, 4)
    assert len(sols) == len(M.nullspace())
    for s in sols:
        assert M * sympy.Matrix([s.get(i, 0) for i in range(4)]) == sympy.zeros(3, 1)


def test_intersection_and_restriction():
    U = Subspace(3, [{0: 1}, {1: 1}])
    V = Subspace(3, [{1: 1}, {2: 1}])
    W = intersect(U, V)
    assert W == Subspace(3, [{1: 1}])
    D = Subspace(3, [{0: 1, 1: 1}, {2: 1}])
    assert restrict_to_coordinates(D, [2]) == Subspace(3, [{2: 1}])
    assert (U + V) == Subspace.full(3)
