from fractions import Fraction

import pytest

from gpw.algebra import (
    AlgebraMismatchError,
    GradedAlgebra,
    InvalidAlgebraError,
    checked,
    direct_product,
    homogeneous_component,
    validate,
)
from gpw.constructions import (
    z3xz5_grading,
    z3xz5_merged_grading,
    grassmann,
    group_algebra,
    matrix_algebra,
    nil_one_dim,
    pauli_m2,
    quaternion_nil_family,
    quaternions,
    upper_triangular,
    witness_w3,
)
from gpw.groups import make_group
from gpw.linalg import Subspace
from gpw.structure import (
    NOT_NILPOTENT,
    center,
    commutator_ideal,
    commutator_ideal_nilpotency,
    derived_series,
    is_lie_nilpotent,
    is_lie_solvable,
    is_neutral_central,
    jacobson_radical,
    lower_central_series,
    nilpotency_index,
)

from oracles import nilpotency_by_words, span_rank


def test_validate_accepts_fixtures():
    assert validate(pauli_m2()) == []
    assert validate(grassmann(3)) == []


def test_validate_reports_corruption():
    A = pauli_m2()
    products = dict(A.products)
    products[(1, 2)] = ((2, Fraction(1)),)  # degree (1,1)+(0,1) should land in (1,0)
    bad = validate(GradedAlgebra(A.group, A.labels, A.degrees, products, A.unit))
    assert any(v.kind == "grading" for v in bad)
    with pytest.raises(InvalidAlgebraError):
        checked(GradedAlgebra(A.group, A.labels, A.degrees, products, A.unit))


def test_validate_reports_associativity():
    G = make_group([1])
    # e0 e0 = e1, e0 e1 = 0, e1 e0 = e0 is not associative
    A = GradedAlgebra(G, ["a", "b"], [G.identity] * 2, {(0, 0): ((1, 1),), (1, 0): ((0, 1),)})
    assert any(v.kind == "associativity" for v in validate(A))


def test_support_and_components():
    A = z3xz5_grading()
    assert len(A.support()) == 11
    G = A.group
    assert [A.labels[i] for i in A.component_basis(G.element((2, 0)))] == ["E21"]
    x = A.basis("E21")
    assert homogeneous_component(x, G.element((2, 0))) == x
    assert homogeneous_component(x, G.element((1, 0))).is_zero()


def test_nilpotency_indices():
    assert nilpotency_index(nil_one_dim()) == 2
    assert nilpotency_index(grassmann(3)) == 4
    assert nilpotency_by_words(grassmann(3)) == 4
    assert nilpotency_index(matrix_algebra(2)) == NOT_NILPOTENT


def test_neutral_centrality():
    assert is_neutral_central(quaternions())
    assert not is_neutral_central(z3xz5_merged_grading())
    A = matrix_algebra(2)
    assert center(A) == Subspace(4, [{0: 1, 3: 1}])


def test_commutator_ideals():
    C = group_algebra(3)
    assert commutator_ideal(C).is_zero() and commutator_ideal_nilpotency(C) == 1
    Q = quaternions()
    assert commutator_ideal(Q).dim == 4
    assert commutator_ideal_nilpotency(Q) == NOT_NILPOTENT
    W = witness_w3()
    assert commutator_ideal(W) == Subspace(3, [{W.index_of("w"): 1}])
    assert commutator_ideal_nilpotency(W) == 2


def test_lie_series():
    assert is_lie_nilpotent(grassmann(3))
    Q = quaternions()
    ds = derived_series(Q)
    assert ds[-1].dim == 3 and not is_lie_solvable(Q)
    # oracle: [H,H] is spanned by the images of basis commutators
    comms = []
    for a in range(4):
        for b in range(4):
            v = {}
            for k, c in Q.basis_product(a, b):
                v[k] = v.get(k, 0) + c
            for k, c in Q.basis_product(b, a):
                v[k] = v.get(k, 0) - c
            comms.append(v)
    assert span_rank(comms, 4) == 3
    C = group_algebra(4)
    assert lower_central_series(C)[0].is_zero() and derived_series(C)[0].is_zero()


def test_radicals():
    assert jacobson_radical(matrix_algebra(2)).is_zero()
    U = upper_triangular(2)
    assert jacobson_radical(U) == Subspace(3, [{U.index_of("E12"): 1}])
    N = nil_one_dim()
    assert jacobson_radical(N) == Subspace.full(1)


def test_direct_product():
    A = quaternions()
    Z = GradedAlgebra(A.group, ["z"], [A.group.identity], {})
    P = direct_product(A, Z)
    assert P.dim == 5 and validate(P) == []
    assert P.support() == A.support() | Z.support()
    assert len(quaternion_nil_family(1).support()) == 5
    with pytest.raises(AlgebraMismatchError):
        direct_product(A, witness_w3())
