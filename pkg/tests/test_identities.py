import itertools

import pytest
import sympy

from gpw.constructions import (
    elementary_canonical,
    z3xz5_grading,
    z3xz5_merged_grading,
    grassmann,
    matrix_algebra,
    nil_one_dim,
    pauli_cocycle,
    pauli_m2,
    quaternion_nil_family,
    quaternions,
    trivial_cocycle,
    twisted_group_algebra,
    witness_w3,
)
from gpw.groups import make_group, subgroup_generated
from gpw.harness import z15_polynomial
from gpw.identities import (
    ContractError,
    NotAnIdentityError,
    ResourceLimitError,
    degree2_canonicalize,
    find_multilinear_identities,
    identity_space_contains,
    is_graded_identity,
    is_identity_generic,
    is_neutral_central,
    sigma_identity_check,
)
from gpw.polynomials import evaluate, left_normed, parse

from oracles import elementary


def test_graded_identity_examples():
    P = pauli_m2()
    assert is_graded_identity(P, parse("[x1@e, x2@(1,1)]", P.group))
    B = z3xz5_merged_grading()
    assert is_graded_identity(B, parse("x1@(1,0)*x2@(1,4)", B.group))


def test_neutral_commutator_fails_with_witness_in_neutral_block():
    B = z3xz5_merged_grading()
    g = parse("[x1@e, x2@e]", B.group)
    v = is_graded_identity(B, g)
    assert not v.holds
    # the witness is the first failing basis tuple; its value lies in the 3-4 block
    block = {B.index_of("E34"), B.index_of("E43")}
    assert v.witness.labels() == ("E33", "E34")
    assert set(v.witness.value) <= block
    x1, x2 = g.variables()
    assert not evaluate(g, B, {x1: B.basis("E34"), x2: B.basis("E43")}).is_zero()
    assert evaluate(v.witness.component, B, v.witness.assignment_elements()) == v.witness.value_element()


def test_generic_route():
    P = pauli_m2()
    assert is_identity_generic(P, parse("[x1@e, x2@e]", P.group))
    M = matrix_algebra(2)
    v = is_identity_generic(M, parse("[x1@e, x2@e]"))
    assert not v.holds
    assert not evaluate(v.witness.component, M, v.witness.assignment_elements()).is_zero()
    Q = quaternions()
    assert is_identity_generic(Q, parse("[x1@e, x2@(0,1)]", Q.group))


def test_routes_agree_on_nonlinear_input():
    E = grassmann(3)
    g = parse("x1@(1)*x1@(1)", E.group)
    assert is_graded_identity(E, g).holds == is_identity_generic(E, g).holds == True
    h = parse("x1@e*x1@e", E.group)
    assert is_graded_identity(E, h).holds == is_identity_generic(E, h).holds == True
    E4 = grassmann(4)
    h4 = parse("x1@e*x1@e", E4.group)
    assert is_graded_identity(E4, h4).holds == is_identity_generic(E4, h4).holds == False


def test_resource_ceiling():
    with pytest.raises(ResourceLimitError):
        is_graded_identity(matrix_algebra(3), left_normed(6), limit=1000)
    with pytest.raises(ResourceLimitError):
        find_multilinear_identities(pauli_m2(), [pauli_m2().group.identity] * 5)


def test_neutral_centrality():
    assert is_neutral_central(quaternions())
    assert is_neutral_central(quaternion_nil_family(2))
    assert not is_neutral_central(z3xz5_merged_grading())
    assert is_neutral_central(witness_w3())


def test_identity_search():
    P = pauli_m2()
    e = P.group.identity
    space = find_multilinear_identities(P, [e, e])
    assert identity_space_contains(space, parse("[x1@e, x2@e]", P.group))
    M = matrix_algebra(2)
    assert find_multilinear_identities(M, [M.group.identity] * 2) == []
    N = nil_one_dim()
    one = N.group.element((1,))
    assert len(find_multilinear_identities(N, [one, one])) == 2


def test_identity_search_matches_sympy_nullspace():
    # a*x1x2 + b*x2x1 vanishing on all pairs of 2x2 matrix units forces a = b = 0
    a, b = sympy.symbols("a b")
    units = [elementary(2, i, j) for i in (1, 2) for j in (1, 2)]
    eqs = []
    for X, Y in itertools.product(units, repeat=2):
        eqs.extend(a * X * Y + b * Y * X)
    assert sympy.solve(eqs, [a, b], dict=True) == [{a: 0, b: 0}]


def test_canonical_form_for_commutator():
    P = pauli_m2()
    g = parse("x1@e*x2@e - x2@e*x1@e", P.group)
    c = degree2_canonicalize(P, g)
    e = P.group.identity
    assert list(c.gamma.values()) == [1]
    assert not any(c.delta.values())
    assert c.fg[(e, e)] == 1
    assert is_graded_identity(P, c.reconstruct())


def test_canonical_form_one_sided_case():
    N = nil_one_dim()
    c = degree2_canonicalize(N, parse("x1@(1)*x2@(1)", N.group))
    assert not any(c.delta.values())
    assert "one-sided" in c.pair_cases.values()
    assert is_graded_identity(N, c.reconstruct())


def test_canonical_form_for_large_example():
    A = z3xz5_grading()
    g, table = z15_polynomial()
    c = degree2_canonicalize(A, g)
    G = A.group
    assert c.fg[(G.element((1, 0)), G.element((0, 2)))] == 1
    assert is_graded_identity(A, c.reconstruct())


def test_canonical_form_rejects_bad_input():
    P = pauli_m2()
    with pytest.raises(ContractError):
        degree2_canonicalize(P, parse("x1@e*x2@e*x3@e", P.group))
    with pytest.raises(NotAnIdentityError):
        degree2_canonicalize(P, parse("x1@(1,1)*x2@(1,1)", P.group))


def test_sigma_identities():
    G = make_group([2, 2])
    B = elementary_canonical(G, 1, G.elements(), pauli_cocycle(), [G.identity])
    for xi in G.elements():
        for zeta in G.elements():
            assert sigma_identity_check(B, xi, zeta)
    Z6 = make_group([6])
    H = subgroup_generated(Z6, [Z6.element((2,))])
    T = twisted_group_algebra(trivial_cocycle(Z6, H))
    for xi in H.elements:
        for zeta in H.elements:
            assert sigma_identity_check(T, xi, zeta)
    B18 = z3xz5_merged_grading()
    e = B18.group.identity
    v = sigma_identity_check(B18, e, e)
    assert not v.holds
    assert set(v.witness.value) <= {B18.index_of("E34"), B18.index_of("E43")}

