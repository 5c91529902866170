import sympy
import pytest

from gpw.algebra import validate
from gpw.constructions import (
    InvalidCocycleError,
    InvalidInputError,
    coarsen,
    cocycle_from_coboundary,
    elementary_canonical,
    elementary_matrix_grading,
    z3xz5_grading,
    z3xz5_merged_grading,
    fixture,
    grassmann,
    grassmann_envelope,
    lifted_w3,
    make_cocycle,
    matrix_algebra,
    pauli_cocycle,
    pauli_m2,
    quaternion_nil_family,
    quaternions,
    trivial_cocycle,
    twisted_group_algebra,
    witness_w3,
)
from gpw.groups import make_group, projection_from_function, subgroup_generated, trivial_group

from oracles import algebra_table, elementary, structure_from_matrices


def labels_at(A, coords):
    return sorted(A.labels[i] for i in A.component_basis(A.group.element(coords)))


def test_elementary_grading_components():
    A = z3xz5_grading()
    assert labels_at(A, (0, 4)) == ["E14", "E31"]
    assert labels_at(A, (2, 0)) == ["E21"]
    B = z3xz5_merged_grading()
    assert labels_at(B, (1, 4)) == ["E32", "E42"]
    G = make_group([3])
    flat = elementary_matrix_grading(G, 3, [G.element((1,))] * 3)
    assert flat.support() == {G.identity}


def test_elementary_grading_products_match_matrices():
    A = z3xz5_grading()
    mats = [elementary(4, i, j) for i in range(1, 5) for j in range(1, 5)]
    assert algebra_table(A) == structure_from_matrices(mats)


def test_pauli_products_match_matrices():
    I = sympy.eye(2)
    basis = [I, elementary(2, 1, 1) - elementary(2, 2, 2), elementary(2, 1, 2) + elementary(2, 2, 1),
             elementary(2, 1, 2) - elementary(2, 2, 1)]
    assert algebra_table(pauli_m2()) == structure_from_matrices(basis)
    A = pauli_m2()
    x, y = A.basis("E12+E21"), A.basis("E12-E21")
    assert (x * y + y * x).is_zero()


def test_quaternions_and_pauli_agree_after_adjoining_sqrt_minus_one():
    # graded isomorphism i -> c1 (E12+E21), j -> c2 (E12-E21), k -> c3 (E11-E22), checked with sympy
    s = sympy.I
    X = elementary(2, 1, 2) + elementary(2, 2, 1)
    Y = elementary(2, 1, 2) - elementary(2, 2, 1)
    Z = elementary(2, 1, 1) - elementary(2, 2, 2)
    images = {"1": sympy.eye(2), "i": s * X, "j": Y, "k": -s * Z}  # X*Y = -Z
    Q = quaternions()
    for a in range(4):
        for b in range(4):
            lhs = images[Q.labels[a]] * images[Q.labels[b]]
            rhs = sympy.zeros(2, 2)
            for c, x in Q.basis_product(a, b):
                rhs += x * images[Q.labels[c]]
            assert sympy.simplify(lhs - rhs) == sympy.zeros(2, 2)
    # over the rationals no degree-preserving rescaling works: i^2 = -1 forces c^2 = -1
    c = sympy.symbols("c")
    assert [r for r in sympy.solve(c**2 + 1, c) if r.is_rational] == []


def test_quaternion_triple_commutator():
    Q = quaternions()
    i, j = Q.basis("i"), Q.basis("j")
    br = lambda a, b: a * b - b * a
    assert br(br(i, j), j) == -4 * i


def test_witness_w3_products():
    W = witness_w3()
    u, v, w = (W.basis(x) for x in "uvw")
    assert u * v == w and (v * u).is_zero()
    assert all((w * W.basis(x)).is_zero() and (W.basis(x) * w).is_zero() for x in "uvw")


def test_twisted_group_algebras():
    G = make_group([3])
    C = twisted_group_algebra(trivial_cocycle(G, G.elements()))
    assert all(C.basis_product(a, b) == C.basis_product(b, a) for a in range(3) for b in range(3))
    sigma = cocycle_from_coboundary(G, G.elements(), {G.element((0,)): 1, G.element((1,)): 2, G.element((2,)): -3})
    assert sigma.is_symmetric()
    P = twisted_group_algebra(pauli_cocycle())
    assert P.dim == 4 and validate(P) == []
    a, b = P.basis("eta10"), P.basis("eta01")
    assert a * b == -(b * a) and not (a * b).is_zero()


def test_cocycle_rejects_bad_tables():
    G = make_group([2])
    e, g = G.elements()
    with pytest.raises(InvalidCocycleError):
        make_cocycle(G, [e, g], {(e, e): 1, (e, g): 1, (g, e): 1, (g, g): 0})
    with pytest.raises(InvalidCocycleError):
        make_cocycle(G, [e, g], {(e, e): 1, (e, g): 2, (g, e): 1, (g, g): 1})


def test_elementary_canonical_edge_cases():
    G = make_group([2, 2])
    sigma = pauli_cocycle()
    one = elementary_canonical(G, 1, G.elements(), sigma, [G.identity])
    assert one == twisted_group_algebra(sigma)
    Z6 = make_group([6])
    theta = [Z6.element((0,)), Z6.element((1,))]
    plain = elementary_canonical(Z6, 2, [Z6.identity], trivial_cocycle(Z6, [Z6.identity]), theta)
    assert plain == elementary_matrix_grading(Z6, 2, theta)


def test_elementary_canonical_support_bounds():
    G = make_group([6])
    H = subgroup_generated(G, [G.element((3,))])
    theta = [G.element((0,)), G.element((1,)), G.element((2,))]
    A = elementary_canonical(G, 3, H, trivial_cocycle(G, H), theta)
    k, h = 3, H.order
    assert k * h <= len(A.support()) <= (k * k - k + 1) * h
    assert validate(A) == []


def test_grassmann():
    E = grassmann(2)
    e1, e2, e12 = E.basis("e1"), E.basis("e2"), E.basis("e12")
    assert e1 * e2 == e12 and e2 * e1 == -e12 and (e1 * e1).is_zero()
    E3 = grassmann(3)
    a, b = E3.basis("e1"), E3.basis("e2")
    assert a * b - b * a == 2 * E3.basis("e12")
    c = E3.basis("e12")
    assert all((c * E3.basis(x) - E3.basis(x) * c).is_zero() for x in E3.labels)
    assert grassmann(4).dim == 15


def test_envelope_of_even_algebra_tensors_with_even_part():
    K2 = make_group([2, 2, 2])
    Q = quaternions()
    lifted = coarsen(Q, projection_from_function(Q.group, K2, lambda d: K2.element(d.coords + (0,))))
    env = grassmann_envelope(lifted, 3)
    assert validate(env) == []
    assert env.dim == 4 * 3  # even monomials of grassmann(3): e12, e13, e23


def test_envelope_odd_signs():
    env = grassmann_envelope(lifted_w3(), 2)
    u1, v2 = env.basis("u|e1"), env.basis("v|e2")
    u2, v1 = env.basis("u|e2"), env.basis("v|e1")
    w12 = env.basis("w|e12")
    # (u x e1)(v x e2) = uv x e1e2 = w x e12 ; (u x e2)(v x e1) = w x e2e1 = -w x e12
    assert u1 * v2 == w12 and u2 * v1 == -w12
    assert fixture("envelope-w3:6").dim == 95
    with pytest.raises(InvalidInputError):
        grassmann_envelope(witness_w3(), 2)


def test_family_and_coarsening():
    assert len(quaternion_nil_family(1).support()) == 5
    assert len(quaternion_nil_family(2).support()) == 6
    A = pauli_m2()
    T = trivial_group()
    flat = coarsen(A, projection_from_function(A.group, T, lambda d: T.identity))
    assert flat.support() == {T.identity}
    M = matrix_algebra(2)
    mats = [sympy.eye(2), elementary(2, 1, 1) - elementary(2, 2, 2), elementary(2, 1, 2) + elementary(2, 2, 1),
            elementary(2, 1, 2) - elementary(2, 2, 1)]
    assert algebra_table(flat) == structure_from_matrices(mats)
    assert M.dim == flat.dim


def test_fixture_names():
    assert fixture("quaternion") == quaternions()
    assert fixture("m:3").dim == 9
    with pytest.raises(KeyError):
        fixture("nonsense")
