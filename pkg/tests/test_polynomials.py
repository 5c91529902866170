from fractions import Fraction

import pytest
import sympy

from gpw.constructions import elementary_canonical, grassmann, matrix_algebra, pauli_cocycle, quaternions
from gpw.groups import GroupMismatchError, make_group, trivial_group
from gpw.polynomials import (
    EvaluationContractError,
    FGTable,
    GradedVariable,
    PolynomialSyntaxError,
    commutator,
    evaluate,
    fg_expand,
    g_homogeneous_components,
    left_normed,
    multihomogeneous_components,
    multilinearize,
    parse,
    polarize,
    product_of_commutators,
    sigma_bracket,
    variable,
)


def to_sympy(g, names):
    """Noncommutative sympy expression for a polynomial, variables renamed through `names`."""
    out = 0
    for m, c in g.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for v in m:
            term = term * names[v]
        out += term
    return sympy.expand(out)


def test_parse_examples():
    T = trivial_group()
    g = parse("[x1@e, x2@e]")
    x1, x2 = variable(1, T.identity, T), variable(2, T.identity, T)
    assert g == x1 * x2 - x2 * x1
    G = make_group([3, 5])
    h = parse("x1@(1,0)*x2@(0,2) - x2@(0,2)*x1@(1,0)", G)
    assert len(h.terms) == 2
    assert parse("2/3*x1@e").items() == [((GradedVariable(1, T.identity),), Fraction(2, 3))]


def test_parse_round_trip_and_errors():
    G = make_group([2, 2])
    g = parse("x1@(1,0)*x2@(0,1) - 3*x2@(0,1)*x1@(1,0) + 1/2*x1@(1,0)", G)
    assert parse(str(g), G) == g
    for bad in ["", "x1@", "[x1@e", "x1@e +", "x1@(1,0)"]:
        with pytest.raises((PolynomialSyntaxError, GroupMismatchError)):
            parse(bad)


def test_g_homogeneous_components():
    Z2 = make_group([2])
    g = parse("x1@(1)*x2@(1) + x1@(1)", Z2)
    comps = g_homogeneous_components(g)
    assert comps[Z2.element((0,))] == parse("x1@(1)*x2@(1)", Z2)
    assert comps[Z2.element((1,))] == parse("x1@(1)", Z2)
    h = parse("[x1@(1), x2@(1)]", Z2)
    assert list(g_homogeneous_components(h).values()) == [h]
    Z5 = make_group([5])
    for a in range(5):
        for b in range(5):
            m = parse(f"x1@({a})*x2@({b})", Z5)
            assert (list(g_homogeneous_components(m)) == [Z5.identity]) == ((a + b) % 5 == 0)


def test_polarization_of_square():
    T = trivial_group()
    x1, x2 = variable(1, T.identity, T), variable(2, T.identity, T)
    p = polarize(parse("x1@e*x1@e"))
    assert p.poly == x1 * x2 + x2 * x1 and p.constant == 2


def test_polarization_matches_sympy_expansion():
    # substitute x -> t1 + t2 in a polynomial of multidegree (2, 1) and keep the part linear in t1, t2
    g = parse("x1@e*x1@e*x2@e + 2*x1@e*x2@e*x1@e - x2@e*x1@e*x1@e")
    p = polarize(g)
    assert len(p.poly.variables()) == 3
    t1, t2, y = sympy.symbols("t1 t2 y", commutative=False)
    x = sympy.Symbol("x", commutative=False)
    src = to_sympy(g, {v: {1: x, 2: y}[v.index] for v in g.variables()})
    full = sympy.expand(src.subs(x, t1 + t2))
    multilinear = sum((t for t in full.args if str(t).count("t1") == 1 and str(t).count("t2") == 1), sympy.Integer(0))
    fresh = [v for v in p.poly.variables() if v.index == 3][0]
    names = {v: {1: t1, 2: y}.get(v.index, t2) for v in p.poly.variables()}
    assert names[fresh] == t2
    assert sympy.expand(to_sympy(p.poly, names) - multilinear) == 0


def test_multilinear_is_fixed():
    g = left_normed(3)
    assert multilinearize(g) == [g]
    assert len(multihomogeneous_components(parse("x1@e*x2@e + x1@e*x1@e"))) == 2


def test_fg_expand():
    G = make_group([3, 5])
    xi, zeta = G.element((1, 0)), G.element((0, 2))
    x1, x2 = variable(1, xi, G), variable(2, zeta, G)
    assert fg_expand(FGTable({(xi, zeta): 1}), xi, zeta) == x1 * x2
    sym = FGTable({(xi, zeta): 3, (zeta, xi): 3})
    assert fg_expand(sym, xi, zeta) == 3 * commutator(x1, x2)


def test_builders():
    T = trivial_group()
    x = [variable(i, T.identity, T) for i in range(5)]
    assert left_normed(2) == x[1] * x[2] - x[2] * x[1]
    l3 = left_normed(3)
    assert len(l3.terms) == 4 and {abs(c) for c in l3.terms.values()} == {1}
    assert product_of_commutators(2) == commutator(x[1], x[2]) * commutator(x[3], x[4])
    assert len(product_of_commutators(2).terms) == 4


def test_evaluate_examples():
    br = parse("[x1@e, x2@e]")
    v1, v2 = br.variables()
    M = matrix_algebra(2)
    assert evaluate(br, M, {v1: M.basis("E12"), v2: M.basis("E21")}) == M.basis("E11") - M.basis("E22")
    Q = quaternions()
    assert evaluate(br, Q, {v1: Q.basis("i"), v2: Q.basis("j")}) == 2 * Q.basis("k")
    E = grassmann(3)
    assert evaluate(br, E, {v1: E.basis("e1"), v2: E.basis("e2")}) == 2 * E.basis("e12")
    with pytest.raises(EvaluationContractError):
        evaluate(br, Q, {v1: Q.basis("i")})


def test_evaluate_checks_degrees():
    Q = quaternions()
    g = parse("x1@(0,1)*x2@(1,0)", Q.group)
    v1, v2 = g.variables()
    assert evaluate(g, Q, {v1: Q.basis("i"), v2: Q.basis("j")}) == Q.basis("k")
    with pytest.raises(EvaluationContractError):
        evaluate(g, Q, {v1: Q.basis("j"), v2: Q.basis("j")})


def test_sigma_bracket_vanishes_on_commuting_diagonal_pairs():
    K = make_group([2, 2])
    B = elementary_canonical(K, 2, K.elements(), pauli_cocycle(), [K.identity, K.identity])
    labels = [l for l in B.labels if l.startswith("E11")]
    assert len(labels) == 4
    for a in labels:
        for b in labels:
            assert sigma_bracket(B, B.basis(a), B.basis(b)).is_zero()
