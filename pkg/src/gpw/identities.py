"""Deciding graded polynomial identities exactly.

The main procedure splits a polynomial into multihomogeneous components,
fully linearizes each one and evaluates the multilinear result on every tuple
of homogeneous basis elements.  Over a field of characteristic zero this is a
complete test.  `is_identity_generic` is an independent oracle that substitutes
generic elements with polynomial coefficients instead.
"""
from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algebra import AlgebraElement, GradedAlgebra, InconsistencyError, format_vector
from .groups import GroupElement, format_element
from .linalg import Subspace, nullspace
from .polynomials import (
    FGTable,
    GradedPolynomial,
    GradedVariable,
    UnsupportedOperationError,
    eval_vectors,
    evaluation_mode,
    fg_bracket,
    monomial_degree,
    monomial_key,
    multihomogeneous_components,
    polarize,
    sigma_bracket,
)
from .scalars import MultiPoly, format_rational

DEFAULT_MAX_EVALS = 10**7
DEFAULT_GENERIC_BOUND = 200_000


class ResourceLimitError(RuntimeError):
    pass


class NotAnIdentityError(ValueError):
    def __init__(self, verdict):
        super().__init__(f"not a graded identity; witness: {verdict.witness.describe()}")
        self.verdict = verdict


class ContractError(ValueError):
    pass


def max_evals() -> int:
    raw = os.environ.get("GPW_MAX_EVALS")
    return int(raw) if raw else DEFAULT_MAX_EVALS


@dataclass(frozen=True)
class Witness:
    tag: str
    component: GradedPolynomial  # the polynomial that was evaluated
    assignment: tuple  # pairs (variable, coefficient dict)
    value: dict
    algebra: GradedAlgebra = field(repr=False)

    def assignment_elements(self) -> dict:
        return {v: AlgebraElement(self.algebra, vec) for v, vec in self.assignment}

    def value_element(self) -> AlgebraElement:
        return AlgebraElement(self.algebra, self.value)

    def labels(self) -> tuple:
        return tuple(format_vector(self.algebra, vec) for _, vec in self.assignment)

    def describe(self) -> str:
        pairs = ", ".join(f"{v} -> {format_vector(self.algebra, vec)}" for v, vec in self.assignment)
        return f"[{self.tag}] {pairs}; value {format_vector(self.algebra, self.value)}"

    def as_dict(self) -> dict:
        return {
            "component": str(self.component),
            "tag": self.tag,
            "assignment": {str(v): format_vector(self.algebra, vec) for v, vec in self.assignment},
            "value": format_vector(self.algebra, self.value),
        }


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Optional[Witness] = None
    evaluations: int = 0

    def __bool__(self):
        return self.holds


def _ranges(A: GradedAlgebra, variables: list, mode: str) -> list:
    if mode == "ungraded":
        return [tuple(range(A.dim))] * len(variables)
    return [A.component_basis(v.degree) for v in variables]


def _tuple_count(ranges) -> int:
    n = 1
    for r in ranges:
        n *= len(r)
    return n


def _unit(i):
    return {i: Fraction(1)}


def multilinear_tasks(g: GradedPolynomial) -> list:
    """(tag, multilinear polynomial) for every multihomogeneous component."""
    tasks = []
    for comp in multihomogeneous_components(g):
        deg = monomial_degree(next(iter(comp.terms)), g.group)
        tasks.append((f"degree {format_element(deg)}; component {comp}", polarize(comp).poly))
    return tasks


def is_graded_identity(A: GradedAlgebra, g: GradedPolynomial, limit: Optional[int] = None) -> Verdict:
    mode = evaluation_mode(g, A)
    limit = max_evals() if limit is None else limit
    tasks = multilinear_tasks(g)
    plans = []
    cost = 0
    for tag, p in tasks:
        variables = p.variables()
        ranges = _ranges(A, variables, mode)
        cost += _tuple_count(ranges) * len(p.terms)
        plans.append((tag, p, variables, ranges))
    if cost > limit:
        raise ResourceLimitError(
            f"identity check needs {cost} monomial evaluations, ceiling is {limit} (GPW_MAX_EVALS)"
        )
    table, scale = _integer_table(A)
    done = 0
    for tag, p, variables, ranges in plans:
        pos = {v: n for n, v in enumerate(variables)}
        words = _scaled_words(p, pos, scale)
        for combo in itertools.product(*ranges):
            done += len(words)
            if _eval_basis_tuple(table, words, combo):
                vecs = {v: _unit(i) for v, i in zip(variables, combo)}
                val = eval_vectors(p, A, vecs)
                w = Witness(tag, p, tuple((v, vecs[v]) for v in variables), val, A)
                return Verdict(False, w, done)
    return Verdict(True, None, done)


def _integer_table(A: GradedAlgebra):
    """Structure constants as ints when possible (only zero-ness matters here)."""
    if all(c.denominator == 1 for entries in A.products.values() for _, c in entries):
        return {ij: tuple((k, int(c)) for k, c in entries) for ij, entries in A.products.items()}, True
    return A.products, False


def _scaled_words(p: GradedPolynomial, pos: dict, integral: bool) -> list:
    coeffs = list(p.terms.values())
    mult = 1
    if integral:
        for c in coeffs:
            mult = mult * c.denominator // _gcd(mult, c.denominator)
    out = []
    for m, c in p.terms.items():
        c = c * mult
        out.append((tuple(pos[v] for v in m), int(c) if integral else c))
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _eval_basis_tuple(table: dict, words: list, combo: tuple) -> bool:
    """True when the polynomial is nonzero on the given basis tuple."""
    total = {}
    get = table.get
    for perm, c in words:
        acc = {combo[perm[0]]: c}
        for p in perm[1:]:
            b = combo[p]
            new = {}
            for k, x in acc.items():
                entries = get((k, b))
                if entries:
                    for r, d in entries:
                        new[r] = new.get(r, 0) + x * d
            acc = new
            if not acc:
                break
        for k, x in acc.items():
            total[k] = total.get(k, 0) + x
    return any(total.values())


def component_verdicts(A: GradedAlgebra, g: GradedPolynomial) -> list:
    """Verdict for each G-homogeneous multihomogeneous component separately."""
    return [(c, is_graded_identity(A, c)) for c in multihomogeneous_components(g)]


def _generic_cost(A, g, mode) -> int:
    total = 0
    for m in g.terms:
        n = 1
        for v in m:
            n *= A.dim if mode == "ungraded" else len(A.component_basis(v.degree))
        total += n
    return total * max(A.dim, 1)


def is_identity_generic(A: GradedAlgebra, g: GradedPolynomial, bound: int = DEFAULT_GENERIC_BOUND, seed: int = 0) -> Verdict:
    mode = evaluation_mode(g, A)
    cost = _generic_cost(A, g, mode)
    if cost > bound:
        raise ResourceLimitError(f"generic evaluation would expand about {cost} monomials (bound {bound})")
    generic = {}
    tvars = []
    counter = 0
    for v in g.variables():
        idx = range(A.dim) if mode == "ungraded" else A.component_basis(v.degree)
        vec = {}
        for i in idx:
            counter += 1
            vec[i] = MultiPoly.var(counter)
            tvars.append((counter, v, i))
        generic[v] = vec
    value = eval_vectors(g, A, generic)
    if not value:
        return Verdict(True)
    # specialize the generic coefficients to find a concrete witness
    rng = random.Random(seed)
    for attempt in range(200):
        hi = 2 + attempt // 10
        point = {t: Fraction(rng.randint(-hi, hi)) for t, _, _ in tvars}
        vecs = {v: {} for v in g.variables()}
        for t, v, i in tvars:
            if point[t]:
                vecs[v][i] = point[t]
        val = eval_vectors(g, A, vecs)
        if val:
            return Verdict(False, Witness("generic", g, tuple((v, vecs[v]) for v in g.variables()), val, A))
    raise InconsistencyError("generic value is nonzero but no specialization was found")


def _commutator(x: GradedVariable, y: GradedVariable, group) -> GradedPolynomial:
    px = GradedPolynomial.variable(x.index, x.degree, group)
    py = GradedPolynomial.variable(y.index, y.degree, group)
    return px * py - py * px


def is_neutral_central(A: GradedAlgebra) -> bool:
    """[x@e, y@xi] holds for every xi in the support (brute force)."""
    G = A.group
    e = G.identity
    if not A.component_basis(e):
        return True
    for xi in A.sorted_support():
        g = _commutator(GradedVariable(1, e), GradedVariable(2, xi), G)
        if not is_graded_identity(A, g):
            return False
    return True


def find_multilinear_identities(A: GradedAlgebra, degrees, bound: int = 4, limit: Optional[int] = None) -> list:
    """Basis of the multilinear identities in x1@d1, ..., xn@dn."""
    n = len(degrees)
    if n > bound:
        raise ResourceLimitError(f"{n} variables exceed the search bound {bound}")
    G = A.group
    variables = [GradedVariable(i + 1, G.check(d)) for i, d in enumerate(degrees)]
    words = sorted(itertools.permutations(variables), key=monomial_key)
    ranges = [A.component_basis(v.degree) for v in variables]
    limit = max_evals() if limit is None else limit
    if _tuple_count(ranges) * len(words) > limit:
        raise ResourceLimitError("identity search exceeds the evaluation ceiling")
    eqs = {}
    for combo in itertools.product(*ranges):
        vecs = {v: _unit(i) for v, i in zip(variables, combo)}
        for w, word in enumerate(words):
            val = eval_vectors(GradedPolynomial(G, {word: 1}), A, vecs)
            for k, c in val.items():
                row = eqs.setdefault((combo, k), {})
                row[w] = c
    sols = nullspace(list(eqs.values()), len(words))
    return [GradedPolynomial(G, {words[w]: c for w, c in s.items()}) for s in sols]


def identity_space_contains(space: list, g: GradedPolynomial) -> bool:
    words = sorted({m for p in space + [g] for m in p.terms}, key=monomial_key)
    pos = {w: i for i, w in enumerate(words)}
    S = Subspace(len(words), [{pos[m]: c for m, c in p.terms.items()} for p in space])
    return S.contains({pos[m]: c for m, c in g.terms.items()})


# ------------------------------------------------------ degree-2 canonical form

LINEAR_NON_NEUTRAL = "non-neutral degree: a^2 and a lie in different components, so the linear term vanishes alone"
LINEAR_NEUTRAL = "neutral degree: rescaling a (the field has more than two elements) separates a^2 from a"


@dataclass
class Degree2Canonical:
    algebra: GradedAlgebra = field(repr=False)
    source: GradedPolynomial
    variables: list
    gamma: dict  # (x_r, x_s) with r < s -> Fraction
    delta: dict  # x_k -> Fraction
    fg: FGTable
    commutative_neutral: bool
    linear_cases: dict  # x_k -> explanation, for variables carrying a linear term
    pair_cases: dict  # (x_r, x_s) -> case of (lambda_rs, -lambda_sr)
    representatives: dict  # (xi, zeta) -> chosen variable pair
    square_identities: list  # variables whose square is used to keep the form nonzero
    notes: list

    def reconstruct(self) -> GradedPolynomial:
        G = self.algebra.group
        out = GradedPolynomial.zero(G)
        for (x, y), c in sorted(self.gamma.items(), key=lambda t: (t[0][0].sort_key(), t[0][1].sort_key())):
            out = out + fg_bracket(self.fg, x, y, G) * c
        for x in self.variables:
            d = self.delta.get(x, 0) + (1 if x in self.square_identities else 0)
            if d:
                px = GradedPolynomial.variable(x.index, x.degree, G)
                out = out + px * px * d
        return out

    def as_dict(self) -> dict:
        key = lambda p: f"{p[0]},{p[1]}"
        return {
            "source": str(self.source),
            "gamma": {key(p): format_rational(c) for p, c in sorted(self.gamma.items(), key=lambda t: str(t[0]))},
            "delta": {str(x): format_rational(c) for x, c in self.delta.items()},
            "fg": {
                f"{format_element(a)},{format_element(b)}": format_rational(c)
                for (a, b), c in sorted(self.fg.entries.items())
            },
            "pair_cases": {key(p): c for p, c in sorted(self.pair_cases.items(), key=lambda t: str(t[0]))},
            "linear_cases": {str(x): c for x, c in self.linear_cases.items()},
            "representatives": {
                f"{format_element(a)},{format_element(b)}": key(p)
                for (a, b), p in sorted(self.representatives.items())
            },
            "square_identities": [str(x) for x in self.square_identities],
            "commutative_neutral": self.commutative_neutral,
            "field_size": "|F| > 2 holds automatically over the rationals",
            "reconstructed": str(self.reconstruct()),
            "notes": list(self.notes),
        }


def _square(x: GradedVariable, G) -> GradedPolynomial:
    p = GradedPolynomial.variable(x.index, x.degree, G)
    return p * p


def _pair_case(a, b) -> str:
    if a and b:
        return "both nonzero"
    if a or b:
        return "one-sided"
    return "both zero"


def degree2_canonicalize(A: GradedAlgebra, g: GradedPolynomial) -> Degree2Canonical:
    G = A.group
    if g.group != G:
        raise ContractError("canonicalization needs a polynomial graded by the algebra's group")
    if g.degree != 2:
        raise ContractError(f"polynomial has degree {g.degree}, expected 2")
    variables = g.variables()
    support = A.support()
    outside = [v for v in variables if v.degree not in support]
    if outside:
        raise ContractError(f"variables outside the support: {', '.join(map(str, outside))}")
    verdict = is_graded_identity(A, g)
    if not verdict.holds:
        raise NotAnIdentityError(verdict)

    lam, lin = {}, {}
    for m, c in g.terms.items():
        if len(m) == 1:
            lin[m[0]] = c
        else:
            lam[m] = c
    L = lambda x, y: lam.get((x, y), Fraction(0))
    notes = []

    linear_cases = {}
    for x, c in lin.items():
        linear_cases[x] = LINEAR_NEUTRAL if x.degree == G.identity else LINEAR_NON_NEUTRAL
        if c:
            # the argument forces c = 0 for an identity; reaching here means the input is inconsistent
            raise InconsistencyError(f"linear coefficient of {x} is {c} although g is an identity")

    delta = {x: L(x, x) for x in variables if L(x, x)}
    pos = {x: n for n, x in enumerate(variables)}
    pairs = [(x, y) for x in variables for y in variables if pos[x] < pos[y]]
    live = [(x, y) for x, y in pairs if L(x, y) or L(y, x)]

    square_zero = {}

    def squares_vanish(xi):
        if xi not in square_zero:
            square_zero[xi] = is_graded_identity(A, _square(GradedVariable(1, xi), G)).holds
        return square_zero[xi]

    fg = FGTable()
    representatives = {}
    for x, y in live:
        a, b = x.degree, y.degree
        if a != b:
            if (a, b) in representatives or (b, a) in representatives:
                continue
            representatives[(a, b)] = (x, y)
            fg[(a, b)] = L(x, y)
            fg[(b, a)] = -L(y, x)
        else:
            if (a, a) in representatives:
                continue
            representatives[(a, a)] = (x, y)
            if squares_vanish(a):
                fg[(a, a)] = 0
            else:
                if L(y, x) != -L(x, y):
                    raise InconsistencyError(f"pair {x},{y} is not antisymmetric although squares do not vanish")
                fg[(a, a)] = L(x, y)

    gamma, pair_cases, square_ids = {}, {}, []
    for x, y in live:
        target = (L(x, y), L(y, x))
        pair_cases[(x, y)] = _pair_case(target[0], -target[1])
        shape = (fg[(x.degree, y.degree)], -fg[(y.degree, x.degree)])
        if shape == (0, 0):
            # only reachable for equal degrees whose squares vanish identically
            notes.append(
                f"pair {x},{y}: table entry is 0 because squares of degree {format_element(x.degree)} vanish; "
                f"the square of {x} is used instead"
            )
            gamma[(x, y)] = Fraction(0)
            if x not in square_ids and not delta.get(x):
                square_ids.append(x)
            continue
        if shape[0] * target[1] == shape[1] * target[0]:
            ratio = target[0] / shape[0] if shape[0] else target[1] / shape[1]
            gamma[(x, y)] = ratio
        else:
            notes.append(
                f"pair {x},{y}: coefficients are not proportional to the representative pair "
                f"{representatives.get((x.degree, y.degree)) or representatives.get((y.degree, x.degree))}; "
                f"both orders vanish separately, gamma set to 1"
            )
            gamma[(x, y)] = Fraction(1)

    e = G.identity
    commutative_neutral = False
    if fg[(e, e)] and not squares_vanish(e):
        ce = _commutator(GradedVariable(1, e), GradedVariable(2, e), G)
        commutative_neutral = is_graded_identity(A, ce).holds
        if not commutative_neutral:
            raise InconsistencyError("nonzero neutral table entry but the neutral component is not commutative")

    notes.append("the field-size hypothesis |F| > 2 holds automatically over the rationals")
    result = Degree2Canonical(
        A, g, variables, gamma, delta, fg, commutative_neutral, linear_cases, pair_cases,
        representatives, square_ids, notes,
    )
    rec = result.reconstruct()
    if rec.is_zero():
        notes.append("reconstructed form is the zero polynomial")
    elif not is_graded_identity(A, rec).holds:
        raise InconsistencyError("reconstructed canonical form is not an identity")
    return result


# ------------------------------------------------------------- sigma brackets


def sigma_identity_check(B: GradedAlgebra, xi: GroupElement, zeta: GroupElement) -> Verdict:
    """Does the cocycle-normalized commutator vanish on B_xi x B_zeta?"""
    meta = getattr(B, "meta", None)
    if meta is None or not hasattr(meta, "cocycle"):
        raise UnsupportedOperationError("algebra carries no cocycle metadata")
    G = B.group
    x, y = GradedVariable(1, G.check(xi)), GradedVariable(2, G.check(zeta))
    count = 0
    for p in B.component_basis(xi):
        for q in B.component_basis(zeta):
            count += 1
            val = sigma_bracket(B, B.basis(p), B.basis(q))
            if val:
                comp = _commutator(x, y, G)
                w = Witness("sigma-bracket", comp, ((x, _unit(p)), (y, _unit(q))), val.coeffs, B)
                return Verdict(False, w, count)
    return Verdict(True, None, count)
