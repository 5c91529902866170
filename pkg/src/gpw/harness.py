"""Replication suites: each suite runs exact checks and returns ClaimReports.

A report with status "fail" carries a reproducer (algebra name, polynomial
text, evaluation mode and witness labels) that can be replayed with
`gpw check`.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import constructions as con
from .algebra import direct_product, format_vector
from .groups import format_element, make_group, projection_from_function, trivial_group
from .identities import (
    ResourceLimitError,
    component_verdicts,
    find_multilinear_identities,
    identity_space_contains,
    is_graded_identity,
    is_identity_generic,
    is_neutral_central,
    sigma_identity_check,
)
from .linalg import Subspace
from .polynomials import (
    FGTable,
    GradedPolynomial,
    GradedVariable,
    evaluate,
    fg_bracket,
    left_normed,
    product_of_commutators,
    sigma_bracket,
)
from .structure import (
    NOT_NILPOTENT,
    center,
    commutator_ideal_nilpotency,
    commutator_products,
    derived_series,
    graded_part,
    is_commutative,
    is_ideal,
    jacobson_radical,
    lower_central_series,
    subalgebra_nilpotency,
)
from .structure import is_neutral_central as neutral_central_structural

PASS, FAIL, OUT_OF_SCOPE = "pass", "fail", "out-of-scope"


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    status: str
    details: dict = field(default_factory=dict)
    runtime: float = 0.0
    reproducer: Optional[dict] = None
    resource_limited: bool = False

    def as_dict(self, timing: bool = False) -> dict:
        out = {"claim": self.claim_id, "status": self.status, "details": self.details}
        if self.reproducer is not None:
            out["reproducer"] = self.reproducer
        if timing:
            out["runtime"] = round(self.runtime, 3)
        return out

    def line(self) -> str:
        head = f"{self.status.upper():<12} {self.claim_id}"
        summary = self.details.get("summary")
        return f"{head}: {summary}" if summary else head


# ------------------------------------------------------------------ corpus


def _coboundary_tga(m: int, seed: int):
    G = make_group([m])
    rng = random.Random(seed)
    t = {h: rng.choice([1, -1, 2, -2, 3, 1 / Fraction(2)]) for h in G.elements()}
    return con.twisted_group_algebra(con.cocycle_from_coboundary(G, G.elements(), t))


def _cyclic_subgroup_tga():
    # H = <(1,1)> of order 4 inside Z4 x Z2
    G = make_group([4, 2])
    H = [G.element((i % 4, i % 2)) for i in range(4)]
    t = {h: n + 1 for n, h in enumerate(sorted(H))}
    return con.twisted_group_algebra(con.cocycle_from_coboundary(G, H, t))


def _canonical(factors, H, k, theta, t=None, cocycle=None):
    G = make_group(factors)
    H = [G.element(h) for h in H]
    if cocycle is None:
        cocycle = con.cocycle_from_coboundary(G, H, t) if t else con.trivial_cocycle(G, H)
    return con.elementary_canonical(G, k, H, cocycle, [G.element(c) for c in theta])


def _w3_coarsened():
    A = con.lifted_w3()
    Q = make_group([3])
    return con.coarsen(A, projection_from_function(A.group, Q, lambda a: Q.element(a.coords[:1])))


def _z4_cocycle():
    G = make_group([4])
    H = [G.element((0,)), G.element((2,))]
    return con.cocycle_from_coboundary(G, H, {H[0]: 1, H[1]: 2})


def _z2xz4_cocycle():
    G = make_group([2, 4])
    H = [G.element((0, i)) for i in range(4)]
    return con.cocycle_from_coboundary(G, H, {h: [1, 2, -1, 3][n] for n, h in enumerate(H)})


CORPUS = {
    "canonical-k2-z2xz2": lambda: _canonical([2, 2], [(0, 0), (1, 0)], 2, [(0, 0), (0, 1)]),
    "canonical-k2-z4": lambda: _canonical([4], [(0,), (2,)], 2, [(0,), (1,)], cocycle=_z4_cocycle()),
    "canonical-k3-z6": lambda: _canonical([6], [(0,), (3,)], 3, [(0,), (1,), (2,)]),
    "canonical-k3-z3": lambda: _canonical([3], [(0,)], 3, [(0,), (1,), (2,)]),
    "canonical-k1-pauli": lambda: con.elementary_canonical(
        make_group([2, 2]), 1, make_group([2, 2]).elements(), con.pauli_cocycle(), [make_group([2, 2]).identity]
    ),
    "canonical-k2-z2xz4": lambda: _canonical(
        [2, 4], [(0, 0), (0, 1), (0, 2), (0, 3)], 2, [(0, 0), (1, 0)], cocycle=_z2xz4_cocycle()
    ),
    "tga-z2": lambda: _coboundary_tga(2, 2),
    "tga-z3": lambda: _coboundary_tga(3, 3),
    "tga-z4": lambda: _coboundary_tga(4, 4),
    "tga-z5": lambda: _coboundary_tga(5, 5),
    "tga-z6": lambda: _coboundary_tga(6, 6),
    "tga-z4xz2-cyclic": _cyclic_subgroup_tga,
    "w3-coarsened": _w3_coarsened,
    "ga3+w3": lambda: direct_product(con.group_algebra(3), con.witness_w3()),
    "tga-z3+w3": lambda: direct_product(_coboundary_tga(3, 3), con.witness_w3()),
    "ga3+envelope-w3:3": lambda: direct_product(con.group_algebra(3), con.grassmann_envelope(con.lifted_w3(), 3)),
    "ut2-z2": lambda: con.upper_triangular(2, make_group([2]), [make_group([2]).element((0,)), make_group([2]).element((1,))]),
    "ut3-z3": lambda: con.upper_triangular(
        3, make_group([3]), [make_group([3]).element((i,)) for i in range(3)]
    ),
}


CORPUS_HELP = ", ".join(sorted(CORPUS))


def resolve(name: str):
    """Algebra by fixture or corpus name."""
    if name in CORPUS:
        return CORPUS[name]()
    return con.fixture(name)


# ---------------------------------------------------------------- plumbing


def _claim(reports: list, claim_id: str, fn) -> None:
    start = time.perf_counter()
    try:
        status, details, reproducer = fn()
        limited = False
    except ResourceLimitError as exc:
        status, details, reproducer, limited = OUT_OF_SCOPE, {"summary": f"resource limit: {exc}"}, None, True
    reports.append(ClaimReport(claim_id, status, details, time.perf_counter() - start, reproducer, limited))


def _ok(flag: bool) -> str:
    return PASS if flag else FAIL


def _reproducer(name, g, verdict=None) -> dict:
    rep = {"algebra": name, "polynomial": str(g), "mode": "ungraded" if g.group.order == 1 else "graded"}
    if verdict is not None and verdict.witness is not None:
        rep["witness"] = list(verdict.witness.labels())
    return rep


def _identity_claim(name: str, g: GradedPolynomial, expect: bool, extra=None):
    """Claim that g holds (expect=True) or fails (expect=False) on the named algebra."""

    def run():
        A = resolve(name)
        v = is_graded_identity(A, g)
        details = {"polynomial": str(g), "verdict": "HOLDS" if v.holds else "FAILS"}
        ok = v.holds == expect
        if v.witness is not None:
            details["witness"] = v.witness.as_dict()
        if ok and extra is not None:
            ok, more = extra(A, v)
            details.update(more)
        details["summary"] = f"{name}: {g} {details['verdict']}"
        if ok:
            return PASS, details, None
        return FAIL, details, _reproducer(name, g, v)

    return run


def _var(i, degree, G) -> GradedPolynomial:
    return GradedPolynomial.variable(i, degree, G)


# ---------------------------------------------------------------- examples

# components of the Z3 x Z5 elementary grading with theta = (0,0), (1,0), (0,1), (0,4)
Z15_COMPONENTS = {
    (0, 0): {"E11", "E22", "E33", "E44"},
    (0, 4): {"E14", "E31"},
    (2, 0): {"E21"},
    (0, 1): {"E13", "E41"},
    (1, 0): {"E12"},
    (2, 1): {"E23"},
    (0, 2): {"E43"},
    (1, 1): {"E42"},
    (2, 4): {"E24"},
    (0, 3): {"E34"},
    (1, 4): {"E32"},
}
Z15_GAPS = {(1, 2), (1, 3), (2, 2), (2, 3)}
Z15_DEGREES = [
    (0, 0), (0, 0), (1, 0), (0, 2), (2, 0), (1, 1), (2, 1), (0, 4),
    (0, 1), (2, 4), (0, 3), (1, 4), (1, 0), (0, 2), (2, 0),
]
Z15_TABLE = {
    ((0, 0), (0, 0)): 1,
    ((1, 0), (0, 2)): 1,
    ((0, 2), (1, 0)): 1,
    ((2, 0), (1, 1)): 1,
    ((2, 1), (1, 1)): 1,
}
Z15_NO_SQUARE = {(0, 0), (0, 1), (0, 4)}


def z15_polynomial():
    """Sum of table brackets over pairs i < j, plus squares off the theta degrees."""
    G = make_group([3, 5])
    table = FGTable({(G.element(a), G.element(b)): c for (a, b), c in Z15_TABLE.items()})
    xs = [GradedVariable(i + 1, G.element(d)) for i, d in enumerate(Z15_DEGREES)]
    g = GradedPolynomial.zero(G)
    for a in range(len(xs)):
        for b in range(a + 1, len(xs)):
            g = g + fg_bracket(table, xs[a], xs[b], G)
    for x in xs:
        if x.degree.coords not in Z15_NO_SQUARE:
            p = _var(x.index, x.degree, G)
            g = g + p * p
    return g, table


def _components_by_label(A) -> dict:
    return {xi.coords: {A.labels[i] for i in A.component_basis(xi)} for xi in A.sorted_support()}


def suite_examples() -> list:
    reports = []

    def components_z15():
        A = con.z3xz5_grading()
        got = _components_by_label(A)
        gaps = {a.coords for a in A.group.elements()} - set(got)
        ok = got == Z15_COMPONENTS and gaps == Z15_GAPS and len(got) == 11
        details = {
            "support_size": len(got),
            "missing": sorted(f"({a},{b})" for a, b in gaps),
            "summary": f"{len(got)} support elements, component (0,1) = {sorted(got.get((0, 1), []))}",
        }
        return _ok(ok), details, None if ok else {"algebra": "example-3-16"}

    _claim(reports, "ex-3-16/components", components_z15)

    g15, table = z15_polynomial()

    def table_check(A, v):
        n = len(table.nonzero())
        return n == 5, {"nonzero_table_entries": n}

    _claim(reports, "ex-3-16/identity", _identity_claim("example-3-16", g15, True, table_check))

    K = make_group([2, 2])
    nonzero = [a for a in K.elements() if not a.is_identity]
    for a in nonzero:
        for b in nonzero:
            if a < b:
                g = _var(1, a, K) * _var(2, b, K) + _var(2, b, K) * _var(1, a, K)
                _claim(reports, f"ex-3-17/anticommute/{format_element(a)},{format_element(b)}",
                       _identity_claim("pauli-m2", g, True))
    for t in K.elements():
        g = _var(1, t, K) * _var(1, t, K)
        _claim(reports, f"ex-3-17/square/{format_element(t)}", _identity_claim("pauli-m2", g, False))
    e = K.identity
    for xi in K.elements():
        g = _var(1, e, K) * _var(2, xi, K) - _var(2, xi, K) * _var(1, e, K)
        _claim(reports, f"ex-3-17/neutral-commutator/{format_element(xi)}", _identity_claim("pauli-m2", g, True))
        g = _var(2, xi, K) * _var(3, xi, K) - _var(3, xi, K) * _var(2, xi, K)
        _claim(reports, f"ex-3-17/same-degree/{format_element(xi)}", _identity_claim("pauli-m2", g, True))

    G = make_group([3, 5])
    a, b = G.element((1, 0)), G.element((1, 4))
    stated = {
        "xy": _var(1, a, G) * _var(2, b, G),
        "yx": _var(2, b, G) * _var(1, a, G),
        "x-square": _var(1, b, G) * _var(1, b, G),
        "y-square": _var(2, a, G) * _var(2, a, G),
    }
    for tag, g in stated.items():
        _claim(reports, f"ex-3-18/{tag}", _identity_claim("example-3-18", g, True))

    def witness_in_span(A, v):
        target = Subspace(A.dim, [{A.index_of("E34"): 1}, {A.index_of("E43"): 1}])
        inside = target.contains(v.witness.value)
        return inside, {"witness_in_span_E34_E43": inside}

    e = G.identity
    g = _var(1, e, G) * _var(2, e, G) - _var(2, e, G) * _var(1, e, G)
    _claim(reports, "ex-3-18/neutral-commutator", _identity_claim("example-3-18", g, False, witness_in_span))
    return reports


# ------------------------------------------------ left-normed commutators

LEFT_NORMED_CORPUS = [
    ("m:1", 1), ("nilspan", 1), ("group-algebra:1", 1),
    ("grassmann:2", 2), ("grassmann:3", 2), ("grassmann:4", 2), ("grassmann:5", 2), ("grassmann:6", 2),
    ("w3", 3), ("w3-unital", 3), ("w3-coarsened", 3), ("envelope-w3:3", 3), ("envelope-w3:4", 3),
]


def suite_left_normed() -> list:
    reports = []
    for name, d in LEFT_NORMED_CORPUS:
        def run(name=name, d=d):
            A = resolve(name)
            supp = len(A.support())
            central = neutral_central_structural(A)
            details = {"support_size": supp, "neutral_central": central}
            if supp != d or not central:
                details["summary"] = f"hypotheses not met (support {supp}, neutral central {central})"
                return FAIL, details, {"algebra": name}
            if d == 1:
                details["commutative"] = is_commutative(A)
            g = left_normed(d + 1)
            v = is_graded_identity(A, g)
            details["verdict"] = "HOLDS" if v.holds else "FAILS"
            ok = v.holds
            if d == 3:
                # [A,A,A] lies in the center iff the next left-normed commutator vanishes
                triple = lower_central_series(A)
                third = triple[1] if len(triple) > 1 else triple[0]
                details["triple_commutators_central"] = third.is_subspace_of(center(A))
                ok = ok and details["triple_commutators_central"]
            details["summary"] = f"{name}: d={d}, {g} {details['verdict']}"
            return _ok(ok), details, None if ok else _reproducer(name, g, v)

        _claim(reports, f"thm-3-06/d{d}/{name}", run)
    return reports


# ------------------------------------------------------ quaternion family


def suite_quaternion_family() -> list:
    reports = []
    for n in range(1, 5):
        name = f"prop328:{n}"

        def hyp(name=name, n=n):
            A = resolve(name)
            supp = len(A.support())
            central = neutral_central_structural(A) and is_neutral_central(A)
            ok = central and supp == n + 4
            details = {"support_size": supp, "neutral_central": central,
                       "summary": f"support {supp} (expected {n + 4}), neutral central {central}"}
            return _ok(ok), details, None if ok else {"algebra": name}

        _claim(reports, f"prop-3-28/n{n}/hypotheses", hyp)
        for m in range(2, 7):
            def run(name=name, m=m):
                A = resolve(name)
                g = left_normed(m)
                v = is_graded_identity(A, g)
                if v.holds:
                    return FAIL, {"verdict": "HOLDS", "summary": f"{g} unexpectedly holds"}, _reproducer(name, g)
                # the explicit quaternion witness [i, j, ..., j]
                i, j = A.basis("i"), A.basis("j")
                assignment = {var: (i if var.index == 1 else j) for var in g.variables()}
                value = evaluate(g, A, assignment)
                target = A.basis("k" if m % 2 == 0 else "i") * (2 ** (m - 1))
                sign = 1 if value == target else (-1 if value == -target else 0)
                details = {
                    "verdict": "FAILS",
                    "engine_witness": v.witness.as_dict(),
                    "explicit_value": str(value),
                    "sign": sign,
                    "summary": f"[i, j x{m - 1}] = {value}",
                }
                return _ok(sign != 0), details, None if sign else _reproducer(name, g, v)

            _claim(reports, f"prop-3-28/n{n}/m{m}", run)
    return reports


# -------------------------------------------- canonical elementary gradings


CANONICAL_CORPUS = [
    # name, k, H as coordinate tuples
    ("canonical-k2-z2xz2", 2, [(0, 0), (1, 0)]),
    ("canonical-k2-z4", 2, [(0,), (2,)]),
    ("canonical-k3-z6", 3, [(0,), (3,)]),
    ("canonical-k3-z3", 3, [(0,)]),
    ("canonical-k1-pauli", 1, [(0, 0), (0, 1), (1, 0), (1, 1)]),
    ("canonical-k2-z2xz4", 2, [(0, 0), (0, 1), (0, 2), (0, 3)]),
]


def _sigma_bracket_indices_ok(B) -> tuple:
    """For every basis pair with vanishing sigma-bracket, check the index pattern."""
    entries = B.meta.entries
    bad = []
    for p in range(B.dim):
        for q in range(B.dim):
            if sigma_bracket(B, B.basis(p), B.basis(q)):
                continue
            i, j, _ = entries[p]
            r, s, _ = entries[q]
            if not ((i != s and j != r) or i == j == s == r):
                bad.append((B.labels[p], B.labels[q]))
    return not bad, bad


def suite_canonical_gradings() -> list:
    reports = []
    for name, k, Hc in CANONICAL_CORPUS:
        def bounds(name=name, k=k, Hc=Hc):
            B = resolve(name)
            h = len(Hc)
            supp = len(B.support())
            ok = k * h <= supp <= (k * k - k + 1) * h and k * h == B.group.order
            details = {"k": k, "H_order": h, "support_size": supp,
                       "summary": f"{k * h} <= {supp} <= {(k * k - k + 1) * h}"}
            return _ok(ok), details, None if ok else {"algebra": name}

        def no_degree2(name=name):
            B = resolve(name)
            G = B.group
            found = []
            supp = B.sorted_support()
            for xi in supp:
                sq = _var(1, xi, G) * _var(1, xi, G)
                if is_graded_identity(B, sq).holds:
                    found.append(str(sq))
            for xi in supp:
                for zeta in supp:
                    space = find_multilinear_identities(B, [xi, zeta])
                    for mono in (_var(1, xi, G) * _var(2, zeta, G), _var(2, zeta, G) * _var(1, xi, G)):
                        if identity_space_contains(space, mono):
                            found.append(str(mono))
            details = {"identities_found": sorted(set(found)),
                       "summary": f"{len(supp)} degrees, {len(supp) ** 2} pairs, no square or monomial identity"
                       if not found else f"{len(found)} unexpected identities"}
            rep = None
            if found:
                rep = {"algebra": name, "polynomial": found[0], "mode": "graded"}
            return _ok(not found), details, rep

        def sigma_items(name=name, Hc=Hc):
            B = resolve(name)
            G = B.group
            H = {G.element(h) for h in Hc}
            item_i, bad = _sigma_bracket_indices_ok(B)
            supp = B.sorted_support()
            holding = [(a, b) for a in supp for b in supp if sigma_identity_check(B, a, b).holds]
            item_iv = all((a, b) in holding for a in sorted(H) for b in sorted(H))
            applies_v = len(supp) == B.meta.k * len(H)
            item_v = (not applies_v) or all(a in H and b in H for a, b in holding)
            ok = item_i and item_iv and item_v
            details = {
                "item_i": item_i,
                "item_iv": item_iv,
                "item_v": item_v if applies_v else "not applicable",
                "holding_pairs": [f"{format_element(a)},{format_element(b)}" for a, b in holding],
                "summary": f"items i/iv/v: {item_i}/{item_iv}/{item_v}; {len(holding)} sigma-commuting degree pairs",
            }
            if bad:
                details["item_i_violations"] = [list(p) for p in bad]
            return _ok(ok), details, None if ok else {"algebra": name}

        _claim(reports, f"lemma-3-23/{name}/support-bound", bounds)
        _claim(reports, f"lemma-3-23/{name}/no-degree2-monomial", no_degree2)
        _claim(reports, f"lemma-3-23/{name}/sigma-items", sigma_items)
    return reports


# --------------------------------------------- twisted group algebras

TWISTED_NEUTRAL_CORPUS = ["group-algebra:2", "group-algebra:3", "tga-z2", "tga-z3", "tga-z4", "tga-z5", "tga-z6",
                   "tga-z4xz2-cyclic"]


def suite_twisted_neutral() -> list:
    reports = []
    for name in TWISTED_NEUTRAL_CORPUS:
        def run(name=name):
            A = resolve(name)
            G = A.group
            e = G.identity
            central = neutral_central_structural(A)
            failing = []
            for xi in A.sorted_support():
                g = _var(1, e, G) * _var(2, xi, G) - _var(2, xi, G) * _var(1, e, G)
                v = is_graded_identity(A, g)
                if not v.holds:
                    failing.append((g, v))
            ok = central and not failing
            details = {"neutral_central": central, "support_size": len(A.support()),
                       "summary": f"{name}: neutral central {central}, [x@e, y@xi] holds on all "
                                  f"{len(A.support())} support degrees" if ok else f"{name}: failure"}
            rep = _reproducer(name, *failing[0]) if failing else (None if ok else {"algebra": name})
            return _ok(ok), details, rep

        _claim(reports, f"lemma-3-04/{name}", run)
    return reports


# ------------------------------------------------------ commutator ideal

COMMUTATOR_IDEAL_CORPUS = ["w3", "w3-unital", "w3-coarsened", "ga3+w3", "tga-z3+w3", "ga3+envelope-w3:3",
                     "grassmann:4", "envelope-w3:3"]


def _lie_report(A) -> dict:
    ds = derived_series(A)
    lcs = lower_central_series(A)
    return {
        "commutator_ideal_nilpotency": commutator_ideal_nilpotency(A),
        "derived_series_dims": [S.dim for S in ds],
        "lower_central_dims": [S.dim for S in lcs],
        "lie_solvable": ds[-1].is_zero(),
        "lie_nilpotent": lcs[-1].is_zero(),
    }


def suite_commutator_ideal() -> list:
    reports = []
    for name in COMMUTATOR_IDEAL_CORPUS:
        def run(name=name):
            A = resolve(name)
            central = neutral_central_structural(A)
            details = {"group": str(A.group), "neutral_central": central}
            details.update(_lie_report(A))
            ok = (
                central
                and details["commutator_ideal_nilpotency"] != NOT_NILPOTENT
                and details["lie_solvable"]
            )
            details["summary"] = (
                f"{name}: commutator ideal nilpotency {details['commutator_ideal_nilpotency']}, "
                f"derived series dims {details['derived_series_dims']}"
            )
            return _ok(ok), details, None if ok else {"algebra": name}

        _claim(reports, f"thm-3-12/{name}", run)
    return reports


# ------------------------------------------------ products of commutators

COMMUTATOR_PRODUCT_CORPUS = ["w3", "w3-unital", "w3-coarsened", "ga3+w3", "tga-z3+w3", "envelope-w3:6"]
ENGINE_TUPLE_CAP = 200_000


def minimal_commutator_product(A, max_d: int = 4):
    for d in range(1, max_d + 1):
        if commutator_products(A, d).is_zero():
            return d
    return None


def suite_commutator_products() -> list:
    reports = []
    for name in COMMUTATOR_PRODUCT_CORPUS:
        def run(name=name):
            A = resolve(name)
            central = neutral_central_structural(A)
            d = minimal_commutator_product(A)
            nil = commutator_ideal_nilpotency(A)
            details = {"group": str(A.group), "neutral_central": central, "dim": A.dim,
                       "minimal_d": d, "commutator_ideal_nilpotency": nil}
            ok = central and d is not None and nil != NOT_NILPOTENT
            rep = None
            if d is not None and A.dim ** (2 * d) <= ENGINE_TUPLE_CAP:
                # engine cross-check of the structural shortcut
                g = product_of_commutators(d)
                v = is_graded_identity(A, g)
                details["engine"] = "HOLDS" if v.holds else "FAILS"
                if d > 1:
                    below = is_graded_identity(A, product_of_commutators(d - 1))
                    details["engine_below"] = "HOLDS" if below.holds else "FAILS"
                    ok = ok and not below.holds
                ok = ok and v.holds
                if not v.holds:
                    rep = _reproducer(name, g, v)
            else:
                details["engine"] = "skipped: structural check only"
            details["summary"] = f"{name}: product of {d} commutators vanishes; commutator ideal index {nil}"
            return _ok(ok), details, rep if ok or rep else {"algebra": name}

        _claim(reports, f"thm-3-30/{name}", run)
    return reports


# ------------------------------------------------------------ radical

RADICAL_ZERO = ["m:1", "m:2", "m:3", "group-algebra:2", "group-algebra:3", "group-algebra:4", "tga-z3", "tga-z5",
                "canonical-k1-pauli"]
RADICAL_UPPER = ["ut:2", "ut:3", "ut:4", "ut2-z2", "ut3-z3"]
RADICAL_CORPUS = ["pauli-m2", "quaternion", "example-3-16", "example-3-18", "w3", "w3-unital", "w3-lifted",
                  "nilspan", "grassmann:3", "grassmann:4", "prop328:2", "envelope-w3:3", "ga3+w3",
                  "canonical-k2-z2xz2", "canonical-k3-z6"]


def strictly_upper(A) -> Subspace:
    vecs = []
    for n, label in enumerate(A.labels):
        i, j = label[1], label[2]
        if i < j:
            vecs.append({n: 1})
    return Subspace(A.dim, vecs)


def suite_radical() -> list:
    reports = []
    for name in RADICAL_ZERO:
        def zero(name=name):
            A = resolve(name)
            J = jacobson_radical(A)
            details = {"radical_dim": J.dim, "summary": f"{name}: radical dim {J.dim}"}
            ok = J.is_zero()
            if name.startswith(("tga", "group-algebra")):
                details["symmetric_cocycle"] = A.meta.cocycle.is_symmetric()
                ok = ok and details["symmetric_cocycle"]
            return _ok(ok), details, None if ok else {"algebra": name}

        _claim(reports, f"radical/zero/{name}", zero)
    for name in RADICAL_UPPER:
        def upper(name=name):
            A = resolve(name)
            J = jacobson_radical(A)
            ok = J == strictly_upper(A)
            details = {"radical_dim": J.dim, "summary": f"{name}: radical is the strictly upper part ({J.dim})"}
            return _ok(ok), details, None if ok else {"algebra": name}

        _claim(reports, f"radical/upper/{name}", upper)
    for name in RADICAL_CORPUS:
        def props(name=name):
            A = resolve(name)
            J = jacobson_radical(A)
            nil = subalgebra_nilpotency(A, J) if not J.is_zero() else 1
            ideal = is_ideal(A, J)
            graded = graded_part(A, J) == J
            ok = ideal and graded and nil != NOT_NILPOTENT
            details = {"radical_dim": J.dim, "ideal": ideal, "graded": graded, "nilpotency": nil,
                       "basis": [format_vector(A, v) for v in J.basis()][:8],
                       "summary": f"{name}: radical dim {J.dim}, ideal {ideal}, graded {graded}, nilpotency {nil}"}
            return _ok(ok), details, None if ok else {"algebra": name}

        _claim(reports, f"radical/properties/{name}", props)
    return reports


# ------------------------------------------------------------ engine cross-check

CROSS_GRADED = ["pauli-m2", "quaternion", "w3", "w3-unital", "grassmann:3", "nilspan", "ut2-z2", "group-algebra:3",
                "example-3-18", "canonical-k2-z2xz2", "tga-z4", "ut3-z3"]
CROSS_UNGRADED = ["pauli-m2", "quaternion", "w3", "w3-unital", "grassmann:3", "nilspan", "ut:2", "group-algebra:3"]
CROSS_PAIRS = 240


def random_polynomial(rng: random.Random, A, ungraded: bool) -> GradedPolynomial:
    G = trivial_group() if ungraded else A.group
    degrees = [G.identity] if ungraded else A.sorted_support()
    nvars = rng.randint(1, 3)
    xs = [_var(i + 1, rng.choice(degrees), G) for i in range(nvars)]
    pick = lambda: rng.choice(xs)

    def block():
        kind = rng.randrange(5)
        a, b, c = pick(), pick(), pick()
        if kind == 0:
            return a * b - b * a
        if kind == 1:
            return (a * b - b * a) * c - c * (a * b - b * a)
        if kind == 2:
            return a * b + b * a
        if kind == 3:
            return a * a
        word = a
        for _ in range(rng.randint(0, 2)):
            word = word * pick()
        return word

    g = GradedPolynomial.zero(G)
    for _ in range(rng.randint(1, 2)):
        g = g + block() * rng.choice([1, -1, 2, Fraction(1, 2)])
    return g


def suite_engine_crosscheck(pairs: int = CROSS_PAIRS, seed: int = 2024) -> list:
    reports = []
    rng = random.Random(seed)
    for n in range(pairs):
        ungraded = rng.random() < 0.35
        name = rng.choice(CROSS_UNGRADED if ungraded else CROSS_GRADED)
        A = resolve(name)
        g = random_polynomial(rng, A, ungraded)
        while g.is_zero():  # cancellations such as [a, a] carry no information
            g = random_polynomial(rng, A, ungraded)

        def run(A=A, g=g, name=name):
            exact = is_graded_identity(A, g)
            generic = is_identity_generic(A, g, seed=n)
            comps = component_verdicts(A, g)
            round_trip = exact.holds == all(v.holds for _, v in comps)
            ok = exact.holds == generic.holds and round_trip
            details = {
                "algebra": name,
                "polynomial": str(g),
                "exact": "HOLDS" if exact.holds else "FAILS",
                "generic": "HOLDS" if generic.holds else "FAILS",
                "components": len(comps),
                "round_trip": round_trip,
                "summary": f"{name}: {g} -> {'HOLDS' if exact.holds else 'FAILS'} (both engines)",
            }
            if generic.witness is not None:
                # the specialized witness must really be a counterexample
                val = evaluate(g, A, generic.witness.assignment_elements())
                details["generic_witness_sound"] = bool(val)
                ok = ok and bool(val)
            return _ok(ok), details, None if ok else _reproducer(name, g, exact)

        _claim(reports, f"engine-crosscheck/{n:03d}", run)
    holds = sum(1 for r in reports if r.details.get("exact") == "HOLDS")
    reports.append(ClaimReport(
        "engine-crosscheck/summary",
        _ok(all(r.status == PASS for r in reports) and len(reports) >= 200),
        {"pairs": len(reports), "identities": holds, "non_identities": len(reports) - holds,
         "summary": f"{len(reports)} pairs agree ({holds} identities)"},
    ))
    return reports


# ------------------------------------------------------------ exploratory


def suite_exploratory_cyclic() -> list:
    """Exploratory: cyclic-graded corpus members with central neutral component.

    Not an acceptance check.  Reports Lie nilpotency and commutator ideal data
    and flags members whose commutator ideal or Lie series fails to vanish.
    """
    reports = []
    names = ["w3", "w3-unital", "ga3+w3", "tga-z3+w3", "envelope-w3:3", "ut3-z3", "tga-z5", "group-algebra:5",
             "grassmann:4"]
    for name in names:
        def run(name=name):
            A = resolve(name)
            central = neutral_central_structural(A)
            details = {"group": str(A.group), "neutral_central": central}
            if central:
                details.update(_lie_report(A))
                flag = not details["lie_nilpotent"] or details["commutator_ideal_nilpotency"] == NOT_NILPOTENT
                details["candidate_counterexample"] = flag
            details["summary"] = f"{name}: exploratory, neutral central {central}"
            return OUT_OF_SCOPE, details, None

        _claim(reports, f"problem-star/{name}", run)
    return reports


SUITES = {
    "examples": suite_examples,
    "lemma-3-23": suite_canonical_gradings,
    "theorem-3-06": suite_left_normed,
    "prop-3-28": suite_quaternion_family,
    "lemma-3-04": suite_twisted_neutral,
    "theorem-3-12": suite_commutator_ideal,
    "theorem-3-30": suite_commutator_products,
    "radical": suite_radical,
    "engine-crosscheck": suite_engine_crosscheck,
}
EXPLORATORY = {"problem-star": suite_exploratory_cyclic}


class UnknownSuiteError(KeyError):
    pass


def run_suite(name: str) -> list:
    if name in SUITES:
        fn = SUITES[name]
    elif name in EXPLORATORY:
        fn = EXPLORATORY[name]
    else:
        raise UnknownSuiteError(f"unknown suite {name!r}; known: {', '.join(list(SUITES) + list(EXPLORATORY))}")
    return sorted(fn(), key=lambda r: r.claim_id)


def exit_status(reports) -> int:
    if any(r.status == FAIL for r in reports):
        return 1
    if any(r.resource_limited for r in reports):
        return 3
    return 0
