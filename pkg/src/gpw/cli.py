"""Command-line front end.

Exit codes: 0 ok, 1 claim failure, 2 usage or input error, 3 resource limit.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import AlgebraError, format_vector, validate
from .constructions import FIXTURE_HELP, InvalidCocycleError, InvalidInputError, grassmann_envelope
from .groups import GroupError, format_element, format_group, split_elements, trivial_group
from .harness import CORPUS_HELP, EXPLORATORY, SUITES, exit_status, resolve, run_suite
from .identities import (
    ContractError,
    NotAnIdentityError,
    ResourceLimitError,
    degree2_canonicalize,
    find_multilinear_identities,
    is_graded_identity,
)
from .io import FileFormatError, format_algebra, load_algebra, save_algebra
from .polynomials import EvaluationContractError, PolynomialSyntaxError, parse
from .structure import (
    NOT_NILPOTENT,
    center,
    commutator_ideal,
    commutator_ideal_nilpotency,
    derived_series,
    graded_part,
    is_neutral_central,
    jacobson_radical,
    lower_central_series,
    nilpotency_index,
    subalgebra_nilpotency,
)

EXIT_OK, EXIT_CLAIM, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def load(spec: str):
    """An algebra from a file path or a fixture/corpus name."""
    if os.path.exists(spec):
        return load_algebra(spec)
    try:
        return resolve(spec)
    except KeyError:
        raise UsageError(f"{spec!r} is neither a file nor a known algebra ({FIXTURE_HELP}; {CORPUS_HELP})") from None


def _emit(args, payload: dict, text: str) -> None:
    if args.report == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _vectors(A, U) -> list:
    return [format_vector(A, v) for v in U.basis()]


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


# -------------------------------------------------------------- commands


def cmd_build(args) -> int:
    A = load(args.algebra)
    text = format_algebra(A)
    if args.output:
        save_algebra(A, args.output)
        _emit(args, {"written": args.output, "dim": A.dim}, f"wrote {args.output} ({A.dim} basis elements)")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_validate(args) -> int:
    A = load(args.algebra)
    bad = validate(A)
    payload = {"valid": not bad, "violations": [{"kind": v.kind, "indices": list(v.indices)} for v in bad]}
    lines = ["valid"] if not bad else [f"{len(bad)} violations"] + [f"  {v.kind} {v.indices}" for v in bad[:20]]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if not bad else EXIT_CLAIM


def _polynomial(args, A):
    G = trivial_group() if args.ungraded else A.group
    return parse(args.g, G)


def cmd_check(args) -> int:
    A = load(args.algebra)
    g = _polynomial(args, A)
    v = is_graded_identity(A, g)
    payload = {"polynomial": str(g), "verdict": "HOLDS" if v.holds else "FAILS", "evaluations": v.evaluations}
    text = payload["verdict"]
    if v.witness is not None:
        payload["witness"] = v.witness.as_dict()
        text += f"\nwitness: {v.witness.describe()}"
    _emit(args, payload, text)
    if args.expect and (args.expect == "holds") != v.holds:
        return EXIT_CLAIM
    return EXIT_OK


def cmd_canon2(args) -> int:
    A = load(args.algebra)
    g = _polynomial(args, A)
    try:
        result = degree2_canonicalize(A, g)
    except NotAnIdentityError as exc:
        w = exc.verdict.witness
        _emit(args, {"verdict": "FAILS", "witness": w.as_dict()}, f"FAILS\nwitness: {w.describe()}")
        return EXIT_CLAIM
    d = result.as_dict()
    lines = [f"source: {d['source']}", f"reconstructed: {d['reconstructed']}"]
    for key in ("gamma", "delta", "fg", "pair_cases", "linear_cases", "representatives"):
        if d[key]:
            lines.append(f"{key}: " + ", ".join(f"{k} = {v}" for k, v in d[key].items()))
    if d["square_identities"]:
        lines.append("square identities: " + ", ".join(d["square_identities"]))
    lines.append(f"neutral component commutative: {_yes(d['commutative_neutral'])}")
    lines.extend(f"note: {n}" for n in d["notes"])
    _emit(args, d, "\n".join(lines))
    return EXIT_OK


def analyze(A) -> dict:
    Z = center(A)
    J = jacobson_radical(A)
    C = commutator_ideal(A)
    lcs, ds = lower_central_series(A), derived_series(A)
    cnil = commutator_ideal_nilpotency(A)
    return {
        "group": format_group(A.group),
        "dim": A.dim,
        "support": [format_element(x) for x in A.sorted_support()],
        "components": {format_element(x): [A.labels[i] for i in A.component_basis(x)] for x in A.sorted_support()},
        "center": _vectors(A, Z),
        "neutral_central": is_neutral_central(A),
        "nilpotency_index": nilpotency_index(A),
        "radical": _vectors(A, J),
        "radical_graded": graded_part(A, J) == J,
        "radical_nilpotency": subalgebra_nilpotency(A, J) if not J.is_zero() else 1,
        "commutator_ideal": _vectors(A, C),
        "commutator_ideal_nilpotency": cnil,
        "lower_central_dims": [S.dim for S in lcs],
        "derived_dims": [S.dim for S in ds],
        "lie_nilpotent": lcs[-1].is_zero(),
        "lie_solvable": ds[-1].is_zero(),
    }


def _analysis_text(r: dict) -> str:
    cnil = r["commutator_ideal_nilpotency"]
    cdesc = "not nilpotent" if cnil == NOT_NILPOTENT else f"nilpotent (index {cnil})"
    lines = [
        f"neutral central: {_yes(r['neutral_central'])}; commutator ideal: "
        f"{'not nilpotent' if cnil == NOT_NILPOTENT else 'nilpotent'}; Lie solvable: {_yes(r['lie_solvable'])}",
        f"group {r['group']}, dimension {r['dim']}, support ({len(r['support'])}): {', '.join(r['support'])}",
    ]
    for deg, labels in r["components"].items():
        lines.append(f"  {deg}: {', '.join(labels)}")
    lines += [
        f"center (dim {len(r['center'])}): {'; '.join(r['center']) or '0'}",
        f"nilpotency index: {r['nilpotency_index']}",
        f"radical (dim {len(r['radical'])}): {'; '.join(r['radical']) or '0'}",
        f"commutator ideal (dim {len(r['commutator_ideal'])}): {cdesc}",
        f"lower central series dims: {r['lower_central_dims']}; Lie nilpotent: {_yes(r['lie_nilpotent'])}",
        f"derived series dims: {r['derived_dims']}",
    ]
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    r = analyze(load(args.algebra))
    _emit(args, r, _analysis_text(r))
    return EXIT_OK


def cmd_search(args) -> int:
    A = load(args.algebra)
    G = A.group
    try:
        degrees = [G.parse_element(t.strip()) for t in split_elements(args.degrees)]
    except GroupError as exc:
        raise UsageError(str(exc)) from None
    space = find_multilinear_identities(A, degrees, bound=args.bound)
    basis = [str(p) for p in space]
    text = f"{len(basis)} independent identities" + "".join(f"\n  {p}" for p in basis)
    _emit(args, {"degrees": [format_element(d) for d in degrees], "basis": basis}, text)
    return EXIT_OK


def cmd_envelope(args) -> int:
    A = load(args.algebra)
    E = grassmann_envelope(A, args.n)
    if args.output:
        save_algebra(E, args.output)
    payload = {"group": format_group(E.group), "dim": E.dim, "truncation": args.n,
               "support": [format_element(x) for x in E.sorted_support()]}
    if args.output:
        payload["written"] = args.output
    text = f"envelope over {payload['group']} at truncation {args.n}: dimension {E.dim}"
    if args.output:
        text += f", written to {args.output}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = [args.suite] if args.suite else list(SUITES)
    reports = []
    for name in names:
        reports.extend(run_suite(name))
    if args.report == "json":
        print(json.dumps([r.as_dict(args.timing) for r in reports], indent=2, sort_keys=True))
    else:
        for r in reports:
            line = r.line()
            if args.timing:
                line += f" ({r.runtime:.2f}s)"
            print(line)
            if r.reproducer:
                print(f"    reproducer: {json.dumps(r.reproducer, sort_keys=True)}")
        counts = {}
        for r in reports:
            counts[r.status] = counts.get(r.status, 0) + 1
        print("summary: " + ", ".join(f"{k} {v}" for k, v in sorted(counts.items())))
    if args.suite in EXPLORATORY:
        return EXIT_OK
    return exit_status(reports)


# -------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--report", choices=["text", "json"], default="text", help="output format")

    p = argparse.ArgumentParser(prog="gpw", description="Graded algebras and graded polynomial identities.")
    sub = p.add_subparsers(dest="command", required=True)

    def algebra_arg(sp):
        sp.add_argument("algebra", help="algebra file or fixture name")

    sp = sub.add_parser("build", parents=[common], help="write an algebra in the text format")
    algebra_arg(sp)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("validate", parents=[common], help="check grading law, associativity and unit")
    algebra_arg(sp)
    sp.set_defaults(func=cmd_validate)

    for name, func, helptext in (
        ("check", cmd_check, "decide whether a polynomial is a graded identity"),
        ("canon2", cmd_canon2, "canonical form of a degree-2 graded identity"),
    ):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        algebra_arg(sp)
        sp.add_argument("-g", required=True, help='polynomial, e.g. "[x1@e,x2@(1,0)]"')
        sp.add_argument("--ungraded", action="store_true", help="ordinary identity: variables range over all of A")
        if name == "check":
            sp.add_argument("--expect", choices=["holds", "fails"], help="exit 1 if the verdict differs")
        sp.set_defaults(func=func)

    sp = sub.add_parser("analyze", parents=[common], help="structure report")
    algebra_arg(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("search", parents=[common], help="basis of multilinear identities of given degrees")
    algebra_arg(sp)
    sp.add_argument("--degrees", required=True, help="comma-separated degrees, e.g. e,(1,0)")
    sp.add_argument("--bound", type=int, default=4, help="maximum number of variables")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("envelope", parents=[common], help="Grassmann envelope of a (G x Z2)-graded algebra")
    algebra_arg(sp)
    sp.add_argument("-n", type=int, default=6, help="Grassmann truncation")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_envelope)

    sp = sub.add_parser("verify", parents=[common], help="run replication suites")
    sp.add_argument("suite", nargs="?", choices=list(SUITES) + list(EXPLORATORY))
    sp.add_argument("--timing", action="store_true", help="include runtimes (json output is then not deterministic)")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (
        UsageError, FileFormatError, PolynomialSyntaxError, GroupError, ContractError, EvaluationContractError,
        InvalidInputError, InvalidCocycleError, AlgebraError, OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
