import pytest

from gpw.algebra import validate
from gpw.constructions import z3xz5_grading, grassmann, pauli_cocycle, pauli_m2
from gpw.io import (
    FileFormatError,
    format_algebra,
    format_cocycle,
    load_algebra,
    parse_algebra,
    parse_cocycle,
    save_algebra,
)


def test_round_trip(tmp_path):
    path = tmp_path / "pauli.alg"
    save_algebra(pauli_m2(), path)
    A = load_algebra(path)
    assert A.dim == 4 and validate(A) == [] and A == pauli_m2()
    first = path.read_bytes()
    save_algebra(A, path)
    assert path.read_bytes() == first


@pytest.mark.parametrize("make", [z3xz5_grading, lambda: grassmann(3)])
def test_round_trip_larger(make):
    A = make()
    assert parse_algebra(format_algebra(A)) == A


def test_violating_file_loads_but_fails_validation():
    text = "group: Z2\nbasis: a, b\ndegrees: (1), (1)\nproducts:\n0 0 -> [(1, 1)]\n"
    A = parse_algebra(text)
    assert any(v.kind == "grading" for v in validate(A))


def test_missing_products_are_zero():
    text = "group: Z2\nbasis: a\ndegrees: (1)\nproducts:\n"
    A = parse_algebra(text)
    assert (A.basis("a") * A.basis("a")).is_zero()


@pytest.mark.parametrize(
    "text, line",
    [
        ("group: Z2\nbasis: a\ndegrees: (1), (0)\nproducts:\n", 3),
        ("group: Z2\nbasis: a\ndegrees: (1)\nproducts:\n0 0 -> [(4, 1)]\n", 5),
        ("group: Z2\nbasis: a\ndegrees: (1)\nproducts:\n0 0 -> [(0, x)]\n", 5),
        ("group: Zx\nbasis: a\ndegrees: (1)\n", 1),
        ("group: Z2\nbasis: a\ndegrees: (1)\nunit: b\n", 4),
    ],
)
def test_parse_errors_report_line(text, line):
    with pytest.raises(FileFormatError) as info:
        parse_algebra(text)
    assert info.value.line == line


def test_cocycle_round_trip():
    sigma = pauli_cocycle()
    back = parse_cocycle(format_cocycle(sigma))
    assert back.table == sigma.table and back.elements == sigma.elements
