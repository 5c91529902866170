"""Text formats for algebras and cocycles.

Algebra file::

    group: Z2xZ2
    basis: I, E11-E22, E12+E21, E12-E21
    degrees: e, (1,1), (0,1), (1,0)
    unit: I
    products:
    0 0 -> [(0, 1)]
    1 1 -> [(0, 1)]

Pairs missing from `products` multiply to zero.  `save_algebra` writes the
canonical form, so save -> load -> save is byte-for-byte stable.
"""
from __future__ import annotations

import re

from .algebra import GradedAlgebra
from .constructions import Cocycle, make_cocycle
from .groups import GroupError, format_element, format_group, parse_group, split_elements
from .scalars import ScalarParseError, format_rational, parse_rational


class FileFormatError(ValueError):
    def __init__(self, message: str, line: int = 0, field: str = ""):
        where = f"line {line}" + (f" ({field})" if field else "")
        super().__init__(f"{where}: {message}")
        self.line = line
        self.field = field


_LABEL = re.compile(r"[^\s,]+")
_PRODUCT = re.compile(r"\s*(\d+)\s+(\d+)\s*->\s*\[(.*)\]\s*")
_ENTRY = re.compile(r"\(\s*(\d+)\s*,\s*(-?\d+(?:\s*/\s*\d+)?)\s*\)")


def format_algebra(A: GradedAlgebra) -> str:
    lines = [
        f"group: {format_group(A.group)}",
        f"basis: {', '.join(A.labels)}",
        f"degrees: {', '.join(format_element(d) for d in A.degrees)}",
    ]
    if A.unit is not None:
        lines.append(f"unit: {A.labels[A.unit]}")
    lines.append("products:")
    for (i, j) in sorted(A.products):
        body = ", ".join(f"({k}, {format_rational(c)})" for k, c in A.products[(i, j)])
        lines.append(f"{i} {j} -> [{body}]")
    return "\n".join(lines) + "\n"


def _fields(text: str) -> tuple:
    fields, products = {}, []
    in_products = False
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if in_products and "->" in line and ":" not in line.split("->")[0]:
            products.append((n, line))
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise FileFormatError(f"expected 'key: value', got {line!r}", n)
        key = key.strip()
        if key in fields:
            raise FileFormatError("duplicate field", n, key)
        fields[key] = (n, value.strip())
        in_products = key in ("products", "sigma")
    return fields, products


def parse_algebra(text: str) -> GradedAlgebra:
    fields, product_lines = _fields(text)
    for key in ("group", "basis", "degrees"):
        if key not in fields:
            raise FileFormatError("missing field", 0, key)
    n, value = fields["group"]
    try:
        G = parse_group(value)
    except GroupError as exc:
        raise FileFormatError(str(exc), n, "group") from None
    n, value = fields["basis"]
    labels = [t.strip() for t in value.split(",")] if value else []
    if any(not _LABEL.fullmatch(t) for t in labels):
        raise FileFormatError("basis labels must be nonempty and contain no spaces or commas", n, "basis")
    n, value = fields["degrees"]
    literals = split_elements(value)
    if len(literals) != len(labels):
        raise FileFormatError(f"{len(literals)} degrees for {len(labels)} basis elements", n, "degrees")
    try:
        degrees = [G.parse_element(t) for t in literals]
    except GroupError as exc:
        raise FileFormatError(str(exc), n, "degrees") from None
    unit = None
    if "unit" in fields:
        n, value = fields["unit"]
        if value not in labels:
            raise FileFormatError(f"unknown unit label {value!r}", n, "unit")
        unit = labels.index(value)
    products = {}
    for n, line in product_lines:
        m = _PRODUCT.fullmatch(line)
        if not m:
            raise FileFormatError(f"bad product entry {line!r}", n, "products")
        i, j = int(m.group(1)), int(m.group(2))
        body = m.group(3).strip()
        entries = []
        pos = 0
        for em in _ENTRY.finditer(body):
            if body[pos:em.start()].strip(" ,"):
                raise FileFormatError(f"bad product entry {line!r}", n, "products")
            try:
                entries.append((int(em.group(1)), parse_rational(em.group(2))))
            except ScalarParseError as exc:
                raise FileFormatError(str(exc), n, "products") from None
            pos = em.end()
        if body[pos:].strip(" ,"):
            raise FileFormatError(f"bad product entry {line!r}", n, "products")
        if (i, j) in products:
            raise FileFormatError(f"duplicate product {i} {j}", n, "products")
        if max([i, j] + [k for k, _ in entries]) >= len(labels):
            raise FileFormatError("basis index out of range", n, "products")
        products[(i, j)] = entries
    return GradedAlgebra(G, labels, degrees, products, unit)


def load_algebra(path) -> GradedAlgebra:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read())


def save_algebra(A: GradedAlgebra, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_algebra(A))


def format_cocycle(sigma: Cocycle) -> str:
    lines = [
        f"group: {format_group(sigma.group)}",
        f"H: {', '.join(format_element(h) for h in sigma.elements)}",
        "sigma:",
    ]
    for a in sigma.elements:
        for b in sigma.elements:
            lines.append(f"({format_element(a)}, {format_element(b)}) -> {format_rational(sigma(a, b))}")
    return "\n".join(lines) + "\n"


def parse_cocycle(text: str) -> Cocycle:
    fields, lines = _fields(text)
    for key in ("group", "H"):
        if key not in fields:
            raise FileFormatError("missing field", 0, key)
    n, value = fields["group"]
    try:
        G = parse_group(value)
        H = [G.parse_element(t) for t in split_elements(fields["H"][1])]
    except GroupError as exc:
        raise FileFormatError(str(exc), n) from None
    table = {}
    for n, line in lines:
        left, _, right = line.partition("->")
        left = left.strip()
        if not (left.startswith("(") and left.endswith(")")):
            raise FileFormatError(f"bad sigma entry {line!r}", n, "sigma")
        parts = split_elements(left[1:-1])
        if len(parts) != 2:
            raise FileFormatError(f"bad sigma entry {line!r}", n, "sigma")
        try:
            a, b = (G.parse_element(t) for t in parts)
            table[(a, b)] = parse_rational(right)
        except (GroupError, ScalarParseError) as exc:
            raise FileFormatError(str(exc), n, "sigma") from None
    return make_cocycle(G, H, table)


def load_cocycle(path) -> Cocycle:
    with open(path, encoding="utf-8") as fh:
        return parse_cocycle(fh.read())
