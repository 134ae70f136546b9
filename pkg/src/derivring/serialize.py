"""Canonical JSON for rings, values, matrices, witness families, and
campaign reports.

Emission sorts keys and omits whitespace, so equal objects serialize to
equal bytes; parsing rejects anything non-canonical (residues out of
range, trailing zero coefficients), which makes round-trips bit-exact.
"""

from __future__ import annotations

import json

from .errors import DomainError, ParseError
from .jordan import JordanWitnessFamily
from .matrices import Matrix
from .rings import PolyRing, RingElement, Zmod
from .twolocal import WitnessFamily

__all__ = [
    "dumps_canonical",
    "loads_strict",
    "ring_to_obj",
    "ring_from_obj",
    "value_to_obj",
    "value_from_obj",
    "matrix_to_obj",
    "matrix_from_obj",
    "matrix_to_json",
    "matrix_from_json",
    "family_to_obj",
    "family_from_obj",
    "jordan_family_to_obj",
    "jordan_family_from_obj",
]


def dumps_canonical(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def loads_strict(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc


def ring_to_obj(ring):
    if isinstance(ring, Zmod):
        return {"ring": "zmod", "m": ring.modulus}
    if isinstance(ring, PolyRing):
        return {"ring": "poly", "base": ring_to_obj(ring.base)}
    raise ParseError(f"unknown ring type {ring!r}")


def ring_from_obj(obj):
    if not isinstance(obj, dict):
        raise ParseError(f"ring descriptor must be an object, got {type(obj).__name__}")
    if "ring" not in obj:
        raise ParseError('missing "ring" key')
    kind = obj["ring"]
    if kind == "zmod":
        if "m" not in obj:
            raise ParseError('zmod descriptor is missing "m"')
        return Zmod(obj["m"])
    if kind == "poly":
        if "base" not in obj:
            raise ParseError('poly descriptor is missing "base"')
        base = ring_from_obj(obj["base"])
        if not isinstance(base, Zmod):
            raise ParseError("poly base must be a zmod descriptor")
        return PolyRing(base)
    raise ParseError(f"unknown ring kind {kind!r}")


def value_to_obj(elem):
    if isinstance(elem.ring, Zmod):
        return elem.payload
    return list(elem.payload)


def value_from_obj(ring, obj):
    if isinstance(ring, Zmod):
        if isinstance(obj, bool) or not isinstance(obj, int):
            raise ParseError(f"Z_{ring.modulus} values are integers, got {obj!r}")
        if not 0 <= obj < ring.modulus:
            raise ParseError(
                f"non-canonical residue {obj} for Z_{ring.modulus}: "
                f"must lie in [0, {ring.modulus})"
            )
        return ring.element(obj)
    if not isinstance(obj, list):
        raise ParseError(f"polynomial values are coefficient arrays, got {obj!r}")
    m = ring.base.modulus
    for c in obj:
        if isinstance(c, bool) or not isinstance(c, int):
            raise ParseError(f"polynomial coefficients are integers, got {c!r}")
        if not 0 <= c < m:
            raise ParseError(
                f"non-canonical coefficient {c}: must lie in [0, {m})"
            )
    if obj and obj[-1] == 0:
        raise ParseError("non-canonical polynomial: trailing zero coefficient")
    return ring.element(obj)


def _rows_obj(mat):
    n = mat.n
    return [
        [value_to_obj(mat.entries[i * n + j]) for j in range(n)] for i in range(n)
    ]


def _rows_from_obj(ring, n, rows, what="matrix"):
    if not isinstance(rows, list) or len(rows) != n:
        raise ParseError(f"{what} needs {n} rows")
    entries = []
    for row in rows:
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"{what} rows must each hold {n} values")
        entries.extend(value_from_obj(ring, v) for v in row)
    return Matrix(ring, n, tuple(entries))


def matrix_to_obj(mat):
    return {"n": mat.n, "ring": ring_to_obj(mat.ring), "rows": _rows_obj(mat)}


def matrix_from_obj(obj):
    if not isinstance(obj, dict):
        raise ParseError(f"matrix must be an object, got {type(obj).__name__}")
    for key in ("n", "ring", "rows"):
        if key not in obj:
            raise ParseError(f'missing "{key}" key')
    n = obj["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError(f'"n" must be a positive integer, got {n!r}')
    ring = ring_from_obj(obj["ring"])
    return _rows_from_obj(ring, n, obj["rows"])


def matrix_to_json(mat):
    return dumps_canonical(matrix_to_obj(mat))


def matrix_from_json(text):
    return matrix_from_obj(loads_strict(text))


def family_to_obj(family):
    witnesses = [
        {"i": i, "j": j, "rows": _rows_obj(family.offdiag[(i, j)])}
        for (i, j) in sorted(family.offdiag)
    ]
    return {
        "kind": "witness-family",
        "ring": ring_to_obj(family.ring),
        "n": family.n,
        "witnesses": witnesses,
        "c": _rows_obj(family.c),
    }


def family_from_obj(obj):
    if not isinstance(obj, dict):
        raise ParseError("witness family must be an object")
    for key in ("ring", "n", "witnesses", "c"):
        if key not in obj:
            raise ParseError(f'missing "{key}" key')
    ring = ring_from_obj(obj["ring"])
    n = obj["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise ParseError(f'"n" must be an integer >= 2, got {n!r}')
    offdiag = {}
    for rec in obj["witnesses"]:
        if not isinstance(rec, dict) or not {"i", "j", "rows"} <= set(rec):
            raise ParseError("each witness needs i, j and rows")
        key = (rec["i"], rec["j"])
        offdiag[key] = _rows_from_obj(ring, n, rec["rows"], what=f"witness a{key}")
    c = _rows_from_obj(ring, n, obj["c"], what="witness c")
    try:
        return WitnessFamily(ring, n, offdiag, c)
    except DomainError as exc:
        raise ParseError(str(exc)) from exc


def jordan_family_to_obj(family):
    diag = [
        {"i": i, "rows": _rows_obj(family.diag[i])} for i in sorted(family.diag)
    ]
    return {
        "kind": "jordan-witness-family",
        "ring": ring_to_obj(family.ring),
        "n": family.n,
        "diag": diag,
    }


def jordan_family_from_obj(obj):
    if not isinstance(obj, dict):
        raise ParseError("jordan witness family must be an object")
    for key in ("ring", "n", "diag"):
        if key not in obj:
            raise ParseError(f'missing "{key}" key')
    ring = ring_from_obj(obj["ring"])
    n = obj["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise ParseError(f'"n" must be an integer >= 2, got {n!r}')
    diag = {}
    for rec in obj["diag"]:
        if not isinstance(rec, dict) or not {"i", "rows"} <= set(rec):
            raise ParseError("each diagonal witness needs i and rows")
        diag[rec["i"]] = _rows_from_obj(ring, n, rec["rows"], what=f"witness d({rec['i']})")
    try:
        return JordanWitnessFamily(ring, n, diag)
    except DomainError as exc:
        raise ParseError(str(exc)) from exc


def payload_to_obj(value):
    """Serialize a failure payload: a matrix, a ring value, or a string."""
    if isinstance(value, Matrix):
        return matrix_to_obj(value)
    if isinstance(value, RingElement):
        return value_to_obj(value)
    return str(value)
