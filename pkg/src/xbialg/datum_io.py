"""Datum files: a JSON text format with exact scalar strings.

A file holds the field, the dimensions of ``B1`` and ``B2``, the braiding
and the fourteen structure matrices.  Matrices are lists of rows (codomain
index) of scalar strings such as ``"1"``, ``"-2"`` or ``"1/3"``.
:func:`dumps` writes a canonical layout, so ``dumps(loads(text)) == text``
for every file written by :func:`dumps`.
"""
from __future__ import annotations

import json
from pathlib import Path

from .diagram_engine import GENERATORS, SIGNATURES, Braiding, Context
from .exact_linear import FieldSpec, Mor, Word, identity, matrix_to_strings, solve_columns
from .hopf_datum import HopfDatum

PSI_KEYS = {"psi_11": ("B1", "B1"), "psi_12": ("B1", "B2"),
            "psi_21": ("B2", "B1"), "psi_22": ("B2", "B2")}
# order of the matrices in a written file
FILE_ORDER = ("m1", "eta1", "d1", "eps1", "m2", "eta2", "d2", "eps2",
              "mul", "mur", "nul", "nur", "sigma", "rho")


class DatumFormatError(ValueError):
    """A datum file that cannot be read; the message names the offending field."""


# ---------------------------------------------------------------- writing


def _matrix_lines(rows, indent):
    pad = " " * indent
    if not rows:
        return ["[]"]
    body = [pad + "  [" + ", ".join(json.dumps(s) for s in r) + "]" for r in rows]
    return ["["] + [b + ("," if k < len(body) - 1 else "") for k, b in enumerate(body)] + [pad + "]"]


def _block(name, rows, indent, last):
    lines = _matrix_lines(rows, indent)
    lines[0] = " " * indent + json.dumps(name) + ": " + lines[0]
    if not last:
        lines[-1] += ","
    return lines


def to_dict(d: HopfDatum) -> dict:
    """Plain JSON-ready structure of ``d``."""
    ctx = d.ctx
    br = ctx.braiding
    out = {"field": str(ctx.field), "b1_dim": ctx.dims["B1"], "b2_dim": ctx.dims["B2"],
           "braiding": br.kind}
    if br.kind == "sign":
        out["b1_degrees"] = [br.degree("B1", i) for i in range(ctx.dims["B1"])]
        out["b2_degrees"] = [br.degree("B2", i) for i in range(ctx.dims["B2"])]
    if br.kind == "explicit":
        out["braiding_generators"] = {k: matrix_to_strings(br.generators[v])
                                      for k, v in PSI_KEYS.items()}
    if d.name:
        out["name"] = d.name
    out["morphisms"] = {g: matrix_to_strings(d.morphism(g)) for g in FILE_ORDER}
    return out


def dumps(d: HopfDatum) -> str:
    """Canonical text of ``d``: one matrix row per line, keys in fixed order."""
    obj = to_dict(d)
    lines = ["{"]
    for key in ("field", "b1_dim", "b2_dim", "braiding", "b1_degrees", "b2_degrees", "name"):
        if key in obj:
            lines.append(f"  {json.dumps(key)}: {json.dumps(obj[key])},")
    if "braiding_generators" in obj:
        lines.append('  "braiding_generators": {')
        gens = obj["braiding_generators"]
        for k, key in enumerate(PSI_KEYS):
            lines.extend(_block(key, gens[key], 4, k == len(PSI_KEYS) - 1))
        lines.append("  },")
    lines.append('  "morphisms": {')
    for k, g in enumerate(FILE_ORDER):
        lines.extend(_block(g, obj["morphisms"][g], 4, k == len(FILE_ORDER) - 1))
    lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def save(d: HopfDatum, path) -> None:
    Path(path).write_text(dumps(d), encoding="utf-8")


# ---------------------------------------------------------------- reading


def _require(obj, key, kind, where="file"):
    if key not in obj:
        raise DatumFormatError(f"{where}: missing field {key!r}")
    v = obj[key]
    if kind is int and (isinstance(v, bool) or not isinstance(v, int) or v < 1):
        raise DatumFormatError(f"{where}: field {key!r} must be a positive integer")
    if kind is not int and not isinstance(v, kind):
        raise DatumFormatError(f"{where}: field {key!r} has the wrong type")
    return v


def _matrix(name, rows, dom: Word, cod: Word, field: FieldSpec) -> Mor:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise DatumFormatError(f"morphism {name!r}: expected a list of rows")
    shape = (len(rows), len(rows[0]) if rows else 0)
    if len(rows) != cod.dim or any(len(r) != dom.dim for r in rows):
        raise DatumFormatError(
            f"morphism {name!r}: dimension mismatch, expected {cod.dim}x{dom.dim} "
            f"for {dom} -> {cod}, got {shape[0]}x{shape[1]}")
    out = []
    for i, r in enumerate(rows):
        row = []
        for j, s in enumerate(r):
            if not isinstance(s, str):
                raise DatumFormatError(f"morphism {name!r}: entry ({i},{j}) must be a string")
            try:
                row.append(field.parse_scalar(s))
            except (ValueError, ZeroDivisionError) as exc:
                raise DatumFormatError(f"morphism {name!r}: entry ({i},{j}): {exc}") from None
        out.append(row)
    return Mor.from_rows(out, dom, cod, field)


def _degrees(obj, key, n):
    v = _require(obj, key, list)
    if len(v) != n or any(x not in (0, 1) for x in v):
        raise DatumFormatError(f"field {key!r} must list {n} degrees in {{0, 1}}")
    return v


def from_dict(obj) -> HopfDatum:
    """Build a :class:`HopfDatum` from the parsed JSON structure."""
    if not isinstance(obj, dict):
        raise DatumFormatError("file: top level must be an object")
    try:
        field = FieldSpec.parse(_require(obj, "field", str))
    except ValueError as exc:
        raise DatumFormatError(f"field 'field': {exc}") from None
    n1, n2 = _require(obj, "b1_dim", int), _require(obj, "b2_dim", int)
    dims = {"B1": n1, "B2": n2}
    kind = _require(obj, "braiding", str)
    if kind == "flip":
        br = Braiding("flip")
    elif kind == "sign":
        br = Braiding("sign", {"B1": _degrees(obj, "b1_degrees", n1),
                               "B2": _degrees(obj, "b2_degrees", n2)})
    elif kind == "explicit":
        gens_obj = _require(obj, "braiding_generators", dict)
        gens, invs = {}, {}
        for key, (a, b) in PSI_KEYS.items():
            if key not in gens_obj:
                raise DatumFormatError(f"braiding_generators: missing {key!r}")
            x, y = Word((a,), (dims[a],)), Word((b,), (dims[b],))
            g = _matrix(key, gens_obj[key], x + y, y + x, field)
            try:
                inv = solve_columns(g, identity(y + x, field))
            except ValueError:
                raise DatumFormatError(f"braiding generator {key!r} is not invertible") from None
            gens[(a, b)], invs[(a, b)] = g, inv.retype(y + x, x + y)
        br = Braiding("explicit", generators=gens, inverses=invs)
    else:
        raise DatumFormatError(f"field 'braiding': unknown kind {kind!r}")
    ctx = Context(field, dims, br)
    mors = _require(obj, "morphisms", dict)
    unknown = sorted(set(mors) - set(GENERATORS))
    if unknown:
        raise DatumFormatError(f"morphisms: unknown names {unknown}")
    m = {}
    for g in FILE_ORDER:
        if g not in mors:
            raise DatumFormatError(f"morphisms: missing {g!r}")
        dom, cod = SIGNATURES[g]
        m[g] = _matrix(g, mors[g], ctx.word(dom), ctx.word(cod), field)
    name = obj.get("name")
    return HopfDatum(ctx, m, name=name if isinstance(name, str) else None)


def loads(text: str) -> HopfDatum:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatumFormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return from_dict(obj)


def load(path) -> HopfDatum:
    return loads(Path(path).read_text(encoding="utf-8"))
