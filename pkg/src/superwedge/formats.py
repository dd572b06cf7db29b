"""Canonical JSON exchange formats for algebras and computation reports.

Algebra files carry exact rational coefficient strings (never floats; the
parser rejects decimal points) and only need one orientation of each
bracket; the mirror is implied by the super-skew rule, and listing both
orientations is an error unless they already agree with it.  Export is
canonical -- fixed key order, lowest-terms coefficients, brackets sorted
by basis position -- so export, parse, export round-trips byte-identically
and file hashes are stable.
"""

from __future__ import annotations

import hashlib
import json

from . import hopf as _hopf
from . import wedge as _wedge
from .scalars import ScalarParseError, format_scalar, parse_scalar
from .superlie import (
    EVEN,
    ODD,
    BracketTableError,
    GradedSubspace,
    SuperAlgebra,
    algebra_from_brackets,
)

TOOL_VERSION = "superwedge 0.1.0"


class FormatError(ValueError):
    """Malformed input file; carries optional line/column for syntax errors."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column

    def location_text(self) -> str:
        if self.line is None:
            return ""
        return f" (line {self.line}, column {self.column})"


def algebra_to_json(a: SuperAlgebra) -> dict:
    """Canonical AlgebraFile dictionary for a superalgebra."""
    m = a.even_dim
    brackets = []
    for i in range(a.dim):
        for j in range(i, a.dim):
            vec = a.structure[i][j]
            if not any(vec):
                continue
            value = [
                [format_scalar(c), a.basis_names[k]]
                for k, c in enumerate(vec)
                if c
            ]
            brackets.append(
                {
                    "left": a.basis_names[i],
                    "right": a.basis_names[j],
                    "value": value,
                }
            )
    return {
        "name": a.name,
        "even_basis": list(a.basis_names[:m]),
        "odd_basis": list(a.basis_names[m:]),
        "brackets": brackets,
    }


def dumps_canonical(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def algebra_to_text(a: SuperAlgebra) -> str:
    return dumps_canonical(algebra_to_json(a))


def algebra_sha256(a: SuperAlgebra) -> str:
    return hashlib.sha256(algebra_to_text(a).encode("utf-8")).hexdigest()


def parse_algebra_json(data: dict) -> SuperAlgebra:
    """Build a SuperAlgebra from AlgebraFile data (structural checks only)."""
    if not isinstance(data, dict):
        raise FormatError("algebra file must be a JSON object")
    for key in ("name", "even_basis", "odd_basis", "brackets"):
        if key not in data:
            raise FormatError(f"missing required key {key!r}")
    name = data["name"]
    even = list(data["even_basis"])
    odd = list(data["odd_basis"])
    if not all(isinstance(s, str) for s in even + odd):
        raise FormatError("basis symbols must be strings")
    index = {}
    for s in even + odd:
        if s in index:
            raise FormatError(f"duplicate basis symbol {s!r}")
        index[s] = True
    brackets = {}
    for entry in data["brackets"]:
        if not isinstance(entry, dict) or not {"left", "right", "value"} <= set(entry):
            raise FormatError("each bracket needs left, right and value")
        left, right = entry["left"], entry["right"]
        for s in (left, right):
            if s not in index:
                raise FormatError(f"bracket names undeclared symbol {s!r}")
        value = {}
        for pair in entry["value"]:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise FormatError("bracket values are [coefficient, symbol] pairs")
            coeff_text, target = pair
            if target not in index:
                raise FormatError(f"bracket value names undeclared symbol {target!r}")
            try:
                coeff = parse_scalar(coeff_text)
            except ScalarParseError as exc:
                raise FormatError(str(exc))
            if target in value:
                raise FormatError(
                    f"duplicate target {target!r} in bracket [{left},{right}]"
                )
            value[target] = coeff
        if (left, right) in brackets:
            raise FormatError(f"bracket [{left},{right}] listed twice")
        brackets[(left, right)] = value
    try:
        return algebra_from_brackets(name, even, odd, brackets)
    except BracketTableError as exc:
        raise FormatError(str(exc))


def parse_algebra_text(text: str) -> SuperAlgebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno)
    return parse_algebra_json(data)


def load_algebra(path: str) -> SuperAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra_text(fh.read())


_PARITY_CODE = {EVEN: "even", ODD: "odd", None: "mixed"}
_PARITY_DECODE = {"even": EVEN, "odd": ODD, "mixed": None}


def _witness_to_json(w: _wedge.M0Witness) -> dict:
    out = {
        "scheme": w.scheme,
        "parities": [_PARITY_CODE[p] for p in w.parities],
        "vectors": [[format_scalar(c) for c in v] for v in w.vectors],
    }
    if w.sign is not None:
        out["sign"] = format_scalar(w.sign)
    out["image"] = [format_scalar(c) for c in w.image]
    return out


def _witness_from_json(d: dict) -> _wedge.M0Witness:
    return _wedge.M0Witness(
        scheme=d["scheme"],
        vectors=tuple(tuple(parse_scalar(c) for c in v) for v in d["vectors"]),
        parities=tuple(_PARITY_DECODE[p] for p in d["parities"]),
        sign=parse_scalar(d["sign"]) if "sign" in d else None,
        image=tuple(parse_scalar(c) for c in d["image"]),
    )


def report_to_json(report: _wedge.B0Report, algebra: SuperAlgebra) -> dict:
    return {
        "algebra": report.algebra,
        "algebra_sha256": algebra_sha256(algebra),
        "tool_version": TOOL_VERSION,
        "route": report.route,
        "dims": {
            "derived": report.dims["derived"],
            "exterior_square": report.dims["exterior_square"],
            "schur": report.dims["schur"],
            "m0_found": report.dims["m0_found"],
            "b0_bound": report.dims["b0_bound"],
        },
        "status": report.status,
        "status_text": report.status_text(),
        "seed": report.seed,
        "rounds_stable": report.rounds_stable,
        "witnesses": [_witness_to_json(w) for w in report.witnesses],
    }


def report_from_json(data: dict) -> _wedge.B0Report:
    return _wedge.B0Report(
        algebra=data["algebra"],
        route=data["route"],
        dims={k: int(v) for k, v in data["dims"].items()},
        status=data["status"],
        witnesses=tuple(_witness_from_json(w) for w in data["witnesses"]),
        seed=int(data["seed"]),
        rounds_stable=int(data["rounds_stable"]),
    )


def verify_report(algebra: SuperAlgebra, data: dict) -> bool:
    """Recheck a loaded report against the algebra it names.

    Confirms the algebra hash and re-derives every witness along the
    report's route; wedge-route witnesses are verified inside a freshly
    rebuilt wedge quotient.
    """
    if data.get("algebra_sha256") != algebra_sha256(algebra):
        return False
    report = report_from_json(data)
    if report.route == "wedge":
        full = GradedSubspace.full(algebra)
        W = _wedge.exterior_product(algebra, full, full)
        return _wedge.verify_witnesses(algebra, W, report.witnesses)
    if report.route == "hopf":
        return _hopf.verify_hopf_witnesses(algebra, report.witnesses)
    return False
