"""JSON and CSV wire formats.

Rationals travel as strings (``"p/q"`` or ``"p"``). Complex rationals, which
only arise with imaginary shifts, travel as ``{"re": "...", "im": "..."}``.
"""
from __future__ import annotations

import csv
import io
import json

from .cfrac import ContinuedFraction, FractionKind
from .darboux import (
    DarbouxResult,
    ImaginaryShift,
    LUFactors,
    NoShift,
    RealShift,
)
from .errors import InvalidShift, InvalidSpec, UnsupportedSpec
from .exact import ComplexRational, Polynomial, format_rational, parse_rational
from .jacobi import MonicJacobi
from .linalg import Matrix
from .moments import Discrete, MomentSequence, NamedLaguerre, RawMoments


def scalar_to_json(x):
    if isinstance(x, ComplexRational):
        return {"re": format_rational(x.re), "im": format_rational(x.im)}
    return format_rational(x)


def scalar_from_json(obj):
    if isinstance(obj, dict):
        return ComplexRational(parse_rational(obj["re"]), parse_rational(obj["im"]))
    return parse_rational(obj)


def scalars_to_json(xs):
    return [scalar_to_json(x) for x in xs]


def scalars_from_json(objs):
    return tuple(scalar_from_json(o) for o in objs)


def poly_to_json(p: Polynomial):
    return scalars_to_json(p.coeffs)


def poly_from_json(obj) -> Polynomial:
    return Polynomial(scalars_from_json(obj))


def moments_to_json(s: MomentSequence):
    return scalars_to_json(s.values)


def moments_from_json(obj) -> MomentSequence:
    return MomentSequence(scalars_from_json(obj))


def matrix_to_json(m: Matrix):
    return [scalars_to_json(r) for r in m.rows]


def matrix_from_json(obj) -> Matrix:
    return Matrix([scalars_from_json(r) for r in obj])


def jacobi_to_json(J: MonicJacobi):
    return {"b": scalars_to_json(J.b), "c": scalars_to_json(J.c)}


def jacobi_from_json(obj) -> MonicJacobi:
    # an explicit "diag" entry overrides "b"
    diag = obj.get("diag")
    b = scalars_from_json(diag if diag is not None else obj["b"])
    return MonicJacobi(b, scalars_from_json(obj.get("c", [])))


def shift_to_json(shift):
    if isinstance(shift, NoShift):
        return None
    return str(shift)


def parse_shift(text):
    """``None``/``""`` -> no shift; ``"p/q"`` -> real; ``"i:p/q"`` (or ``"ip/q"``) -> imaginary."""
    if text is None or text == "" or text == "none":
        return NoShift()
    text = str(text).strip()
    if text.startswith("i"):
        body = text[1:].lstrip(":")
        return ImaginaryShift(parse_rational(body))
    value = parse_rational(text)
    if value == 0:
        return NoShift()
    return RealShift(value)


def factors_to_json(f: LUFactors):
    return {"u": scalars_to_json(f.u), "l": scalars_to_json(f.l), "shift": shift_to_json(f.shift)}


def factors_from_json(obj) -> LUFactors:
    return LUFactors(scalars_from_json(obj["u"]), scalars_from_json(obj["l"]),
                     parse_shift(obj.get("shift")))


def darboux_to_json(r: DarbouxResult):
    out = {
        "matrix": jacobi_to_json(r.matrix),
        "polys": [poly_to_json(p) for p in r.polys],
        "provenance": r.provenance,
    }
    if r.provenance.startswith("chihara"):
        out["matrix"]["diag"] = scalars_to_json(r.matrix.b)
    return out


def darboux_from_json(obj) -> DarbouxResult:
    return DarbouxResult(jacobi_from_json(obj["matrix"]),
                         tuple(poly_from_json(p) for p in obj["polys"]),
                         obj["provenance"])


def cfrac_to_json(cf: ContinuedFraction):
    out = {"kind": cf.kind.value}
    if cf.kind is FractionKind.S:
        out["d"] = scalars_to_json(cf.d)
    else:
        out["b"] = scalars_to_json(cf.b)
        out["c"] = scalars_to_json(cf.c)
    out["s0"] = scalar_to_json(cf.mass)
    return out


def cfrac_from_json(obj) -> ContinuedFraction:
    kind = FractionKind(obj["kind"])
    mass = scalar_from_json(obj.get("s0", "1"))
    if kind is FractionKind.S:
        return ContinuedFraction(kind, d=scalars_from_json(obj["d"]), mass=mass)
    return ContinuedFraction(kind, scalars_from_json(obj["b"]), scalars_from_json(obj["c"]),
                             mass=mass)


def spec_from_json(obj):
    """Build a measure spec from its JSON object (or JSON text)."""
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise InvalidSpec(f"spec is not valid JSON: {exc}") from None
    if not isinstance(obj, dict) or "type" not in obj:
        raise InvalidSpec("spec must be an object with a 'type' field")
    kind = obj["type"]
    try:
        if kind == "discrete":
            return Discrete(tuple((parse_rational(t), parse_rational(w)) for t, w in obj["atoms"]))
        if kind == "laguerre":
            return NamedLaguerre(parse_rational(obj["alpha"]))
        if kind == "moments":
            return RawMoments(moments_from_json(obj["values"]))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, (InvalidSpec, InvalidShift)):
            raise
        raise InvalidSpec(f"malformed {kind} spec: {exc}") from None
    raise UnsupportedSpec(f"unknown measure type {kind!r}")


def spec_to_json(spec):
    if isinstance(spec, Discrete):
        return {"type": "discrete",
                "atoms": [[format_rational(t), format_rational(w)] for t, w in spec.atoms]}
    if isinstance(spec, NamedLaguerre):
        return {"type": "laguerre", "alpha": format_rational(spec.alpha)}
    if isinstance(spec, RawMoments):
        return {"type": "moments", "values": moments_to_json(spec.values)}
    raise UnsupportedSpec(type(spec).__name__)


def dumps(payload) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


# -- CSV -------------------------------------------------------------------------
#
# A payload is flattened into rows (path, type, value). Paths join dict keys
# and list indices with "."; empty containers get their own row so the
# reconstruction is lossless.

CSV_HEADER = ("path", "type", "value")


def _flatten(obj, path, rows):
    if isinstance(obj, dict):
        if not obj:
            rows.append((path, "dict", ""))
        for k, v in obj.items():
            if "." in str(k):
                raise ValueError(f"key {k!r} cannot be flattened")
            _flatten(v, f"{path}.{k}" if path else str(k), rows)
    elif isinstance(obj, list):
        if not obj:
            rows.append((path, "list", ""))
        for i, v in enumerate(obj):
            _flatten(v, f"{path}.{i}" if path else str(i), rows)
    elif isinstance(obj, str):
        rows.append((path, "str", obj))
    elif obj is None:
        rows.append((path, "null", ""))
    elif isinstance(obj, bool):
        rows.append((path, "bool", "true" if obj else "false"))
    elif isinstance(obj, int):
        rows.append((path, "int", str(obj)))
    else:
        raise TypeError(f"cannot flatten {type(obj).__name__}")


def to_csv(payload) -> str:
    rows = []
    _flatten(payload, "", rows)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(CSV_HEADER)
    w.writerows(rows)
    return buf.getvalue()


def _leaf(kind, value):
    return {
        "str": lambda v: v,
        "int": int,
        "bool": lambda v: v == "true",
        "null": lambda v: None,
        "list": lambda v: [],
        "dict": lambda v: {},
    }[kind](value)


def _listify(node):
    if isinstance(node, dict):
        node = {k: _listify(v) for k, v in node.items()}
        if node and all(k.isdigit() for k in node):
            return [node[str(i)] for i in range(len(node))]
    return node


def from_csv(text: str):
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != CSV_HEADER:
        raise ValueError("unexpected CSV header")
    root = {}
    for path, kind, value in reader:
        parts = path.split(".") if path else []
        if not parts:
            return _leaf(kind, value)
        node = root
        for p in parts[:-1]:
            node = node.setdefault(p, {})
        node[parts[-1]] = _leaf(kind, value)
    return _listify(root)
