"""JSON bundles of exact structure constants.

One file, one JSON object.  The ground field is declared once under
``field`` ("q" or "fp:<p>") and every scalar in the bundle is a string in
that field's notation: "3/4" or "-2" over the rationals, a decimal residue
over a prime field.  Coefficients not listed are zero.

Components, all optional except ``field``:

* ``hopf``: keys ``dim``, ``labels`` (optional), ``mult``, ``unit``,
  ``comult``, ``counit``, ``antipode``.  ``mult`` is a list of quadruples
  ``[i, j, k, c]``: the product of basis elements i and j has coefficient c
  on basis element k.  ``comult`` quadruples read ``[i, j, k, c]``: the
  coproduct of i has coefficient c on j (x) k.  ``antipode`` is a dense
  row-major matrix whose row i is the image of basis element i.
* ``algebra``: keys ``dim``, ``labels`` (optional), ``mult``, ``unit``
  (optional; leave it out for a non-unital carrier).
* ``partial_action`` / ``global_action``: quadruples ``[i, j, k, c]``: Hopf
  basis element i sends carrier basis element j to c times carrier basis
  element k.  Both need ``hopf`` and ``algebra`` present.
* ``partial_coaction`` / ``global_coaction``: quadruples ``[i, j, k, c]``:
  carrier basis element i maps to c times (carrier j) (x) (Hopf k).
* ``one_a``: a distinguished idempotent of the carrier, used as the corner
  by the duality commands.
* ``meta``: free-form JSON object, carried through untouched.

Serialization is canonical: sorted keys, entries in index order, zero
coefficients dropped, so structurally equal bundles produce byte-identical
files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .actions import (
    GlobalActionData,
    GlobalCoactionData,
    PartialActionData,
    PartialCoactionData,
)
from .algebra import AlgebraData, CoalgebraData, HopfAlgebraData
from .errors import ParseError, ShapeError, SingularMatrixError
from .fields import field_from_spec
from .linalg import Matrix

_BUNDLE_KEYS = (
    "field",
    "hopf",
    "algebra",
    "partial_action",
    "global_action",
    "partial_coaction",
    "global_coaction",
    "one_a",
    "meta",
)
_ACTION_KEYS = ("partial_action", "global_action")
_COACTION_KEYS = ("partial_coaction", "global_coaction")
_HOPF_KEYS = {"dim", "labels", "mult", "unit", "comult", "counit", "antipode"}
_ALGEBRA_KEYS = {"dim", "labels", "mult", "unit"}


@dataclass
class Bundle:
    """The deserialized components of one bundle file."""

    field: object
    hopf: HopfAlgebraData = None
    algebra: AlgebraData = None
    partial_action: PartialActionData = None
    global_action: GlobalActionData = None
    partial_coaction: PartialCoactionData = None
    global_coaction: GlobalCoactionData = None
    one_a: list = None
    meta: dict = dc_field(default_factory=dict)

    def need(self, key):
        value = getattr(self, key)
        if value is None:
            raise ShapeError(f"bundle is missing {key!r}")
        return value

    def as_dict(self):
        out = {"field": self.field.spec_string()}
        if self.hopf is not None:
            out["hopf"] = _hopf_dict(self.hopf)
        if self.algebra is not None:
            out["algebra"] = _algebra_dict(self.algebra)
        for key in _ACTION_KEYS:
            data = getattr(self, key)
            if data is not None:
                out[key] = _action_entries(data)
        for key in _COACTION_KEYS:
            data = getattr(self, key)
            if data is not None:
                out[key] = _coaction_entries(data)
        if self.one_a is not None:
            out["one_a"] = [self.field.fmt(c) for c in self.one_a]
        if self.meta:
            out["meta"] = self.meta
        return out

    def dumps(self):
        return json.dumps(self.as_dict(), sort_keys=True, indent=2) + "\n"

    def save(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.dumps())


def bundle_for(data, one_a=None, meta=None):
    """Wrap one structure in a bundle under its natural key."""
    if isinstance(data, HopfAlgebraData):
        return Bundle(data.field, hopf=data, meta=meta or {})
    key = {
        PartialActionData: "partial_action",
        GlobalActionData: "global_action",
        PartialCoactionData: "partial_coaction",
        GlobalCoactionData: "global_coaction",
    }.get(type(data))
    if key is not None:
        bundle = Bundle(
            data.algebra.field,
            hopf=data.hopf,
            algebra=data.algebra,
            one_a=one_a,
            meta=meta or {},
        )
        setattr(bundle, key, data)
        return bundle
    if isinstance(data, AlgebraData):
        return Bundle(data.field, algebra=data, one_a=one_a, meta=meta or {})
    raise ShapeError(f"no bundle form for {type(data).__name__}")


def load_bundle(path):
    """Read and validate one bundle file."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return loads_bundle(text)


def loads_bundle(text):
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}")
    if not isinstance(raw, dict):
        raise ShapeError("a bundle must be a JSON object")
    unknown = sorted(set(raw) - set(_BUNDLE_KEYS))
    if unknown:
        raise ShapeError(f"unknown bundle keys {unknown}")
    if "field" not in raw:
        raise ShapeError("bundle is missing 'field'")
    field = field_from_spec(raw["field"])
    hopf = _parse_hopf(field, raw["hopf"]) if "hopf" in raw else None
    algebra = _parse_algebra(field, raw["algebra"]) if "algebra" in raw else None
    bundle = Bundle(field, hopf=hopf, algebra=algebra)
    for key, cls in zip(_ACTION_KEYS, (PartialActionData, GlobalActionData)):
        if key in raw:
            _need_both(hopf, algebra, key)
            quads = _quadruples(
                field, raw[key], (hopf.dim, algebra.dim, algebra.dim), key
            )
            data = cls(hopf, algebra, _action_dict(field, quads))
            if key == "partial_action" and algebra.unit is None:
                raise ShapeError("partial_action needs a unital carrier algebra")
            setattr(bundle, key, data)
    for key, cls in zip(_COACTION_KEYS, (PartialCoactionData, GlobalCoactionData)):
        if key in raw:
            _need_both(hopf, algebra, key)
            if algebra.unit is None:
                raise ShapeError(f"{key} needs a unital carrier algebra")
            quads = _quadruples(
                field, raw[key], (algebra.dim, algebra.dim, hopf.dim), key
            )
            setattr(bundle, key, cls(hopf, algebra, _coaction_dict(field, quads)))
    if "one_a" in raw:
        if algebra is None:
            raise ShapeError("bundle has 'one_a' but no algebra")
        bundle.one_a = _vector(field, raw["one_a"], algebra.dim, "one_a")
    if "meta" in raw:
        if not isinstance(raw["meta"], dict):
            raise ShapeError("meta must be a JSON object")
        bundle.meta = raw["meta"]
    return bundle


def _need_both(hopf, algebra, key):
    if hopf is None:
        raise ShapeError(f"bundle has {key!r} but no hopf")
    if algebra is None:
        raise ShapeError(f"bundle has {key!r} but no algebra")


def _index(value, bound, where):
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < bound:
        raise ShapeError(f"{where}: index {value!r} out of range [0, {bound})")
    return value


def _vector(field, raw, dim, where):
    if not isinstance(raw, list) or len(raw) != dim:
        raise ShapeError(f"{where}: expected a vector of length {dim}")
    return [field.parse(c) for c in raw]


def _quadruples(field, raw, bounds, where):
    if not isinstance(raw, list):
        raise ShapeError(f"{where}: expected a list of quadruples")
    out = []
    for quad in raw:
        if not isinstance(quad, list) or len(quad) != 4:
            raise ShapeError(f"{where}: entries must be [i, j, k, coeff] quadruples")
        out.append(
            (
                _index(quad[0], bounds[0], where),
                _index(quad[1], bounds[1], where),
                _index(quad[2], bounds[2], where),
                field.parse(quad[3]),
            )
        )
    return out


def _action_dict(field, entries):
    acc = {}
    for i, j, k, c in entries:
        cell = acc.setdefault((i, j), {})
        cell[k] = cell.get(k, field.zero) + c
    out = {}
    for key, cell in acc.items():
        ent = [(k, v) for k, v in sorted(cell.items()) if v]
        if ent:
            out[key] = ent
    return out


def _coaction_dict(field, entries):
    acc = {}
    for i, j, k, c in entries:
        cell = acc.setdefault(i, {})
        cell[(j, k)] = cell.get((j, k), field.zero) + c
    out = {}
    for i, cell in acc.items():
        ent = [(j, k, v) for (j, k), v in sorted(cell.items()) if v]
        if ent:
            out[i] = ent
    return out


def _labels(raw, dim, default, where):
    labels = raw.get("labels")
    if labels is None:
        return [f"{default}{i}" for i in range(dim)]
    if (
        not isinstance(labels, list)
        or len(labels) != dim
        or not all(isinstance(x, str) for x in labels)
    ):
        raise ShapeError(f"{where}.labels: expected one string per basis element")
    return list(labels)


def _dim_of(raw, where):
    dim = raw.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ShapeError(f"{where}.dim: expected a positive integer")
    return dim


def _parse_hopf(field, raw):
    if not isinstance(raw, dict):
        raise ShapeError("hopf: expected a JSON object")
    unknown = sorted(set(raw) - _HOPF_KEYS)
    if unknown:
        raise ShapeError(f"hopf: unknown keys {unknown}")
    for key in ("dim", "mult", "unit", "comult", "counit", "antipode"):
        if key not in raw:
            raise ShapeError(f"hopf: missing key {key!r}")
    dim = _dim_of(raw, "hopf")
    labels = _labels(raw, dim, "h", "hopf")
    alg = AlgebraData.from_entries(
        field,
        labels,
        _quadruples(field, raw["mult"], (dim, dim, dim), "hopf.mult"),
        unit=_vector(field, raw["unit"], dim, "hopf.unit"),
    )
    coa = CoalgebraData.from_entries(
        field,
        dim,
        _quadruples(field, raw["comult"], (dim, dim, dim), "hopf.comult"),
        _vector(field, raw["counit"], dim, "hopf.counit"),
    )
    rows = raw["antipode"]
    if not isinstance(rows, list) or len(rows) != dim:
        raise ShapeError("hopf.antipode: expected one row per basis element")
    antipode = Matrix(field, [_vector(field, r, dim, "hopf.antipode") for r in rows])
    try:
        return HopfAlgebraData(alg, coa, antipode)
    except SingularMatrixError:
        raise ShapeError("hopf.antipode: matrix is not invertible")


def _parse_algebra(field, raw):
    if not isinstance(raw, dict):
        raise ShapeError("algebra: expected a JSON object")
    unknown = sorted(set(raw) - _ALGEBRA_KEYS)
    if unknown:
        raise ShapeError(f"algebra: unknown keys {unknown}")
    for key in ("dim", "mult"):
        if key not in raw:
            raise ShapeError(f"algebra: missing key {key!r}")
    dim = _dim_of(raw, "algebra")
    labels = _labels(raw, dim, "a", "algebra")
    unit = None
    if raw.get("unit") is not None:
        unit = _vector(field, raw["unit"], dim, "algebra.unit")
    return AlgebraData.from_entries(
        field,
        labels,
        _quadruples(field, raw["mult"], (dim, dim, dim), "algebra.mult"),
        unit=unit,
    )


def _hopf_dict(h):
    fmt = h.field.fmt
    return {
        "dim": h.dim,
        "labels": list(h.labels),
        "mult": [[i, j, k, fmt(c)] for i, j, k, c in h.algebra.entries()],
        "unit": [fmt(c) for c in h.unit],
        "comult": [[i, j, k, fmt(c)] for i, j, k, c in h.coalgebra.entries()],
        "counit": [fmt(c) for c in h.counit],
        "antipode": [[fmt(c) for c in row] for row in h.antipode.rows],
    }


def _algebra_dict(a):
    fmt = a.field.fmt
    out = {
        "dim": a.dim,
        "labels": list(a.labels),
        "mult": [[i, j, k, fmt(c)] for i, j, k, c in a.entries()],
    }
    if a.unit is not None:
        out["unit"] = [fmt(c) for c in a.unit]
    return out


def _action_entries(data):
    fmt = data.algebra.field.fmt
    return [
        [i, j, k, fmt(c)]
        for (i, j) in sorted(data.action)
        for k, c in data.action[(i, j)]
    ]


def _coaction_entries(data):
    fmt = data.algebra.field.fmt
    return [
        [i, j, k, fmt(c)]
        for i in sorted(data.coaction)
        for j, k, c in data.coaction[i]
    ]
