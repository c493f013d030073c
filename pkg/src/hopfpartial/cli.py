"""Command line front end over the bundle format.

Subcommands:

* ``verify <bundle>``: check every axiom of every component in the bundle.
* ``globalize --mode action|coaction <bundle>``: grow the enveloping global
  structure of the bundle's partial (co)action and certify it.
* ``smash --partial|--global <bundle>``: the smash-style product of the
  bundle's action; the partial variant reports its unital corner.
* ``duality bm <bundle>``: identify the double smash of the bundle's global
  action with carrier (x) End(H), cut the corner at ``one_a``, and realize
  the corner as module endomorphisms.
* ``duality cm <bundle>``: the same pipeline pushed to the matrix algebra
  form; the Hopf algebra must be a group algebra.
* ``convert <bundle>``: swap the bundle's (co)action tensor for the dual
  counterpart and check the conversion is invertible.
* ``examples list`` and ``examples run --id <id>``: the built-in worked
  examples.  When HPA_FIXTURE_DIR is set, ``<id>.json`` files there take
  precedence over the built-ins.

Every run prints one report to stdout: canonically ordered JSON by default,
or ``--format human`` for one line per check, ending in OK exactly when all
checks passed.  ``--out <path>`` writes the command's file artifact: the
produced bundle for globalize, smash, convert and examples run, the report
itself for the rest.  Exit status: 0 all checks passed, 1 a verification
failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .actions import (
    PartialActionData,
    PartialCoactionData,
    action_to_coaction,
    coaction_to_action,
    induced_partial_action,
    verify_global_action,
    verify_global_coaction,
    verify_partial_action,
    verify_partial_coaction,
)
from .algebra import verify_algebra, verify_structure
from .bundles import Bundle, bundle_for, load_bundle
from .catalog import fixture_by_id, group_from_hopf, known_fixture_ids
from .duality import (
    blattner_montgomery,
    cohen_montgomery,
    module_endomorphisms,
    partial_smash,
    restricted_duality,
    smash_product,
)
from .errors import (
    AssociativityFailure,
    BadCharacteristic,
    DimensionMismatch,
    InvalidGroup,
    NonCentralIdempotent,
    NotRightIdeal,
    NotUnitOnA,
    ParseError,
    SeedNotSubalgebra,
    ShapeError,
    SingularMatrixError,
    VerificationError,
)
from .fields import field_from_spec
from .globalize import enveloping_action, enveloping_coaction, verify_globalization
from .linalg import Subspace
from .reporting import VerificationReport

_INPUT_ERRORS = (
    ParseError,
    ShapeError,
    DimensionMismatch,
    SingularMatrixError,
    InvalidGroup,
    BadCharacteristic,
    OSError,
)
_VERIFICATION_FAILURES = (
    VerificationError,
    AssociativityFailure,
    NonCentralIdempotent,
    NotRightIdeal,
    NotUnitOnA,
    SeedNotSubalgebra,
)
_TENSOR_KEYS = (
    "partial_action",
    "global_action",
    "partial_coaction",
    "global_coaction",
)


def _bundle_field(args, bundle):
    if args.field is not None and field_from_spec(args.field) != bundle.field:
        raise ShapeError(
            f"--field {args.field} disagrees with the bundle's declared field "
            f"{bundle.field.spec_string()!r}"
        )
    return bundle.field


def _scalar_row(field, vec):
    return [field.fmt(c) for c in vec]


def _cmd_verify(args):
    bundle = load_bundle(args.bundle)
    _bundle_field(args, bundle)
    rep = VerificationReport()
    dims = {}
    if bundle.hopf is not None:
        rep.extend(verify_structure(bundle.hopf), prefix="hopf.")
        dims["hopf"] = bundle.hopf.dim
    if bundle.algebra is not None:
        rep.extend(verify_algebra(bundle.algebra), prefix="carrier.")
        dims["carrier"] = bundle.algebra.dim
    for key, checker in (
        ("partial_action", verify_partial_action),
        ("global_action", verify_global_action),
        ("partial_coaction", verify_partial_coaction),
        ("global_coaction", verify_global_coaction),
    ):
        data = getattr(bundle, key)
        if data is not None:
            rep.extend(checker(data), prefix=f"{key}.")
    if not rep.checks:
        raise ShapeError("bundle has no verifiable component")
    report = {
        "command": "verify",
        "ok": rep.ok,
        "checks": rep.as_rows(),
        "dims": dims,
    }
    return report, report


def _cmd_globalize(args):
    bundle = load_bundle(args.bundle)
    field = _bundle_field(args, bundle)
    if args.mode == "action":
        data = bundle.need("partial_action")
        res = enveloping_action(data)
    else:
        data = bundle.need("partial_coaction")
        res = enveloping_coaction(data)
    out = Bundle(
        field,
        hopf=data.hopf,
        algebra=res.globalized.algebra,
        one_a=res.embedding.apply(data.algebra.unit),
    )
    if args.mode == "action":
        out.global_action = res.globalized
    else:
        out.global_coaction = res.globalized
    report = {
        "command": "globalize",
        "mode": args.mode,
        "ok": res.report.ok,
        "checks": res.report.as_rows(),
        "dims": {
            "ambient": res.ambient.dim,
            "carrier": data.algebra.dim,
            "globalized": res.globalized.algebra.dim,
        },
        "basis": [_scalar_row(field, v) for v in res.span.basis],
        "bundle": out.as_dict(),
    }
    return report, out.as_dict()


def _cmd_smash(args):
    bundle = load_bundle(args.bundle)
    field = _bundle_field(args, bundle)
    rep = VerificationReport()
    extra = {}
    if args.partial:
        data = bundle.need("partial_action")
        ps = partial_smash(data)
        # reaching this line means the exhaustive ambient gate did not raise
        rep.add("ambient.associative", True)
        rep.extend(verify_algebra(ps.algebra), prefix="corner.")
        rep.add("corner.unital", ps.algebra.unit is not None)
        dims = {"ambient": ps.ambient.dim, "corner": ps.algebra.dim}
        extra["corner_idempotent"] = _scalar_row(field, ps.corner)
        out = bundle_for(ps.algebra)
    else:
        data = bundle.need("global_action")
        sp = smash_product(data)
        rep.extend(verify_algebra(sp.algebra), prefix="smash.")
        dims = {
            "smash": sp.algebra.dim,
            "carrier": data.algebra.dim,
            "hopf": data.hopf.dim,
        }
        out = bundle_for(sp.algebra)
    report = {
        "command": "smash",
        "variant": "partial" if args.partial else "global",
        "ok": rep.ok,
        "checks": rep.as_rows(),
        "dims": dims,
        "bundle": out.as_dict(),
    }
    report.update(extra)
    return report, out.as_dict()


def _cmd_duality(args):
    bundle = load_bundle(args.bundle)
    field = _bundle_field(args, bundle)
    action = bundle.need("global_action")
    b = action.algebra
    group = group_from_hopf(action.hopf) if args.pair == "cm" else None
    one_a = bundle.one_a
    if one_a is None:
        if b.unit is None:
            raise ShapeError("duality needs 'one_a' or a unital carrier")
        one_a = b.unit
    dual = blattner_montgomery(action, one_a=one_a)
    if bundle.partial_action is not None:
        partial = bundle.partial_action
    else:
        sub = Subspace.span(
            field, b.dim, [b.mul(one_a, b.basis_vec(i)) for i in range(b.dim)]
        )
        partial = induced_partial_action(action, sub, one_a)
    rest = restricted_duality(dual, partial)
    endo = module_endomorphisms(rest)
    rep = VerificationReport()
    rep.extend(dual.report, prefix="bm.")
    rep.extend(rest.report, prefix="restricted.")
    rep.extend(endo.report, prefix="endomorphisms.")
    dims = {
        "hopf": action.hopf.dim,
        "carrier": b.dim,
        "double_smash": dual.double.algebra.dim,
        "target": dual.target.dim,
        "corner": rest.algebra.dim,
        "inner_ideal": rest.inner_ideal.dim,
        "outer_ideal": rest.outer_ideal.dim,
        "image": rest.image.dim,
        "kernel": rest.kernel.dim,
        "endomorphism_module": endo.module.dim,
        "endomorphism_algebra": endo.algebra.dim,
    }
    notes = {f"bm.{k}": v for k, v in dual.notes.items()}
    notes.update({f"restricted.{k}": v for k, v in rest.notes.items()})
    report = {
        "command": f"duality {args.pair}",
        "dims": dims,
        "idempotents": {
            "one_a": _scalar_row(field, one_a),
            "corner": _scalar_row(field, dual.corner),
            "carrier_part": _scalar_row(field, dual.carrier_part),
            "complement_part": _scalar_row(field, dual.complement_part),
            "corner_unit": _scalar_row(field, rest.corner_unit),
        },
        "kernel_basis": [_scalar_row(field, v) for v in rest.kernel.basis],
        "notes": notes,
    }
    if args.pair == "cm":
        cm = cohen_montgomery(rest, group)
        rep.extend(cm.report, prefix="cm.")
        dims["matrix_target"] = cm.target.dim
        dims["block_algebra"] = cm.blocks.dim
        report["blocks"] = {
            "count": group.order,
            "ideal_dims": [sp.dim for sp in cm.family.ideals],
        }
        report["hom_dims"] = {
            f"{group.names[g]},{group.names[h]}": list(cm.hom_dims[(g, h)])
            for (g, h) in sorted(cm.hom_dims)
        }
    report["ok"] = rep.ok
    report["checks"] = rep.as_rows()
    return report, report


def _cmd_convert(args):
    bundle = load_bundle(args.bundle)
    field = _bundle_field(args, bundle)
    present = [k for k in _TENSOR_KEYS if getattr(bundle, k) is not None]
    if len(present) != 1:
        raise ShapeError(
            "convert needs exactly one (co)action tensor, found "
            + (", ".join(present) if present else "none")
        )
    key = present[0]
    data = getattr(bundle, key)
    if data.algebra.unit is None:
        raise ShapeError("convert needs a unital carrier algebra")
    rep = VerificationReport()
    if "coaction" in key:
        converted = coaction_to_action(data)
        back = action_to_coaction(converted)
        rep.add(
            "convert.round_trip",
            back.coaction == data.coaction and back.hopf.structure_equal(data.hopf),
        )
        if isinstance(converted, PartialActionData):
            out_key, checker = "partial_action", verify_partial_action
        else:
            out_key, checker = "global_action", verify_global_action
    else:
        converted = action_to_coaction(data)
        back = coaction_to_action(converted)
        rep.add(
            "convert.round_trip",
            back.action == data.action and back.hopf.structure_equal(data.hopf),
        )
        if isinstance(converted, PartialCoactionData):
            out_key, checker = "partial_coaction", verify_partial_coaction
        else:
            out_key, checker = "global_coaction", verify_global_coaction
    rep.extend(checker(converted), prefix="converted.")
    out = Bundle(
        field, hopf=converted.hopf, algebra=converted.algebra, one_a=bundle.one_a
    )
    setattr(out, out_key, converted)
    report = {
        "command": "convert",
        "source": key,
        "target": out_key,
        "ok": rep.ok,
        "checks": rep.as_rows(),
        "dims": {"carrier": data.algebra.dim, "hopf": data.hopf.dim},
        "bundle": out.as_dict(),
    }
    return report, out.as_dict()


def _cmd_examples_list(args):
    field = field_from_spec(args.field or "q")
    rows = []
    for fid in known_fixture_ids():
        fx = fixture_by_id(field, fid)
        rows.append(
            {"id": fid, "kind": fx.kind, "title": fx.title, "source": "builtin"}
        )
    fdir = os.environ.get("HPA_FIXTURE_DIR")
    if fdir:
        for path in sorted(Path(fdir).glob("*.json")):
            rows.append(
                {
                    "id": path.stem,
                    "kind": "bundle",
                    "title": path.name,
                    "source": "file",
                }
            )
    report = {
        "command": "examples list",
        "ok": True,
        "checks": [],
        "fixtures": rows,
    }
    return report, report


def _run_example_pipeline(data, expected, rep):
    """Verify the partial structure, globalize it, check promised quantities."""
    if isinstance(data, PartialCoactionData):
        rep.extend(verify_partial_coaction(data), prefix="partial.")
        res = enveloping_coaction(data)
    else:
        rep.extend(verify_partial_action(data), prefix="partial.")
        res = enveloping_action(data)
    rep.extend(res.report, prefix="globalization.")
    glob_alg = res.globalized.algebra
    theta_one = res.embedding.apply(data.algebra.unit)
    for key in sorted(expected):
        want = expected[key]
        if key == "carrier_dim":
            got = data.algebra.dim
        elif key == "globalization_dim":
            got = glob_alg.dim
        elif key == "embedded_carrier_dim":
            got = res.embedding.rank()
        elif key == "unital_part_dim":
            got = Subspace.span(
                glob_alg.field,
                glob_alg.dim,
                [glob_alg.mul(theta_one, glob_alg.basis_vec(k)) for k in range(glob_alg.dim)],
            ).dim
        else:
            raise ShapeError(f"fixture promises an unknown quantity {key!r}")
        rep.add(f"expected.{key}", got == want, f"got {got}, expected {want}")
    return res


def _cmd_examples_run(args):
    field = field_from_spec(args.field or "q")
    fid = args.id
    fdir = os.environ.get("HPA_FIXTURE_DIR")
    override = Path(fdir) / f"{fid}.json" if fdir else None
    rep = VerificationReport()
    if override is not None and override.exists():
        bundle = load_bundle(override)
        field = _bundle_field(args, bundle)
        if bundle.partial_coaction is not None:
            data = bundle.partial_coaction
        elif bundle.partial_action is not None:
            data = bundle.partial_action
        else:
            raise ShapeError(
                "fixture bundle has neither partial_action nor partial_coaction"
            )
        expected = {}
        title = str(bundle.meta.get("title", fid))
        source = "file"
        candidate = None
    else:
        fx = fixture_by_id(field, fid)
        data = fx.payload
        expected = fx.expected
        title = fx.title
        source = "builtin"
        candidate = fx.candidate
    res = _run_example_pipeline(data, expected, rep)
    if candidate is not None:
        cand, emb = candidate
        rep.extend(verify_globalization(data, cand, emb), prefix="candidate.")
    out = bundle_for(data, meta={"fixture_id": fid, "title": title})
    report = {
        "command": "examples run",
        "id": fid,
        "source": source,
        "title": title,
        "ok": rep.ok,
        "checks": rep.as_rows(),
        "dims": {
            "carrier": data.algebra.dim,
            "ambient": res.ambient.dim,
            "globalized": res.globalized.algebra.dim,
        },
        "bundle": out.as_dict(),
    }
    return report, out.as_dict()


def _emit(report, fmt):
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    lines = [f"command: {report['command']}"]
    for key in ("id", "mode", "variant", "source", "target", "title"):
        if key in report:
            lines.append(f"{key}: {report[key]}")
    for row in report.get("fixtures", []):
        lines.append(f"{row['id']}  [{row['source']}]  {row['title']}")
    checks = report.get("checks", [])
    for row in checks:
        if row["passed"]:
            lines.append(f"PASS {row['name']}")
        else:
            where = f"  at {row['detail']}" if row.get("detail") else ""
            lines.append(f"FAIL {row['name']}{where}")
    dims = report.get("dims")
    if dims:
        lines.append("dims: " + "  ".join(f"{k}={dims[k]}" for k in sorted(dims)))
    if "error" in report:
        lines.append(f"error: {report['error']}")
    if report.get("ok"):
        lines.append("OK")
    elif checks:
        failed = sum(1 for r in checks if not r["passed"])
        lines.append(f"FAILED ({failed} of {len(checks)} checks)")
    else:
        lines.append("FAILED")
    return "\n".join(lines) + "\n"


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--field", default=None, metavar="SPEC", help="ground field: q or fp:<p>"
    )
    common.add_argument("--format", choices=("json", "human"), default="json")
    common.add_argument(
        "--out", default=None, metavar="PATH", help="write the command's artifact here"
    )

    parser = argparse.ArgumentParser(
        prog="hopfpartial",
        description="verify, globalize, and dualize partial Hopf (co)actions "
        "given by exact structure constants",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check every axiom of a bundle")
    p.add_argument("bundle")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("globalize", parents=[common], help="build an enveloping (co)action")
    p.add_argument("--mode", choices=("action", "coaction"), required=True)
    p.add_argument("bundle")
    p.set_defaults(handler=_cmd_globalize)

    p = sub.add_parser("smash", parents=[common], help="build a smash product")
    variant = p.add_mutually_exclusive_group(required=True)
    variant.add_argument("--partial", action="store_true")
    variant.add_argument("--global", dest="global_", action="store_true")
    p.add_argument("bundle")
    p.set_defaults(handler=_cmd_smash)

    p = sub.add_parser("duality", help="run a duality pipeline")
    dsub = p.add_subparsers(dest="pair", required=True)
    for pair, text in (
        ("bm", "double smash as carrier (x) End(H)"),
        ("cm", "double smash as matrices over the carrier"),
    ):
        q = dsub.add_parser(pair, parents=[common], help=text)
        q.add_argument("bundle")
        q.set_defaults(handler=_cmd_duality, pair=pair, command="duality")

    p = sub.add_parser("convert", parents=[common], help="swap action and coaction form")
    p.add_argument("bundle")
    p.set_defaults(handler=_cmd_convert)

    p = sub.add_parser("examples", help="built-in worked examples")
    esub = p.add_subparsers(dest="what", required=True)
    q = esub.add_parser("list", parents=[common], help="list fixture ids")
    q.set_defaults(handler=_cmd_examples_list, command="examples")
    q = esub.add_parser("run", parents=[common], help="run one fixture end to end")
    q.add_argument("--id", required=True)
    q.set_defaults(handler=_cmd_examples_run, command="examples")

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        report, artifact = args.handler(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _VERIFICATION_FAILURES as exc:
        report = {"command": args.command, "ok": False, "error": str(exc)}
        attached = getattr(exc, "report", None)
        if attached is not None:
            report["checks"] = attached.as_rows()
        sys.stdout.write(_emit(report, args.format))
        if args.out:
            _write_json(args.out, report)
        return 1
    sys.stdout.write(_emit(report, args.format))
    if args.out:
        _write_json(args.out, artifact)
    return 0 if report["ok"] else 1


def _write_json(path, payload):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
