"""Command-line interface: classification, twist evaluation, commutator
and relator analysis, lemma verification sweeps, and SVG figures.

Exit codes: 0 success, 1 failed verification, 2 malformed input or
unknown suite, 3 region-classification ambiguity, 4 ideal evaluation
inside the ambiguity band of a boundary fixed point.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import documents, render
from .commutator import commutator, pentagon, trace_region_corollary
from .cover import (
    AmbiguousRegionError,
    LiftedIsometry,
    PARABOLIC_TOL,
    classify,
    compose,
    lift,
    trace,
)
from .documents import DocumentError
from .halfplane import I_POINT, Point
from .surface import euler_number, relator_product
from .twist import AxisEndpointAmbiguityError, twist_value
from .verify import SUITES


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json", "svg"), default="text"
    )
    common.add_argument(
        "--seed",
        type=int,
        default=int(os.environ.get("HYPTWIST_SEED", "0")),
        help="base seed for randomised sweeps (env HYPTWIST_SEED)",
    )
    common.add_argument("--trials", type=int, default=None)
    common.add_argument(
        "--tolerance-par",
        type=float,
        default=None,
        help="parabolic detection tolerance override",
    )
    common.add_argument(
        "--tolerance-res",
        type=float,
        default=None,
        help="residual tolerance override for verification",
    )
    common.add_argument("--file", default=None, help="JSON input document")
    common.add_argument("--out", default=None, help="output file (default stdout)")

    parser = argparse.ArgumentParser(
        prog="hyptwist",
        description="Twist angles on the universal cover of the hyperbolic "
        "isometry group: classification, lemma verification, winding numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    mat_kw = dict(action="append", default=None, metavar="a,b,c,d")
    theta_kw = dict(action="append", type=float, default=None)

    p = sub.add_parser("classify", parents=[common])
    p.add_argument("--mat", **mat_kw, required=True)
    p.add_argument("--theta", **theta_kw)

    p = sub.add_parser("twist", parents=[common])
    p.add_argument("--mat", **mat_kw, required=True)
    p.add_argument("--theta", **theta_kw)
    p.add_argument("--point", default="0,1", help="'x,y' or 'ideal:b'")

    p = sub.add_parser("compose", parents=[common])
    p.add_argument("--mat", **mat_kw, required=True)
    p.add_argument("--theta", **theta_kw)

    p = sub.add_parser("commutator", parents=[common])
    p.add_argument("--mat", **mat_kw, required=True)
    p.add_argument("--theta", **theta_kw)

    p = sub.add_parser("pentagon", parents=[common])
    p.add_argument("--mat", **mat_kw, required=True)
    p.add_argument("--theta", **theta_kw)
    p.add_argument("--point", default="0,1")

    p = sub.add_parser("relator", parents=[common])

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("suite")
    p.add_argument("--g", type=int, default=1)
    p.add_argument("--n", type=int, default=1)

    p = sub.add_parser("render", parents=[common])
    p.add_argument(
        "--object",
        choices=("pentagon", "cpoly", "dpoly", "axes"),
        required=True,
    )
    p.add_argument("--mat", **mat_kw)
    p.add_argument("--theta", **theta_kw)
    p.add_argument("--point", default="0,1")
    return parser


def _elements(args, count: int) -> list[LiftedIsometry]:
    mats = args.mat or []
    if len(mats) != count:
        raise DocumentError(f"expected {count} --mat flags, got {len(mats)}")
    thetas = args.theta
    if thetas is not None and len(thetas) != count:
        raise DocumentError("--theta flags must match --mat flags")
    out = []
    for k, text in enumerate(mats):
        mat = documents.parse_matrix_flag(text)
        if thetas is None:
            out.append(lift(mat, 0))
        else:
            try:
                out.append(LiftedIsometry(mat, thetas[k]))
            except ValueError as exc:
                raise DocumentError(str(exc)) from exc
    return out


def _tolerances(args) -> dict:
    return {
        "parabolic": args.tolerance_par if args.tolerance_par else PARABOLIC_TOL,
        "residual": args.tolerance_res,
    }


def _emit(args, text_lines: list[str], report: dict) -> None:
    if args.format == "json":
        payload = documents.dump_json(report)
    else:
        payload = "\n".join(text_lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)


def _region_obj(region) -> dict:
    lo, hi = region.theta_range()
    return {
        "tag": str(region),
        "kind": region.kind,
        "n": region.n,
        "chirality": region.chirality,
        "theta_range": [lo, hi],
    }


def _cmd_classify(args) -> int:
    (a,) = _elements(args, 1)
    par_tol = args.tolerance_par or PARABOLIC_TOL
    region = classify(a, par_tol=par_tol)
    lo, hi = region.theta_range()
    report = {
        "command": "classify",
        "inputs": {"element": documents.generator_to_obj(a)},
        "outputs": {"region": _region_obj(region), "trace": trace(a), "theta": a.theta},
        "residuals": {},
        "seed": args.seed,
        "tolerances": _tolerances(args),
    }
    lines = [
        f"region: {region}",
        f"trace:  {trace(a):.12g}",
        f"theta:  {a.theta:.12g}",
        f"theta range: ({lo:.12g}, {hi:.12g})",
    ]
    _emit(args, lines, report)
    return 0


def _cmd_twist(args) -> int:
    (a,) = _elements(args, 1)
    p = documents.parse_point_flag(args.point)
    value = twist_value(a, p)
    report = {
        "command": "twist",
        "inputs": {
            "element": documents.generator_to_obj(a),
            "point": documents.point_obj(p),
        },
        "outputs": {"twist": value},
        "residuals": {},
        "seed": args.seed,
        "tolerances": _tolerances(args),
    }
    _emit(args, [f"twist: {value:.15g}"], report)
    return 0


def _element_report(x: LiftedIsometry) -> dict:
    return {
        "element": documents.generator_to_obj(x),
        "trace": trace(x),
        "region": _region_obj(classify(x)),
    }


def _cmd_compose(args) -> int:
    a, b = _elements(args, 2)
    c = compose(a, b)
    out = _element_report(c)
    report = {
        "command": "compose",
        "inputs": {
            "first": documents.generator_to_obj(a),
            "second": documents.generator_to_obj(b),
        },
        "outputs": out,
        "residuals": {},
        "seed": args.seed,
        "tolerances": _tolerances(args),
    }
    lines = [
        f"product theta: {c.theta:.15g}",
        f"product trace: {trace(c):.12g}",
        f"region: {out['region']['tag']}",
    ]
    _emit(args, lines, report)
    return 0


def _cmd_commutator(args) -> int:
    a, b = _elements(args, 2)
    c = commutator(a, b)
    checked = trace_region_corollary(a, b)
    out = _element_report(c)
    report = {
        "command": "commutator",
        "inputs": {
            "a": documents.generator_to_obj(a),
            "b": documents.generator_to_obj(b),
        },
        "outputs": out,
        "residuals": {},
        "seed": args.seed,
        "tolerances": _tolerances(args),
    }
    lines = [
        f"commutator theta: {c.theta:.15g}",
        f"trace: {checked.trace:.12g}",
        f"region: {checked.region}",
    ]
    _emit(args, lines, report)
    return 0


def _cmd_pentagon(args) -> int:
    a, b = _elements(args, 2)
    p = documents.parse_point_flag(args.point)
    rep = pentagon(a, b, p)
    report = {
        "command": "pentagon",
        "inputs": {
            "a": documents.generator_to_obj(a),
            "b": documents.generator_to_obj(b),
            "point": documents.point_obj(p),
        },
        "outputs": {
            "vertices": [documents.point_obj(v) for v in rep.polygon.vertices],
            "area": rep.area,
            "twist_of_commutator": rep.twist_of_commutator,
            "simple": rep.simple,
            "degenerate": rep.degenerate,
        },
        "residuals": {"pentagon": rep.residual},
        "seed": args.seed,
        "tolerances": _tolerances(args),
    }
    lines = [
        f"area: {rep.area:.15g}",
        f"twist of commutator: {rep.twist_of_commutator:.15g}",
        f"residual: {rep.residual:.3e}",
        f"simple: {rep.simple}  degenerate: {rep.degenerate}",
    ]
    _emit(args, lines, report)
    return 0


def _cmd_relator(args) -> int:
    if not args.file:
        raise DocumentError("relator requires --file with a representation document")
    rep = documents.load_rep(args.file)
    prod = relator_product(rep)
    outputs = {
        "relator": documents.generator_to_obj(prod),
        "trace": trace(prod),
        "closed_up": rep.closed_up(),
    }
    lines = [
        f"relator theta: {prod.theta:.15g}",
        f"closed up: {rep.closed_up()}",
    ]
    if rep.closed_up():
        er = euler_number(rep)
        outputs["euler"] = {
            "m": er.m,
            "chi": er.chi,
            "bound_satisfied": er.bound_satisfied,
            "theta_residual": er.theta_residual,
        }
        lines += [
            f"m: {er.m}   chi: {er.chi}",
            f"bound satisfied: {er.bound_satisfied}",
        ]
    report = {
        "command": "relator",
        "inputs": {"document": documents.rep_to_dict(rep)},
        "outputs": outputs,
        "residuals": {},
        "seed": args.seed,
        "tolerances": _tolerances(args),
    }
    _emit(args, lines, report)
    return 0


def _cmd_verify(args) -> int:
    name = args.suite
    if name not in SUITES:
        print(f"unknown suite {name!r}; choose from {sorted(SUITES)}", file=sys.stderr)
        return 2
    kwargs: dict = {"seed": args.seed}
    if args.trials is not None:
        kwargs["trials"] = args.trials
    if name == "milnor-wood":
        kwargs["g"] = args.g
        kwargs["n"] = args.n
    if args.tolerance_res is not None and name in (
        "composition",
        "addition",
        "conjugation",
        "inverse",
        "commutator-area",
        "goldman",
        "cpoly",
    ):
        kwargs["tol"] = args.tolerance_res
    result = SUITES[name](**kwargs)
    report = {
        "command": "verify",
        "inputs": {"suite": name, "trials": result.trials},
        "outputs": result.to_dict(),
        "residuals": {"max": result.max_residual},
        "seed": args.seed,
        "tolerances": _tolerances(args),
    }
    status = "pass" if result.passed else "FAIL"
    lines = [
        f"suite {name}: {status} ({result.trials} trials, seed {result.seed})",
    ]
    if result.max_residual is not None:
        lines.append(f"max residual: {result.max_residual:.3e}")
    for key, value in result.details.items():
        lines.append(f"{key}: {value}")
    if result.counterexample is not None:
        lines.append("counterexample: " + documents.dump_json(result.counterexample))
    _emit(args, lines, report)
    return 0 if result.passed else 1


def _cmd_render(args) -> int:
    if args.object == "pentagon":
        a, b = _elements(args, 2)
        svg = render.render_pentagon(a, b, documents.parse_point_flag(args.point))
    elif args.object == "axes":
        a, b = _elements(args, 2)
        svg = render.render_axes(a.mat, b.mat)
    elif args.object == "cpoly":
        if not args.file:
            raise DocumentError("cpoly rendering requires --file")
        rep = documents.load_rep(args.file)
        if len(rep.gammas) < 2:
            raise DocumentError("cpoly rendering needs at least two gammas")
        svg = render.render_cpoly(rep.gammas, rep.basepoint)
    else:
        if not args.file:
            raise DocumentError("dpoly rendering requires --file")
        svg = render.render_dpoly(documents.load_rep(args.file))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(svg + "\n")
    else:
        print(svg)
    return 0


_COMMANDS = {
    "classify": _cmd_classify,
    "twist": _cmd_twist,
    "compose": _cmd_compose,
    "commutator": _cmd_commutator,
    "pentagon": _cmd_pentagon,
    "relator": _cmd_relator,
    "verify": _cmd_verify,
    "render": _cmd_render,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AmbiguousRegionError as exc:
        print(f"classification ambiguity: {exc}", file=sys.stderr)
        return 3
    except AxisEndpointAmbiguityError as exc:
        print(f"ideal-point ambiguity: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
