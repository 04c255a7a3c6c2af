"""Command-line front end.

Exit codes: 0 on success with a true verdict, 1 for a false verdict on a
decision command (suppressed by ``--no-verdict-exit``), 2 for unreadable or
invalid input, 3 when two independent computations disagree.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import blowup, poisson, resgraph
from .exactalg import format_rational, inverse, PolynomialSyntaxError
from .fuzz import differential_run

SCENE_VERSION = 1
EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2, 3


class SceneError(ValueError):
    pass


class Mismatch(RuntimeError):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def load_scene(path: str, kind: str | tuple[str, ...]) -> dict:
    kinds = (kind,) if isinstance(kind, str) else kind
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise SceneError(f"cannot read scene {path}: {exc}") from exc
    if not isinstance(data, dict) or "version" not in data:
        raise SceneError("scene needs a 'version' field")
    if data["version"] != SCENE_VERSION:
        raise SceneError(f"unsupported scene version {data['version']!r}")
    if data.get("kind") not in kinds:
        raise SceneError(f"expected scene kind {' or '.join(kinds)}, got {data.get('kind')!r}")
    return data


def _field(data: dict, key: str):
    if key not in data:
        raise SceneError(f"scene is missing {key!r}")
    return data[key]


def cmd_jacobi(args) -> tuple[dict, bool | None]:
    scene = load_scene(args.file, ("bivector", "lift"))
    theta = poisson.Bivector.from_dict(_field(scene, "bivector"))
    jac = poisson.jacobiator(theta)
    sch = poisson.schouten_square(theta)
    if sch != jac.scale(poisson.SCHOUTEN_JACOBI_RATIO):
        raise Mismatch("schouten_square is not the fixed multiple of the jacobiator")
    verdict = jac.is_zero() and sch.is_zero()
    return {
        "jacobiator": jac.to_dict(),
        "schouten_square": sch.to_dict(),
        "ratio": poisson.SCHOUTEN_JACOBI_RATIO,
        "verdict": verdict,
    }, verdict


def cmd_lift(args) -> tuple[dict, bool | None]:
    scene = load_scene(args.file, "lift")
    theta = poisson.Bivector.from_dict(_field(scene, "bivector"))
    center = blowup.Center.from_dict(_field(scene, "center"))
    if center.nvars != theta.nvars:
        raise SceneError("center and bivector disagree on the number of variables")
    try:
        report = blowup.lift_criterion(theta, center, with_oracle=True)
    except blowup.CriterionOracleMismatch as exc:
        raise Mismatch(str(exc)) from exc
    out = {"report": report.to_dict(), "verdict": report.verdict}
    if args.emit_charts and report.verdict:
        lifted = blowup.lift_bivector(theta, center)
        out["charts"] = [{"j": j, "bivector": b.to_dict()} for j, b in zip(center.charts, lifted)]
    return out, report.verdict


def _graph_from(scene: dict) -> resgraph.DualGraph:
    return resgraph.DualGraph.from_dict(_field(scene, "graph"))


def cmd_graph(args) -> tuple[dict, bool | None]:
    scene = load_scene(args.file, ("graph", "decide"))
    g = _graph_from(scene)
    sub = args.subcommand
    if sub == "zcycle":
        z = resgraph.canonical_cycle(g)
        return {"names": g.names, "canonical_cycle": z.to_dict()["coeffs"],
                "effective": resgraph.is_effective(z)}, None
    if sub == "pullback":
        d = resgraph.StrictTransform.from_dict(_field(scene, "divisor"))
        pb = resgraph.pullback(g, d)
        return {"names": g.names, "divisor": d.to_dict(), "pullback": pb.to_dict()["coeffs"],
                "effective": resgraph.is_effective(pb)}, None
    if sub == "invneg":
        verdict = resgraph.inverse_negativity(g)
        inv = inverse(g.intersection_matrix())
        return {"names": g.names,
                "inverse": [[format_rational(x) for x in row] for row in inv.tolist()],
                "verdict": verdict}, verdict
    if sub == "blowup":
        incidence = [str(v) for v in _field(scene, "incidence")]
        new = resgraph.blowup_graph(g, incidence)
        return {"graph": new.to_dict(), "minimal": resgraph.is_minimal(new)}, None
    if sub == "minimal":
        verdict = resgraph.is_minimal(g)
        return {"verdict": verdict}, verdict
    raise SceneError(f"unknown graph subcommand {sub!r}")


def cmd_decide(args) -> tuple[dict, bool | None]:
    scene = load_scene(args.file, "decide")
    g = _graph_from(scene)
    family = [resgraph.StrictTransform.from_dict(m) for m in _field(scene, "family")]
    decision = resgraph.decide_poisson(g, family)
    out = decision.to_dict()
    out["names"] = g.names
    out["verdict"] = decision.overall
    return out, decision.overall


def cmd_catalog(args) -> tuple[dict, bool | None]:
    g = resgraph.ade_graph(args.kind, args.rank)
    inv = inverse(g.intersection_matrix())
    return {
        "graph": g.to_dict(),
        "canonical_cycle": resgraph.canonical_cycle(g).to_dict()["coeffs"],
        "inverse": [[format_rational(x) for x in row] for row in inv.tolist()],
        "inverse_negative": resgraph.inverse_negativity(g),
        "det_neg_m": format_rational(resgraph.cartan_determinant(g)),
    }, None


def cmd_fuzz(args) -> tuple[dict, bool | None]:
    res = differential_run(args.seed, args.cases)
    if res.disagreements:
        theta, center, verdict, flags = res.disagreements[0]
        raise Mismatch(f"criterion {verdict} vs charts {flags} for {theta} (k={center.k})")
    return {"seed": args.seed, "cases": res.cases, "lifting": res.lifting, "disagreements": 0,
            "verdict": True}, True


def _human(command: str, out: dict) -> str:
    lines = [f"[{command}]"]
    if command == "jacobi":
        for label in ("jacobiator", "schouten_square"):
            comps = out[label]["coeffs"]
            lines.append(f"{label}: " + ("0" if not comps else ", ".join(
                f"({c['i']},{c['j']},{c['k']}) = {c['poly']}" for c in comps)))
        lines.append(f"ratio schouten/jacobiator: {out['ratio']}")
    elif command == "lift":
        rep = out["report"]
        for c in rep["charts"]:
            lines.append(f"chart {c['j']}: {'holomorphic' if c['holomorphic'] else 'pole'}")
        for v in rep["violations"]:
            idx = ",".join(map(str, v["indices"]))
            lines.append(f"violation {v['kind']} [{idx}]: {v['witness']}")
        for ch in out.get("charts", []):
            terms = " + ".join(f"({c['poly']}) d{c['s']}^d{c['t']}" for c in ch["bivector"]["coeffs"]) or "0"
            lines.append(f"lifted chart {ch['j']}: {terms}")
    elif command == "decide":
        lines.append("Z = " + " ".join(out["canonical_cycle"]))
        for m in out["members"]:
            lines.append(f"{m['name']}: pi*F = ({', '.join(m['pullback'])}); "
                         f"pi*F + Z = ({', '.join(m['pullback_plus_z'])}); "
                         f"{'effective' if m['effective'] else 'NOT effective'}")
        lines.append(f"overall ({out['scope']}): {out['overall']}")
    else:
        for key, val in sorted(out.items()):
            if key not in ("command", "elapsed_ms"):
                lines.append(f"{key}: {json.dumps(val, sort_keys=True)}")
    if "verdict" in out:
        lines.append(f"verdict: {out['verdict']}")
    return "\n".join(lines)


COMMANDS = {
    "jacobi": cmd_jacobi,
    "lift": cmd_lift,
    "graph": cmd_graph,
    "decide": cmd_decide,
    "catalog": cmd_catalog,
    "fuzz": cmd_fuzz,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--no-verdict-exit", action="store_true",
                        help="exit 0 even when the verdict is false")
    parser = argparse.ArgumentParser(prog="poissonres", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    p = sub.add_parser("jacobi", parents=[common], help="Jacobi identity two ways")
    p.add_argument("file")
    p = sub.add_parser("lift", parents=[common], help="liftability through a blowup")
    p.add_argument("file")
    p.add_argument("--emit-charts", action="store_true")
    p = sub.add_parser("graph", parents=[common], help="dual graph computations")
    p.add_argument("subcommand", choices=["zcycle", "pullback", "invneg", "blowup", "minimal"])
    p.add_argument("file")
    p = sub.add_parser("decide", parents=[common], help="Poisson resolution test")
    p.add_argument("file")
    p = sub.add_parser("catalog", parents=[common], help="ADE catalog entry")
    p.add_argument("kind", choices=["A", "D", "E", "a", "d", "e"])
    p.add_argument("rank", type=int)
    p = sub.add_parser("fuzz", parents=[common])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=200)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    start = time.perf_counter()
    try:
        out, verdict = COMMANDS[args.command](args)
    except Mismatch as exc:
        print(f"internal mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (SceneError, PolynomialSyntaxError, resgraph.GraphError, blowup.LiftError,
            KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    echo = [args.command] + ([args.subcommand] if args.command == "graph" else [])
    out = {"command": " ".join(echo), **out,
           "elapsed_ms": round((time.perf_counter() - start) * 1000, 3)}
    print(dumps(out) if args.json else _human(args.command, out))
    if verdict is False and not args.no_verdict_exit:
        return EXIT_FALSE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
