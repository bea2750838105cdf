"""Command line entry point: ``hypants {classify,whitehead,volume,orbit,verify}``.

Exit status: 0 on success, 1 when a verification fails, 2 on bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import claims
from .horoball import GroupGenerators, orbit_enumerate, rigid_group
from .moebius import default_eps
from .pantsrep import PantsRepresentation, classify_pants_rep
from .svg import render_diagram
from .whitehead import TetShape, build_rho, nr_parameter, tet_volume, whitehead_volume

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """'RE,IM' (or a bare real number) to a complex number."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected RE,IM but got {text!r}")


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _emit(data) -> None:
    json.dump(data, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def cmd_classify(args) -> int:
    try:
        rep = PantsRepresentation.from_json(_load_json(args.input))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad representation file: {exc}") from exc
    _emit(classify_pants_rep(rep, args.epsilon).to_json())
    return EXIT_OK


def cmd_whitehead(args) -> int:
    rho = build_rho(args.a)
    r1, r2 = rho.relation_residuals()
    out = {"a": _pair(rho.a), "C1": rho.C1.to_json(), "C2": rho.C2.to_json(),
           "Q": rho.Q.to_json(), "Q2": rho.Q2.to_json()}
    status = EXIT_OK
    if args.check_relations:
        ok = rho.relations_hold()
        out["relations"] = {"R1": r1, "R2": r2, "hold": ok}
        status = EXIT_OK if ok else EXIT_FAIL
    _emit(out)
    return status


def cmd_volume(args) -> int:
    shape = TetShape(args.x)
    _emit({"x": _pair(shape.x),
           "tet_volume": tet_volume(shape),
           "companion": tet_volume(shape.companion),
           "total": whitehead_volume(shape),
           "z": _pair(nr_parameter(shape.x).z),
           "degenerate": shape.degenerate})
    return EXIT_OK


def cmd_orbit(args) -> int:
    if args.group:
        try:
            group = GroupGenerators.from_json(_load_json(args.group))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad group file: {exc}") from exc
    else:
        group = rigid_group()
    balls = orbit_enumerate(group, args.cutoff, args.max_word_len, workers=args.workers)
    if args.svg:
        render_diagram(balls, group.lattice, args.svg)
    _emit({"balls": [B.to_json() for B in balls], "lattice": group.lattice.to_json()})
    return EXIT_OK


def cmd_verify(args) -> int:
    ids = "all" if args.claims == "all" else [c.strip() for c in args.claims.split(",") if c.strip()]
    try:
        reports = claims.run_claims(ids)
    except claims.UnknownClaimError as exc:
        raise InputError(f"unknown claim {exc.args[0]!r}") from exc
    text = claims.report_json(reports)
    if args.report:
        Path(args.report).write_text(text)
    else:
        sys.stdout.write(text)
    if args.svg_dir:
        out = Path(args.svg_dir)
        out.mkdir(parents=True, exist_ok=True)
        group = rigid_group()
        render_diagram(orbit_enumerate(group, 0.05, 8), group.lattice, out / "rigid_orbit.svg")
    for r in reports:
        print(f"{r.verdict:>16}  {r.claim_id}", file=sys.stderr)
    return EXIT_FAIL if any(r.failed for r in reports) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypants", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="normal form of a parabolic pants representation")
    p.add_argument("--input", required=True, help="JSON file with C1 and C2 matrices")
    p.add_argument("--epsilon", type=float, default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("whitehead", help="the representation rho_a")
    p.add_argument("--a", type=parse_complex, required=True, metavar="RE,IM")
    p.add_argument("--check-relations", action="store_true")
    p.set_defaults(func=cmd_whitehead)

    p = sub.add_parser("volume", help="ideal tetrahedron and Whitehead volumes for shape x")
    p.add_argument("--x", type=parse_complex, required=True, metavar="RE,IM")
    p.set_defaults(func=cmd_volume)

    p = sub.add_parser("orbit", help="horoballs seen from infinity")
    p.add_argument("--group", help="group JSON (default: the rigid pants group)")
    p.add_argument("--cutoff", type=float, default=0.05)
    p.add_argument("--max-word-len", type=int, default=12)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--svg", help="write an SVG diagram here")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("verify", help="run the claim checks")
    p.add_argument("--claims", default="all", help="'all' or comma-separated ids")
    p.add_argument("--report", help="write the JSON report here instead of stdout")
    p.add_argument("--svg-dir", help="directory for diagrams")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        default_eps()
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"hypants: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
