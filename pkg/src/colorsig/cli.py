"""Command-line front end.

Exit codes: 0 success, 2 bad input, 3 indeterminate inertia, 4 obstructed.

Grid grammar (``--grid``)::

    default                      the default prime-power grid
    prime-powers:p<=P,e<=E[,cap=N]
    equispaced:N                 (root:k/(N+1), ..., root:k/(N+1)) for k = 1..N
    POINT;POINT;...              explicit points, each in --omega syntax
    empty                        no points
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys

from . import corpus
from .bounds import (CobordismProfile, SurfaceProfile, concordance_obstruction, default_grid,
                     genus_bound_report, surface_bound_report)
from .ccomplex import CComplexData
from .errors import ColorsigError, DomainError, IndeterminateInertiaError
from .inertia import DEFAULT_TOLERANCE, signature_and_nullity, torus_profile
from .laurent import LaurentPoly
from .omega import classify
from .plumbing import PlumbingGraph, is_balanced, kernel_basis, weight_matrix
from .scalar import DEFAULT_PRECISION, RootOfUnity, TorusPoint, parse_omega

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INDETERMINATE = 3
EXIT_OBSTRUCTED = 4

_PRIME_POWERS = re.compile(r"prime-powers:p<=(\d+),e<=(\d+)(?:,cap=(\d+))?$")


def _primes_up_to(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if all(p % d for d in range(2, int(p ** 0.5) + 1))]


def parse_grid(text: str, mu: int) -> list[TorusPoint]:
    text = text.strip()
    if text in ("", "empty"):
        return []
    if text == "default":
        return default_grid(mu)
    m = _PRIME_POWERS.match(text)
    if m:
        p, e, cap = int(m[1]), int(m[2]), int(m[3] or 256)
        primes = _primes_up_to(p)
        if not primes or e < 1:
            raise DomainError(f"grid {text!r} selects no points")
        return default_grid(mu, primes, e, cap)
    if text.startswith("equispaced:"):
        try:
            n = int(text.split(":", 1)[1])
        except ValueError as exc:
            raise DomainError(f"bad grid {text!r}") from exc
        return [TorusPoint((RootOfUnity(k, n + 1),) * mu) for k in range(1, n + 1)]
    pts = [parse_omega(chunk) for chunk in text.split(";") if chunk.strip()]
    for w in pts:
        if w.num_vars != mu:
            raise DomainError(f"grid point {w} has {w.num_vars} coordinates, expected {mu}")
    return pts


def load_cc(source: str) -> CComplexData:
    """A path to a C-complex JSON file, or ``corpus:NAME``."""
    if source.startswith("corpus:"):
        return corpus.load(source[len("corpus:"):]).cc
    return CComplexData.load(source)


def _load_json(path: str):
    with open(path) as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise DomainError(f"{path}: invalid JSON ({exc})") from exc


def _tidy(obj):
    """Round floats to 12 significant digits so output is byte-stable."""
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _tidy(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_tidy(v) for v in obj]
    return obj


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, obj):
    _emit(args, json.dumps(_tidy(obj), indent=2) + "\n")


def _inertia_kw(args) -> dict:
    return {"backend": args.backend, "precision": args.precision, "tolerance": args.tolerance}


# ---------------------------------------------------------------------------
# commands


def cmd_signature(args) -> int:
    cc = load_cc(args.file)
    res = signature_and_nullity(cc, parse_omega(args.omega), **_inertia_kw(args))
    _emit_json(args, res.to_json())
    return EXIT_OK


PROFILE_COLUMNS = ["omega", "signature", "nullity", "eta", "backend", "tolerance_margin",
                   "applicable", "error"]


def cmd_profile(args) -> int:
    cc = load_cc(args.file)
    grid = parse_grid(args.grid, cc.mu)
    rows = torus_profile(cc, grid, max_workers=args.workers, **_inertia_kw(args))
    records = []
    for row in rows:
        r = row.result
        records.append({
            "omega": str(row.omega),
            "signature": r.signature if r else None,
            "nullity": r.nullity if r else None,
            "eta": r.eta if r else None,
            "backend": r.backend if r else None,
            "tolerance_margin": r.tolerance_margin if r else None,
            "applicable": classify(row.omega).is_safe,
            "error": row.error,
        })
    records = _tidy(records)
    if args.format == "json":
        _emit_json(args, {"rows": records})
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(PROFILE_COLUMNS)
        for rec in records:
            w.writerow(["" if rec[c] is None else rec[c] for c in PROFILE_COLUMNS])
        _emit(args, buf.getvalue())
    return EXIT_OK


def cmd_classify_omega(args) -> int:
    omega = parse_omega(args.omega)
    cert = None
    if args.cert:
        cert = LaurentPoly.from_json(_load_json(args.cert), omega.num_vars)
    result = classify(omega, cert, auto=not args.no_auto)
    _emit_json(args, result.to_json())
    return EXIT_OK


def _grid_for(args, mu):
    if args.omega:
        return [parse_omega(args.omega)]
    return parse_grid(args.grid, mu)


def _emit_report(args, report) -> int:
    if args.format == "csv":
        _emit(args, report.to_csv())
    else:
        _emit_json(args, report.to_json())
    return EXIT_OBSTRUCTED if report.obstructed else EXIT_OK


def cmd_bound_check(args) -> int:
    cc = load_cc(args.file)
    grid = _grid_for(args, cc.mu)
    kw = _inertia_kw(args)
    if args.kind == "surface":
        betti = tuple(int(x) for x in args.betti.split(","))
        sp = SurfaceProfile(betti, args.components, args.double_points)
        report = surface_bound_report(cc, sp, grid, **kw)
    else:
        if not args.other or not args.profile:
            raise DomainError("the genus bound needs a second link and --profile")
        other = load_cc(args.other)
        text = args.profile
        data = json.loads(text) if text.lstrip().startswith("{") else _load_json(text)
        report = genus_bound_report(cc, other, CobordismProfile.from_json(data), grid, **kw)
    return _emit_report(args, report)


def cmd_concordance_check(args) -> int:
    a, b = load_cc(args.first), load_cc(args.second)
    report = concordance_obstruction(a, b, _grid_for(args, a.mu), **_inertia_kw(args))
    return _emit_report(args, report)


def cmd_plumbing(args) -> int:
    G = PlumbingGraph.from_json(_load_json(args.graph))
    labels = [v.label for v in G.vertices]
    if args.action == "balanced":
        out = {"balanced": is_balanced(G)}
    elif args.action == "weights":
        W = weight_matrix(G)
        out = {"labels": labels, "weights": W,
               "pairs": [{"u": labels[i], "v": labels[j], "weight": W[i][j]}
                         for i in range(len(labels)) for j in range(i + 1, len(labels))]}
    else:
        out = kernel_basis(G).to_json()
    _emit_json(args, out)
    return EXIT_OK


def cmd_corpus(args) -> int:
    if args.action == "list":
        _emit_json(args, [{"name": e.name, "mu": e.cc.mu, "g": e.cc.g, "tags": list(e.tags)}
                          for e in corpus.entries()])
    else:
        if not args.name:
            raise DomainError("corpus show needs an entry name")
        _emit_json(args, corpus.raw(args.name))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _default_precision() -> int:
    env = os.environ.get("COLORSIG_PRECISION")
    if env is None:
        return DEFAULT_PRECISION
    try:
        return int(env)
    except ValueError:
        return DEFAULT_PRECISION


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--backend", choices=["exact", "approx"], default=None,
                        help="scalar backend (default: exact when every coordinate is a root of unity)")
    common.add_argument("--precision", type=int, default=_default_precision(),
                        help="working precision in bits for the approximate backend")
    common.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE,
                        help="relative zero tolerance for approximate eigenvalues")
    common.add_argument("--out", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="colorsig",
                                     description="Colored link signatures from C-complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("signature", parents=[common], help="sigma and eta at one point")
    p.add_argument("file", help="C-complex JSON file or corpus:NAME")
    p.add_argument("--omega", required=True)
    p.set_defaults(func=cmd_signature, format="json")

    p = sub.add_parser("profile", parents=[common], help="invariants over a grid")
    p.add_argument("file")
    p.add_argument("--grid", default="default")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("classify-omega", parents=[common], help="concordance-root classification")
    p.add_argument("--omega", required=True)
    p.add_argument("--cert", help="JSON file with a Laurent polynomial certificate")
    p.add_argument("--no-auto", action="store_true", help="do not generate certificates")
    p.set_defaults(func=cmd_classify_omega, format="json")

    p = sub.add_parser("bound-check", parents=[common], help="genus or bounding-surface bound")
    p.add_argument("kind", choices=["surface", "genus"])
    p.add_argument("file")
    p.add_argument("other", nargs="?", help="second link (genus bound)")
    p.add_argument("--betti", default="0", help="comma-separated b_1 per color (surface bound)")
    p.add_argument("--components", type=int, default=1, help="components m of the surface")
    p.add_argument("--double-points", type=int, default=0)
    p.add_argument("--profile", help="cobordism profile as a JSON file or inline JSON")
    p.add_argument("--omega")
    p.add_argument("--grid", default="default")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_bound_check)

    p = sub.add_parser("concordance-check", parents=[common], help="concordance obstruction")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--omega")
    p.add_argument("--grid", default="default")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_concordance_check)

    p = sub.add_parser("plumbing", parents=[common], help="plumbing graph calculus")
    p.add_argument("action", choices=["balanced", "kernel", "weights"])
    p.add_argument("graph", help="graph JSON file")
    p.set_defaults(func=cmd_plumbing, format="json")

    p = sub.add_parser("corpus", parents=[common], help="bundled examples")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_corpus, format="json")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except IndeterminateInertiaError as exc:
        print(f"colorsig: indeterminate: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    except (ColorsigError, ValueError, OSError, KeyError) as exc:
        print(f"colorsig: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
