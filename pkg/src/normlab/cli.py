"""normlab command line.

Usage:
    normlab norm --norm nakano --vector '{"entries": [["b",1,1.0]]}'
    normlab probe usm --norm sup --eps 0.5
    normlab certify ld2p --norm lp --p 2 --alpha b:1 --dim 16 [--explain]
    normlab asq --base '{"norm":"lp","p":2}' --random 5 --dim 30 --eps 0.01
    normlab scenario hM --dim 1000 [--format csv]

Exit codes: 0 success (an inconclusive certificate is a success),
2 usage or parse error, 3 engine error.  NORMLAB_TOL overrides the
default solver tolerance.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from .certificates import (
    certify_no_ld2p, certify_no_ld2p_linfty, explain, thm43_symmetric_check,
)
from .errors import NormlabError
from .modulars import DEFAULT_TOL
from .norms import eval_norm, spec_from_config, z_norm
from .probes import (
    SliceSpec, asq_witness, e_alpha_sup, midpoint_sc_probe, phi_strictness_probe,
    slice_diameter_lb, strict_monotonicity_probe,
)
from .scenarios import SCENARIOS, random_unit_z, run_scenario
from .vectors import SparseVector, basis, parse_coordinate

DEFAULT_SEED = 0


class UsageError(Exception):
    pass


def _load_json(text: str):
    """Inline JSON, or a path to a JSON file."""
    try:
        if text.lstrip().startswith(("{", "[")):
            return json.loads(text)
        return json.loads(Path(text).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {text!r}: {exc}") from exc


def _spec(args):
    try:
        if getattr(args, "config", None):
            return spec_from_config(_load_json(args.config))
        cfg = {"norm": args.norm}
        if args.norm == "lp":
            cfg["p"] = args.p
        if args.norm == "z":
            cfg["base"] = _load_json(args.base) if args.base else {"norm": "lp", "p": 2.0}
        return spec_from_config(cfg)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad norm config: {exc}") from exc


def _vector(text):
    try:
        return SparseVector.from_json(_load_json(text))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad vector literal: {exc}") from exc


def _coord(text):
    try:
        return parse_coordinate(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(obj):
    print(json.dumps(obj, indent=2, sort_keys=False))


def cmd_norm(args):
    spec = _spec(args)
    v = _vector(args.vector)
    _emit({"value": eval_norm(spec, v, args.tol), "spec": spec.to_json(), "tol": args.tol})


def cmd_probe(args):
    spec = _spec(args)
    kind = args.kind
    if kind == "usm":
        rep = e_alpha_sup(spec, _coord(args.alpha), args.eps, args.dim, args.budget,
                          args.seed, args.tol)
        out = rep.to_dict()
    elif kind == "slice":
        f = _vector(args.functional) if args.functional else basis(_coord(args.alpha))
        rep = slice_diameter_lb(spec, SliceSpec(f, args.eps), args.dim, args.budget,
                                args.seed, args.tol)
        out = rep.to_dict()
    elif kind == "monotone":
        out = strict_monotonicity_probe(spec, args.trials, args.seed, tol=args.tol).to_dict()
    elif kind == "midpoint":
        out = midpoint_sc_probe(spec, args.trials, args.seed, tol=args.tol).to_dict()
    else:
        out = phi_strictness_probe(spec, args.trials, args.seed, tol=args.tol).to_dict()
    out["spec"] = spec.to_json()
    _emit(out)


def cmd_certify(args):
    spec = _spec(args)
    common = dict(dim=args.dim, tol=args.margin, seed=args.seed, trials=args.trials,
                  solver_tol=args.tol)
    if args.kind == "ld2p":
        res = certify_no_ld2p(spec, _coord(args.alpha), **common)
    elif args.kind == "ld2p-linfty":
        res = certify_no_ld2p_linfty(spec, _coord(args.alpha), **common)
    else:
        res = thm43_symmetric_check(spec, **common)
    out = res.to_dict()
    if args.explain and res.status == "certificate":
        out["explain"] = explain(res)
    _emit(out)


def cmd_asq(args):
    base_spec = spec_from_config(_load_json(args.base)) if args.base else spec_from_config(
        {"norm": "lp", "p": 2.0})
    if args.points:
        raw = _load_json(args.points)
        if not isinstance(raw, list):
            raise UsageError("--points must hold a JSON list of vector literals")
        points = [SparseVector.from_json(p) for p in raw]
    else:
        rng = np.random.default_rng(args.seed)
        points = [random_unit_z(rng, base_spec, args.dim, args.dim, args.tol)
                  for _ in range(args.random)]
    h = asq_witness(base_spec, points, args.eps, args.search_dim, args.tol)
    norms = [z_norm(base_spec, z + h, args.tol) for z in points]
    _emit({
        "h": h.to_json(), "h_norm": z_norm(base_spec, h, args.tol),
        "max_norm_z_plus_h": max(norms, default=None), "eps": args.eps,
        "check": all(n <= 1 + args.eps for n in norms),
        "seed": args.seed, "tol": args.tol, "base": base_spec.to_json(),
    })


def cmd_scenario(args):
    rep = run_scenario(args.name, args.dim, args.seed, args.tol)
    if args.format == "csv":
        sys.stdout.write(rep.to_csv())
    else:
        _emit(rep.to_dict())


def _add_norm_args(p):
    p.add_argument("--config", help="norm config as JSON text or file path")
    p.add_argument("--norm", default="lp",
                   choices=["sup", "l1", "lp", "day", "nakano", "orlicz-m", "z"])
    p.add_argument("--p", type=float, default=2.0, help="exponent for --norm lp")
    p.add_argument("--base", help="base norm config for --norm z")


def _default_tol():
    env = os.environ.get("NORMLAB_TOL")
    if env is None:
        return DEFAULT_TOL
    try:
        tol = float(env)
    except ValueError:
        raise UsageError(f"NORMLAB_TOL is not a number: {env!r}")
    if not tol > 0:
        raise UsageError("NORMLAB_TOL must be positive")
    return tol


def build_parser(default_tol=DEFAULT_TOL) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="normlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seed=True):
        p.add_argument("--tol", type=float, default=default_tol)
        if seed:
            p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("norm", help="evaluate a norm")
    _add_norm_args(p)
    p.add_argument("--vector", required=True, help="vector literal (JSON text or path)")
    common(p, seed=False)
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("probe", help="empirical geometry probes")
    p.add_argument("kind", choices=["usm", "slice", "monotone", "midpoint", "phi-strict"])
    _add_norm_args(p)
    p.add_argument("--alpha", default="b:1")
    p.add_argument("--eps", type=float, default=0.1)
    p.add_argument("--dim", type=int, default=16)
    p.add_argument("--budget", type=int, default=200)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--functional", help="slice functional as a vector literal")
    common(p)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("certify", help="analytic slice-diameter certificates")
    p.add_argument("kind", choices=["ld2p", "ld2p-linfty", "symmetric"])
    _add_norm_args(p)
    p.add_argument("--alpha", default="b:1")
    p.add_argument("--dim", type=int, default=16)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--margin", type=float, default=1e-9, help="required l - 1")
    p.add_argument("--explain", action="store_true")
    common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("asq", help="almost-square witness in the renormed space")
    p.add_argument("--base", help="base norm config (default lp 2)")
    p.add_argument("--points", help="JSON list of vector literals")
    p.add_argument("--random", type=int, default=5, help="number of random unit points")
    p.add_argument("--dim", type=int, default=30, help="base and tail size of random points")
    p.add_argument("--search-dim", type=int, default=100_000, help="largest tail index for h")
    p.add_argument("--eps", type=float, default=0.01)
    common(p)
    p.set_defaults(func=cmd_asq)

    p = sub.add_parser("scenario", help="reproduce a worked example")
    p.add_argument("name", choices=sorted(SCENARIOS))
    p.add_argument("--dim", type=int)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    common(p)
    p.set_defaults(func=cmd_scenario)
    return parser


def main(argv=None) -> int:
    try:
        parser = build_parser(_default_tol())
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NormlabError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
