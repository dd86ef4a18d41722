"""Command-line front end.

Reports are JSON on stdout; ``--table`` gives plain text where it makes
sense. Run ``qcsimplex <command> -h`` for per-command flags.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from typing import Optional, Sequence

from .distance import (
    DEFAULT_DIMENSION_CAP,
    exhaustive_min_distance,
    pair_distance_vector,
    three_gen_formula_distance,
    triple_distance_table,
    two_gen_formula_distance,
)
from .gf2poly import format_octal, parse_octal
from .qcmodel import (
    build_one_gen,
    build_three_gen,
    build_two_gen,
    extend_with_block_parity,
    extend_with_unit_rows,
    spec_from_dict,
    spec_to_dict,
)
from .reproduce import TARGETS, run_target
from .search import DEFAULT_BUDGET, search_three_gen, search_two_gen
from .simplex import SimplexCode, infer_k

log = logging.getLogger("qcsimplex")


class CliError(Exception):
    pass


def _offsets(text: Optional[str]) -> tuple[int, ...]:
    if text is None or text.strip() == "":
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise CliError(f"offsets must be comma-separated integers, got {text!r}") from None


def _code(octal: Optional[str], k: Optional[int], flag: str) -> SimplexCode:
    if octal is None:
        raise CliError(f"{flag} is required")
    g = parse_octal(octal)
    return SimplexCode(k=k if k is not None else infer_k(g), g=g)


def _emit(obj, args) -> None:
    text = json.dumps(obj, indent=2 if getattr(args, "pretty", False) else None)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_spec(path: str):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: not valid JSON ({exc})") from exc
    # Accept run reports that embed a spec.
    if isinstance(obj, dict) and "spec" in obj and "m" not in obj:
        obj = obj["spec"]
    return spec_from_dict(obj)


def cmd_parse_poly(args) -> int:
    g = parse_octal(args.octal)
    info = {
        "octal": format_octal(g),
        "degree": g.degree,
        "weight": g.weight(),
        "support": g.exponents(),
    }
    if args.table:
        print(f"degree {info['degree']}, weight {info['weight']}")
        print(f"support {info['support']}")
        print(str(g))
    else:
        _emit(info, args)
    return 0


def cmd_simplex(args) -> int:
    c = _code(args.g1, args.k, "--g1")
    info = {"n": c.m, "k": c.k, "d": c.d, "generator_octal": format_octal(c.g),
            "weight_distribution": {"0": 1, str(c.d): c.m}}
    if args.table:
        print(f"[{c.m}, {c.k}, {c.d}] cyclic simplex code, generator {c.g}")
    else:
        _emit(info, args)
    return 0


def cmd_dvec(args) -> int:
    D = pair_distance_vector(_code(args.g1, args.k, "--g1"), _code(args.g2, args.k, "--g2"))
    if args.json:
        _emit({"m": D.m, "d": list(D)}, args)
    else:
        print("(" + ", ".join(map(str, D)) + ")")
    return 0


def cmd_dtable(args) -> int:
    T = triple_distance_table(
        _code(args.g1, args.k, "--g1"), _code(args.g2, args.k, "--g2"), _code(args.g3, args.k, "--g3")
    )
    if args.json:
        _emit({"m": T.m, "d": T.d.tolist()}, args)
    else:
        for row in T.d.tolist():
            print(" ".join(f"{v:3d}" for v in row))
    return 0


def cmd_formula_d(args) -> int:
    c1 = _code(args.g1, args.k, "--g1")
    c2 = _code(args.g2, args.k, "--g2")
    a = _offsets(args.a)
    if args.g3 is None:
        d = two_gen_formula_distance(pair_distance_vector(c1, c2), a, c1.k)
        result = {"generators": 2, "a": list(a), "d": d}
    else:
        c3 = _code(args.g3, args.k, "--g3")
        b = _offsets(args.b)
        if len(b) != len(a):
            raise CliError("--a and --b need the same number of offsets")
        d = three_gen_formula_distance(
            pair_distance_vector(c1, c2), pair_distance_vector(c1, c3), pair_distance_vector(c2, c3),
            triple_distance_table(c1, c2, c3), a, b, c1.k,
        )
        result = {"generators": 3, "a": list(a), "b": list(b), "d": d}
    if args.table:
        print(d)
    else:
        _emit(result, args)
    return 0


def _search_inputs(args, names) -> dict:
    return {name: getattr(args, name) for name in names}


def cmd_search2(args) -> int:
    c1 = _code(args.g1, args.k, "--g1")
    c2 = _code(args.g2, args.k, "--g2")
    res = search_two_gen(c1, c2, args.p, mode=args.mode, seed=args.seed,
                         budget=args.budget, restarts=args.restarts)
    spec = build_two_gen(c1, c2, res.best.a)
    _emit({
        "command": "search2",
        "inputs": _search_inputs(args, ["g1", "g2", "k", "p", "mode", "seed", "budget", "restarts"]),
        "search": res.to_dict(),
        "spec": spec_to_dict(spec),
    }, args)
    return 0


def cmd_search3(args) -> int:
    c1 = _code(args.g1, args.k, "--g1")
    c2 = _code(args.g2, args.k, "--g2")
    c3 = _code(args.g3, args.k, "--g3")
    res = search_three_gen(c1, c2, c3, args.p, mode=args.mode, seed=args.seed,
                           budget=args.budget, restarts=args.restarts)
    spec = build_three_gen(c1, c2, c3, res.best.a, res.best.b)
    _emit({
        "command": "search3",
        "inputs": _search_inputs(args, ["g1", "g2", "g3", "k", "p", "mode", "seed", "budget", "restarts"]),
        "search": res.to_dict(),
        "spec": spec_to_dict(spec),
    }, args)
    return 0


def cmd_build(args) -> int:
    c1 = _code(args.g1, args.k, "--g1")
    a = _offsets(args.a)
    if args.g2 is None:
        p = args.p or 1
        spec = build_one_gen(c1, (0,) + a if a else (0,) * p)
    elif args.g3 is None:
        spec = build_two_gen(c1, _code(args.g2, args.k, "--g2"), a)
    else:
        spec = build_three_gen(c1, _code(args.g2, args.k, "--g2"), _code(args.g3, args.k, "--g3"),
                               a, _offsets(args.b))
    if args.p is not None and spec.p != args.p:
        raise CliError(f"--p {args.p} disagrees with {spec.p} blocks implied by the offsets")
    _emit(spec_to_dict(spec), args)
    return 0


def cmd_extend(args) -> int:
    spec = _load_spec(args.spec)
    if args.rows:
        patterns = []
        for pat in args.rows.split(","):
            if set(pat) - {"0", "1"}:
                raise CliError(f"--rows patterns must be 0/1 strings, got {pat!r}")
            patterns.append([c == "1" for c in pat])
        spec = extend_with_unit_rows(spec, patterns)
    if args.parity:
        spec = extend_with_block_parity(spec)
    _emit(spec_to_dict(spec), args)
    return 0


def cmd_verify(args) -> int:
    spec = _load_spec(args.spec)
    start = time.perf_counter()
    report = exhaustive_min_distance(spec, cap=args.cap, threads=args.threads)
    elapsed = time.perf_counter() - start
    log.info("verified %s in %.3f s", spec.describe(), elapsed)
    out = {
        # thread count is an execution detail and is left out so reports stay byte-identical
        "command": "verify",
        "inputs": {"spec": os.path.basename(args.spec), "cap": args.cap},
        "spec": spec_to_dict(spec),
        "report": report.to_dict(),
    }
    if args.timing:
        out["wall_time_s"] = round(elapsed, 6)
    if args.table:
        print(f"[{report.n}, {report.K}, {report.d_min}]")
        for w, c in sorted(report.weight_distribution.items()):
            print(f"{w:5d} {c}")
    else:
        _emit(out, args)
    return 0


def cmd_reproduce(args) -> int:
    checks = run_target(args.target, threads=args.threads)
    if args.json:
        _emit([c.to_dict() for c in checks], args)
    else:
        for c in checks:
            print(c.line())
        failed = sum(not c.passed for c in checks)
        print(f"{len(checks) - failed}/{len(checks)} passed")
    return 0 if all(c.passed for c in checks) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcsimplex",
        description="Quasi-cyclic codes from cyclic simplex codes: construction, search, verification.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, gens=0):
        for i in range(1, gens + 1):
            p.add_argument(f"--g{i}", help=f"generator {i} in octal, highest degree left")
        if gens:
            p.add_argument("--k", type=int, help="simplex dimension (inferred from the degree if omitted)")
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--table", action="store_true", help="plain-text output")
        p.add_argument("--pretty", action="store_true", help="indent JSON")
        p.add_argument("--out", help="write output to FILE")

    p = sub.add_parser("parse-poly", help="parse an octal polynomial")
    p.add_argument("octal")
    common(p)
    p.set_defaults(func=cmd_parse_poly)

    p = sub.add_parser("simplex", help="validate a cyclic simplex generator")
    common(p, 1)
    p.set_defaults(func=cmd_simplex)

    p = sub.add_parser("dvec", help="distance vector wt(g1 + x^i g2)")
    common(p, 2)
    p.set_defaults(func=cmd_dvec)

    p = sub.add_parser("dtable", help="distance table wt(g1 + x^i g2 + x^j g3)")
    common(p, 3)
    p.set_defaults(func=cmd_dtable)

    p = sub.add_parser("formula-d", help="closed-form minimum distance for given offsets")
    common(p, 3)
    p.add_argument("--a", help="comma-separated offsets a(1..p-1)")
    p.add_argument("--b", help="comma-separated offsets b(1..p-1)")
    p.set_defaults(func=cmd_formula_d)

    for name, gens, func in (("search2", 2, cmd_search2), ("search3", 3, cmd_search3)):
        p = sub.add_parser(name, help=f"search offsets for a {gens}-generator code")
        common(p, gens)
        p.add_argument("--p", type=int, required=True, help="number of blocks")
        p.add_argument("--mode", choices=["exhaustive", "stochastic"], default="exhaustive")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max formula evaluations")
        p.add_argument("--restarts", type=int, default=20)
        p.set_defaults(func=func)

    p = sub.add_parser("build", help="write a spec file for a 1-, 2- or 3-generator code")
    common(p, 3)
    p.add_argument("--p", type=int)
    p.add_argument("--a")
    p.add_argument("--b")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("extend", help="add unit rows and/or per-block parity to a spec")
    common(p)
    p.add_argument("--spec", required=True)
    p.add_argument("--rows", help="comma-separated per-block fill patterns, e.g. 110,101")
    p.add_argument("--parity", action="store_true", help="append one parity bit per block")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("verify", help="exhaustively verify a spec file")
    common(p)
    p.add_argument("--spec", required=True)
    p.add_argument("--threads", type=int, default=None, help="worker threads (default: all cores)")
    p.add_argument("--cap", type=int, default=DEFAULT_DIMENSION_CAP, help="max dimension to enumerate")
    p.add_argument("--timing", action="store_true", help="include wall time in the report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reproduce", help="recompute the published tables and codes")
    common(p)
    p.add_argument("target", choices=[*TARGETS, "all"])
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except (CliError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
