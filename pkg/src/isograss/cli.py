"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 precondition failure (non-isotropic input, different orbits), 4 internal
inconsistency or no witness over the base field.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .arith import format_scalar
from .errors import IsograssError, ParseError
from .forms import CaseTag, GroupParams, load_subspace, standard_space, subspace_to_json
from .invariants import classify, parse_tuple
from .orbits import CSV_COLUMNS, canonical_rep, enumerate_orbits, open_orbits, orbit_info
from .verify import ALL_CASES, SUITES, run_suites
from .witness import orbit_witness

COMMANDS = ("classify", "enumerate", "canonical", "open-orbits", "witness", "verify")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="isograss",
        description="Orbits of symmetric subgroups on isotropic Grassmannians, in exact arithmetic.",
        epilog="commands: " + ", ".join(COMMANDS),
    )
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    def group_args(p, required=True):
        p.add_argument("--case", required=required,
                       help="real-orthogonal, unitary, complex-orthogonal or symplectic")
        for name in ("p", "q", "p1", "q1"):
            p.add_argument(f"--{name}", type=int, help=f"{name} (real-orthogonal, unitary)")
        p.add_argument("--n", type=int, help="n (complex-orthogonal: dim V; symplectic: dim V = 2n)")
        p.add_argument("--m", type=int, help="m (the U block, same convention as n)")

    def out_args(p, formats=("json",)):
        p.add_argument("--out", help="write to this file instead of stdout")
        p.add_argument("--format", choices=formats, default="json")

    p = sub.add_parser("classify", help="orbit tuple and orbit data of a subspace file")
    p.add_argument("--in", dest="inputs", required=True, metavar="FILE", help="subspace JSON file")
    out_args(p)

    p = sub.add_parser("enumerate", help="orbit atlas for a group and r (all r if omitted)")
    group_args(p)
    p.add_argument("--r", type=int)
    p.add_argument("--threads", type=int, default=1, help="accepted for symmetry with verify; output is identical")
    out_args(p, ("json", "csv"))

    p = sub.add_parser("canonical", help="canonical representative of an orbit tuple")
    group_args(p)
    p.add_argument("--tuple", required=True, help="e.g. 0,0,1,0,0")
    out_args(p)

    p = sub.add_parser("open-orbits", help="open orbits in the isotropic Grassmannian of r-planes")
    group_args(p)
    p.add_argument("--r", type=int, required=True)
    out_args(p, ("json", "csv"))

    p = sub.add_parser("witness", help="element of H carrying the first subspace onto the second")
    p.add_argument("--in", dest="inputs", nargs=2, required=True, metavar="FILE")
    p.add_argument("--seed", type=int, default=0)
    out_args(p)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--case", action="append", help="restrict to this case (repeatable)")
    p.add_argument("--suites", help="comma-separated subset of: " + ", ".join(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100,
                   help="samples per space (invariance), pairs per case (witness); parity uses 100x")
    p.add_argument("--max-dim", type=int, help="largest ambient dimension (default 8, symplectic 10)")
    p.add_argument("--threads", type=int, default=1)
    out_args(p, ("json", "csv"))
    return parser


def _group(args) -> tuple[CaseTag, GroupParams]:
    try:
        case = CaseTag.parse(args.case)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if case.signed:
        params = GroupParams(p=args.p, q=args.q, p1=args.p1, q1=args.q1)
        stray = [k for k in ("n", "m") if getattr(args, k) is not None]
    else:
        params = GroupParams(n=args.n, m=args.m)
        stray = [k for k in ("p", "q", "p1", "q1") if getattr(args, k) is not None]
    if stray:
        raise ParseError(f"--{' --'.join(stray)} not used by {case.value}")
    try:
        params.validate(case)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return case, params


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _dump_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _atlas(infos, fmt: str) -> str:
    if fmt == "csv":
        return _dump_csv(CSV_COLUMNS, [i.csv_row() for i in infos])
    return _dump_json([i.to_dict() for i in infos])


def cmd_classify(args) -> int:
    S = load_subspace(args.inputs)
    t = classify(S)
    info = orbit_info(S.space.case, S.space.params, t)
    _emit(_dump_json(info.to_dict()), args.out)
    return 0


def cmd_enumerate(args) -> int:
    case, params = _group(args)
    space = standard_space(case, params)
    rs = [args.r] if args.r is not None else range(1, space.max_isotropic_dim() + 1)
    infos = [i for r in rs for i in enumerate_orbits(case, params, r)]
    _emit(_atlas(infos, args.format), args.out)
    return 0


def cmd_canonical(args) -> int:
    case, params = _group(args)
    S = canonical_rep(case, params, parse_tuple(case, args.tuple))
    _emit(_dump_json(subspace_to_json(S)), args.out)
    return 0


def cmd_open_orbits(args) -> int:
    case, params = _group(args)
    infos = [orbit_info(case, params, t) for t in open_orbits(case, params, args.r)]
    _emit(_atlas(infos, args.format), args.out)
    return 0


def cmd_witness(args) -> int:
    S, S2 = (load_subspace(path) for path in args.inputs)
    h = orbit_witness(S, S2, seed=args.seed)
    field = S.space.field
    mat = lambda M: [[format_scalar(x, field) for x in row] for row in M.rows]  # noqa: E731
    _emit(_dump_json({
        "case": S.space.case.value,
        "params": S.space.params.to_dict(),
        "tuple": list(classify(S).entries),
        "h1": mat(h.h1),
        "h2": mat(h.h2),
    }), args.out)
    return 0


def _run_one(job):
    name, seed, trials, max_dim, cases = job
    return run_suites([name], seed=seed, trials=trials, max_dim=max_dim, cases=cases)


def cmd_verify(args) -> int:
    try:
        cases = tuple(CaseTag.parse(c) for c in args.case) if args.case else ALL_CASES
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    names = [s.strip() for s in args.suites.split(",") if s.strip()] if args.suites else list(SUITES)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise ParseError(f"unknown suites {unknown}; choose from {', '.join(SUITES)}")
    if args.trials < 1 or args.threads < 1:
        raise ParseError("--trials and --threads must be positive")
    jobs = [(name, args.seed, args.trials, args.max_dim, cases) for name in SUITES if name in names]
    if args.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            results = [r for batch in pool.map(_run_one, jobs) for r in batch]
    else:
        results = [r for job in jobs for r in _run_one(job)]
    ok = all(r.ok for r in results)
    if args.format == "csv":
        text = _dump_csv(["suite", "checked", "passed", "failed", "ok"],
                         [[r.name, r.checked, r.checked - r.failed, r.failed, str(r.ok).lower()] for r in results])
    else:
        text = _dump_json({"seed": args.seed, "trials": args.trials, "max_dim": args.max_dim,
                           "cases": [c.value for c in cases], "ok": ok,
                           "suites": [r.to_dict() for r in results]})
    _emit(text, args.out)
    return 0 if ok else 1


HANDLERS = {
    "classify": cmd_classify,
    "enumerate": cmd_enumerate,
    "canonical": cmd_canonical,
    "open-orbits": cmd_open_orbits,
    "witness": cmd_witness,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return HANDLERS[args.command](args)
    except IsograssError as exc:
        print(f"isograss: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"isograss: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
