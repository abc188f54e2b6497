"""Command-line front end over the grid text format.

Grids are read from a file path or from standard input when the path is
``-``.  Every subcommand accepts ``--format {text,json}``; the json form is
a stable machine-readable mirror of the text report.  Exit status: 0 on
success, 1 on domain errors (bad shapes, out-of-domain parameters, budget
overruns, a failed table verification), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Sequence

from . import bounds as bounds_mod
from . import conjugacy as conj_mod
from . import palindromes as pal_mod
from . import search as search_mod
from .word2d import Word2D, alph, borders

_CONSTRUCTORS = {
    "binary-min": lambda q, pr, pc: bounds_mod.construct_binary_min_word(pr, pc),
    "q-min": lambda q, pr, pc: bounds_mod.construct_q_min_word(q, pr, pc),
    "q3-nontrivial": lambda q, pr, pc: bounds_mod.construct_q3_nontrivial_word(pr, pc),
    "q-nontrivial": lambda q, pr, pc: bounds_mod.construct_q_nontrivial_word(q, pr, pc),
}
_NEEDS_Q = ("q-min", "q-nontrivial")


def _read_word(path: str) -> Word2D:
    if path == "-":
        text = sys.stdin.read()
    else:
        text = Path(path).read_text(encoding="utf-8")
    w = Word2D.from_text(text)
    exotic = sorted(c for c in alph(w) if ord(c) > 127)
    if exotic:
        print(
            "warning: non-ASCII symbols in input: " + " ".join(exotic),
            file=sys.stderr,
        )
    return w


def _jsonable(value: object) -> object:
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _emit(args: argparse.Namespace, payload: dict, lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(_jsonable(payload), indent=2))
    else:
        for line in lines:
            print(line)


def _grid_lines(w: Word2D) -> list[str]:
    return list(w.lines)


def _cmd_analyze(args: argparse.Namespace) -> int:
    w = _read_word(args.grid)
    if not w:
        raise ValueError("analyze needs a non-empty grid")
    counts = {
        kind: pal_mod.enumerate_palindromic_factors(w, kind).count
        for kind in pal_mod.KINDS
    }
    letters = sorted(alph(w))
    is_pal = pal_mod.is_palindrome_2d(w)
    is_hv = pal_mod.is_hv_palindrome(w)
    nborders = len(borders(w))
    lines = [
        f"shape: {w.rows}x{w.cols}",
        "alphabet: " + " ".join(letters),
        f"2D-palindrome: {'yes' if is_pal else 'no'}",
        f"HV-palindrome: {'yes' if is_hv else 'no'}",
        f"borders: {nborders}",
    ]
    lines += [f"factors {kind}: {counts[kind]}" for kind in pal_mod.KINDS]
    payload = {
        "shape": list(w.shape),
        "alphabet": letters,
        "is_palindrome_2d": is_pal,
        "is_hv_palindrome": is_hv,
        "border_count": nborders,
        "factor_counts": counts,
    }
    _emit(args, payload, lines)
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    w = _read_word(args.grid)
    if not w:
        raise ValueError("enumerate needs a non-empty grid")
    fs = pal_mod.enumerate_palindromic_factors(w, args.kind)
    payload = {
        "kind": fs.kind,
        "count": fs.count,
        "factors": [
            {"shape": list(f.shape), "lines": _grid_lines(f)}
            for f in fs.sorted_members()
        ],
    }
    _emit(args, payload, fs.to_report().splitlines())
    return 0


def _cmd_conjugates(args: argparse.Namespace) -> int:
    w = _read_word(args.grid)
    report = conj_mod.pal_conjugates(w)
    ordered = sorted(report.pal_members, key=lambda v: v.lines)
    lines = [
        f"base shape: {w.rows}x{w.cols}",
        f"class size: {report.class_size}",
        f"pal members: {report.pal_count}",
        f"hv members: {report.hv_count}",
    ]
    members = []
    for v in ordered:
        i, j = report.witness_rotations[v]
        lines.append(f"pal member (cols={i}, rows={j}):")
        lines.extend(v.lines)
        members.append(
            {
                "rotation": [i, j],
                "lines": _grid_lines(v),
                "hv": v in report.hv_members,
            }
        )
    payload = {
        "base": _grid_lines(w),
        "class_size": report.class_size,
        "pal_count": report.pal_count,
        "hv_count": report.hv_count,
        "pal_members": members,
    }
    _emit(args, payload, lines)
    return 0


def _piece_lines(name: str, piece: Word2D | None) -> list[str]:
    if piece is None:
        return [f"{name}: (absent)"]
    if not piece:
        return [f"{name}: (empty)"]
    return [f"{name}:"] + list(piece.lines)


def _cmd_decompose(args: argparse.Namespace) -> int:
    w = _read_word(args.grid)
    d = pal_mod.hv_decompose(w)
    parity = f"{'odd' if d.parity[0] else 'even'}/{'odd' if d.parity[1] else 'even'}"
    lines = [f"shape: {d.shape[0]}x{d.shape[1]} parity: {parity}"]
    lines += _piece_lines("u", d.u)
    lines += _piece_lines("p1", d.p1)
    lines += _piece_lines("p2", d.p2)
    lines.append(f"x: {d.x}" if d.x is not None else "x: (absent)")
    payload = {
        "shape": list(d.shape),
        "parity": list(d.parity),
        "u": _grid_lines(d.u),
        "p1": None if d.p1 is None else _grid_lines(d.p1),
        "p2": None if d.p2 is None else _grid_lines(d.p2),
        "x": d.x,
    }
    _emit(args, payload, lines)
    return 0


def _cmd_pattern(args: argparse.Namespace) -> int:
    w = _read_word(args.grid)
    occ = pal_mod.find_forbidden_pattern(w)
    if occ is None:
        _emit(args, {"pattern": None}, ["none"])
        return 0
    lines = [
        f"rows {occ.i1}-{occ.i2} cols {occ.j1}-{occ.j2} corners x={occ.x} y={occ.y}"
    ]
    payload = {
        "pattern": {
            "i1": occ.i1,
            "i2": occ.i2,
            "j1": occ.j1,
            "j2": occ.j2,
            "x": occ.x,
            "y": occ.y,
        }
    }
    _emit(args, payload, lines)
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    family = args.family
    if family in _NEEDS_Q and args.q is None:
        raise ValueError(f"family {family} requires --q")
    pr, pc = args.periods
    w = _CONSTRUCTORS[family](args.q, pr, pc)
    payload = {
        "family": family,
        "q": args.q,
        "periods": [pr, pc],
        "shape": list(w.shape),
        "lines": _grid_lines(w),
    }
    _emit(args, payload, list(w.lines))
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    formula = bounds_mod.FAMILIES[args.family]
    supplied = {
        "m": args.m,
        "n": args.n,
        "q": args.q,
        "palindromic": args.palindromic or None,
        "nontrivial": args.nontrivial or None,
    }
    params = {k: v for k, v in supplied.items() if v is not None and k in formula.params}
    missing = [
        p
        for p in formula.params
        if p not in params and p not in ("palindromic", "nontrivial")
    ]
    if missing:
        raise ValueError(
            f"family {args.family} needs " + ", ".join(f"--{p}" for p in missing)
        )
    value = formula.evaluate(**params)
    shown = "inf" if isinstance(value, float) and math.isinf(value) else value
    arg_text = ", ".join(f"{k}={v}" for k, v in params.items())
    payload = {"family": args.family, "params": params, "value": shown}
    _emit(args, payload, [f"{args.family}({arg_text}) = {shown}"])
    return 0


def _search_payload(res: search_mod.SearchResult) -> dict:
    return {
        "q": res.q,
        "shape": list(res.shape),
        "kind": res.kind,
        "objective": res.objective,
        "optimum": res.optimum,
        "words_scanned": res.words_scanned,
        "elapsed_seconds": round(res.elapsed_seconds, 6),
        "restricted_to": res.restricted_to,
        "witnesses": [_grid_lines(w) for w in res.witnesses],
    }


def _cmd_search(args: argparse.Namespace) -> int:
    m, n = args.shape
    if args.restrict:
        res = search_mod.exhaustive_extremum_restricted(
            args.q,
            m,
            n,
            kind=args.kind,
            objective=args.objective,
            restrict=args.restrict,
            budget=args.budget,
            max_witnesses=args.witnesses,
        )
    else:
        res = search_mod.exhaustive_extremum(
            args.q,
            m,
            n,
            kind=args.kind,
            objective=args.objective,
            budget=args.budget,
            max_witnesses=args.witnesses,
            threads=args.threads,
        )
    scope = f" restrict={res.restricted_to}" if res.restricted_to else ""
    lines = [
        f"q={res.q} shape={m}x{n} kind={res.kind} objective={res.objective}"
        f"{scope} optimum={res.optimum} scanned={res.words_scanned}"
        f" elapsed={res.elapsed_seconds:.2f}s"
    ]
    for w in res.witnesses:
        lines.append("witness:")
        lines.extend(w.lines)
    _emit(args, _search_payload(res), lines)
    return 0


def _cmd_verify_table1(args: argparse.Namespace) -> int:
    report = search_mod.verify_table(budget=args.budget, threads=args.threads)
    lines = []
    for row in report.rows:
        m, n = row.shape
        verdict = "ok" if row.matches else "MISMATCH"
        lines.append(
            f"{m}x{n}: achieved {row.achieved} expected {row.expected}"
            f" bound {row.bound} gap {row.gap} {verdict}"
        )
    lines.append("all rows match" if report.ok else "verification FAILED")
    payload = {
        "rows": [
            {
                "shape": list(r.shape),
                "achieved": r.achieved,
                "expected": r.expected,
                "bound": r.bound,
                "gap": r.gap,
                "matches": r.matches,
            }
            for r in report.rows
        ],
        "ok": report.ok,
        "elapsed_seconds": round(report.elapsed_seconds, 6),
    }
    _emit(args, payload, lines)
    return 0 if report.ok else 1


def _add_grid_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "grid",
        nargs="?",
        default="-",
        help="path to a grid text file, or - for standard input (default)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridpal",
        description="Palindromic structure of two-dimensional words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.set_defaults(handler=handler)
        p.add_argument(
            "--format", choices=("text", "json"), default="text",
            help="output format (default text)",
        )
        return p

    p = add("analyze", _cmd_analyze, "summarize a grid's palindromic structure")
    _add_grid_arg(p)

    p = add("enumerate", _cmd_enumerate, "list distinct palindromic factors")
    _add_grid_arg(p)
    p.add_argument(
        "--kind", choices=pal_mod.KINDS, default="pal2d",
        help="factor kind to enumerate (default pal2d)",
    )

    p = add("conjugates", _cmd_conjugates, "scan the conjugacy class for palindromes")
    _add_grid_arg(p)

    p = add("decompose", _cmd_decompose, "split an HV-palindrome into its pieces")
    _add_grid_arg(p)

    p = add("pattern", _cmd_pattern, "find the first non-HV palindromic factor")
    _add_grid_arg(p)

    p = add("construct", _cmd_construct, "build an extremal periodic word")
    p.add_argument("--family", choices=sorted(_CONSTRUCTORS), required=True)
    p.add_argument("--q", type=int, help="alphabet size (q-min, q-nontrivial)")
    p.add_argument(
        "--periods", type=int, nargs=2, default=(2, 2), metavar=("R", "C"),
        help="block repetitions down and across (default 2 2)",
    )

    p = add("bound", _cmd_bound, "evaluate a closed-form bound")
    p.add_argument("family", choices=sorted(bounds_mod.FAMILIES))
    p.add_argument("-m", type=int, help="row count")
    p.add_argument("-n", type=int, help="column count")
    p.add_argument("-q", type=int, help="alphabet size")
    p.add_argument(
        "--palindromic", action="store_true",
        help="max-pal-in-2row: the word is itself a palindrome",
    )
    p.add_argument(
        "--nontrivial", action="store_true",
        help="min-hv-infinite: require a non-trivial HV-palindrome",
    )

    p = add("search", _cmd_search, "exhaustive extremal search")
    p.add_argument("--q", type=int, required=True, help="alphabet size")
    p.add_argument(
        "--shape", type=int, nargs=2, required=True, metavar=("M", "N"),
    )
    p.add_argument("--kind", choices=("pal2d", "hv"), default="hv")
    p.add_argument("--objective", choices=("max", "min"), default="max")
    p.add_argument(
        "--budget", type=int, default=None,
        help="word budget (default: GRIDPAL_BUDGET or 2^24)",
    )
    p.add_argument("--witnesses", type=int, default=4, help="witness limit")
    p.add_argument("--threads", type=int, default=1, help="worker processes")
    p.add_argument(
        "--restrict", choices=sorted(search_mod._RESTRICTIONS), default=None,
        help="scan only palindromic carriers of this kind",
    )

    p = add("verify-table1", _cmd_verify_table1, "re-run the pinned search table")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--threads", type=int, default=1)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
