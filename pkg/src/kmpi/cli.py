"""Command-line front end: root listings, pi-system enumeration,
classification tables and verification runs.

Output is deterministic: JSON is the canonical schema (sorted keys, compact
separators), csv and markdown are lossy projections of the same objects.
Exit codes: 0 all good, 1 a mathematical counterexample was found, 2 usage
or regime error.  Data goes to stdout, diagnostics to stderr.  The env var
``KMPI_DEFAULT_BOUND`` overrides the built-in default bounds of ``verify``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import classifier, pi_systems, verifier
from .root_core import GCM2, classify_root, enumerate_finite_roots, make_gcm, norm_scaled

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2

FORMATS = ("json", "csv", "markdown")


class UsageError(ValueError):
    pass


def _parse_gcm(text: str) -> GCM2:
    try:
        a_str, b_str = text.split(",")
        g = make_gcm(int(a_str), int(b_str))
    except ValueError as exc:
        raise UsageError(f"bad --gcm value {text!r}: {exc}") from exc
    if g.swapped:
        print(f"note: normalized ({a_str},{b_str}) to ({g.a},{g.b})", file=sys.stderr)
    return g


def _parse_grid(text: str) -> list[GCM2]:
    points = [p for p in text.split(";") if p]
    if not points:
        raise UsageError(f"empty --grid value {text!r}")
    return [_parse_gcm(p) for p in points]


def _parse_sign(text: str) -> int:
    if text == "+":
        return 1
    if text == "-":
        return -1
    raise UsageError(f"bad sign {text!r}, expected + or -")


def _parse_system(text: str) -> list[tuple[int, int, int]]:
    """Parse 'family:index:sign' triples, e.g. '1:1:+,2:0:+'."""
    triples = []
    for part in text.split(","):
        pieces = part.split(":")
        if len(pieces) != 3:
            raise UsageError(f"bad system element {part!r}, expected family:index:sign")
        try:
            family, index = int(pieces[0]), int(pieces[1])
        except ValueError as exc:
            raise UsageError(f"bad system element {part!r}: {exc}") from exc
        triples.append((family, index, _parse_sign(pieces[2])))
    if not triples:
        raise UsageError("empty system literal")
    return triples


def _triple_str(family: int, index: int, sign: int) -> str:
    return f"{family}:{index}:{'+' if sign > 0 else '-'}"


def _json_out(payload) -> None:
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _csv_out(header: list[str], rows: list[list]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _markdown_out(header: list[str], rows: list[list]) -> None:
    print("| " + " | ".join(header) + " |")
    print("| " + " | ".join("---" for _ in header) + " |")
    for row in rows:
        print("| " + " | ".join(str(c) for c in row) + " |")


def _gcm_json(g: GCM2) -> dict:
    return {"a": g.a, "b": g.b}


def _matrix_json(entries) -> list[list[int]]:
    return [list(row) for row in entries]


# ---------------------------------------------------------------------------


def _cmd_roots(args) -> int:
    g = _parse_gcm(args.gcm)
    rows = []
    if g.is_finite():
        for v in enumerate_finite_roots(g):
            cls = classify_root(g, v)
            rows.append(
                {"family": None, "index": None, "sign": None, "x": v.x, "y": v.y,
                 "scaled_norm": norm_scaled(g, v), "class": cls.value}
            )
    else:
        if args.max_index is None:
            raise UsageError("--max-index is required for non-finite matrices")
        for sr in pi_systems.enumerate_real_roots(g, args.max_index, args.negatives):
            rows.append(
                {"family": sr.index.family, "index": sr.index.j, "sign": sr.sign,
                 "x": sr.vec.x, "y": sr.vec.y,
                 "scaled_norm": norm_scaled(g, sr.vec),
                 "class": classify_root(g, sr.vec).value}
            )
    if args.format == "json":
        _json_out({"command": "roots", "gcm": _gcm_json(g), "rows": rows})
    else:
        header = ["family", "index", "sign", "x", "y", "scaled_norm", "class"]
        table = [
            ["" if r[h] is None else r[h] for h in header]
            for r in rows
        ]
        if args.format == "csv":
            _csv_out(header, table)
        else:
            _markdown_out(header, table)
    return EXIT_OK


def _cmd_pi_systems(args) -> int:
    g = _parse_gcm(args.gcm)
    mode = pi_systems.EXTENDED if args.extended else pi_systems.STANDARD
    include_negatives = args.signs == "all"
    systems = pi_systems.enumerate_pi_systems(
        g, args.max_index, args.max_size, include_negatives, mode
    )
    counts: dict[str, int] = {}
    rendered = []
    for s in systems:
        size = len(s.elements)
        counts[str(size)] = counts.get(str(size), 0) + 1
        literal = ",".join(
            _triple_str(el.index.family, el.index.j, el.sign) for el in s.elements
        )
        rendered.append(
            {
                "size": size,
                "system": literal,
                "elements": [
                    {"family": el.index.family, "index": el.index.j, "sign": el.sign,
                     "x": el.vec.x, "y": el.vec.y}
                    for el in s.elements
                ],
            }
        )
    if args.format == "json":
        _json_out(
            {
                "command": "pi_systems",
                "gcm": _gcm_json(g),
                "max_index": args.max_index,
                "max_size": args.max_size,
                "signs": args.signs,
                "mode": mode,
                "counts": counts,
                "total": len(systems),
                "systems": rendered,
            }
        )
    else:
        header = ["size", "system"]
        table = [[r["size"], r["system"]] for r in rendered]
        if args.format == "csv":
            _csv_out(header, table)
        else:
            _markdown_out(header, table)
            summary = ", ".join(f"size {k}: {v}" for k, v in sorted(counts.items()))
            print(f"total {len(systems)} ({summary})")
    return EXIT_OK


def _cmd_gcm_of(args) -> int:
    g = _parse_gcm(args.gcm)
    triples = _parse_system(args.system)
    try:
        system = pi_systems.from_triples(g, triples)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ok, witness = pi_systems.is_pi_system(g, system)
    if not ok:
        payload = {
            "command": "gcm_of",
            "gcm": _gcm_json(g),
            "error": "not_a_pi_system",
            "violation": {
                "alpha": _triple_str(
                    witness.alpha.index.family, witness.alpha.index.j, witness.alpha.sign
                ),
                "beta": _triple_str(
                    witness.beta.index.family, witness.beta.index.j, witness.beta.sign
                ),
                "difference": [witness.difference.x, witness.difference.y],
                "difference_class": witness.difference_class.value,
            },
        }
        if args.format == "json":
            _json_out(payload)
        else:
            v = payload["violation"]
            print(
                f"not a pi-system: {v['alpha']} - {v['beta']} = "
                f"{v['difference']} is {v['difference_class']}"
            )
        return EXIT_COUNTEREXAMPLE
    matrix = pi_systems.derived_gcm(g, system)
    order = [
        _triple_str(el.index.family, el.index.j, el.sign) for el in matrix.order
    ]
    if args.format == "json":
        _json_out(
            {
                "command": "gcm_of",
                "gcm": _gcm_json(g),
                "system": ",".join(order),
                "matrix": _matrix_json(matrix.entries),
                "cartan_type": matrix.cartan_type(),
            }
        )
    else:
        header = ["system", "matrix", "cartan_type"]
        row = [
            ",".join(order),
            json.dumps(_matrix_json(matrix.entries), separators=(",", ":")),
            matrix.cartan_type(),
        ]
        if args.format == "csv":
            _csv_out(header, [row])
        else:
            _markdown_out(header, [row])
    return EXIT_OK


def _cmd_table(args) -> int:
    g = _parse_gcm(args.gcm)
    if (g.a, g.b) == (4, 1):
        raise UsageError(
            "(4, 1) has no classification-table rows; "
            "run `kmpi verify --check appendix_thm41` instead"
        )
    try:
        rows = classifier.classification_table(g, args.rows)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        _json_out(
            {
                "command": "table",
                "gcm": _gcm_json(g),
                "rows": [
                    {
                        "case": r.case,
                        "subcase": r.subcase,
                        "j": r.jk[0],
                        "k": r.jk[1],
                        "symmetric": r.symmetric,
                        "matrix": _matrix_json(r.matrix),
                        "cartan_type": r.cartan_type,
                    }
                    for r in rows
                ],
            }
        )
    else:
        header = ["case", "sigma", "symmetric", "matrix", "type"]
        table = [
            [
                r.case,
                f"({r.jk[0]},{r.jk[1]})",
                "yes" if r.symmetric else "no",
                json.dumps(_matrix_json(r.matrix), separators=(",", ":")),
                r.cartan_type,
            ]
            for r in rows
        ]
        if args.format == "csv":
            _csv_out(header, table)
        else:
            _markdown_out(header, table)
    return EXIT_OK


def _report_json(r: verifier.CheckReport) -> dict:
    return {
        "check": r.check,
        "gcm": "appendix" if r.gcm is None else {"a": r.gcm[0], "b": r.gcm[1]},
        "bound": r.bound,
        "passed": r.passed,
        "counterexamples": r.counterexamples,
        "elapsed_ms": round(r.elapsed_ms, 3),
    }


def _cmd_verify(args) -> int:
    bound = args.bound
    if bound is None:
        env = os.environ.get("KMPI_DEFAULT_BOUND")
        if env is not None:
            try:
                bound = int(env)
            except ValueError as exc:
                raise UsageError(f"bad KMPI_DEFAULT_BOUND {env!r}") from exc
    if args.gcm and args.grid:
        raise UsageError("give either --gcm or --grid, not both")
    grid = _parse_grid(args.grid) if args.grid else (
        [_parse_gcm(args.gcm)] if args.gcm else []
    )
    try:
        if args.check == "all":
            if not grid:
                raise UsageError("--check all needs --gcm or --grid")
            reports = verifier.run_all(grid, bound)
        elif args.check not in verifier.CHECK_IDS:
            raise UsageError(f"unknown check id {args.check!r}")
        elif grid:
            reports = [verifier.run_check(args.check, g, bound) for g in grid]
        elif args.check in ("appendix_roots", "appendix_thm41"):
            reports = [verifier.run_check(args.check, None, bound)]
        else:
            raise UsageError(f"check {args.check} needs --gcm or --grid")
    except verifier.RegimeError as exc:
        raise UsageError(str(exc)) from exc
    payload = [_report_json(r) for r in reports]
    if args.format == "json":
        _json_out(payload)
    else:
        header = ["check", "gcm", "bound", "passed", "counterexamples", "elapsed_ms"]
        table = [
            [
                p["check"],
                "appendix" if p["gcm"] == "appendix" else f"{p['gcm']['a']},{p['gcm']['b']}",
                p["bound"],
                p["passed"],
                len(p["counterexamples"]),
                p["elapsed_ms"],
            ]
            for p in payload
        ]
        if args.format == "csv":
            _csv_out(header, table)
        else:
            _markdown_out(header, table)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_COUNTEREXAMPLE


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kmpi",
        description="Root combinatorics and pi-system verification for "
        "rank-2 Kac-Moody matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="list real roots with norms and classes")
    p.add_argument("--gcm", required=True, metavar="A,B")
    p.add_argument("--max-index", type=int, default=None, metavar="N")
    p.add_argument("--negatives", action="store_true")
    p.add_argument("--format", choices=FORMATS, default="json")
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("pi-systems", help="enumerate pi-systems in a window")
    p.add_argument("--gcm", required=True, metavar="A,B")
    p.add_argument("--max-index", type=int, required=True, metavar="N")
    p.add_argument("--max-size", type=int, required=True, metavar="S")
    p.add_argument("--signs", choices=("pos", "all"), default="pos")
    p.add_argument("--extended", action="store_true")
    p.add_argument("--format", choices=FORMATS, default="json")
    p.set_defaults(func=_cmd_pi_systems)

    p = sub.add_parser("gcm-of", help="derived Cartan matrix of a pi-system")
    p.add_argument("--gcm", required=True, metavar="A,B")
    p.add_argument("--system", required=True, metavar="F:J:S,...")
    p.add_argument("--format", choices=FORMATS, default="json")
    p.set_defaults(func=_cmd_gcm_of)

    p = sub.add_parser("table", help="classification table of derived matrices")
    p.add_argument("--gcm", required=True, metavar="A,B")
    p.add_argument("--rows", type=int, default=5, metavar="J")
    p.add_argument("--format", choices=FORMATS, default="json")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="run brute-force verification checks")
    p.add_argument("--check", required=True, metavar="ID|all")
    p.add_argument("--gcm", metavar="A,B")
    p.add_argument("--grid", metavar="A,B;C,D;...")
    p.add_argument("--bound", type=int, default=None, metavar="K")
    p.add_argument("--format", choices=FORMATS, default="json")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
