"""Command-line interface.

Exit codes: 0 success, 2 domain error (a JSON object with an ``error`` field
is written to stdout), 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .braid import BraidWord, parse_braid, parse_numeric
from .cache import Cache, resolve_cache_dir
from .cover import bottom_left_entry, cover_data, is_unknot_2bridge, torus_slope
from .diagram import export_diagram
from .dynamics import DEFAULT_MAX_ITER, DEFAULT_TOL, entropy_details
from .errors import IoError, NoConvergence, PlatError
from .family import distinctness_witnesses, generate_family
from .plat import fishnet_parse, is_knot, jm_distance, plat_components
from .report import cached_invariants, round_entropy

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        exc = UsageError(message)
        exc.reported = True
        raise exc


def _common() -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--cache-dir", default=None, help="cache directory (or $PLATKNOTS_CACHE_DIR)")
    return p


def _braid_args() -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    p.add_argument("--braid", required=True, help='word such as "s2^2 s1^-1 s3"')
    p.add_argument("--strands", required=True, type=int)
    return p


def build_parser() -> argparse.ArgumentParser:
    common, braid = _common(), _braid_args()
    parser = _Parser(prog="platknots", description="Invariants of plat closures of braids.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("components", parents=[common, braid], help="plat components and bridges")

    p = sub.add_parser("entropy", parents=[common, braid], help="topological entropy")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)

    sub.add_parser("distance", parents=[common, braid], help="exact distance of a highly twisted plat")
    sub.add_parser("cover", parents=[common, braid], help="homology of the double branched cover")

    p = sub.add_parser("family", parents=[common, braid], help="family of knot powers")
    p.add_argument("--max-power", type=int, default=9)
    p.add_argument("--assume-generic", action="store_true")
    p.add_argument("--witnesses", action="store_true", help="add genus-based distinctness witnesses")

    p = sub.add_parser("export", parents=[common, braid], help="diagram as pd, gauss or svg")
    p.add_argument("--diagram", default="pd", help="pd | gauss | svg")

    p = sub.add_parser("batch", parents=[common], help="one numeric braid per line")
    p.add_argument("file")
    p.add_argument("--workers", type=int, default=1)
    return parser


def _word(args) -> BraidWord:
    return parse_braid(args.braid, args.strands)


def _cmd_components(args):
    return plat_components(_word(args)).as_dict()


def _cmd_entropy(args):
    w = _word(args)
    res = entropy_details(w, args.tol, args.max_iter)
    if not res.converged:
        raise NoConvergence(
            f"entropy did not settle within {args.max_iter} iterations",
            estimate=res.value,
            iterations=res.iterations,
        )
    return {"entropy": round_entropy(res.value), "iterations": res.iterations, "converged": True}


def _cmd_distance(args):
    g = fishnet_parse(_word(args))
    return {"width": g.width, "height": g.height, "distance": jm_distance(g)}


def _cmd_cover(args):
    w = _word(args)
    out = cover_data(w).as_dict()
    if w.strands == 4:
        out["bottom_left_entry"] = bottom_left_entry(w)
        out["slope"] = list(torus_slope(w))
        out["unknot"] = is_unknot_2bridge(w) if is_knot(w) else None
    return out


def _cmd_family(args):
    if args.max_power < 1:
        raise UsageError("--max-power must be at least 1")
    report = generate_family(_word(args), args.max_power, args.assume_generic)
    out = report.as_dict()
    if args.witnesses:
        out["witnesses"] = [w._asdict() for w in distinctness_witnesses(report)]
    return out


def _cmd_export(args):
    return export_diagram(_word(args), args.diagram)


def _batch_line(item):
    lineno, text, cache_dir = item
    record = {"line": lineno}
    try:
        w = parse_numeric(text)
        cache = Cache(cache_dir) if cache_dir else None
        record.update(cached_invariants(w, cache))
    except PlatError as exc:
        record.update(_error_body(exc))
    return record


def _cmd_batch(args):
    try:
        with open(args.file, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise IoError(f"cannot read {args.file}: {exc.strerror}") from exc
    cache_dir = resolve_cache_dir(args.cache_dir)
    items = [
        (n, line, str(cache_dir) if cache_dir else None)
        for n, line in enumerate(lines, start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as ex:
            return list(ex.map(_batch_line, items))
    return [_batch_line(it) for it in items]


COMMANDS = {
    "components": _cmd_components,
    "entropy": _cmd_entropy,
    "distance": _cmd_distance,
    "cover": _cmd_cover,
    "family": _cmd_family,
    "export": _cmd_export,
    "batch": _cmd_batch,
}


def _error_body(exc: PlatError) -> dict:
    body = {"error": exc.code, "message": str(exc)}
    if isinstance(exc, NoConvergence):
        body["estimate"] = None if exc.estimate is None else round_entropy(exc.estimate)
        body["iterations"] = exc.iterations
    return body


def _cell(v):
    return json.dumps(v) if isinstance(v, (list, dict)) or v is None else v


def _csv(rows: list[dict]) -> str:
    fields: list[str] = []
    for r in rows:
        for k in r:
            if k not in fields:
                fields.append(k)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: _cell(r.get(k)) for k in fields})
    return buf.getvalue()


def render(command: str, payload, fmt: str) -> str:
    if command == "batch":
        if fmt == "csv":
            return _csv([dict(sorted(r.items())) for r in payload])
        # sorted keys keep cache hits byte-identical to fresh records
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in payload)
    if fmt == "csv":
        if command == "family":
            rows = []
            for e in payload["entries"]:
                row = dict(e)
                row["distance"] = e["distance"]["value"]
                row["distance_kind"] = e["distance"]["kind"]
                rows.append(row)
            return _csv(rows)
        return _csv([payload])
    return json.dumps(payload) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    out = sys.stdout
    try:
        args = build_parser().parse_args(argv)
        payload = COMMANDS[args.command](args)
    except UsageError as exc:
        if exc.args and not getattr(exc, "reported", False):
            sys.stderr.write(f"platknots: error: {exc}\n")
        return EXIT_USAGE
    except PlatError as exc:
        out.write(json.dumps(_error_body(exc)) + "\n")
        return EXIT_DOMAIN
    if isinstance(payload, bytes):
        if hasattr(out, "buffer"):
            out.flush()
            out.buffer.write(payload)
            out.buffer.flush()
        else:
            out.write(payload.decode())
        return EXIT_OK
    out.write(render(args.command, payload, args.format))
    return EXIT_OK


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
