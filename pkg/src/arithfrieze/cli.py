"""Command-line interface: ``frieze GROUP COMMAND [args]``.

JSON input is read from ``--json``, ``--file`` or stdin. Output JSON has sorted
keys; computed integers (entries, counts, labels) are decimal strings.
Exit codes: 0 ok, 2 invalid input, 3 invalid triangulation, 4 resource limit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import disc, strip
from .errors import DomainError, FriezeError, InvalidTriangulationError, ResourceLimitError
from .frieze import (
    FriezeView,
    QuiddityData,
    check_arithmetic,
    complete_entry,
    entry_determinant,
    quiddity_from_json,
    validate_to_depth,
    verify_unimodular,
)
from .labeling import common_differences, entry_via_labels, labels_from, puncture_labels
from .matchings import (
    DEFAULT_COUNT_LIMIT,
    enumerate_matchings,
    matching_count,
    matching_count_recursive,
    matching_discrepancy,
)
from .ops import WindowRow, cut_window, glue_window, n_cut, n_glue

EXIT_OK, EXIT_INPUT, EXIT_DOMAIN, EXIT_RESOURCE = 0, 2, 3, 4
CHECKS = ("unimodular", "arithmetic", "matchings", "labels", "bijection")


@dataclass(frozen=True)
class RenderSpec:
    rows: int
    columns: int
    format: str = "ascii"

    def __post_init__(self) -> None:
        if self.rows < 1 or self.columns < 1:
            raise DomainError("rows and columns must be positive")
        if self.format not in ("ascii", "json", "csv"):
            raise DomainError(f"unknown format {self.format!r}")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def s(x: int) -> str:
    return str(x)


# -- rendering -----------------------------------------------------------------


def frieze_rows(q: QuiddityData, spec: RenderSpec) -> list[list[int]]:
    """Rows ``j - i = -2 .. rows - 3`` over columns ``i = 1 .. columns``."""
    view = FriezeView(q)
    return [view.row(r, 1, spec.columns) for r in range(-2, spec.rows - 2)]


def render_diamond(rows: list[list[int]]) -> str:
    """Each row shifted right by half a cell, so entries sit between their neighbours above."""
    width = max(len(str(v)) for row in rows for v in row)
    pitch = max(4, width + 1 + (width + 1) % 2)
    half = pitch // 2
    lines = []
    for r, row in enumerate(rows):
        cells = "".join(str(v).ljust(pitch) for v in row)
        lines.append((" " * (half * r) + cells).rstrip())
    return "\n".join(lines) + "\n"


def render_frieze(q: QuiddityData, spec: RenderSpec) -> str:
    rows = frieze_rows(q, spec)
    if spec.format == "ascii":
        return render_diamond(rows)
    if spec.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for r, row in zip(range(-2, spec.rows - 2), rows):
            w.writerow([r] + row)
        return buf.getvalue()
    return dumps({"quiddity": list(q.entries), "first_column": 1, "rows": [[s(v) for v in row] for row in rows]}) + "\n"


def default_columns(n: int) -> int:
    return n * -(-5 // n)


# -- input ----------------------------------------------------------------------


def read_json(args):
    if args.json is not None:
        text = args.json
    elif args.file is not None:
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as exc:
            raise DomainError(f"cannot read {args.file}: {exc}") from None
    else:
        text = sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"malformed JSON: {exc}") from None


def read_quiddity(args) -> QuiddityData:
    return quiddity_from_json(read_json(args))


def read_disc(args) -> disc.DiscTriangulation:
    return disc.from_json(read_json(args))


def parse_strip_or_disc(obj) -> tuple[strip.StripTriangulation, disc.DiscTriangulation | None]:
    arcs = obj.get("arcs") if isinstance(obj, dict) else None
    if isinstance(arcs, list) and arcs and isinstance(arcs[0], dict) and "from" in arcs[0]:
        return strip.from_json(obj), None
    t = disc.from_json(obj)
    return strip.phi(t), t


def parse_vertex(text: str, n: int) -> strip.StripVertex:
    try:
        i_txt, k_txt = text.split(":")
        k = int(k_txt)
        if i_txt.upper() in ("U", "0"):
            return strip.upper(k)
        i = int(i_txt)
    except ValueError:
        raise DomainError(f"vertex must look like 'i:k' or 'U:k', got {text!r}") from None
    if i < 1:
        raise DomainError(f"lower vertex index must be positive, got {i}")
    return strip.lower(n, i, k)


def vertex_text(v: strip.StripVertex) -> str:
    return f"U:{v.k}" if v.is_upper else f"{v.i}:{v.k}"


# -- frieze ---------------------------------------------------------------------


def render_spec(args, n: int) -> RenderSpec:
    fmt = args.format if args.format != "json" or args.format_given else "ascii"
    return RenderSpec(args.rows or 8, args.columns or default_columns(n), fmt)


def cmd_frieze_gen(args, q: QuiddityData | None = None) -> int:
    q = q or read_quiddity(args)
    spec = render_spec(args, q.n)
    report = validate_to_depth(q, args.depth or max(1, spec.rows - 3))
    if not report.valid:
        i, j = report.first_violation
        print(f"error: not a frieze: entry ({i},{j}) = {report.violating_value}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(render_frieze(q, spec))
    return EXIT_OK


def cmd_frieze_entry(args) -> int:
    q = read_quiddity(args)
    i, j = args.i, args.j
    methods = {
        "recurrence": lambda: FriezeView(q).entry(i, j),
        "determinant": lambda: entry_determinant(q, i, j),
        "complete": lambda: complete_entry(q.entries[0], i, j) if len(set(q.entries)) == 1 else _no_complete(),
    }
    out = {"i": i, "j": j, "method": args.method, "entry": s(methods[args.method]())}
    print(dumps(out))
    return EXIT_OK


def _no_complete():
    raise DomainError("the closed form applies only to constant quiddity rows")


def _check(status: str, **extra) -> dict:
    return {"status": status, **extra}


def run_checks(obj, checks, depth: int, limit: int) -> dict:
    """Pass/fail per check with the first counterexample; never raises for a failed check."""
    if isinstance(obj, list):
        q, t = quiddity_from_json(obj), None
    else:
        t = disc.from_json(obj)
        q = disc.quiddity_of(t)
    report = validate_to_depth(q, depth)
    if not report.valid:
        raise DomainError(f"not a frieze: entry {report.first_violation} = {report.violating_value}")
    results: dict = {}
    view = FriezeView(q)
    if t is None and any(c in checks for c in ("matchings", "labels", "bijection")):
        try:
            found = disc.realizing_triangulations(q)
        except ResourceLimitError:
            found, reason = [], f"n = {q.n} exceeds the enumeration bound"
        else:
            reason = "no disc triangulation realizes this quiddity"
        t = found[0] if found else None
    else:
        reason = ""
    st = strip.phi(t) if t is not None else None
    for c in checks:
        if c == "unimodular":
            results[c] = _check("pass" if verify_unimodular(view, depth) else "fail")
        elif c == "arithmetic":
            ar = check_arithmetic(view, q.n, 4)
            entry = _check("pass" if ar.passed else "fail")
            if not ar.passed:
                entry["counterexample"] = dict(zip("ikl", ar.first_violation))
            elif st is not None and common_differences(st) != ar.differences:
                entry = _check("fail", reason="closed-form differences disagree with observed ones")
            results[c] = entry
        elif st is None:
            results[c] = _check("skipped", reason=reason)
        elif c == "matchings":
            bad = matching_discrepancy(st, depth, limit)
            results[c] = _check("pass") if bad is None else _check(
                "fail", counterexample={"i": bad[0], "j": bad[1], "count": s(bad[2]), "entry": s(bad[3])}
            )
        elif c == "labels":
            results[c] = _check("pass")
            for i in range(1, q.n + 1):
                for j in range(i - 2, i + depth + 1):
                    lv = entry_via_labels(st, i, j)
                    if lv != view.entry(i, j):
                        results[c] = _check("fail", counterexample={"i": i, "j": j, "label": s(lv), "entry": s(view.entry(i, j))})
                        break
                if results[c]["status"] == "fail":
                    break
        elif c == "bijection":
            ok = all(strip.psi(st, d) == t for b in (-1, 0, 1) for d in strip.fundamental_domains(st, b))
            ok = ok and strip.phi(strip.psi(st)) == st and strip.quiddity_of_strip(st).entries == q.entries
            results[c] = _check("pass" if ok else "fail")
    return {
        "depth": depth,
        "quiddity": list(q.entries),
        "checks": results,
        "ok": all(r["status"] != "fail" for r in results.values()),
    }


def parse_checks(text: str | None):
    if not text:
        return CHECKS
    names = tuple(c.strip() for c in text.split(",") if c.strip())
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise DomainError(f"unknown checks {unknown}; choose from {list(CHECKS)}")
    return names


def cmd_frieze_verify(args) -> int:
    out = run_checks(read_json(args), parse_checks(args.checks), args.depth or 6, args.limit or DEFAULT_COUNT_LIMIT)
    print(dumps(out))
    return EXIT_OK if out["ok"] else 1


# -- ops ------------------------------------------------------------------------


def read_window(args) -> WindowRow:
    obj = read_json(args)
    if isinstance(obj, dict) and isinstance(obj.get("values"), list):
        return WindowRow(tuple(obj["values"]), int(obj.get("offset", 0)))
    if isinstance(obj, list) and all(isinstance(v, int) for v in obj):
        return WindowRow(tuple(obj), args.offset)
    raise DomainError("a window is an array of integers or {'values': [...], 'offset': o}")


def cmd_ops(args) -> int:
    if args.command in ("glue", "cut"):
        w = read_window(args)
        res = glue_window(w, args.k) if args.command == "glue" else cut_window(w, args.k)
        print(dumps({"values": list(res.values), "offset": res.offset}))
    else:
        q = read_quiddity(args)
        res = n_glue(q, args.k) if args.command == "nglue" else n_cut(q, args.k)
        print(dumps(list(res.entries)))
    return EXIT_OK


# -- tri ------------------------------------------------------------------------


def _enum_record(t: disc.DiscTriangulation) -> dict:
    rec = disc.to_json(t)
    rec["quiddity"] = list(disc.quiddity_of(t).entries)
    rec["bridging"] = len(t.bridging)
    return rec


def _verify_one(payload):
    obj, checks, depth, limit = payload
    return run_checks(obj, checks, depth, limit)


def cmd_tri(args) -> int:
    cmd = args.command
    if cmd == "enum":
        ts = disc.enumerate_triangulations(args.n, args.bound)
        records = [_enum_record(t) for t in ts]
        status = EXIT_OK
        if args.check:
            checks = parse_checks(args.checks)
            payloads = [(disc.to_json(t), checks, args.depth or 6, args.limit or DEFAULT_COUNT_LIMIT) for t in ts]
            if args.jobs and args.jobs > 1:
                with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                    reports = list(pool.map(_verify_one, payloads))
            else:
                reports = [_verify_one(p) for p in payloads]
            for rec, rep in zip(records, reports):
                rec["verified"] = rep["ok"]
                if not rep["ok"]:
                    rec["checks"] = rep["checks"]
                    status = 1
        for rec in records:
            print(dumps(rec))
        return status
    t = read_disc(args)
    if cmd == "quiddity":
        print(dumps(list(disc.quiddity_of(t).entries)))
    elif cmd == "frieze":
        return cmd_frieze_gen(args, disc.quiddity_of(t))
    elif cmd == "cut":
        print(dumps(disc.to_json(disc.cut_triangle(t, args.x))))
    elif cmd == "glue":
        print(dumps(disc.to_json(disc.glue_triangle(t, args.i))))
    return EXIT_OK


# -- strip ----------------------------------------------------------------------


def _triangle_json(tri: strip.Triangle) -> list:
    return [strip.vertex_to_json(v) for v in tri.vertices]


def cmd_strip(args) -> int:
    obj = read_json(args)
    if args.command == "phi":
        print(dumps(strip.to_json(strip.phi(disc.from_json(obj)))))
        return EXIT_OK
    st, _ = parse_strip_or_disc(obj)
    domains = strip.fundamental_domains(st)
    if args.command == "psi":
        if not 0 <= args.domain < len(domains):
            raise DomainError(f"domain index must lie in 0..{len(domains) - 1}")
        print(dumps(disc.to_json(strip.psi(st, domains[args.domain]))))
    else:
        out = []
        for d in domains:
            out.append(
                {
                    "vertices": [strip.vertex_to_json(v) for v in d.vertices],
                    "boundary_arcs": [{"from": strip.vertex_to_json(a.start), "to": strip.vertex_to_json(a.end)} for a in d.boundary_arcs],
                    "interior_arcs": [{"from": strip.vertex_to_json(a.start), "to": strip.vertex_to_json(a.end)} for a in d.interior_arcs],
                    "triangles": [_triangle_json(tri) for tri in d.triangles],
                }
            )
        print(dumps({"n": st.n, "bridging": strip.bridging_count(st), "domains": out}))
    return EXIT_OK


# -- match ----------------------------------------------------------------------


def cmd_match(args) -> int:
    st, _ = parse_strip_or_disc(read_json(args))
    limit = args.limit or DEFAULT_COUNT_LIMIT
    if args.command == "verify":
        depth = args.depth or 6
        bad = matching_discrepancy(st, depth, limit)
        out = {"depth": depth, "ok": bad is None}
        if bad is not None:
            out["counterexample"] = {"i": bad[0], "j": bad[1], "count": s(bad[2]), "entry": s(bad[3])}
        print(dumps(out))
        return EXIT_OK if bad is None else 1
    a, b = parse_vertex(args.start, st.n), parse_vertex(args.end, st.n)
    if a.is_upper or b.is_upper:
        raise DomainError("matching windows run between lower vertices")
    out = {"start": vertex_text(a), "end": vertex_text(b)}
    if args.command == "count":
        if args.method == "enumerate":
            c = len(enumerate_matchings(st, a, b, args.limit))
        elif args.method == "recursive":
            c = matching_count_recursive(st, a, b)
        else:
            c = matching_count(st, a, b, limit)
        out.update(method=args.method, count=s(c))
    else:
        ms = enumerate_matchings(st, a, b, args.limit)
        out.update(count=s(len(ms)), matchings=[[_triangle_json(tri) for tri in m.triangles] for m in ms])
    print(dumps(out))
    return EXIT_OK


# -- label ----------------------------------------------------------------------


def label_sketch(lm, width: int) -> str:
    n = lm.n
    base = lm.start.k * n if lm.start.is_upper else strip.position(lm.start, n)
    ps = range(base - width, base + width + 1)
    names = [f"{strip.vertex_at(p, n)!r}" for p in ps]
    vals = [str(lm.at(p)) for p in ps]
    cell = max(len(x) for x in names + vals) + 1
    mark = "".join(("*" if p == base and not lm.start.is_upper else "").center(cell) for p in ps)
    up = "-" if lm.upper_label is None else str(lm.upper_label)
    lines = [
        f"upper boundary (all 0^(k)): {up}" + ("   <- start" if lm.start.is_upper else ""),
        "".join(v.center(cell) for v in vals).rstrip(),
        "".join(x.center(cell) for x in names).rstrip(),
    ]
    if mark.strip():
        lines.append(mark.rstrip())
    return "\n".join(lines) + "\n"


def cmd_label(args) -> int:
    st, _ = parse_strip_or_disc(read_json(args))
    n = st.n
    if args.command == "run":
        v = parse_vertex(args.start, n)
        width = args.width or 2 * n
        base = v.k * n if v.is_upper else strip.position(v, n)
        lm = labels_from(st, v, (base - width, base + width))
        if args.format == "ascii":
            sys.stdout.write(label_sketch(lm, width))
            return EXIT_OK
        out = {
            "start": vertex_text(v),
            "right": [s(lm.at(base + d)) for d in range(width + 1)],
            "left": [s(lm.at(base - d)) for d in range(width + 1)],
            "upper": None if lm.upper_label is None else s(lm.upper_label),
            "consistent": lm.consistent,
        }
        print(dumps(out))
    elif args.command == "entry":
        print(dumps({"i": args.i, "j": args.j, "entry": s(entry_via_labels(st, args.i, args.j))}))
    else:
        d = common_differences(st)
        print(
            dumps(
                {
                    "bridging": strip.bridging_count(st),
                    "puncture_labels": [s(x) for x in puncture_labels(st)],
                    "differences": [[s(x) for x in row] for row in d],
                }
            )
        )
    return EXIT_OK


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("global options")
    g.add_argument("--format", choices=("json", "ascii", "csv"), default=argparse.SUPPRESS)
    g.add_argument("--depth", type=int, default=argparse.SUPPRESS, help="rows to check")
    g.add_argument("--rows", type=int, default=argparse.SUPPRESS, help="rows to render, counting the zero row")
    g.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes for bulk verification")
    g.add_argument("--limit", type=int, default=argparse.SUPPRESS, help="largest matching window")
    g.add_argument("--file", default=argparse.SUPPRESS, help="read JSON input from this file")
    g.add_argument("--json", default=argparse.SUPPRESS, help="JSON input given inline")

    p = argparse.ArgumentParser(prog="frieze", description=__doc__.splitlines()[0], parents=[common])
    groups = p.add_subparsers(dest="group", required=True)

    def leaf(sub, name, func, help_text):
        q = sub.add_parser(name, parents=[common], help=help_text)
        q.set_defaults(func=func)
        return q

    fr = groups.add_parser("frieze", help="friezes from quiddity rows").add_subparsers(dest="command", required=True)
    q = leaf(fr, "gen", cmd_frieze_gen, "render a frieze")
    q.add_argument("--columns", type=int)
    q = leaf(fr, "entry", cmd_frieze_entry, "one entry m(i,j)")
    q.add_argument("i", type=int)
    q.add_argument("j", type=int)
    q.add_argument("--method", choices=("recurrence", "determinant", "complete"), default="recurrence")
    q = leaf(fr, "verify", cmd_frieze_verify, "run checks on a quiddity or triangulation")
    q.add_argument("--checks", help="comma-separated subset of " + ",".join(CHECKS))

    op = groups.add_parser("ops", help="gluing and cutting").add_subparsers(dest="command", required=True)
    for name, help_text in (("glue", "glue a window"), ("cut", "cut a window"), ("nglue", "periodic gluing"), ("ncut", "periodic cutting")):
        q = leaf(op, name, cmd_ops, help_text)
        q.add_argument("k", type=int)
        if name in ("glue", "cut"):
            q.add_argument("--offset", type=int, default=0)

    tr = groups.add_parser("tri", help="disc triangulations").add_subparsers(dest="command", required=True)
    leaf(tr, "quiddity", cmd_tri, "quiddity sequence")
    q = leaf(tr, "frieze", cmd_tri, "render the frieze of a triangulation")
    q.add_argument("--columns", type=int)
    q = leaf(tr, "enum", cmd_tri, "list all triangulations for n (one JSON object per line)")
    q.add_argument("n", type=int)
    q.add_argument("--bound", type=int, default=disc.DEFAULT_ENUMERATION_BOUND)
    q.add_argument("--check", action="store_true", help="verify every triangulation")
    q.add_argument("--checks")
    q = leaf(tr, "cut", cmd_tri, "cut the triangle at a special point")
    q.add_argument("x", type=int)
    q = leaf(tr, "glue", cmd_tri, "glue a triangle after point i")
    q.add_argument("i", type=int)

    sp = groups.add_parser("strip", help="periodic strip triangulations").add_subparsers(dest="command", required=True)
    leaf(sp, "phi", cmd_strip, "lift a disc triangulation")
    q = leaf(sp, "psi", cmd_strip, "project a strip triangulation")
    q.add_argument("--domain", type=int, default=0)
    leaf(sp, "domains", cmd_strip, "fundamental domains of one period")

    mt = groups.add_parser("match", help="matching numbers").add_subparsers(dest="command", required=True)
    for name in ("count", "list"):
        q = leaf(mt, name, cmd_match, f"{name} matchings on a window")
        q.add_argument("start", help="first vertex as i:k")
        q.add_argument("end", help="last vertex as i:k")
        if name == "count":
            q.add_argument("--method", choices=("dp", "enumerate", "recursive"), default="dp")
    leaf(mt, "verify", cmd_match, "compare matching numbers with frieze entries")

    lb = groups.add_parser("label", help="labels from a start vertex").add_subparsers(dest="command", required=True)
    q = leaf(lb, "run", cmd_label, "labels around a start vertex")
    q.add_argument("--start", required=True, help="i:k for a lower vertex, U:k for an upper one")
    q.add_argument("--width", type=int)
    q = leaf(lb, "entry", cmd_label, "entry m(i,j) from labels")
    q.add_argument("i", type=int)
    q.add_argument("j", type=int)
    leaf(lb, "diffs", cmd_label, "common differences from puncture labels")
    return p


GLOBAL_DEFAULTS = {"format": "json", "depth": None, "rows": None, "jobs": None, "limit": None, "file": None, "json": None}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.format_given = hasattr(args, "format")
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    if not hasattr(args, "columns"):
        args.columns = None
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvalidTriangulationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except FriezeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
