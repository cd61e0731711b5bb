"""Command-line front end: ``adjcert check|example|search|svg``."""
from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from .certify import Certificate
from .halfgeom import GeometryError, hyperplane_of, quadrilateral_degree
from .render import emit_svg, plot_arrangement
from .request import (EXIT_USAGE, CertificateRequest, RequestError, exit_code,
                      parse_request, run)
from .search import SearchError, parse_search_spec, search_quadruples

EXAMPLES = {
    "quadruple-2-19": "quadruple_2_19.json",
    "single-surface-d4": "single_surface_d4.json",
    "strle-thom-d4": "strle_thom_d4.json",
}


def load_example(name: str) -> str:
    if name not in EXAMPLES:
        raise RequestError([("$", f"unknown example {name!r}; choose from {sorted(EXAMPLES)}")])
    return resources.files("adjcert").joinpath("data", EXAMPLES[name]).read_text("utf-8")


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def text_report(cert: Certificate) -> str:
    d = cert.to_json()
    out = [f"theorem: {d['theorem']}", f"status:  {d['status']}", "checks:"]
    for ch in d["checks"]:
        who = ch.get("witness", {}).get("surface")
        out.append(f"  [{ch['verdict']}] {ch['name']}" + (f" ({who})" if who else ""))
    if d["conclusion"]:
        out.append(f"conclusion: {d['conclusion']['statement']}")
        for b in d["conclusion"]["per_surface"]:
            out.append(f"  {b['name']}: chi_minus >= {b['chi_minus_bound']}, "
                       f"genus >= {b['genus_bound']}")
    if d.get("conditional_conclusion"):
        out.append(f"conditional conclusion: {d['conditional_conclusion']['statement']}")
    for key, label in (("hypothesis_failures", "failure"),
                       ("inconclusive_reasons", "inconclusive"),
                       ("assumptions", "assumption"), ("notes", "note")):
        for line in d[key]:
            out.append(f"{label}: {line}")
    return "\n".join(out) + "\n"


def arrangement(req: CertificateRequest):
    """The four lines and the quadrilateral vertices (empty if there is no quadrilateral)."""
    if req.lattice.bplus != 2 or len(req.surfaces) != 4:
        raise RequestError([("$", "pictures need b+ = 2 and exactly four surfaces")])
    try:
        lines = [hyperplane_of(req.lattice, s.cls, req.c) for s in req.surfaces]
    except GeometryError as exc:
        raise RequestError([("$.surfaces", str(exc))])
    dv = quadrilateral_degree(lines)
    return lines, list(dv.vertices)


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _certify(text: str, args) -> int:
    req = parse_request(text)
    cert = run(req)
    body = dump_json(cert.to_json()) if args.format == "json" else text_report(cert)
    _write(body, args.out)
    svg_path = req.options.get("emit_svg")
    if svg_path or args.plot:
        lines, verts = arrangement(req)
        if svg_path:
            _write(emit_svg(lines, verts), svg_path)
        if args.plot:
            plot_arrangement(lines, verts, args.plot)
    return exit_code(cert)


def cmd_check(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        return _certify(fh.read(), args)


def cmd_example(args) -> int:
    return _certify(load_example(args.name), args)


def cmd_search(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        spec = parse_search_spec(fh.read())
    found = search_quadruples(spec)
    if args.format == "json":
        body = dump_json({"schema": 1, "count": len(found), "candidates": found})
    else:
        rows = [f"{len(found)} candidate(s)"]
        for cand in found:
            cls = " | ".join(f"h={c['h']} e={c['e']}" for c in cand["classes"])
            rows.append(f"{cls}  c.a={cand['c_dot_alpha']}  winding={cand['winding']}")
        body = "\n".join(rows) + "\n"
    _write(body, args.out)
    return 0


def cmd_svg(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        req = parse_request(fh.read())
    lines, verts = arrangement(req)
    _write(emit_svg(lines, verts), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")
    plot = argparse.ArgumentParser(add_help=False)
    plot.add_argument("--plot", metavar="PATH",
                      help="also save a matplotlib figure of the line arrangement (b+ = 2)")

    p = argparse.ArgumentParser(prog="adjcert",
                                description="Certify genus bounds for disjoint surface configurations.")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("check", parents=[common, plot], help="certify a request file")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)
    s = sub.add_parser("example", parents=[common, plot], help="run a bundled example")
    s.add_argument("name", choices=sorted(EXAMPLES))
    s.set_defaults(func=cmd_example)
    s = sub.add_parser("search", parents=[common], help="enumerate candidate quadruples")
    s.add_argument("file")
    s.set_defaults(func=cmd_search)
    s = sub.add_parser("svg", parents=[common], help="draw the four-line arrangement")
    s.add_argument("file")
    s.set_defaults(func=cmd_svg)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    try:
        return args.func(args)
    except RequestError as exc:
        for path, msg in exc.errors:
            print(f"error: {path}: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except (SearchError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
