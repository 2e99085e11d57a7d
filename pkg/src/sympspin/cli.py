"""Command-line front end: apply operators, compute kernels, run suites.

Subcommands:
  apply   -- apply an operator word (or Ts, componentwise) to a spinor
  kernel  -- dimension and basis of Ker(Ds) or Ker(Ts) on a sector
  verify  -- run verification suites, emit JSON/CSV/text reports
  report  -- aggregate prior JSON reports into a dimension table

Exit codes: 0 all good, 1 a verification suite failed, 2 usage error.
``SYMPSPIN_THREADS`` caps the number of worker processes for verify.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

from . import analysis
from .analysis import VerificationReport
from .operators import apply_ts, ds_operator
from .parsing import ParseError, parse_operator, parse_spinor
from .poly import SpinorPoly
from .sectors import SectorSpec

CONVENTION = "# all spinors implicitly carry e^{-|q|^2/2}"

SUITES = ("sl2", "intertwine", "clifford", "prolong", "constant",
          "tower", "series", "triangle", "theorem", "example")


class UsageError(Exception):
    pass


@dataclass
class JobConfig:
    """Validated parameters for a verification run."""
    n: int
    h_max: int
    qbound: int
    parity: str = "both"
    suites: tuple = SUITES
    output_path: Optional[str] = None
    format: str = "text"

    def __post_init__(self):
        if self.n < 1:
            raise UsageError("--n must be >= 1")
        if self.h_max < 0 or self.qbound < 0:
            raise UsageError("--hmax and --Q must be >= 0")
        if self.parity not in ("even", "odd", "both"):
            raise UsageError("--parity must be even, odd or both")
        bad = [s for s in self.suites if s not in SUITES]
        if bad:
            raise UsageError("unknown suite(s): %s (choose from %s)"
                             % (", ".join(bad), ", ".join(SUITES)))
        if self.format not in ("json", "csv", "text"):
            raise UsageError("--format must be json, csv or text")


# -- suite drivers ---------------------------------------------------------

def _suite_reports(suite: str, cfg: JobConfig) -> List[VerificationReport]:
    n, hm, q, par = cfg.n, cfg.h_max, cfg.qbound, cfg.parity
    if suite == "sl2":
        return [analysis.verify_sl2(n, hm, q)]
    if suite == "intertwine":
        return [analysis.verify_intertwining(n, hm, q)]
    if suite == "clifford":
        return [analysis.verify_clifford(n)]
    if suite == "prolong":
        return [analysis.verify_prolongation(SectorSpec(n, h, q, par))
                for h in range(1, hm + 1)]
    if suite == "constant":
        return [analysis.verify_constant_lemma(SectorSpec(n, h, q, par))
                for h in range(hm + 1)]
    if suite == "tower":
        return [analysis.verify_tower_lemma(n, h, q, par)
                for h in range(hm + 1)]
    if suite == "series":
        return [analysis.verify_composition_series(n, h, q, par)
                for h in range(1, hm + 1)]
    if suite == "triangle":
        return [analysis.verify_triangle(n, h, q, par)
                for h in range(hm + 1)]
    if suite == "theorem":
        return [analysis.verify_theorem(n, h, q, par)
                for h in range(hm + 1)]
    if suite == "example":
        return [analysis.verify_example()]
    raise UsageError("unknown suite %r" % suite)


def _sort_key(report_dict):
    p = report_dict["params"]
    return (report_dict["claim"], p.get("n") or 0, p.get("h") or 0,
            p.get("Q") or 0, p.get("parity") or "")


def run_suites(cfg: JobConfig):
    """Run the configured suites; returns sorted report dicts."""
    workers = int(os.environ.get("SYMPSPIN_THREADS", "1") or "1")
    reports: List[VerificationReport] = []
    if workers > 1 and len(cfg.suites) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_suite_reports, s, cfg)
                       for s in cfg.suites]
            for fut in futures:
                reports.extend(fut.result())
    else:
        for s in cfg.suites:
            reports.extend(_suite_reports(s, cfg))
    dicts = [r.to_dict() for r in reports]
    dicts.sort(key=_sort_key)
    return dicts


# -- emission --------------------------------------------------------------

def render_json(dicts) -> str:
    return json.dumps({"reports": dicts}, sort_keys=True, indent=2) + "\n"


def render_csv(dicts) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["claim", "n", "h", "Q", "parity", "expectedDim",
                     "observedDim", "equalAsSubspaces", "pass",
                     "witnesses"])
    for d in dicts:
        p = d["params"]
        writer.writerow([d["claim"], p.get("n"), p.get("h"), p.get("Q"),
                         p.get("parity"), d["expectedDim"],
                         d["observedDim"], d["equalAsSubspaces"],
                         d["pass"], "; ".join(d["witnesses"])])
    return buf.getvalue()


def render_text(dicts) -> str:
    lines = []
    for d in dicts:
        p = d["params"]
        status = "PASS" if d["pass"] else "FAIL"
        lines.append("%-4s %-20s n=%s h=%s Q=%s parity=%s dim=%s%s" % (
            status, d["claim"], p.get("n"), p.get("h"), p.get("Q"),
            p.get("parity"), d["observedDim"],
            "  " + "; ".join(d["witnesses"]) if d["witnesses"] else ""))
    return "\n".join(lines) + "\n"


RENDERERS = {"json": render_json, "csv": render_csv, "text": render_text}


# -- subcommands -----------------------------------------------------------

def _read_input(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def cmd_apply(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    # validate the operator word before touching the input stream
    is_ts = args.op.strip() == "Ts"
    op = None if is_ts else parse_operator(args.op, args.n)
    spinor = parse_spinor(_read_input(args.input), args.n)
    print(CONVENTION)
    if is_ts:
        for l, comp in enumerate(apply_ts(spinor), 1):
            print("component %d: %s" % (l, comp.text()))
        return 0
    print(op(spinor).text())
    return 0


def cmd_kernel(args) -> int:
    if args.op not in ("Ds", "Ts"):
        raise UsageError("--op must be Ds or Ts for kernel")
    spec = SectorSpec(args.n, args.h, args.Q, args.parity)
    if args.op == "Ds":
        space = analysis.monogenics(spec).basis
    else:
        space = analysis.twistor_kernel(spec).basis
    print(CONVENTION)
    print("Ker(%s) on n=%d h=%d Q<=%d parity=%s: dim %d"
          % (args.op, spec.n, spec.h, spec.qbound, spec.parity, space.dim))
    for poly in space.polys():
        print("  " + poly.text())
    return 0


def cmd_verify(args) -> int:
    suites = tuple(SUITES) if args.suites == "all" else \
        tuple(s.strip() for s in args.suites.split(",") if s.strip())
    cfg = JobConfig(n=args.n, h_max=args.hmax, qbound=args.Q,
                    parity=args.parity, suites=suites,
                    output_path=args.out, format=args.format)
    dicts = run_suites(cfg)
    rendered = RENDERERS[cfg.format](dicts)
    paths = []
    if cfg.output_path:
        outdir = Path(cfg.output_path)
        outdir.mkdir(parents=True, exist_ok=True)
        path = outdir / ("reports." + cfg.format)
        path.write_text(rendered)
        paths.append(str(path))
    else:
        sys.stdout.write(rendered)
    ok = all(d["pass"] for d in dicts)
    failed = [d for d in dicts if not d["pass"]]
    print("%d/%d checks passed" % (len(dicts) - len(failed), len(dicts)))
    for p in paths:
        print("wrote %s" % p)
    if not ok:
        for d in failed:
            print("FAILED: %s %s" % (d["claim"], d["params"]))
        return 1
    return 0


def _load_reports(path: str):
    if path == "-":
        data = json.load(sys.stdin)
        return data.get("reports", [])
    p = Path(path)
    files = sorted(p.glob("*.json")) if p.is_dir() else [p]
    reports = []
    for f in files:
        data = json.loads(f.read_text())
        reports.extend(data.get("reports", []))
    return reports


def _triangle_csv(buf, reports):
    """Triangle layout: rows = monogenic index l, columns = Xs power j.

    The cell (l, j) is the dimension of the tower Xs^j applied to the
    homogeneity-l Dirac kernel, read off the summand dims recorded by the
    triangle suite for the sector h = l + j.
    """
    tri = [d for d in reports if d["claim"] == "howe-triangle"
           and "summandDims" in d]
    for n in sorted({d["params"]["n"] for d in tri}):
        cells = {}
        for d in tri:
            if d["params"]["n"] != n:
                continue
            h = d["params"]["h"]
            for j, dim in enumerate(d["summandDims"]):
                cells[(h - j, j)] = dim
        if not cells:
            continue
        lmax = max(l for l, _ in cells)
        jmax = max(j for _, j in cells)
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([])
        w.writerow(["triangle n=%d" % n] +
                   ["j=%d" % j for j in range(jmax + 1)])
        for l in range(lmax + 1):
            w.writerow(["l=%d" % l] +
                       [cells.get((l, j), "") for j in range(jmax + 1)])


def cmd_report(args) -> int:
    reports = _load_reports(args.input)
    if not reports:
        raise UsageError("no reports found in %s" % args.input)
    # dimension table per (n, h), one column per claim
    claims = sorted({d["claim"] for d in reports})
    keys = sorted({(d["params"].get("n"), d["params"].get("h"))
                   for d in reports},
                  key=lambda t: (t[0] or 0, t[1] or 0))
    table = {}
    for d in reports:
        p = d["params"]
        table[(p.get("n"), p.get("h"), d["claim"])] = d
    rows = []
    for n, h in keys:
        row = [n, h]
        for c in claims:
            d = table.get((n, h, c))
            row.append("" if d is None else
                       "%s%s" % (d["observedDim"],
                                 "" if d["pass"] else "!"))
        rows.append(row)
    header = ["n", "h"] + claims
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow(row)
        _triangle_csv(buf, reports)
        out = buf.getvalue()
    elif args.format == "json":
        out = json.dumps({"header": header,
                          "rows": rows}, sort_keys=True, indent=2) + "\n"
    else:
        widths = [max(len(str(x)) for x in [h] + [r[i] for r in rows])
                  for i, h in enumerate(header)]
        lines = ["  ".join(str(h).ljust(w)
                           for h, w in zip(header, widths))]
        for row in rows:
            lines.append("  ".join(str(x).ljust(w)
                                   for x, w in zip(row, widths)))
        out = "\n".join(lines) + "\n"
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        path = outdir / ("table." + args.format)
        path.write_text(out)
        print("wrote %s" % path)
    else:
        sys.stdout.write(out)
    return 0 if all(d["pass"] for d in reports) else 1


# -- argument parsing ------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympspin",
        description="Exact kernel analysis for polynomial symplectic "
                    "spinors (Gaussian factor implicit).")
    sub = parser.add_subparsers(dest="command", required=True)

    p_apply = sub.add_parser("apply", help="apply an operator word")
    p_apply.add_argument("--n", type=int, required=True)
    p_apply.add_argument("--op", required=True,
                         help="operator word, e.g. 'Ds Xs' or 'Ts'")
    p_apply.add_argument("--input", default="-",
                         help="spinor expression file or - for stdin")
    p_apply.set_defaults(func=cmd_apply)

    p_kernel = sub.add_parser("kernel", help="kernel of Ds or Ts on a "
                                             "sector")
    p_kernel.add_argument("--n", type=int, required=True)
    p_kernel.add_argument("--op", default="Ds", choices=["Ds", "Ts"])
    p_kernel.add_argument("--h", type=int, required=True)
    p_kernel.add_argument("--Q", type=int, required=True)
    p_kernel.add_argument("--parity", default="both",
                          choices=["even", "odd", "both"])
    p_kernel.set_defaults(func=cmd_kernel)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--hmax", "--h", type=int, required=True,
                          dest="hmax")
    p_verify.add_argument("--Q", type=int, required=True)
    p_verify.add_argument("--parity", default="both",
                          choices=["even", "odd", "both"])
    p_verify.add_argument("--suites", default="all",
                          help="comma list from {%s} or 'all'"
                               % ",".join(SUITES))
    p_verify.add_argument("--format", default="json",
                          choices=["json", "csv", "text"])
    p_verify.add_argument("--out", default=None,
                          help="directory for report files")
    p_verify.set_defaults(func=cmd_verify)

    p_report = sub.add_parser("report", help="aggregate prior JSON "
                                             "reports into a table")
    p_report.add_argument("--input", required=True,
                          help="report JSON file, directory, or -")
    p_report.add_argument("--format", default="text",
                          choices=["json", "csv", "text"])
    p_report.add_argument("--out", default=None)
    p_report.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (UsageError, ParseError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
