"""Command-line front end.

Exit status: 0 success, 1 verification mismatch, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .cohomology import (
    betti,
    betti_graded,
    classes_independent,
    cohomology_basis,
    is_cocycle,
)
from .lie import (
    FAMILIES,
    MIN_DIM,
    AlgebraParseError,
    ValidationWarning,
    load,
    make_family,
    parse,
    truncation_for_degree,
    validate,
)
from .maxclass import (
    closed_betti,
    h1_basis,
    h2_basis_m0n,
    h2_basis_m2n,
    h3_basis_m0n,
    h3_basis_m2n,
    infinite_H_basis,
)
from .report import FORMATS, Report
from .suites import SUITES, run_suite

DEFAULT_MAX_DEGREE = 30
WORKERS_ENV = "MCOHOM_WORKERS"


class UsageError(Exception):
    pass


class _Algebra:
    """Resolved ``--algebra`` argument: a finite algebra or an infinite family."""

    def __init__(self, spec: str, n: int | None):
        self.family = None
        self.infinite = False
        self.algebra = None
        if spec in FAMILIES:
            if n is None:
                raise UsageError(f"--n is required for family {spec}")
            if n < MIN_DIM[spec]:
                raise UsageError(f"{spec}(n) needs n >= {MIN_DIM[spec]}")
            self.family = spec
            self.algebra = make_family(spec, n)
        elif spec.endswith("-infinite") and spec[: -len("-infinite")] in FAMILIES:
            self.family = spec[: -len("-infinite")]
            self.infinite = True
        else:
            path = Path(spec)
            if not path.is_file():
                raise UsageError(f"unknown algebra {spec!r} (not a family name or readable file)")
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always", ValidationWarning)
                self.algebra = load(path)
            for w in caught:
                print(f"warning: {w.message}", file=sys.stderr)

    def descriptor(self, max_degree: int | None = None) -> dict:
        if self.infinite:
            return {"family": self.family, "dimension": None, "max_degree": max_degree}
        return {"family": self.family, "dimension": self.algebra.n, "name": self.algebra.label()}


def _emit(args, report: Report, fmt: str | None = None, text: str | None = None) -> None:
    fmt = fmt or args.format
    out = text if (fmt == "text" and text is not None) else report.render(fmt)
    if getattr(args, "out", None):
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


def _parse_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"bad range {text!r}; use A..B or a comma list") from None


def _parse_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"bad list {text!r}") from None


def cmd_betti(args) -> int:
    alg = _Algebra(args.algebra, args.n)
    q = args.q
    cols = ["q", "degree", "dim_ker", "dim_im", "betti"] + (["representatives"] if args.basis else [])
    rows = []
    if alg.infinite:
        if q < 1:
            raise UsageError("q must be >= 1")
        degrees = [args.degree] if args.degree is not None else range(1, args.max_degree + 1)
        for k in degrees:
            r = betti_graded(truncation_for_degree(alg.family, k), q, k, args.basis)
            rows.append({"q": q, "degree": k, "dim_ker": r.dim_ker, "dim_im": r.dim_im_prev,
                         "betti": r.betti, "representatives": r.representatives})
        desc = alg.descriptor(args.degree if args.degree is not None else args.max_degree)
    else:
        g = alg.algebra
        if not 0 <= q <= g.n:
            raise UsageError(f"q must lie in 0..{g.n}")
        r = betti_graded(g, q, args.degree, args.basis) if args.degree is not None else betti(g, q, args.basis)
        rows.append({"q": q, "degree": args.degree, "dim_ker": r.dim_ker, "dim_im": r.dim_im_prev,
                     "betti": r.betti, "representatives": r.representatives})
        desc = alg.descriptor()
    report = Report(desc, {"command": "betti", "q": q, "degree": args.degree}, cols, rows)
    if len(rows) == 1:
        text = [str(rows[0]["betti"])]
        if args.basis:
            text += [str(f) for f in rows[0]["representatives"]]
    else:
        text = [f"{row['degree']} {row['betti']}" for row in rows]
        if args.basis:
            text = []
            for row in rows:
                text.append(f"{row['degree']} {row['betti']}")
                text += ["  " + str(f) for f in row["representatives"]]
    _emit(args, report, text="\n".join(text) + "\n")
    return 0


def _table_row(item: tuple[str, int, tuple[int, ...]]) -> dict:
    family, n, qs = item
    g = make_family(family, n)
    return {"n": n, **{f"b{q}": betti(g, q).betti for q in qs}}


def cmd_table(args) -> int:
    family = args.family
    ns = _parse_range(args.n)
    qs = tuple(_parse_list(args.q))
    if any(n < MIN_DIM[family] for n in ns):
        raise UsageError(f"{family}(n) needs n >= {MIN_DIM[family]}")
    if any(q < 0 for q in qs):
        raise UsageError("q must be >= 0")
    if args.check_closed_form and any(q not in (1, 2, 3) for q in qs):
        raise UsageError("--check-closed-form supports q in 1,2,3")
    items = [(family, n, qs) for n in ns]
    workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_table_row, items))
    else:
        rows = [_table_row(it) for it in items]
    rows.sort(key=lambda r: r["n"])
    cols = ["n"] + [f"b{q}" for q in qs]
    status = 0
    if args.check_closed_form:
        cols += [f"closed_b{q}" for q in qs]
        for row in rows:
            for q in qs:
                row[f"closed_b{q}"] = closed_betti(row["n"], q)
                if row[f"closed_b{q}"] != row[f"b{q}"]:
                    print(f"mismatch: {family}({row['n']}) b{q} brute force {row[f'b{q}']}"
                          f" != closed form {row[f'closed_b{q}']}", file=sys.stderr)
                    status = 1
    report = Report({"family": family, "dimensions": [ns[0], ns[-1]] if ns else []},
                    {"command": "table", "q": list(qs), "check_closed_form": args.check_closed_form},
                    cols, rows)
    _emit(args, report)
    return status


def _explicit_basis(family: str, n: int, q: int):
    if q == 1:
        return h1_basis()
    if q == 2:
        return h2_basis_m0n(n) if family == "m0" else h2_basis_m2n(n)
    if q == 3:
        if n < 4:
            raise UsageError("the explicit H^3 basis needs n >= 4")
        return h3_basis_m0n(n) if family == "m0" else h3_basis_m2n(n)
    raise UsageError("--source paper on a finite algebra supports q in 1..3")


def cmd_basis(args) -> int:
    alg = _Algebra(args.algebra, args.n)
    q = args.q
    if q < 1:
        raise UsageError("q must be >= 1")
    problems: list[str] = []
    if alg.infinite:
        cap = args.max_degree
        if args.source == "paper":
            forms = infinite_H_basis(q, cap, alg.family)
        else:
            forms = []
            for k in range(1, cap + 1):
                forms += betti_graded(truncation_for_degree(alg.family, k), q, k, True).representatives
        if args.verify:
            for k in range(1, cap + 1):
                g = truncation_for_degree(alg.family, k)
                part = [f for f in forms if f.degrees == {k}]
                expected = betti_graded(g, q, k).betti
                if len(part) != expected:
                    problems.append(f"degree {k}: {len(part)} forms, dim H^{q}_{k} = {expected}")
                elif not all(is_cocycle(g, f) for f in part) or not classes_independent(g, part):
                    problems.append(f"degree {k}: not independent cocycles")
        desc = alg.descriptor(cap)
    else:
        g = alg.algebra
        if q > g.n:
            raise UsageError(f"q must lie in 1..{g.n}")
        if args.source == "paper":
            if alg.family is None:
                raise UsageError("--source paper needs the m0 or m2 family")
            forms = _explicit_basis(alg.family, g.n, q)
        else:
            forms = cohomology_basis(g, q)
        if args.verify:
            expected = betti(g, q).betti
            bad = [f for f in forms if f.max_index() > g.n or not is_cocycle(g, f)]
            if bad:
                problems.append(f"not a cocycle: {bad[0]}")
            elif not classes_independent(g, forms):
                problems.append("forms are dependent modulo coboundaries")
            if len(forms) != expected:
                problems.append(f"{len(forms)} forms but b{q} = {expected}")
        desc = alg.descriptor()
    rows = [{"index": i, "degree": min(f.degrees), "form": f} for i, f in enumerate(forms)]
    report = Report(desc, {"command": "basis", "q": q, "source": args.source}, ["index", "degree", "form"], rows)
    _emit(args, report, text="".join(f"{f}\n" for f in forms))
    for p in problems:
        print(f"verify: {p}", file=sys.stderr)
    return 1 if problems else 0


def cmd_verify(args) -> int:
    checks = run_suite(args.suite)
    failed = 0
    for c in checks:
        if c.passed:
            print(f"PASS {c.name} ({c.detail})")
        else:
            failed += 1
            print(f"FAIL {c.name}: {c.detail}")
    return 1 if failed else 0


def cmd_check(args) -> int:
    path = Path(args.file)
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    g = parse(text, name=path.name)
    report = validate(g)
    if report.ok:
        graded = "graded" if g.is_graded else "not graded"
        print(f"valid: dim {g.n}, {len(g.brackets)} nonzero brackets, {graded}")
        return 0
    for line in report.lines():
        print(line)
    return 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mcohom", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"mcohom {__version__}")
    p.add_argument("--timing", action="store_true", help="print elapsed time to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, default_format):
        sp.add_argument("--format", choices=FORMATS, default=default_format)
        sp.add_argument("--out", metavar="FILE")

    algebra_help = "m0, m2, m0-infinite, m2-infinite, or a path to an algebra file"

    sp = sub.add_parser("betti", help="Betti numbers")
    sp.add_argument("--algebra", required=True, help=algebra_help)
    sp.add_argument("--n", type=int)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--degree", type=int)
    sp.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    sp.add_argument("--basis", action="store_true", help="also print class representatives")
    common(sp, "text")
    sp.set_defaults(func=cmd_betti)

    sp = sub.add_parser("table", help="Betti table over a range of dimensions")
    sp.add_argument("--family", required=True, choices=sorted(FAMILIES))
    sp.add_argument("--n", required=True, help="A..B or comma list")
    sp.add_argument("--q", required=True, help="comma list of ranks")
    sp.add_argument("--check-closed-form", action="store_true")
    common(sp, "markdown")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("basis", help="cohomology bases")
    sp.add_argument("--algebra", required=True, help=algebra_help)
    sp.add_argument("--n", type=int)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--source", choices=("generic", "paper"), default="generic")
    sp.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    sp.add_argument("--verify", action="store_true")
    common(sp, "text")
    sp.set_defaults(func=cmd_basis)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=sorted(SUITES) + ["all"])
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("check", help="validate an algebra file")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_check)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        status = args.func(args)
    except UsageError as exc:
        print(f"mcohom: error: {exc}", file=sys.stderr)
        return 2
    except AlgebraParseError as exc:
        print(f"mcohom: parse error: {exc}", file=sys.stderr)
        return 2
    if args.timing:
        print(f"elapsed {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
