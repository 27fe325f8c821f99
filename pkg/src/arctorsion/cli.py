"""Command-line front end: ``arctorsion VERB REGION [options]``.

Exit status: 0 success, 1 parse or usage error, 2 precondition violation,
3 internal theorem violation or a failed check.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arcs import Window, cross, hom_nonzero, parse_arc, parse_window
from .classify import (
    check_condition_i,
    check_condition_ii,
    classify,
    is_torsion_class,
    left_perp,
    preenvelope_construct,
    precover_construct,
    right_perp,
)
from .dsl import DslError, format_arcs, format_region, parse_region
from .errors import InvalidArc, PreconditionError, TheoremViolation
from .oracle import OracleConfig, agreement_report, brute_ort_window, required_margin
from .ort import closure, fountains, ort
from .render import render

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 1, 2, 3

VERBS = ("classify", "ort", "closure", "coaisle", "precover", "preenvelope", "check", "render", "oracle")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="arctorsion", description="Classify sets of arcs on the integer line.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("region_text", nargs="?", metavar="REGION", help="region text, or @path to read it from a file")
    p.add_argument("--region", dest="region_opt", help="same as the positional REGION")
    p.add_argument("--format", help="text|json (reports) or ascii|svg (render)")
    p.add_argument("--window", type=parse_window, help="LO..HI")
    p.add_argument("--object", type=parse_arc, help='target arc "(m,n)" for precover/preenvelope')
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--margin", type=int, default=0)
    return p


def _region_source(args) -> str:
    text = args.region_opt if args.region_opt is not None else args.region_text
    if text is None:
        raise UsageError(f"{args.verb} needs a region")
    if text.startswith("@"):
        try:
            return Path(text[1:]).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read region file: {exc}") from None
    return text


def _emit_document(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    lines = []
    for key, value in doc.items():
        if isinstance(value, bool):
            value = "true" if value else "false"
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _checks(r, w: Window) -> dict:
    """Invariant suite for one region, each entry a boolean."""
    o = ort(r)
    c = closure(r)
    brute = set(brute_ort_window(r, w, required_margin(r, w)))
    prof = fountains(r)
    y = right_perp(c)
    x_arcs, y_arcs = c.enumerate_window(w), y.enumerate_window(w)
    window_cond_i = check_condition_i(r, "window").ok
    return {
        "ort_matches_oracle": all((a in o) == (a in brute) for a in w.arcs()),
        "ort_is_crossing_free": all(not cross(a, b) for a in o.enumerate_window(w) for b in r.enumerate_window(w)),
        "ort_cubed": ort(c) == o,
        "closure_extensive": r <= c,
        "closure_idempotent": closure(c) == c,
        "shift_equivariant": ort(r.shift(1)) == o.shift(1),
        "double_perp": left_perp(right_perp(r)) == c,
        "closure_orthogonal": not any(hom_nonzero(a, b) for a in x_arcs for b in y_arcs),
        "torsion_criterion": is_torsion_class(r)
        == (window_cond_i and check_condition_ii(r).ok and prof.right <= prof.left),
    }


def _glue_values(argv) -> list[str]:
    # let "--window -2..3" through: argparse would read "-2..3" as an option
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--window", "--object", "--region"):
            value = next(it, None)
            out.append(tok if value is None else f"{tok}={value}")
        else:
            out.append(tok)
    return out


def run(argv) -> tuple[int, str, str]:
    """Run one command; returns (exit status, stdout text, stderr text)."""
    try:
        args = build_parser().parse_args(_glue_values(argv))
    except UsageError as exc:
        return EXIT_USAGE, "", f"usage error: {exc}\n"
    try:
        return _dispatch(args)
    except (DslError, InvalidArc, UsageError) as exc:
        return EXIT_USAGE, "", f"error: {exc}\n"
    except PreconditionError as exc:
        return EXIT_PRECONDITION, "", f"{exc}\n"
    except TheoremViolation as exc:
        return EXIT_INTERNAL, "", f"theorem violation: {exc}\n"


def _dispatch(args) -> tuple[int, str, str]:
    fmt = args.format
    if args.verb == "oracle":
        cfg = OracleConfig(window=args.window or Window(-16, 16), margin=args.margin, seed=args.seed, cases=args.cases)
        summary = agreement_report(cfg)
        status = EXIT_OK if summary.failures == 0 else EXIT_INTERNAL
        return status, _emit_document(summary.to_document(), fmt or "text"), ""

    r = parse_region(_region_source(args))
    if args.verb == "classify":
        if fmt not in (None, "text", "json"):
            raise UsageError(f"classify does not support format {fmt!r}")
        return EXIT_OK, _emit_document(classify(r).to_document(), fmt or "text"), ""
    if args.verb == "ort":
        return EXIT_OK, format_region(ort(r)) + "\n", ""
    if args.verb == "closure":
        return EXIT_OK, format_region(closure(r)) + "\n", ""
    if args.verb == "coaisle":
        return EXIT_OK, format_region(right_perp(r)) + "\n", ""
    if args.verb in ("precover", "preenvelope"):
        if args.object is None:
            raise UsageError(f"{args.verb} needs --object")
        build = precover_construct if args.verb == "precover" else preenvelope_construct
        return EXIT_OK, format_arcs(build(r, args.object)) + "\n", ""
    if args.verb == "render":
        if fmt not in (None, "ascii", "svg"):
            raise UsageError(f"render does not support format {fmt!r}")
        w = args.window or Window(-5, 5)
        try:
            return EXIT_OK, render(r, w, fmt or "ascii"), ""
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    # check
    results = _checks(r, args.window or Window(-10, 10))
    status = EXIT_OK if all(results.values()) else EXIT_INTERNAL
    doc = {k: ("pass" if v else "fail") for k, v in results.items()}
    return status, _emit_document(doc, fmt or "text"), ""


def main(argv=None) -> int:
    status, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())
