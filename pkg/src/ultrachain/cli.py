"""Command-line frontend.

Subcommands:

* ``axioms``  -- exact valuation / norm axiom checks over the scalar grid,
* ``verify``  -- scan the inequality chains for violations (exhaustive or
                 seeded random), reporting slack statistics and witnesses,
* ``witness`` -- list the first pairs achieving equality at a chosen link,
* ``demo``    -- the built-in worked examples: the 2/|2| coefficient and
                 the first chain over padic:2 (coefficient 4) and over odd
                 primes (coefficient 2, where the chain collapses).

Exit codes: 0 when every requested check holds, 1 when a violation or a
failed axiom was found, 2 for usage or configuration errors (including a
characteristic-2 backend, where the 2/|2| chains are undefined).

Reports print as text; ``--json PATH`` additionally writes the same values
as canonical JSON (``-`` writes JSON to stdout instead of text).  Output
for a fixed argument list and seed is byte-identical across runs and
thread counts.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from itertools import islice, product

from . import __version__
from ._checkdefs import CHECKS, link_key, ordered_links
from .chains import na_chain1, na_chain2
from .errors import UltrachainError
from .explorer import GenConfig, scalar_grid, scan
from .fields import (
    check_valuation_axioms,
    parse_field,
    prime_power_annotation,
    two_magnitude,
)
from .reports import dumps, fraction_str
from .spaces import NormSpec, Vector, check_norm_axioms, parse_norm

_AXIOM_SCALAR_PAIR_CAP = 10_000
_AXIOM_VECTOR_CAP = 64
_AXIOM_SCALAR_CAP = 16

_DEMO_FIELDS = ("padic:2", "padic:3", "padic:7")
_DEMO_HELP = (
    "Built-in input pairs: x = (1) and y = (1) when |2| < 1; over backends "
    "with |2| = 1 and a graded grid, y = (u) for the uniformizer u (e.g. "
    "y = (3) over padic:3), so the collapsed chain is visible."
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ultrachain",
        description="Exact verification of ultrametric norm inequality chains.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, field_required=True):
        p.add_argument(
            "--field",
            required=field_required,
            help="backend selector: padic:p | trivial | tadic:q[:base] | rationals",
        )
        p.add_argument(
            "--norm",
            default=None,
            help="norm selector: sup[:w1,w2,...] | l1 | linf "
            "(default: sup on ultrametric backends, linf on rationals)",
        )
        p.add_argument("--dim", type=int, default=1, help="dimension (default 1)")
        p.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
        p.add_argument(
            "--samples", type=int, default=1000,
            help="random pair count (default 1000)",
        )
        p.add_argument(
            "--exhaustive", action="store_true",
            help="enumerate the whole grid instead of sampling",
        )
        p.add_argument(
            "--v-max", type=int, default=2, dest="v_max",
            help="valuation exponent bound V; grid uses [-V, V] (default 2)",
        )
        p.add_argument(
            "--unit-bound", type=int, default=1, dest="unit_bound",
            help="unit-part numerator/denominator bound B (default 1)",
        )
        p.add_argument(
            "--witnesses", type=int, default=16,
            help="tight witnesses kept per link (default 16)",
        )

    def output(p):
        p.add_argument(
            "--json", default=None, metavar="PATH",
            help="write the report as canonical JSON to PATH ('-' = stdout)",
        )
        p.add_argument(
            "--quiet", action="store_true", help="suppress the text report"
        )

    p_axioms = sub.add_parser(
        "axioms", help="check the valuation and norm axioms exactly"
    )
    common(p_axioms)
    output(p_axioms)

    p_verify = sub.add_parser(
        "verify", help="scan the inequality chains for violations"
    )
    common(p_verify)
    p_verify.add_argument(
        "--checks", default=None,
        help="comma-separated checks (default: every check valid for the "
        "backend): " + ",".join(CHECKS),
    )
    output(p_verify)

    p_witness = sub.add_parser(
        "witness", help="find pairs achieving equality at one link"
    )
    common(p_witness)
    p_witness.add_argument("--check", required=True, help="check identifier")
    p_witness.add_argument(
        "--link", type=int, default=0, help="link index within the check"
    )
    output(p_witness)

    p_demo = sub.add_parser(
        "demo",
        help="reproduce the built-in coefficient examples",
        description=_DEMO_HELP,
    )
    p_demo.add_argument(
        "--field", default=None,
        help="restrict to one backend (default: padic:2, padic:3, padic:7)",
    )
    output(p_demo)
    return parser


def _resolve_spec(args, field) -> NormSpec:
    if args.norm is not None:
        return parse_norm(args.norm)
    return NormSpec("sup" if field.is_non_archimedean else "linf")


def _emit(args, text_lines, json_obj) -> None:
    to_stdout = args.json == "-"
    if to_stdout:
        sys.stdout.write(dumps(json_obj))
        return
    if not args.quiet:
        for line in text_lines:
            print(line)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(dumps(json_obj))


def _magnitude_label(field, value: Fraction) -> str:
    text = fraction_str(value)
    if field.kind == "padic":
        power = prime_power_annotation(value, field.p)
        if power and power != text and not power.endswith("^0"):
            return f"{text} ({power})"
    return text


# ---------------------------------------------------------------------------
# axioms
# ---------------------------------------------------------------------------


def _cmd_axioms(args) -> int:
    field = parse_field(args.field)
    spec = _resolve_spec(args, field)
    grid = scalar_grid(field, args.v_max, args.unit_bound)

    pair_stream = product(grid, repeat=2)
    total = len(grid) ** 2
    if total > _AXIOM_SCALAR_PAIR_CAP:
        pair_stream = islice(pair_stream, _AXIOM_SCALAR_PAIR_CAP)
    val_report = check_valuation_axioms(field, pair_stream)

    vectors = [
        Vector(field, coords)
        for coords in islice(product(grid, repeat=args.dim), _AXIOM_VECTOR_CAP)
    ]
    norm_report = check_norm_axioms(
        spec, field, vectors, grid[:_AXIOM_SCALAR_CAP]
    )

    lines = [
        f"axioms  field={field.selector()}  norm={spec.selector()}  "
        f"dim={args.dim}  grid={len(grid)} scalars"
    ]
    for report in (val_report, norm_report):
        lines.append(f"{report.kind} axioms ({report.samples} samples):")
        for clause in report.clauses:
            if not clause.applicable:
                status = "NOT-APPLICABLE"
            elif clause.holds:
                status = "PASS"
            else:
                status = "FAIL"
            detail = f" [{clause.checked} checks]" if clause.applicable else ""
            lines.append(f"  {clause.name:<16} {status}{detail}")
            if clause.counterexample:
                lines.append(f"    {clause.counterexample}")
            if clause.note:
                lines.append(f"    {clause.note}")
    ok = val_report.passed and norm_report.passed
    lines.append("all axioms hold" if ok else "AXIOM FAILURE")
    _emit(
        args,
        lines,
        {
            "valuation": val_report.to_json_dict(),
            "norm": norm_report.to_json_dict(),
        },
    )
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# verify / witness
# ---------------------------------------------------------------------------


def _default_checks(field, dim: int) -> list[str]:
    if field.is_non_archimedean:
        checks = ["na1", "na2", "steps"]
        if two_magnitude(field) == 1:
            checks.append("collapse")
        return checks
    checks = ["mal1", "mal2"]
    if dim == 1:
        checks.insert(0, "tarski")
    return checks


def _gen_config(args, field, spec) -> GenConfig:
    return GenConfig(
        field=field,
        spec=spec,
        dim=args.dim,
        seed=args.seed,
        v_max=args.v_max,
        unit_bound=args.unit_bound,
        samples=args.samples,
        exhaustive=args.exhaustive,
        witnesses=args.witnesses,
    )


def _report_lines(report) -> list[str]:
    cfg = report.config
    lines = [
        f"verify  field={cfg.field.selector()}  norm={cfg.spec.selector()}  "
        f"dim={cfg.dim}  mode={'exhaustive' if cfg.exhaustive else 'random'}"
        f"  seed={cfg.seed}",
        f"checks: {', '.join(report.checks)}",
        f"pairs evaluated: {report.pairs_evaluated}"
        + (
            f"  (skipped for zero-vector precondition: {report.pairs_skipped})"
            if report.pairs_skipped
            else ""
        ),
    ]
    for check, i in ordered_links(report.checks):
        key = link_key(check, i)
        relation = CHECKS[check][i].relation
        mn = report.slack_min[key]
        mx = report.slack_max[key]
        span = (
            "no pairs evaluated"
            if mn is None
            else f"slack in [{fraction_str(mn)}, {fraction_str(mx)}]"
        )
        lines.append(
            f"  {key:<24} {relation:>2}  tight {report.tight_total[key]}"
            f"  {span}"
        )
    if report.violation_count:
        lines.append(f"VIOLATIONS: {report.violation_count}")
        for v in report.violations:
            lines.append(
                f"  {link_key(v.check, v.link)}  x={v.x}  y={v.y}  "
                f"slack={fraction_str(v.slack)}"
            )
    else:
        lines.append("all checks hold")
    return lines


def _cmd_verify(args) -> int:
    field = parse_field(args.field)
    spec = _resolve_spec(args, field)
    if args.checks:
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    else:
        checks = _default_checks(field, args.dim)
    report = scan(_gen_config(args, field, spec), checks)
    _emit(args, _report_lines(report), report.to_json_dict())
    return 0 if report.holds else 1


def _cmd_witness(args) -> int:
    field = parse_field(args.field)
    spec = _resolve_spec(args, field)
    if args.check not in CHECKS:
        raise ValueError(f"unknown check {args.check!r}")
    if not 0 <= args.link < len(CHECKS[args.check]):
        raise ValueError(
            f"{args.check} has {len(CHECKS[args.check])} links; "
            f"index {args.link} is out of range"
        )
    report = scan(_gen_config(args, field, spec), {args.check})
    key = link_key(args.check, args.link)
    witnesses = report.tight_witnesses[key]
    lines = [
        f"witness  {key}  field={field.selector()}  norm={spec.selector()}"
        f"  dim={args.dim}",
        f"tight pairs: {report.tight_total[key]} of {report.pairs_evaluated}"
        f" evaluated; showing {len(witnesses)}",
    ]
    for x, y in witnesses:
        lines.append(f"  x={x}  y={y}")
    if not report.holds:
        lines.append(f"VIOLATIONS: {report.violation_count}")
    json_obj = {
        "check": args.check,
        "link": args.link,
        "link_key": key,
        "tight_total": report.tight_total[key],
        "pairs_evaluated": report.pairs_evaluated,
        "witnesses": [{"x": str(x), "y": str(y)} for x, y in witnesses],
        "violation_count": report.violation_count,
    }
    _emit(args, lines, json_obj)
    return 0 if report.holds else 1


# ---------------------------------------------------------------------------
# demo
# ---------------------------------------------------------------------------


def _demo_pair(field):
    one = field.one()
    if field.is_non_archimedean and two_magnitude(field) == 1 and field.graded:
        uniformizer = field.compose(1, field.unit_parts(1)[0], False)
        return Vector(field, (one,)), Vector(field, (uniformizer,))
    return Vector(field, (one,)), Vector(field, (one,))


def _cmd_demo(args) -> int:
    selectors = (args.field,) if args.field else _DEMO_FIELDS
    spec = NormSpec("sup")
    lines = []
    examples = []
    for selector in selectors:
        field = parse_field(selector)
        t2 = two_magnitude(field)  # rejects Archimedean / characteristic 2
        coef = 2 / t2
        x, y = _demo_pair(field)
        chain1 = na_chain1(x, y, spec)
        chain2 = na_chain2(x, y, spec)
        values1 = "[" + ", ".join(fraction_str(v) for v in chain1.values()) + "]"
        values2 = "[" + ", ".join(fraction_str(v) for v in chain2.values()) + "]"
        label = f"|2|_{field.p}" if field.kind == "padic" else "|2|"
        lines.extend(
            [
                f"field {field.selector()}:",
                f"  {label} = {_magnitude_label(field, t2)}",
                f"  2/|2| = {fraction_str(coef)}",
                f"  x = {x}, y = {y}",
                f"  chain1 values {values1}"
                + ("  (every link tight)" if chain1.all_tight else ""),
                f"  chain2 values {values2}",
            ]
        )
        examples.append(
            {
                "field": field.selector(),
                "two_magnitude": fraction_str(t2),
                "coefficient": fraction_str(coef),
                "x": str(x),
                "y": str(y),
                "na_chain1": chain1.to_json_dict(),
                "na_chain2": chain2.to_json_dict(),
            }
        )
    _emit(args, lines, {"examples": examples})
    return 0


_COMMANDS = {
    "axioms": _cmd_axioms,
    "verify": _cmd_verify,
    "witness": _cmd_witness,
    "demo": _cmd_demo,
}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (UltrachainError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
