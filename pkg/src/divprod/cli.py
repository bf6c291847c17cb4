"""Command-line front end: compute sequences, expand product specs, and run
the identity catalog with machine-readable reports.

Exit codes: 0 success / all identities passed, 1 an identity or agreement
check failed, 2 usage or configuration error.  Output is deterministic and
byte-stable for a fixed invocation; values are printed exactly (full decimal
integers, rationals as p/q).
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from divprod.catalog import ALL_CHECKS, NEGATIVE_CHECKS, POSITIVE_CHECKS, run_check
from divprod.divisors import (
    sigma_rm_table,
    sigma_table,
    square_indicator,
    triangular,
    triangular_indicator,
)
from divprod.products import (
    BUILTIN_SPEC_NAMES,
    SpecFormatError,
    coeffs_via_expansion,
    coeffs_via_recurrence,
    load_spec,
)
from divprod.sequences import (
    lambert_cubic_by_divisors,
    partition_counts,
    regular_partition_counts,
    rogers_ramanujan_sum_side,
    triangular_rep_counts,
)

SEQUENCE_NAMES = (
    "sigma",
    "sigma_odd",
    "sigma_even",
    "sigma_rm(r,m)",
    "s",
    "t",
    "T",
    "a",
    "partition",
    "q_regular(p)",
    "rr1",
    "rr2",
    "delta(m)",
)


class UsageError(ValueError):
    pass


def _sequence_rows(name: str, order: int) -> list[tuple[int, int]]:
    """(n, value) rows for a named sequence; 0..order, or 1..order for the
    divisor sums, which start at 1."""
    if name == "sigma":
        table = sigma_table(order)
        return [(n, table[n]) for n in range(1, order + 1)]
    if name == "sigma_odd":
        table = sigma_rm_table(order, 1, 2)
        return [(n, table[n]) for n in range(1, order + 1)]
    if name == "sigma_even":
        table = sigma_rm_table(order, 0, 2)
        return [(n, table[n]) for n in range(1, order + 1)]
    match = re.fullmatch(r"sigma_rm\((-?\d+),(-?\d+)\)", name)
    if match:
        r, m = int(match.group(1)), int(match.group(2))
        table = sigma_rm_table(order, r, m)
        return [(n, table[n]) for n in range(1, order + 1)]
    if name == "s":
        return [(n, square_indicator(n)) for n in range(order + 1)]
    if name == "t":
        return [(n, triangular_indicator(n)) for n in range(order + 1)]
    if name == "T":
        return [(n, triangular(n)) for n in range(order + 1)]
    if name == "a":
        return [(n, lambert_cubic_by_divisors(n)) for n in range(order + 1)]
    if name == "partition":
        return list(enumerate(partition_counts(order).terms))
    match = re.fullmatch(r"q_regular\((-?\d+)\)", name)
    if match:
        return list(enumerate(regular_partition_counts(int(match.group(1)), order).terms))
    if name in ("rr1", "rr2"):
        return list(enumerate(rogers_ramanujan_sum_side(int(name[2]), order).terms))
    match = re.fullmatch(r"delta\((-?\d+)\)", name)
    if match:
        return list(enumerate(triangular_rep_counts(int(match.group(1)), order).terms))
    raise UsageError(
        f"unknown sequence {name!r}; available: {', '.join(SEQUENCE_NAMES)}"
    )


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _rows_as_csv(rows: list[tuple[int, object]]) -> str:
    lines = ["n,value"]
    lines.extend(f"{n},{v}" for n, v in rows)
    return "\n".join(lines) + "\n"


def _as_json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _cmd_compute(args) -> int:
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    rows = _sequence_rows(args.name, args.order)
    if args.format == "csv":
        _emit(_rows_as_csv(rows), args.out)
    else:
        doc = {
            "name": args.name,
            "order": args.order,
            "rows": [[n, str(v)] for n, v in rows],
        }
        _emit(_as_json(doc), args.out)
    return 0


def _cmd_expand(args) -> int:
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    spec = load_spec(args.spec)
    if args.algo == "recurrence":
        series = {"recurrence": coeffs_via_recurrence(spec, args.order)}
    elif args.algo == "expansion":
        series = {"expansion": coeffs_via_expansion(spec, args.order)}
    else:
        series = {
            "recurrence": coeffs_via_recurrence(spec, args.order),
            "expansion": coeffs_via_expansion(spec, args.order),
        }
    primary = next(iter(series.values()))
    disagreement = None
    if len(series) == 2:
        rec, exp = series["recurrence"], series["expansion"]
        for n in range(args.order + 1):
            if rec[n] != exp[n]:
                disagreement = {
                    "n": n,
                    "recurrence": str(rec[n]),
                    "expansion": str(exp[n]),
                }
                break

    if args.format == "csv":
        _emit(_rows_as_csv(list(enumerate(primary.coeffs))), args.out)
        if disagreement is not None:
            print(
                f"error: algorithms disagree at n={disagreement['n']}: "
                f"recurrence={disagreement['recurrence']} "
                f"expansion={disagreement['expansion']}",
                file=sys.stderr,
            )
    else:
        doc = {
            "spec": str(args.spec),
            "order": args.order,
            "algorithm": args.algo,
            "coefficients": [str(c) for c in primary.coeffs],
        }
        if len(series) == 2:
            doc["agree"] = disagreement is None
            doc["first_disagreement"] = disagreement
        _emit(_as_json(doc), args.out)
    return 1 if disagreement is not None else 0


def _cmd_verify(args) -> int:
    if args.order < 1:
        raise UsageError("--order must be >= 1")
    ids = args.identities
    if "all" in ids:
        if len(ids) > 1:
            raise UsageError('"all" cannot be combined with explicit identity ids')
        selected = sorted(POSITIVE_CHECKS)
    else:
        unknown = [i for i in ids if i not in ALL_CHECKS]
        if unknown:
            raise UsageError(
                f"unknown identities: {', '.join(unknown)}; "
                f"known: {', '.join(sorted(ALL_CHECKS))}"
            )
        selected = sorted(set(ids))
    reports = [run_check(i, args.order) for i in selected]

    if args.format == "csv":
        lines = ["identity,N,passed,failure_n,lhs,rhs"]
        for r in reports:
            if r.first_failure is None:
                lines.append(f"{r.identity_id},{r.order_checked},true,,,")
            else:
                f = r.first_failure
                lines.append(
                    f"{r.identity_id},{r.order_checked},false,{f.n},{f.lhs},{f.rhs}"
                )
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_as_json([r.to_dict() for r in reports]), args.out)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_catalog(args) -> int:
    identities = [{"id": i, "expected": "pass"} for i in sorted(POSITIVE_CHECKS)]
    identities += [{"id": i, "expected": "fail"} for i in sorted(NEGATIVE_CHECKS)]
    if args.format == "csv":
        lines = ["kind,name,expected"]
        lines.extend(f"identity,{e['id']},{e['expected']}" for e in identities)
        lines.extend(f"spec,{name}," for name in BUILTIN_SPEC_NAMES)
        lines.extend(f"sequence,{name}," for name in SEQUENCE_NAMES)
        _emit("\n".join(lines) + "\n", args.out)
    else:
        doc = {
            "identities": identities,
            "specs": list(BUILTIN_SPEC_NAMES),
            "sequences": list(SEQUENCE_NAMES),
        }
        _emit(_as_json(doc), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divprod",
        description="Exact product expansions, divisor-sum recurrences, and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, default_order=100):
        p.add_argument("--order", type=int, default=default_order, metavar="N",
                       help=f"truncation order (default {default_order})")
        p.add_argument("--format", choices=("json", "csv"), default="json",
                       help="output format (default json)")
        p.add_argument("--out", metavar="PATH", default=None,
                       help="write output to PATH instead of stdout")

    p_compute = sub.add_parser("compute", help="emit n,value rows of a named sequence")
    p_compute.add_argument("name", help="sequence name, e.g. sigma, a, q_regular(3), delta(8)")
    add_common(p_compute)

    p_expand = sub.add_parser("expand", help="expand a product spec file to coefficients")
    p_expand.add_argument("--spec", required=True, metavar="PATH",
                          help="path to a product spec JSON file")
    p_expand.add_argument("--algo", choices=("recurrence", "expansion", "both"),
                          default="both", help="coefficient algorithm (default both)")
    add_common(p_expand)

    p_verify = sub.add_parser("verify", help="run identity checks and report results")
    p_verify.add_argument("identities", nargs="+", metavar="ID",
                          help='identity ids, or "all" for every expected-pass check')
    add_common(p_verify)

    p_catalog = sub.add_parser("catalog", help="list identities, built-in specs, sequences")
    add_common(p_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "compute": _cmd_compute,
        "expand": _cmd_expand,
        "verify": _cmd_verify,
        "catalog": _cmd_catalog,
    }
    try:
        return handlers[args.command](args)
    except (UsageError, SpecFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())
