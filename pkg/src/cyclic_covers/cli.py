"""Command-line interface.

Every command emits one output record ``{schema_version, command, inputs,
result}``, rendered as JSON (canonical key order), CSV or a plain table.
Rationals travel as ``"p/q"`` strings.

Exit codes: 0 success, 2 invalid input, 3 criterion not applicable,
64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from importlib import resources
from typing import Callable, Optional, Sequence

from . import __version__
from .bounds import bound_report
from .branch import canonicalize, enumerate_candidates, enumerate_classes, parse_monodromy, validate
from .classifier import ALLOWLIST_ENV, classify, load_allowlist, survey
from .errors import CyclicCoverError, DomainError, InvalidBranchDatum, NoExclusionIndex
from .exact import parse_rational
from .invariants import family_invariants
from .witness import build_cover, find_witness, verify_witness

SCHEMA_VERSION = "1.0"

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NOT_APPLICABLE = 3
EXIT_USAGE = 64

VERDICT_COLUMNS = [
    "m", "N", "a", "genus", "d", "inv_sym2_dim", "family_dim",
    "inv_quadric_dim", "status", "criterion", "exclusion_n", "caveats",
]
DATUM_COLUMNS = ["m", "N", "a"]
INVARIANT_COLUMNS = VERDICT_COLUMNS[:8]
CERTIFICATE_COLUMNS = ["m", "N", "a", "t", "n", "e", "c", "x0", "L_value",
                       "x0_not_branch", "L_nonzero", "verified"]
BOUND_COLUMNS = ["genus", "gonality", "base_degree", "rank_lower", "dim_bound_gonal",
                 "dim_bound", "generic_gonal_bound", "quadric_system_bound"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _monodromy(text: str) -> tuple[int, ...]:
    try:
        return parse_monodromy(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _rationals(text: str) -> list:
    try:
        return [parse_rational(tok) for tok in text.split(",") if tok.strip()]
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if k < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {k}")
    return k


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "table"), default="json")
    common.add_argument("--output", metavar="FILE", help="write to FILE instead of stdout")
    common.add_argument("--jobs", type=_positive, default=1, metavar="K",
                        help="worker threads; never changes the output")
    common.add_argument("--hyperelliptic-allowlist", metavar="PATH",
                        help=f"extra allowlist file (default: ${ALLOWLIST_ENV})")

    parser = _Parser(prog="cyclic-covers",
                     description="Totally geodesic screening of cyclic covers of P^1.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def datum_command(name, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("m", type=int)
        p.add_argument("N", type=int)
        p.add_argument("a", type=_monodromy, help="local monodromies, e.g. 1,3,3,3")
        return p

    datum_command("validate", "check a branch datum")
    datum_command("canon", "canonical representative of a datum")
    datum_command("invariants", "eigenspace dimensions, genus, quadric counts")
    datum_command("classify", "classify one family")
    w = datum_command("witness", "certificate that a family is not totally geodesic")
    w.add_argument("--branch-points", type=_rationals, metavar="T1,...,TN",
                   help="distinct rationals (default 0,1,...,N-1)")
    w.add_argument("--n", type=int, dest="index", help="exclusion index (default: smallest)")
    w.add_argument("--budget", type=_positive, help="candidate abscissae to try (default 2N+4)")

    e = sub.add_parser("enumerate", parents=[common], help="list equivalence classes")
    e.add_argument("--m", type=int, required=True)
    grp = e.add_mutually_exclusive_group(required=True)
    grp.add_argument("--n", type=int, dest="N", help="number of branch points")
    grp.add_argument("--candidates", action="store_true", help="all classes with N <= 2m")

    s = sub.add_parser("survey", parents=[common], help="classify every class up to N_max")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n-max", type=int, help="largest N (default 2m)")

    b = sub.add_parser("bounds", parents=[common], help="dimension bounds for a genus")
    b.add_argument("--genus", type=int, required=True)
    b.add_argument("--gonality", type=int)
    b.add_argument("--base-degree", type=int,
                   help="degree of the base locus of |K - F| (default: worst case k-3)")
    return parser


def output_schema() -> dict:
    """The JSON schema every output record validates against."""
    text = resources.files(__package__).joinpath("data/output.schema.json").read_text("utf-8")
    return json.loads(text)


# -- rendering ---------------------------------------------------------------

def render_json(record: dict) -> str:
    return json.dumps(record, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return ",".join(_cell(x) for x in v)
    return str(v)


def _verdict_row(v: dict) -> dict:
    row = dict(v)
    row["caveats"] = ";".join(v["caveats"])
    return row


def table_of(record: dict) -> tuple[list[str], list[dict]]:
    """Columns and rows for the CSV/table projections of a record."""
    result = record["result"]
    cmd = record["command"]
    if "error" in result:
        return ["error", "message"], [result]
    if cmd == "validate":
        return (["valid", *DATUM_COLUMNS, "constraint"],
                [{**(result["datum"] or {}), "valid": result["valid"],
                  "constraint": result["constraint"]}])
    if cmd == "canon":
        return DATUM_COLUMNS, [result["canonical"]]
    if cmd == "invariants":
        return INVARIANT_COLUMNS, [result]
    if cmd == "enumerate":
        return DATUM_COLUMNS, result["classes"]
    if cmd == "classify":
        return VERDICT_COLUMNS, [_verdict_row(result)]
    if cmd == "survey":
        return VERDICT_COLUMNS, [_verdict_row(v) for v in result["verdicts"]]
    if cmd == "witness":
        cert = result["certificate"]
        row = {**cert, **cert["checks"], "verified": result["verified"]}
        return CERTIFICATE_COLUMNS, [row]
    if cmd == "bounds":
        return BOUND_COLUMNS, [result]
    raise ValueError(f"unknown command {cmd!r}")


def render_csv(record: dict) -> str:
    cols, rows = table_of(record)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([_cell(r.get(c)) for c in cols])
    return buf.getvalue()


def render_table(record: dict) -> str:
    cols, rows = table_of(record)
    cells = [cols] + [[_cell(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(cols))]
    lines = ["  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


RENDERERS: dict[str, Callable[[dict], str]] = {
    "json": render_json, "csv": render_csv, "table": render_table,
}


# -- commands ----------------------------------------------------------------

def _error(exc: Exception, name: str) -> dict:
    return {"error": name, "message": str(exc)}


def cmd_validate(args) -> tuple[dict, int]:
    try:
        d = validate(args.m, args.N, args.a)
    except InvalidBranchDatum as exc:
        return {"valid": False, "datum": None, "constraint": exc.constraint,
                "message": str(exc)}, EXIT_INVALID
    return {"valid": True, "datum": d.as_dict(), "constraint": None, "message": None}, EXIT_OK


def cmd_canon(args) -> tuple[dict, int]:
    d = validate(args.m, args.N, args.a)
    return {"input": d.as_dict(), "canonical": canonicalize(d).as_dict()}, EXIT_OK


def cmd_invariants(args) -> tuple[dict, int]:
    return family_invariants(validate(args.m, args.N, args.a)).as_dict(), EXIT_OK


def cmd_enumerate(args) -> tuple[dict, int]:
    if args.candidates:
        classes = enumerate_candidates(args.m, jobs=args.jobs)
    else:
        classes = enumerate_classes(args.m, args.N, jobs=args.jobs)
    return {"count": len(classes), "classes": [c.as_dict() for c in classes]}, EXIT_OK


def cmd_classify(args) -> tuple[dict, int]:
    allow = load_allowlist(args.hyperelliptic_allowlist)
    return classify(validate(args.m, args.N, args.a), allow).as_dict(), EXIT_OK


def cmd_survey(args) -> tuple[dict, int]:
    allow = load_allowlist(args.hyperelliptic_allowlist)
    n_max = args.n_max if args.n_max is not None else 2 * args.m
    verdicts = [v.as_dict() for v in survey(args.m, n_max, allow, jobs=args.jobs)]
    counts = Counter(v["status"] for v in verdicts)
    return {"verdicts": verdicts, "summary": dict(sorted(counts.items()))}, EXIT_OK


def cmd_witness(args) -> tuple[dict, int]:
    d = validate(args.m, args.N, args.a)
    try:
        model = build_cover(d, args.branch_points, args.index)
    except NoExclusionIndex as exc:
        return _error(exc, "NoExclusionIndex"), EXIT_NOT_APPLICABLE
    cert = find_witness(model, args.budget)
    ok = verify_witness(cert)
    return ({"certificate": cert.to_json_dict(), "verified": ok},
            EXIT_OK if ok else EXIT_NOT_APPLICABLE)


def cmd_bounds(args) -> tuple[dict, int]:
    return bound_report(args.genus, args.gonality, args.base_degree).as_dict(), EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "canon": cmd_canon,
    "invariants": cmd_invariants,
    "enumerate": cmd_enumerate,
    "classify": cmd_classify,
    "survey": cmd_survey,
    "witness": cmd_witness,
    "bounds": cmd_bounds,
}

_NON_INPUTS = {"command", "format", "output", "jobs", "hyperelliptic_allowlist"}


def _inputs(args) -> dict:
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in _NON_INPUTS:
            continue
        if isinstance(v, tuple):
            v = list(v)
        if isinstance(v, list):
            v = [x if isinstance(x, int) else str(x) for x in v]
        out[k] = v
    return out


def run(argv: Optional[Sequence[str]] = None) -> tuple[dict, int, argparse.Namespace]:
    """Parse ``argv`` and execute; returns ``(record, exit_code, args)``."""
    args = build_parser().parse_args(argv)
    try:
        result, code = COMMANDS[args.command](args)
    except CyclicCoverError as exc:
        result, code = _error(exc, type(exc).__name__), EXIT_INVALID
    except OSError as exc:
        result, code = _error(exc, "OSError"), EXIT_INVALID
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "inputs": _inputs(args),
        "result": result,
    }
    return record, code, args


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        record, code, args = run(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    text = RENDERERS[args.format](record)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if "error" in record["result"]:
        print(f"{record['result']['error']}: {record['result']['message']}", file=sys.stderr)
    elif record["command"] == "validate" and not record["result"]["valid"]:
        print(f"{record['result']['constraint']}: {record['result']['message']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
