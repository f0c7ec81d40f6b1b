"""Command-line entry point: ``regseq <command> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys

from . import scanner
from .cyclotomic import four_root_zero_sums
from .groebner import Ideal
from .hilbert import hf_linear_algebra, hs_from_groebner
from .polycore import GREVLEX, LEX, parse_polynomial
from .primality import serre_pipeline
from .reductions import reduce_to_e, verify_catalog
from .regular import regular_with_case
from .symfun import format_elementary, generate, parse_family

_FAMILY = re.compile(r"^\s*[peh]\s*:\s*\d+\s*$")


def parse_generators(text, nvars):
    """Comma-separated family tokens (``p:3``) or polynomials (``x1^2 - x2*x3``)."""
    out = []
    for tok in text.split(","):
        if not tok.strip():
            continue
        if _FAMILY.match(tok):
            out.append(generate(parse_family(tok, nvars)))
        else:
            out.append(parse_polynomial(tok, nvars))
    if not out:
        raise ValueError("no generators given")
    return out


def _dump(obj):
    return json.dumps(obj, sort_keys=True, indent=2)


def _write(text, out=None):
    if out:
        mode = "wb" if isinstance(text, bytes) else "w"
        with open(out, mode) as fh:
            fh.write(text)
    elif isinstance(text, bytes):
        sys.stdout.buffer.write(text)
        sys.stdout.flush()
    else:
        print(text)


def _tsv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter="\t", lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


# -- commands ------------------------------------------------------------------

def cmd_gb(args):
    order = {"grevlex": GREVLEX, "lex": LEX}[args.order]
    ideal = Ideal(parse_generators(args.gens, args.vars), args.vars, order)
    gb = ideal.groebner_basis(cutoff=args.cutoff)
    for g in gb.polynomials:
        print(g.to_string(order=order))
    if not gb.complete:
        print(f"# truncated: basis valid up to degree {gb.valid_upto}", file=sys.stderr)
    return 0


def cmd_hilbert(args):
    gens = parse_generators(args.gens, args.vars)
    ideal = Ideal(gens, args.vars)
    if args.route == "groebner":
        series = hs_from_groebner(ideal)
        upto = args.upto if args.upto is not None else max(10, len(series.numerator))
        table = series.expand(upto)
        report = {"series": str(series), **series.to_dict()}
    else:
        upto = args.upto if args.upto is not None else 10
        table = list(hf_linear_algebra(ideal, upto).values)
        report = {}
    report.update({"nvars": args.vars, "route": args.route,
                   "hilbert_function": table, "upto": upto})
    if args.format == "tsv":
        print(_tsv(["degree", "hilbert_function"], enumerate(table)))
    else:
        print(_dump(report))
    return 0


def cmd_check(args):
    gens = parse_generators(args.gens, args.vars)
    verdict = regular_with_case(gens, args.vars, verify=args.verify)
    print(_dump(verdict.to_dict()))
    return 0


def cmd_reduce(args):
    target = parse_family(args.target, args.vars)
    modulus = [parse_family(t, args.vars) for t in args.mod.split(",") if t.strip()]
    print(format_elementary(reduce_to_e(target, modulus, args.vars)))
    return 0


def cmd_verify_catalog(args):
    verdicts = verify_catalog(args.kmax)
    if args.format == "tsv":
        cols = ["branch", "k", "target", "stated", "stated_pass",
                "oracle", "oracle_pass", "discrepancy"]
        rows = [[v.info["rule"]] + [r[c] for c in cols] for v in verdicts for r in v.info["rows"]]
        print(_tsv(["rule"] + cols, rows))
    else:
        print(_dump([v.to_dict() for v in verdicts]))
    return 0 if all(v.ok for v in verdicts) else 1


def cmd_prime(args):
    gens = parse_generators(args.gens, args.vars)
    print(_dump(serre_pipeline(gens, args.vars, args.cutoff).to_dict()))
    return 0


def cmd_root_sums(args):
    sums = [{"exponents": list(z.exponents),
             "antipodal_pairs": [list(p) for p in z.antipodal_pairs] if z.antipodal_pairs else None}
            for z in four_root_zero_sums(args.n)]
    print(_dump({"n": args.n, "count": len(sums), "zero_sums": sums}))
    return 0


def _scan_settings(args):
    config = {}
    path = args.config or os.environ.get(scanner.CONFIG_ENV)
    if path:
        config = scanner.load_config(path)

    def pick(name, default=None):
        value = getattr(args, name)
        return value if value is not None else config.get(name, default)

    jobs = pick("jobs")
    return {
        "max_entry": pick("max"),
        "min_entry": pick("min", 1),
        "vars": pick("vars"),
        "jobs": jobs if jobs is not None else scanner.default_jobs(),
        "item5": pick("item5", "conjunctive"),
        "cutoff": pick("cutoff"),
        "format": pick("format", "json"),
        "out": pick("out"),
    }


def cmd_scan(args):
    settings = _scan_settings(args)
    report = scanner.scan(args.predicate, settings["max_entry"], settings["vars"],
                          jobs=settings["jobs"], item5=settings["item5"],
                          cutoff=settings["cutoff"], min_entry=settings["min_entry"])
    _write(scanner.emit_report(report, settings["format"]), settings["out"])
    s = report.summary
    print(f"{report.predicate}: {s['total']} tuples, {s['agree']} agree, "
          f"{s['mismatch']} mismatch ({s['verified_mismatches']} in verified slices), "
          f"{s['inconclusive']} inconclusive, {s['no-claim']} no-claim", file=sys.stderr)
    return report.exit_code()


# -- parser --------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="regseq",
        description="Regular sequences of symmetric polynomials: Groebner bases, "
                    "Hilbert series, reductions, primality certificates, scans.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_gens(p):
        p.add_argument("--vars", type=int, required=True, help="number of variables")
        p.add_argument("--gens", required=True,
                       help='comma-separated families ("p:1,h:3") or polynomials')
        return p

    p = with_gens(sub.add_parser("gb", help="reduced Groebner basis"))
    p.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
    p.add_argument("--cutoff", type=int, default=None, help="truncate at this degree")
    p.set_defaults(func=cmd_gb)

    p = with_gens(sub.add_parser("hilbert", help="Hilbert series and function"))
    p.add_argument("--upto", type=int, default=None)
    p.add_argument("--route", choices=["groebner", "linear-algebra"], default="groebner")
    p.add_argument("--format", choices=["json", "tsv"], default="json")
    p.set_defaults(func=cmd_hilbert)

    p = with_gens(sub.add_parser("check", help="decide regularity"))
    p.add_argument("--verify", action="store_true",
                   help="cross-check fast paths against the series criterion")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reduce", help="residue of a family in the e-basis")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--target", required=True, help='e.g. "p:9"')
    p.add_argument("--mod", required=True, help='e.g. "p:1,p:2"')
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify-catalog", help="check every closed-form reduction rule")
    p.add_argument("--kmax", type=int, default=5)
    p.add_argument("--format", choices=["json", "tsv"], default="json")
    p.set_defaults(func=cmd_verify_catalog)

    p = with_gens(sub.add_parser("prime", help="Serre-criterion primality certificate"))
    p.add_argument("--cutoff", type=int, default=None)
    p.set_defaults(func=cmd_prime)

    p = sub.add_parser("root-sums", aliases=["lemma44"],
                       help="vanishing sums of four n-th roots of unity")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_root_sums)

    p = sub.add_parser("scan", help="compare a conjecture with the decision procedure")
    p.add_argument("--predicate", required=True, choices=sorted(scanner.PREDICATES))
    p.add_argument("--vars", type=int, default=None)
    p.add_argument("--max", type=int, default=None, help="largest entry")
    p.add_argument("--min", type=int, default=None, help="smallest entry")
    p.add_argument("--jobs", type=int, default=None,
                   help=f"worker processes (default ${scanner.JOBS_ENV} or 1)")
    p.add_argument("--item5", choices=scanner.ITEM5_READINGS, default=None)
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--format", choices=["json", "tsv"], default=None)
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--config", default=None,
                   help=f"key = value file (default ${scanner.CONFIG_ENV})")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Exception as exc:  # bad input or engine failure
        print(f"regseq: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
