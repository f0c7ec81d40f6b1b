"""Enumerate integer tuples, compare arithmetic conjectures with the decision
procedures, and serialize the outcome deterministically."""

from __future__ import annotations

import configparser
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from math import gcd

from .primality import serre_pipeline
from .regular import is_regular_sequence
from .symfun import SymFamily, generate

__all__ = [
    "PREDICATES",
    "eval_predicate",
    "prime_families",
    "candidate_tuples",
    "verified_slice",
    "ScanReport",
    "scan",
    "emit_report",
    "load_config",
    "default_jobs",
]

JOBS_ENV = "REGSEQ_JOBS"
CONFIG_ENV = "REGSEQ_CONFIG"

# predicate id -> (symmetric family, number of variables, tuple length)
PREDICATES = {
    "ckw3p": ("p", 3, 3),
    "ckw3h": ("h", 3, 3),
    "conj4p-triples": ("p", 4, 3),
    "conj4-prime-families": ("p", 4, 2),
    "ckw4p": ("p", 4, 4),
}

DEFAULT_MAX = {3: 12, 4: 10}
DEFAULT_MAX_QUADRUPLES = 10

ITEM5_READINGS = ("conjunctive", "ignore")

# slices whose regularity (or primality) is settled by proved statements
_VERIFIED_PREFIXES = {
    "ckw3p": {(1, 2), (1, 3), (2, 3)},
    "ckw3h": {(1, 2), (1, 3), (1, 4), (2, 3)},
    "ckw4p": {(1, 2, 3), (1, 2, 4)},
}


def _gcd(values):
    return reduce(gcd, values, 0)


def _is_prime(a):
    return a >= 2 and all(a % q for q in range(2, int(a ** 0.5) + 1))


def _strict(t):
    if any(x < 1 for x in t) or any(x >= y for x, y in zip(t, t[1:])):
        raise ValueError(f"expected strictly increasing positive integers, got {t}")


def _ckw3p(t):
    if _gcd(t) != 1:
        raise ValueError(f"{t}: the power-sum triple conjecture needs gcd 1")
    a, b, c = t
    return a * b * c % 6 == 0


def _ckw3h(t):
    a, b, c = t
    if a * b * c % 6:
        return False
    if gcd(gcd(a + 1, b + 1), c + 1) != 1:
        return False
    # for t > c + 2 every d + 2 is a residue >= 2, so checking 3..c+2 suffices
    return all(any((d + 2) % m not in (0, 1) for d in t) for m in range(3, c + 3))


def _conj4p_items(t):
    """Items 1-4 for triples in four variables, read literally (N = {1,2,...})."""
    a, b, n = t
    if a % 2:
        return True if b % 2 == 0 else n % 2 == 0
    m = a // 2
    lam = b - a
    if m % 2:
        if lam % 4 == 0 and lam >= 4:
            return n % 4 == 2 and n >= 6
        return True
    if b == 3 * a:
        return False
    return not (n % a == 0 and (n // a) % 2 == 1 and n // a >= 3)


def _conj4p(t, item5="conjunctive"):
    if item5 not in ITEM5_READINGS:
        raise ValueError(f"item5 must be one of {ITEM5_READINGS}")
    ok = _conj4p_items(t)
    if item5 == "conjunctive":
        a, b, n = t
        ok = ok and not (b == 2 * a and n == 5 * a)
    return ok


def prime_families(pair):
    """Families (1-4) of the prime-ideal conjecture that claim ``(p_a, p_b)``."""
    a, b = pair
    out = []
    if _is_prime(a) and a >= 5 and any(
            b - a - m >= 0 and (b - a - m) % 6 == 0 for m in (1, 5)):
        out.append(1)
    if a == 2 and b > 2 and not any(
            b - 2 == 3 * k or b - 2 == 4 * k for k in range(1, b)):
        out.append(2)
    if a == 3 and b % 2 == 0 and b > 3:
        m = b // 2
        if not (m >= 6 and (m - 6) % 9 == 0):
            out.append(3)
    if a == 4 and b > 4 and not any(
            b - 4 == 3 * k or b - 4 == 8 * k for k in range(1, b)):
        out.append(4)
    return out


def _ckw4p(t):
    if _gcd(t) != 1:
        raise ValueError(f"{t}: the power-sum quadruple conjecture needs gcd 1")
    evens = [x for x in t if x % 2 == 0]
    if len(evens) < 2 or not any(x % 3 == 0 for x in t) or not any(x % 4 == 0 for x in t):
        return False
    d = _gcd(evens)
    if not any((x // d) % 2 == 0 for x in evens):
        return False
    s = set(t)
    return not any(2 * x in s and 5 * x in s for x in t)


def eval_predicate(pid, t, item5="conjunctive"):
    """Arithmetic side of the comparison; a pure function of the tuple."""
    if pid not in PREDICATES:
        raise ValueError(f"unknown predicate {pid!r}")
    t = tuple(int(x) for x in t)
    if len(t) != PREDICATES[pid][2]:
        raise ValueError(f"{pid} takes tuples of length {PREDICATES[pid][2]}")
    _strict(t)
    if pid == "ckw3p":
        return _ckw3p(t)
    if pid == "ckw3h":
        return _ckw3h(t)
    if pid == "conj4p-triples":
        return _conj4p(t, item5)
    if pid == "conj4-prime-families":
        return bool(prime_families(t))
    return _ckw4p(t)


def candidate_tuples(pid, max_entry, min_entry=1):
    """All tuples in the scan range, in lexicographic order."""
    kind, _, length = PREDICATES[pid]
    out = []
    for t in combinations(range(min_entry, max_entry + 1), length):
        if pid in ("ckw3p", "ckw4p") and _gcd(t) != 1:
            continue
        if pid == "conj4-prime-families" and not (
                t[0] in (2, 3, 4) or (_is_prime(t[0]) and t[0] >= 5)):
            continue
        out.append(t)
    return out


def verified_slice(pid, t):
    """Whether the tuple lies in a slice where the truth is proved."""
    if pid in _VERIFIED_PREFIXES:
        return tuple(t[:-1]) in _VERIFIED_PREFIXES[pid]
    # consecutive pairs and (1, 2m) give prime ideals, hence regular triples
    # whenever the third form is outside the pair's ideal
    a, b = t[0], t[1]
    return b == a + 1 or (a == 1 and b % 2 == 0)


# -- evaluation ----------------------------------------------------------------

def _forms(kind, degrees, n):
    return [generate(SymFamily(kind, d, n)) for d in degrees]


def _proper_subtuples(t):
    return [s for r in range(2, len(t)) for s in combinations(t, r)]


def _regular_row(kind, n, t, bad_subtuples):
    # a sub-sequence of a homogeneous regular sequence is regular
    pruned = [s for s in _proper_subtuples(t) if s in bad_subtuples]
    if pruned:
        return {"procedure": False, "method": "subset-pruning",
                "pruned_by": list(pruned[0]), "witness": None}
    v = is_regular_sequence(_forms(kind, t, n), n)
    return {"procedure": v.regular, "method": v.method, "witness": v.witness}


def _prime_row(n, t, cutoff):
    r = serre_pipeline(_forms("p", t, n), n, cutoff)
    return {"procedure": r.verdict, "method": "serre-pipeline",
            "regular_sequence": r.regular_sequence,
            "artinian_degree": r.artinian_degree, "witness": None}


def _evaluate(job):
    pid, t, bad, cutoff = job
    kind, n, _ = PREDICATES[pid]
    try:
        if pid == "conj4-prime-families":
            return _prime_row(n, t, cutoff)
        return _regular_row(kind, n, t, bad)
    except Exception as exc:  # recorded as an inconclusive row, never dropped
        return {"procedure": None, "method": "error", "witness": None,
                "error": f"{type(exc).__name__}: {exc}"}


def _subtuple_verdict(job):
    kind, n, sub = job
    return sub, is_regular_sequence(_forms(kind, sub, n), n).regular


def _map(fn, jobs, workers):
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    return [fn(j) for j in jobs]


def _status(pid, predicate, row):
    if row.get("error"):
        return "inconclusive"
    if pid == "conj4-prime-families":
        if not predicate:
            return "no-claim"
        if not row["regular_sequence"]:
            return "mismatch"
        return "agree" if row["procedure"] == "prime-certified" else "inconclusive"
    return "agree" if predicate == row["procedure"] else "mismatch"


@dataclass
class ScanReport:
    predicate: str
    range: dict
    rows: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    @property
    def summary(self):
        counts = {"agree": 0, "mismatch": 0, "inconclusive": 0, "no-claim": 0}
        for r in self.rows:
            counts[r["status"]] += 1
        counts["total"] = len(self.rows)
        counts["errors"] = sum(1 for r in self.rows if r.get("error"))
        counts["verified_mismatches"] = sum(
            1 for r in self.rows if r["status"] == "mismatch" and r["verified_slice"])
        return counts

    @property
    def mismatches(self):
        return [r["tuple"] for r in self.rows if r["status"] == "mismatch"]

    def exit_code(self):
        s = self.summary
        if s["errors"]:
            return 2
        return 1 if s["verified_mismatches"] else 0

    def to_dict(self):
        return {
            "predicate": self.predicate,
            "range": self.range,
            "rows": self.rows,
            "summary": self.summary,
            "mismatches": self.mismatches,
            "metadata": self.metadata,
        }


def scan(pid, max_entry=None, vars=None, jobs=1, item5="conjunctive",
         cutoff=None, min_entry=1, prune=True):
    """Compare a conjecture predicate with the decision procedure over a range."""
    if pid not in PREDICATES:
        raise ValueError(f"unknown predicate {pid!r}")
    kind, n, length = PREDICATES[pid]
    if vars is not None and vars != n:
        raise ValueError(f"{pid} is stated in {n} variables, not {vars}")
    if max_entry is None:
        max_entry = DEFAULT_MAX_QUADRUPLES if length == 4 else DEFAULT_MAX[n]
    if item5 not in ITEM5_READINGS:
        raise ValueError(f"item5 must be one of {ITEM5_READINGS}")
    tuples = candidate_tuples(pid, max_entry, min_entry)
    bad = frozenset()
    if prune and length > 2 and tuples:
        subs = sorted({s for t in tuples for s in _proper_subtuples(t)}, key=lambda s: (len(s), s))
        verdicts = _map(_subtuple_verdict, [(kind, n, s) for s in subs], jobs)
        bad = frozenset(s for s, ok in verdicts if not ok)
    results = _map(_evaluate, [(pid, t, bad, cutoff) for t in tuples], jobs)
    rows = []
    for t, res in zip(tuples, results):
        predicate = eval_predicate(pid, t, item5)
        row = {"tuple": list(t), "predicate": predicate, **res}
        row["status"] = _status(pid, predicate, row)
        if row["status"] == "mismatch" and row["method"] == "subset-pruning":
            # report the tuple's own divergence degree, not just the pruning pair
            full = is_regular_sequence(_forms(kind, t, n), n)
            row["witness"] = full.witness
        if pid == "conj4-prime-families":
            row["families"] = prime_families(t)
        row["verified_slice"] = verified_slice(pid, t)
        rows.append(row)
    metadata = {"family": kind, "tuple_length": length}
    if pid == "conj4p-triples":
        metadata["item5"] = item5
        metadata["ambiguities"] = [
            "item 3: 'lambda = 4k' and 'n = 4l+2' read with k, l >= 1",
            "item 4: 'n = (2k+1)a' read with k >= 1",
            "item 5: additional condition unless item5=ignore",
        ]
    if pid == "conj4-prime-families":
        metadata["note"] = "inconclusive pipeline results are not disagreements"
    return ScanReport(pid, {"vars": n, "min": min_entry, "max": max_entry}, rows, metadata)


# -- output and configuration --------------------------------------------------

TSV_COLUMNS = ("tuple", "predicate", "procedure", "status", "verified_slice", "method", "witness")


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, list):
        return ",".join(map(str, value))
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value).lower() if isinstance(value, bool) else str(value)


def emit_report(report, fmt="json"):
    """Byte-deterministic JSON or TSV serialization."""
    if fmt == "json":
        return (json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n").encode()
    if fmt == "tsv":
        # cells never contain tabs or newlines, so no quoting is needed
        lines = ["\t".join(TSV_COLUMNS)]
        lines += ["\t".join(_cell(row.get(c)) for c in TSV_COLUMNS) for row in report.rows]
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}; use json or tsv")


def load_config(path):
    """Read ``key = value`` settings (INI syntax; a ``[scan]`` header is optional)."""
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    with open(path) as fh:
        text = fh.read()
    if not text.lstrip().startswith("["):
        text = "[scan]\n" + text
    try:
        parser.read_string(text, source=str(path))
    except configparser.Error as exc:
        raise ValueError(str(exc)) from exc
    section = parser["scan"] if parser.has_section("scan") else parser.defaults()
    return {key.replace("-", "_"): int(value) if value.lstrip("-").isdigit() else value
            for key, value in section.items()}


def default_jobs():
    value = os.environ.get(JOBS_ENV)
    if not value:
        return 1
    jobs = int(value)
    if jobs < 1:
        raise ValueError(f"{JOBS_ENV} must be a positive integer")
    return jobs
