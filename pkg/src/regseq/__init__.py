"""Regular sequences of symmetric polynomials, decided exactly.

Exact polynomial arithmetic, Buchberger's algorithm, Hilbert series (by
Groebner basis and by linear algebra), regularity verdicts, reductions to the
elementary basis, Serre-criterion primality certificates, roots-of-unity sums
and conjecture scans.
"""

from .cyclotomic import cyclotomic, four_root_zero_sums
from .groebner import CutoffExceeded, GroebnerBasis, Ideal, buchberger, is_member, normal_form
from .hilbert import (
    HilbertFunctionTable,
    HilbertSeries,
    ci_series,
    hf_linear_algebra,
    hs_from_groebner,
)
from .polycore import GREVLEX, LEX, Monomial, MonomialOrder, Polynomial, parse_polynomial
from .primality import SerreReport, jacobian_minors, serre_pipeline, zero_locus_probe
from .reductions import ReductionRule, catalog, reduce_to_e, verify_rule
from .regular import RegSeqVerdict, classify_triple, is_regular_sequence
from .scanner import ScanReport, emit_report, eval_predicate, scan
from .symfun import (
    SymFamily,
    complete,
    elementary,
    expand_elementary,
    generate,
    power_sum,
    to_elementary,
)
from .verdict import Verdict

__version__ = "0.1.0"

__all__ = [
    "CutoffExceeded", "GREVLEX", "GroebnerBasis", "HilbertFunctionTable", "HilbertSeries",
    "Ideal", "LEX", "Monomial", "MonomialOrder", "Polynomial", "ReductionRule",
    "RegSeqVerdict", "ScanReport", "SerreReport", "SymFamily", "Verdict", "buchberger",
    "catalog", "ci_series", "classify_triple", "complete", "cyclotomic", "elementary",
    "emit_report", "eval_predicate", "expand_elementary", "four_root_zero_sums", "generate",
    "hf_linear_algebra", "hs_from_groebner", "is_member", "is_regular_sequence",
    "jacobian_minors", "normal_form", "parse_polynomial", "power_sum", "reduce_to_e", "scan",
    "serre_pipeline", "to_elementary", "verify_rule", "zero_locus_probe",
]
