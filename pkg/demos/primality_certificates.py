"""Certifying that ideals of two power sums in four variables are prime.

The argument: the generators form a regular sequence, and adding the
maximal minors of the Jacobian gives an Artinian ideal, so the singular
locus is the origin.  The quotient is then normal, hence a domain.
The demo also runs the brute-force search for common zeros over roots of
unity, which is a sanity check and does not certify anything.
"""

from regseq import jacobian_minors, serre_pipeline, zero_locus_probe
from regseq.symfun import SymFamily, generate


def p(d, n=4):
    return generate(SymFamily("p", d, n))


for a, b in [(1, 2), (2, 3), (3, 4), (1, 4), (1, 6)]:
    report = serre_pipeline([p(a), p(b)], 4)
    print(f"(p{a}, p{b}): {report.verdict:<16} Artinian from degree {report.artinian_degree}, "
          f"{report.jacobian_minors} minors")

print("\nminors of (p2, p3):")
for g in jacobian_minors([p(2), p(3)], 4).generators:
    print("  ", g)

print("\nno common zero of (p1, p4) + minors among cube-root points:",
      zero_locus_probe([p(1), p(4)], 4, candidate_support=3, roots_order=3))
