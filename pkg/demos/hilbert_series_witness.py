"""Why non-membership is not enough: (h1, h4, h5) in three variables.

h5 is not in the ideal (h1, h4), yet the three forms are not a regular
sequence.  The Hilbert series shows it: the quotient disagrees with a
complete intersection of degrees 1, 4, 5 from degree 7 on.
"""

from regseq import Ideal, ci_series, hs_from_groebner, is_regular_sequence
from regseq.symfun import SymFamily, generate

n = 3
h1, h4, h5 = (generate(SymFamily("h", d, n)) for d in (1, 4, 5))

print("h5 in (h1, h4)?", h5 in Ideal([h1, h4], n))

series = hs_from_groebner(Ideal([h1, h4, h5], n))
ci = ci_series((1, 4, 5), n)
print("quotient series       :", series)
print("numerator over (1-t)^3:", series.uncancelled(3))
print("complete intersection :", ci)

upto = 10
print("\n d  HF(S/I)  CI")
for d, (a, b) in enumerate(zip(series.expand(upto), ci.expand(upto))):
    print(f"{d:2d}  {a:7d}  {b:3d}" + ("   <- first difference" if d == series.first_difference(ci) else ""))

print("\nverdict:", is_regular_sequence([h1, h4, h5], n).to_dict())
