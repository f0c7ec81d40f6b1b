"""Which four n-th roots of unity sum to zero?

Sums are tested exactly in Q(zeta_n): each power of zeta is reduced
modulo the cyclotomic polynomial.  For odd n nothing vanishes; for even n
every vanishing sum is two antipodal pairs.
"""

from regseq import cyclotomic, four_root_zero_sums

for n in (5, 6, 8, 12):
    print(f"Phi_{n} = {cyclotomic(n)}")

for n in range(5, 17):
    sums = four_root_zero_sums(n)
    antipodal = all(z.is_antipodal for z in sums)
    print(f"n={n:2d}: {len(sums):3d} vanishing sums" + (", all antipodal" if sums and antipodal else ""))

print("\nn=8:", [z.antipodal_pairs for z in four_root_zero_sums(8)][:4], "...")
