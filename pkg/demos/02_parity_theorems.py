# Parity of partitions with initial repetitions.
#
# Each c_i has an exact generating function and an independent brute-force
# enumerator.  We check they agree, then look at coefficients mod 2.

from qparity import partitions
from qparity.families import QuadraticFamily, family_members
from qparity.parity import theorem_registry, verify_theorem

# the two partitions of 7 counted by c2
for inst in partitions.bruteforce_list("c2", 7):
    print("c2(7):", inst.j, inst.parts)

s = partitions.gf_series("c9", 20)
print("c9(11) =", s[11], "brute force:", partitions.bruteforce_count("c9", 11))

# c1 is odd exactly at the triangular numbers
p = partitions.gf_parity("c1", 200)
print("odd c1(n):", p.support()[:10])
print("triangular:", family_members(QuadraticFamily(1, 1, 0, 2, "Z>=0"), 200)[:10])

# every registered result, verified up to N = 2000
for thm in theorem_registry():
    rep = verify_theorem(thm.id, 2000)
    print(f"{thm.id:12s} {rep.status:4s} {thm.statement}")
