# Hunting for congruences c(mn + r) = 0 (mod 2).
#
# The scanner reports every residue r whose progression is entirely even up
# to N, provided it holds at least min_support indices.

from qparity import partitions
from qparity.families import quad_residues_mod
from qparity.parity import scan_zero_progressions

# c2 mod 7 also yields r = 2: neither 4n^2+n nor n(n+1)/2 is ever 2 mod 7.
N = 2000
for pid, m in [("c2", 5), ("c3", 11), ("c11", 11), ("c2", 7)]:
    found = scan_zero_progressions(partitions.gf_parity(pid, N), m)
    print(f"{pid} mod {m}: {found}")

# c8 needs a larger window: mod 49 at N = 4900
found = scan_zero_progressions(partitions.gf_parity("c8", 4900), 49)
print("c8 mod 49:", found)

# Why: the exponents of the two theta factors avoid these residue pairs.
a = quad_residues_mod(6, 1, 49)
b = quad_residues_mod(10, 1, 49)
sums = {(x + y) % 49 for x in a for y in b}
print("missed residues of a + b:", sorted(set(range(49)) - sums))
