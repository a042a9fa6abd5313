# c12 does not follow 6j^2 + 4j.
#
# The single partition (1) has distinct parts and no even parts, so it is
# counted by c12 and c12(1) = 1 is odd.  But 1 is not of the form 6j^2 + 4j.

from qparity import partitions
from qparity.families import QuadraticFamily, family_members
from qparity.parity import verify_theorem

print(partitions.bruteforce_list("c12", 1))
print(verify_theorem("T-c12", 2000).to_json())
print(verify_theorem("C-c12-odd", 2000).to_json())

# The observed odd support is the pentagonal-type family (3j^2 + 5j)/2.
N = 2000
odd = partitions.gf_parity("c12", N).support()
observed = family_members(QuadraticFamily(3, 5, 0, 2), N)
print("odd c12(n):", odd[:12])
print("matches (3j^2+5j)/2 up to", N, ":", odd == observed)

# The generating function and the enumerator agree, so the claim itself is off.
s = partitions.gf_series("c12", 30)
print("gf == brute force:", all(s[n] == partitions.bruteforce_count("c12", n) for n in range(31)))
