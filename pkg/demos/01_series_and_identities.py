# Exact truncated q-series: a quick tour.
#
# A Series holds the coefficients of q^0..q^N as Python ints, so nothing
# overflows no matter how large N gets.

from qparity import ProductSpec, ThetaSpec, build_product, build_theta, poch, verify_identity
from qparity.series import coefficient

N = 100

# 1/(q;q)_inf is the partition generating function.
p = build_product(ProductSpec((poch(-1, 1, denom=True),)), N)
print("p(n), n <= 12:", p.tolist()[:13])
print("p(100) =", coefficient(p, 100))

# The pentagonal number theorem, (q;q)_inf = sum (-1)^n q^(n(3n-1)/2):
euler = build_product(ProductSpec((poch(-1, 1),)), 40)
print("support of (q;q)_inf below 40:", euler.support())

# Theta sums are built straight from their exponents.
print("sum q^(4n^2+n):", build_theta(ThetaSpec(8, 3), 60).support())

# Catalog entries compare both sides coefficient by coefficient.
for iid in ["gauss", "cube", "slater.eq7", "slater.eq50", "jtp.7.2"]:
    rep = verify_identity(iid, 1000)
    print(f"{iid:12s} {rep.status} ({rep.elapsed_ms:.0f} ms)")
