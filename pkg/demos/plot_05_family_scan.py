"""
Scanning a one-parameter family
===============================

Walk along x0^4+x1^4+x2^4+x3^4 - t x0^2 x1^2, flag singular members, and
measure how far the singular ones sit from a smooth member.
"""

from jacring import RingDescriptor, family_scan, rank_drop_delta, total_tjurina
from jacring.ring import FamilyTemplate

R = RingDescriptor(4)
T = FamilyTemplate("x0^4+x1^4+x2^4+x3^4 - t*x0^2*x1^2", R)

for row in family_scan(T, 2, [-3, -2, -1, 0, 1, 2, 3], num_samples=2):
    state = "smooth" if row.smooth else "singular"
    print(f"t={str(row.t):>3}  {state:8s}  tjurina={row.tjurina_total}  "
          f"yukawa={row.yukawa_verdict}  delta(R_{row.delta_degree})={row.delta}")

# at t=2 the singular points are [1:1:0:0] and [1:-1:0:0]
F2 = T.at(2)
print("total Tjurina number at t=2:", total_tjurina(F2))
print("rank drop by degree:", [rank_drop_delta(F2, k) for k in range(10)])
