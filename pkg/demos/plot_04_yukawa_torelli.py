"""
Yukawa rank and infinitesimal Torelli
=====================================

The diagonal Yukawa coupling at xi is multiplication by xi^n from the
lowest to the highest Hodge degree. The Torelli map sends xi to all of its
cup-product blocks at once.
"""

from jacring import (RingDescriptor, max_yukawa_rank, parse_polynomial, torelli_rank,
                     yukawa_evaluate)

R5 = RingDescriptor(5)
quintic = parse_polynomial("x0^5+x1^5+x2^5+x3^5+x4^5", R5)

ell = parse_polynomial("x0+x1+x2+x3+x4", R5)
y = yukawa_evaluate(quintic, 3, ell ** 5)
print("quintic, xi = ell^5:", y.map.rows(), "via", y.method)

report = max_yukawa_rank(quintic, 3, num_samples=2, seed=0)
print("max rank:", report.d_M_lower_bound, "of", report.theoretical_max, "->", report.verdict)

R4 = RingDescriptor(4)
for name, text in [("quartic K3", "x0^4+x1^4+x2^4+x3^4"), ("cubic surface", "x0^3+x1^3+x2^3+x3^3")]:
    t = torelli_rank(parse_polynomial(text, R4), 2)
    print(f"{name}: Torelli rank {t.rank} on a {t.dim_source}-dim source, injective={t.injective}")
