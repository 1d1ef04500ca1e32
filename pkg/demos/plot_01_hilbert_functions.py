"""
Hilbert functions of Jacobian rings
===================================

Graded dimensions of S/J for Fermat hypersurfaces, compared with the
complete-intersection series, and a look at what changes when the
hypersurface acquires singular points.
"""

from jacring import QuotientRing, RingDescriptor, ci_hilbert_series, parse_polynomial

R = RingDescriptor(4)
F = parse_polynomial("x0^4+x1^4+x2^4+x3^4", R)
Q = QuotientRing.jacobian(F)

# the partials are a regular sequence of cubics, so the series is (1-t^3)^4/(1-t)^4
print("Fermat quartic     ", Q.hilbert_function(10))
print("CI prediction      ", ci_hilbert_series([3] * 4, R))

# a basis of each graded piece is given by standard monomials
print("basis of R_8       ", Q.standard_monomials(8))

# the member with t=2 of x0^4+...+x3^4 - t x0^2 x1^2 is singular:
# the quotient no longer dies in high degree
G = parse_polynomial("x0^4+x1^4+x2^4+x3^4 - 2*x0^2*x1^2", R)
print("singular member    ", QuotientRing.jacobian(G).hilbert_function(12))

# weighted rings work the same way
W = RingDescriptor(5, (1, 1, 1, 2, 5))
H = parse_polynomial("x0^10+x1^10+x2^10+x3^5+x4^2", W)
QW = QuotientRing.jacobian(H)
print("weighted CY top deg", QW.top_degree())
