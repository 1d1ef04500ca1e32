"""
Primitive Hodge numbers from graded pieces
==========================================

H^{n-p,p}_prim of a smooth hypersurface is the graded piece of the
Jacobian ring in degree (p+1)d - (n+2).
"""

from jacring import RingDescriptor, parse_polynomial, primitive_hodge_numbers
from jacring.hodge import hypersurface_context

cases = [
    ("quartic K3", "x0^4+x1^4+x2^4+x3^4", 2),
    ("cubic surface", "x0^3+x1^3+x2^3+x3^3", 2),
    ("plane cubic", "x0^3+x1^3+x2^3", 1),
    ("quintic threefold", "x0^5+x1^5+x2^5+x3^5+x4^5", 3),
]

for name, text, n in cases:
    F = parse_polynomial(text, RingDescriptor(n + 2))
    ctx = hypersurface_context(F, n)
    print(f"{name:18s} degrees {ctx.hodge_degrees}  h = {primitive_hodge_numbers(F, n)}")
