"""
Strong Lefschetz witnesses
==========================

Search for a linear form whose powers have maximal rank between all
graded pieces, and see the Hilbert-function gate reject an algebra whose
Hilbert function is not symmetric.
"""

from jacring import (QuotientRing, RingDescriptor, find_lefschetz_witness, lefschetz_check,
                     parse_polynomial)

R = RingDescriptor(4)
Q = QuotientRing.jacobian(parse_polynomial("x0^4+x1^4+x2^4+x3^4", R))
search = find_lefschetz_witness(Q, num_samples=4, seed=0)
print("quartic:", search.outcome, "ell =", search.ell)
for entry in search.report.entries:
    if entry.kind == "reflection":
        print(f"  x ell^{entry.m}: R_{entry.k} -> R_{entry.k + entry.m}  rank {entry.rank}/{entry.source_dim}")

# a single variable is not enough for the Fermat quartic
print("x0 alone:", lefschetz_check(Q, R.variable(0)).verdict)

# C[x,y]/(x^3, y^3, xy) has Hilbert function (1,2,2)
R2 = RingDescriptor(2)
A = QuotientRing(R2, [parse_polynomial(s, R2) for s in ("x0^3", "x1^3", "x0*x1")])
search = find_lefschetz_witness(A)
print("(x^3,y^3,xy):", search.outcome, search.obstruction.verdict, search.obstruction.hilbert_function)

# without the gate the rank table shows where it breaks
rep = lefschetz_check(A, parse_polynomial("x0+x1", R2), hf_gate=False)
print("  ungated:", rep.verdict, "at", rep.failed_at, "-", rep.reason)
