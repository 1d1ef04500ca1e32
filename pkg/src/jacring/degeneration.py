"""One-parameter families, global Tjurina numbers and the middle-degree rank drop.

For a hypersurface with isolated singularities the Jacobian quotient is no
longer Artinian: its graded dimension settles, in high degree, at the total
Tjurina number (the sum of the local dimensions of O/(f, df)). For
weighted-homogeneous singularities such as nodes this equals the total
Milnor number. Per-point attribution is not computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import JacRingError, NoStabilization
from .hodge import hypersurface_context
from .ivhs import max_yukawa_rank
from .quotient import QuotientRing, artinian_check, ci_hilbert_series
from .ring import FamilyTemplate, Polynomial, RingDescriptor

STABILIZATION_MARGIN = 20


def total_tjurina(F: Polynomial, cap: int | None = None, Q: QuotientRing | None = None) -> int:
    """Stabilized dimension of the Jacobian quotient beyond the smooth socle degree."""
    F.require_homogeneous()
    if F.is_zero:
        raise ValueError("zero polynomial")
    d = F.degree
    n = F.ring.num_vars - 2
    sigma = max((n + 2) * (d - 2), 0)
    if cap is None:
        cap = sigma + STABILIZATION_MARGIN
    Q = Q or QuotientRing.jacobian(F)
    prev = Q.graded_dim(sigma + 1)
    for k in range(sigma + 1, cap):
        nxt = Q.graded_dim(k + 1)
        if nxt == prev:
            return prev
        prev = nxt
    raise NoStabilization(f"graded dimensions still changing at degree {cap}",
                          dims={k: Q.graded_dim(k) for k in range(sigma + 1, cap + 1)})


def smooth_reference_dim(ring: RingDescriptor, degrees, k: int) -> int:
    """dim R_k for a smooth member: Hilbert function of a complete intersection of
    type (d-1, ..., d-1), one generator per variable."""
    degrees = list(degrees)
    if len(degrees) != 1:
        raise ValueError("only hypersurface references (one degree) are supported")
    if k < 0:
        return 0
    series = ci_hilbert_series([degrees[0] - 1] * ring.num_vars, ring)
    return series[k] if k < len(series) else 0


def rank_drop_delta(F: Polynomial, k: int, reference_degrees=None, Q: QuotientRing | None = None) -> int:
    """dim R(F)_k minus the same dimension for a smooth hypersurface of the same degree."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    F.require_homogeneous()
    degrees = list(reference_degrees) if reference_degrees else [F.degree]
    Q = Q or QuotientRing.jacobian(F)
    return Q.graded_dim(k) - smooth_reference_dim(F.ring, degrees, k)


def delta_warnings(F: Polynomial, k: int) -> list:
    """Notes that explain a zero delta forced by degree reasons."""
    d = F.degree
    if d is not None and k < d - 1:
        return [f"degree {k} is below the Jacobian generator degree {d - 1}: R_{k} = S_{k} "
                f"(dim {F.ring.dim(k)}) for every degree-{d} hypersurface, smooth or not, "
                f"so no singularity can raise dim R_{k} and delta is 0 there"]
    return []


@dataclass
class FamilyScanRow:
    t: Fraction
    polynomial: Polynomial | None
    smooth: bool
    dims: dict                 # labelled key degrees -> dimension
    tjurina_total: int | None
    yukawa_rank: int | None
    yukawa_verdict: str | None
    delta: int | None
    delta_degree: int
    error: str = ""

    CSV_COLUMNS = ("t", "smooth", "dim_a0", "dim_mid", "dim_sigma", "dim_sigma_plus1",
                   "tjurina", "yukawa_rank", "delta")


def family_scan(template: FamilyTemplate, n: int, t_values, num_samples: int = 8, seed: int = 0,
                delta_degree: int | None = None) -> list:
    t_values = [Fraction(t) for t in t_values]
    if not t_values:
        raise ValueError("need at least one parameter value")
    rows = []
    for t in t_values:
        F = template.at(t)
        if F.is_zero:
            rows.append(FamilyScanRow(t, None, False, {}, None, None, None, None,
                                      delta_degree or 0, error="zero polynomial"))
            continue
        ctx = hypersurface_context(F, n)
        sigma = ctx.sigma
        k_delta = sigma // 2 if delta_degree is None else delta_degree
        Q = QuotientRing.jacobian(F)
        check = artinian_check(Q, max(sigma, 0))
        dims = {"a0": Q.graded_dim(ctx.hodge_degrees[0]), "mid": Q.graded_dim(sigma // 2),
                "sigma": Q.graded_dim(sigma), "sigma+1": check.dims[sigma + 1],
                "sigma+2": check.dims[sigma + 2]}
        delta = rank_drop_delta(F, k_delta, Q=Q)
        if check:
            report = max_yukawa_rank(F, n, num_samples, seed, Q=Q)
            rows.append(FamilyScanRow(t, F, True, dims, 0, report.d_M_lower_bound, report.verdict,
                                      delta, k_delta))
            continue
        try:
            tau, err = total_tjurina(F, Q=Q), ""
        except JacRingError as exc:
            tau, err = None, str(exc)
        rows.append(FamilyScanRow(t, F, False, dims, tau, None, None, delta, k_delta, error=err))
    return rows
