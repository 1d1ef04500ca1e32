"""Degree bookkeeping for Jacobian rings of hypersurfaces and complete intersections.

For a smooth degree-``d`` hypersurface ``X`` in P^{n+1} the primitive Hodge
piece H^{n-p,p} is the graded piece of the Jacobian ring in degree
``(p+1)d - (n+2)``, and the ring is Gorenstein with socle in degree
``(n+2)(d-2)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import SingularInput
from .quotient import QuotientRing, artinian_check
from .ring import Polynomial


def socle_degree(n: int, d: int) -> int:
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    return (n + 2) * (d - 2)


def hodge_degree(n: int, d: int, p: int) -> int:
    """Degree of the Jacobian-ring piece carrying H^{n-p,p}_prim. May be negative."""
    if not 0 <= p <= n:
        raise ValueError(f"p={p} outside 0..{n}")
    return (p + 1) * d - (n + 2)


def weighted_socle(weights, degrees) -> int:
    weights, degrees = list(weights), list(degrees)
    if not weights or not degrees:
        raise ValueError("weights and degrees must be nonempty")
    if any(x < 1 for x in weights + degrees):
        raise ValueError("weights and degrees must be positive")
    return sum(degrees) - sum(weights)


@dataclass(frozen=True)
class HypersurfaceContext:
    n: int
    d: int

    @property
    def sigma(self) -> int:
        return socle_degree(self.n, self.d)

    @property
    def hodge_degrees(self) -> list:
        return [hodge_degree(self.n, self.d, p) for p in range(self.n + 1)]

    @property
    def ks_degree(self) -> int:
        return self.d


class CIType(str, enum.Enum):
    GENERAL_TYPE = "GeneralType"
    CALABI_YAU = "CalabiYau"
    FANO_OR_QUADRIC = "FanoOrQuadric"


@dataclass(frozen=True)
class CIContext:
    n: int
    c: int
    degrees: tuple
    kappa: int
    classification: CIType
    quadric: bool


def classify_ci(n: int, c: int, degrees) -> CIContext:
    degrees = tuple(sorted(int(x) for x in degrees))
    if c < 1 or len(degrees) != c:
        raise ValueError(f"expected {c} degrees, got {len(degrees)}")
    if any(x < 2 for x in degrees):
        raise ValueError("all degrees must be at least 2")
    kappa = sum(degrees) - (n + c + 1)
    if kappa > 0:
        kind = CIType.GENERAL_TYPE
    elif kappa == 0:
        kind = CIType.CALABI_YAU
    else:
        kind = CIType.FANO_OR_QUADRIC
    return CIContext(n, c, degrees, kappa, kind, quadric=(c == 1 and degrees == (2,)))


@dataclass(frozen=True)
class WeightedContext:
    weights: tuple
    degrees: tuple

    @property
    def sigma_w(self) -> int:
        return weighted_socle(self.weights, self.degrees)


def hypersurface_context(F: Polynomial, n: int) -> HypersurfaceContext:
    ring = F.ring
    if not ring.standard_grading:
        raise ValueError("the hypersurface dictionary needs all weights equal to 1")
    if ring.num_vars != n + 2:
        raise ValueError(f"a hypersurface of dimension {n} needs {n + 2} variables, ring has {ring.num_vars}")
    F.require_homogeneous()
    if F.is_zero:
        raise ValueError("zero polynomial")
    return HypersurfaceContext(n, F.degree)


def smooth_jacobian_ring(F: Polynomial, n: int, Q: QuotientRing | None = None):
    """Context and Jacobian ring of ``F``; raises SingularInput unless the ring is Artinian."""
    ctx = hypersurface_context(F, n)
    Q = Q or QuotientRing.jacobian(F)
    check = artinian_check(Q, max(ctx.sigma, 0))
    if not check:
        raise SingularInput(f"Jacobian ring is not Artinian (dims {check.dims}); F is singular", check.dims)
    return ctx, Q


def primitive_hodge_numbers(F: Polynomial, n: int, Q: QuotientRing | None = None) -> list:
    """h^{n-p,p}_prim for p = 0..n."""
    ctx, Q = smooth_jacobian_ring(F, n, Q)
    return [Q.graded_dim(a) for a in ctx.hodge_degrees]
