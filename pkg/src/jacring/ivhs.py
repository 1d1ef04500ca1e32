"""Infinitesimal variation of Hodge structure as multiplication in the Jacobian ring.

For a smooth hypersurface of degree ``d`` and dimension ``n``, a first-order
deformation is a class ``xi`` in R_d. Cup product with ``xi`` moves
H^{n-p,p} to H^{n-p-1,p+1}, i.e. R_{a_p} -> R_{a_p + d}, and the diagonal
n-fold Yukawa coupling at ``xi`` is multiplication by ``xi^n`` from
R_{a_0} to R_{a_n}.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb

from .errors import JacRingError, NotHomogeneous, SingularInput
from .hodge import smooth_jacobian_ring
from .lefschetz import find_lefschetz_witness
from .quotient import GradedMap, QuotientRing
from .ring import Polynomial

EXPAND_TERM_LIMIT = 10 ** 5


def _check_xi(xi: Polynomial, d: int):
    if not xi.is_homogeneous:
        raise NotHomogeneous("deformation class must be homogeneous")
    if not xi.is_zero and xi.degree != d:
        raise ValueError(f"deformation class must have degree {d}, got {xi.degree}")


def ivhs_step_map(F: Polynomial, n: int, xi: Polynomial, p: int, Q: QuotientRing | None = None) -> GradedMap:
    """Cup product with ``xi``: H^{n-p,p} -> H^{n-p-1,p+1}."""
    if not 0 <= p <= n - 1:
        raise ValueError(f"p={p} outside 0..{n - 1}")
    ctx, Q = smooth_jacobian_ring(F, n, Q)
    _check_xi(xi, ctx.d)
    return Q.multiplication_matrix(xi, ctx.hodge_degrees[p], degree=ctx.d)


@dataclass
class YukawaEvaluation:
    xi: Polynomial
    map: GradedMap
    rank: int
    method: str   # "expand" or "compose"


def yukawa_evaluate(F: Polynomial, n: int, xi: Polynomial, Q: QuotientRing | None = None,
                    method: str = "auto", term_limit: int = EXPAND_TERM_LIMIT) -> YukawaEvaluation:
    """Multiplication by ``xi^n`` from R_{d-(n+2)} to R_{(n+1)d-(n+2)}."""
    ctx, Q = smooth_jacobian_ring(F, n, Q)
    _check_xi(xi, ctx.d)
    a = ctx.hodge_degrees
    if method == "auto":
        estimate = min(F.ring.dim(n * ctx.d), comb(len(xi) + n - 1, n))
        method = "expand" if estimate <= term_limit else "compose"
    if method == "expand":
        M = Q.multiplication_matrix(xi ** n, a[0], degree=n * ctx.d)
    elif method == "compose":
        M = Q.multiplication_matrix(xi, a[0], degree=ctx.d)
        for p in range(1, n):
            M = Q.multiplication_matrix(xi, a[p], degree=ctx.d) @ M
    else:
        raise ValueError(f"unknown method {method!r}")
    return YukawaEvaluation(xi, M, M.rank(), method)


@dataclass
class VariationReport:
    seed: int
    samples_tested: int
    d_M_lower_bound: int
    theoretical_max: int
    verdict: str                    # "IMaximal", "LowerBoundOnly" or "Vacuous"
    witness: Polynomial | None = None
    sample_ranks: list = field(default_factory=list)   # (label, rank) per candidate


def random_element(Q: QuotientRing, k: int, rng: random.Random) -> Polynomial:
    """Uniformly random element of R_k over F_p (small integers over Q)."""
    p = Q.domain.prime
    basis = Q.standard_monomials(k)
    if p:
        coeffs = [rng.randrange(p) for _ in basis]
    else:
        coeffs = [rng.randint(-100, 100) for _ in basis]
    return Polynomial(Q.ring, dict(zip(basis, coeffs)))


def max_yukawa_rank(F: Polynomial, n: int, num_samples: int = 8, seed: int = 0,
                    Q: QuotientRing | None = None) -> VariationReport:
    """Certified lower bound for the maximal diagonal Yukawa rank over R_d."""
    ctx, Q = smooth_jacobian_ring(F, n, Q)
    d = ctx.d
    top = Q.graded_dim(ctx.hodge_degrees[0])
    if top == 0:
        return VariationReport(seed, 0, 0, 0, "Vacuous")

    candidates = []
    search = find_lefschetz_witness(Q, num_samples=num_samples, seed=seed)
    if search.outcome == "Witness":
        candidates.append((f"({search.ell})^{d}", search.ell ** d))
    ring = F.ring
    for j in range(ring.num_vars):
        candidates.append((f"x{j}^{d}", ring.variable(j) ** d))
    rng = random.Random(seed)
    for i in range(num_samples):
        candidates.append((f"random[{i}]", random_element(Q, d, rng)))

    best, witness = -1, None
    ranks = []
    for label, xi in candidates:
        r = yukawa_evaluate(F, n, xi, Q).rank
        ranks.append((label, r))
        if r > best:
            best, witness = r, xi
    verdict = "IMaximal" if best == top else "LowerBoundOnly"
    return VariationReport(seed, len(candidates), best, top, verdict, witness, ranks)


@dataclass
class TorelliResult:
    rank: int
    dim_source: int
    block_shapes: list

    @property
    def injective(self) -> bool:
        return self.rank == self.dim_source


def torelli_rank(F: Polynomial, n: int, Q: QuotientRing | None = None) -> TorelliResult:
    """Rank of xi -> (cup with xi on each H^{n-p,p}), from R_d into the sum of Hom spaces."""
    ctx, Q = smooth_jacobian_ring(F, n, Q)
    dom = Q.domain
    d = ctx.d
    a = ctx.hodge_degrees
    source = Q.standard_monomials(d)
    shapes = [(Q.graded_dim(a[p + 1]), Q.graded_dim(a[p])) for p in range(n)]
    nrows = sum(r * c for r, c in shapes)
    if not source or nrows == 0:
        return TorelliResult(0, len(source), shapes)
    columns = []
    for mono in source:
        xi = Polynomial(F.ring, {mono: 1})
        col = []
        for p in range(n):
            if shapes[p][0] and shapes[p][1]:
                for row in Q.multiplication_matrix(xi, a[p]).rows():
                    col.extend(row)
        columns.append(col)
    M = dom.matrix(len(columns), nrows, [x for col in columns for x in col])
    return TorelliResult(dom.rank(M), len(source), shapes)


@dataclass
class FiberRow:
    index: int
    polynomial: Polynomial
    report: VariationReport | None = None
    singular: bool = False
    error: str = ""


@dataclass
class FamilyExtremes:
    delta_M: int | None
    rows: list


def family_extremes(polys, n: int, num_samples: int = 8, seed: int = 0) -> FamilyExtremes:
    """Minimum over fibers of the per-fiber maximal Yukawa rank; singular fibers are flagged and skipped."""
    rows = []
    for i, F in enumerate(polys):
        try:
            rows.append(FiberRow(i, F, max_yukawa_rank(F, n, num_samples, seed)))
        except SingularInput as exc:
            rows.append(FiberRow(i, F, singular=True, error=str(exc)))
        except JacRingError as exc:
            rows.append(FiberRow(i, F, error=str(exc)))
    values = [r.report.d_M_lower_bound for r in rows if r.report is not None]
    return FamilyExtremes(min(values) if values else None, rows)
