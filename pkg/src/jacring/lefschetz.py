"""Weak and strong Lefschetz testing for graded Artinian quotients.

A ``Witness`` verdict certifies the property for the tested linear form.
``NoneFound`` is not a disproof: failure for every linear form is a closed
condition that sampling cannot decide. Only a Hilbert-function obstruction
(asymmetric or non-unimodal) is a definitive negative.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import NotHomogeneous
from .quotient import GradedMap, QuotientRing
from .ring import Polynomial, linear_form

WLP = "WLP"
SLP = "SLP"


@dataclass(frozen=True)
class HFObstruction:
    hilbert_function: tuple
    verdict: str            # "NotSymmetric", "NotUnimodal" or "NoObstruction"
    degree: int | None = None

    @property
    def obstructed(self) -> bool:
        return self.verdict != "NoObstruction"


def sequence_obstruction(h) -> HFObstruction:
    """Symmetry then unimodality check of a finite Hilbert function."""
    h = list(h)
    while h and h[-1] == 0:
        h.pop()
    top = len(h) - 1
    for k in range(top + 1):
        if h[k] != h[top - k]:
            return HFObstruction(tuple(h), "NotSymmetric", k)
    decreased = False
    for k in range(top):
        if h[k + 1] < h[k]:
            decreased = True
        elif h[k + 1] > h[k] and decreased:
            return HFObstruction(tuple(h), "NotUnimodal", k)
    return HFObstruction(tuple(h), "NoObstruction")


def hf_obstruction(Q: QuotientRing, cap: int | None = None) -> HFObstruction:
    top = Q.top_degree(cap)
    return sequence_obstruction(Q.hilbert_function(top))


@dataclass(frozen=True)
class RankEntry:
    k: int
    m: int
    rank: int
    source_dim: int
    target_dim: int
    kind: str   # "step" needs maximal rank, "reflection" needs an isomorphism

    @property
    def expected(self) -> int:
        return min(self.source_dim, self.target_dim)

    @property
    def ok(self) -> bool:
        if self.kind == "reflection":
            return self.rank == self.source_dim == self.target_dim
        return self.rank == self.expected


@dataclass
class LefschetzReport:
    mode: str
    ell: Polynomial
    top_degree: int
    hilbert_function: tuple
    entries: list = field(default_factory=list)
    verdict: str = "Witness"        # "Witness" or "Fails"
    failed_at: tuple | None = None  # (k, m)
    reason: str = ""

    @property
    def is_witness(self) -> bool:
        return self.verdict == "Witness"

    def rank_table(self) -> list:
        return [(e.k, e.m, e.rank, e.expected) for e in self.entries]

    def total_rank(self) -> int:
        return sum(e.rank for e in self.entries)


class PowerMaps:
    """Multiplication by powers of one linear form, built from cached step maps."""

    def __init__(self, Q: QuotientRing, ell: Polynomial):
        if not ell.is_zero:
            if not ell.is_homogeneous or ell.degree != 1:
                raise NotHomogeneous("Lefschetz element must be a linear form")
        self.Q = Q
        self.ell = ell
        self._steps = {}

    def step(self, k: int) -> GradedMap:
        s = self._steps.get(k)
        if s is None:
            s = self._steps[k] = self.Q.multiplication_matrix(self.ell, k, degree=1)
        return s

    def power(self, k: int, m: int) -> GradedMap:
        """x -> ell^m x from R_k to R_{k+m}."""
        if m == 0:
            return self.Q.multiplication_matrix(self.Q.ring.constant(1), k, degree=0)
        result = self.step(k)
        for i in range(1, m):
            result = self.step(k + i) @ result
        return result

    def rank(self, k: int, m: int, kind="step") -> RankEntry:
        M = self.power(k, m)
        return RankEntry(k, m, M.rank(), len(M.source_basis), len(M.target_basis), kind)


def rank_table(Q: QuotientRing, ell: Polynomial, pairs, threads: int = 1) -> list:
    maps = PowerMaps(Q, ell)
    pairs = list(pairs)
    if threads > 1:
        for k, m in pairs:
            maps.step(k)  # populate slices before fanning out
        with ThreadPoolExecutor(threads) as pool:
            return list(pool.map(lambda km: maps.rank(*km), pairs))
    return [maps.rank(k, m) for k, m in pairs]


def lefschetz_check(Q: QuotientRing, ell: Polynomial, mode: str = SLP, *,
                    cap: int | None = None, hf_gate: bool = True, threads: int = 1) -> LefschetzReport:
    if mode not in (WLP, SLP):
        raise ValueError(f"mode must be {WLP!r} or {SLP!r}")
    top = Q.top_degree(cap)
    h = tuple(Q.hilbert_function(top))
    report = LefschetzReport(mode, ell, top, h)
    maps = PowerMaps(Q, ell)

    jobs = [(k, 1, "step") for k in range(top)]
    if mode == SLP:
        jobs += [(k, top - 2 * k, "reflection") for k in range(top // 2 + 1)]

    def run(job):
        return maps.rank(*job)

    if threads > 1:
        for k in range(top):
            maps.step(k)
        with ThreadPoolExecutor(threads) as pool:
            report.entries = list(pool.map(run, jobs))
    else:
        report.entries = [run(j) for j in jobs]

    if mode == SLP and hf_gate:
        obs = sequence_obstruction(h)
        if obs.obstructed:
            k = obs.degree if obs.verdict == "NotSymmetric" else min(obs.degree, top - obs.degree)
            report.verdict = "Fails"
            report.failed_at = (k, top - 2 * k)
            report.reason = f"Hilbert function {obs.verdict} at degree {obs.degree}"
            return report
    for e in report.entries:
        if not e.ok:
            report.verdict = "Fails"
            report.failed_at = (e.k, e.m)
            what = "is not an isomorphism" if e.kind == "reflection" else "does not have maximal rank"
            report.reason = f"x ell^{e.m}: R_{e.k} -> R_{e.k + e.m} has rank {e.rank} and {what}"
            break
    return report


@dataclass
class WitnessSearch:
    outcome: str                    # "Witness", "NoneFound" or "Obstructed"
    ell: Polynomial | None = None
    report: LefschetzReport | None = None
    obstruction: HFObstruction | None = None
    candidates_tested: int = 0
    seed: int = 0
    num_samples: int = 0

    @property
    def note(self) -> str:
        if self.outcome == "NoneFound":
            return "no sampled linear form is a Lefschetz element; this does not prove the property fails"
        return ""


def structured_linear_forms(ring) -> list:
    n = ring.num_vars
    forms = []
    for j in range(n):
        if ring.weights[j] == 1:
            forms.append(ring.variable(j))
    forms.append(linear_form(ring, [1 if w == 1 else 0 for w in ring.weights]))
    return [f for f in forms if not f.is_zero]


def random_linear_form(ring, rng: random.Random) -> Polynomial:
    p = ring.domain.prime
    coeffs = []
    for w in ring.weights:
        if w != 1:
            coeffs.append(0)
        elif p:
            coeffs.append(rng.randrange(1, p))
        else:
            coeffs.append(rng.randint(-1000, 1000))
    return linear_form(ring, coeffs)


def find_lefschetz_witness(Q: QuotientRing, num_samples: int = 8, seed: int = 0, *,
                           mode: str = SLP, cap: int | None = None, threads: int = 1) -> WitnessSearch:
    if num_samples < 1:
        raise ValueError("num_samples must be at least 1")
    obs = hf_obstruction(Q, cap)
    if obs.obstructed and mode == SLP:
        return WitnessSearch("Obstructed", obstruction=obs, seed=seed, num_samples=num_samples)
    rng = random.Random(seed)
    candidates = structured_linear_forms(Q.ring)
    candidates += [random_linear_form(Q.ring, rng) for _ in range(num_samples)]
    best = None
    for i, ell in enumerate(candidates, 1):
        report = lefschetz_check(Q, ell, mode, cap=cap, threads=threads)
        if report.is_witness:
            return WitnessSearch("Witness", ell, report, obs, i, seed, num_samples)
        if best is None or report.total_rank() > best.total_rank():
            best = report
    return WitnessSearch("NoneFound", None, best, obs, len(candidates), seed, num_samples)
