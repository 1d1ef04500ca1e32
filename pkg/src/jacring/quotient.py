"""Graded pieces of S/I for a homogeneous ideal I, computed by linear algebra.

Degree slices are built bottom-up. A monomial ``u`` of degree ``k`` that
factors as ``x_j * u'`` with ``u'`` standard in degree ``k - w_j`` is kept as
a column; every other factorization contributes the relation
``u = x_j * nf(u')``. Since normal forms only involve monomials smaller than
what they replace, the non-pivot columns of the reduced slice are exactly the
graded-lex standard monomials of the full ideal slice ``I_k``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .domain import Domain
from .errors import NotArtinian, NotHomogeneous, RingMismatch
from .ring import Polynomial, RingDescriptor, jacobian_generators


@dataclass(frozen=True)
class Slice:
    """Cached data for one degree of the quotient."""

    degree: int
    monomials: tuple          # all monomials of S_k, largest first
    columns: tuple            # monomials kept as columns of the reduced slice
    pivots: tuple             # pivot monomials (leading terms of I_k among the columns)
    standard: tuple           # standard monomials, largest first
    std_index: dict = field(repr=False)
    nf: dict = field(repr=False)   # monomial -> tuple of (standard index, coefficient)

    @property
    def dim(self) -> int:
        return len(self.standard)

    @property
    def ideal_rank(self) -> int:
        return len(self.monomials) - len(self.standard)


class GradedMap:
    """Matrix of a linear map R_source -> R_target in standard-monomial bases."""

    def __init__(self, domain: Domain, source_degree, target_degree, source_basis, target_basis, matrix):
        self.domain = domain
        self.source_degree = source_degree
        self.target_degree = target_degree
        self.source_basis = tuple(source_basis)
        self.target_basis = tuple(target_basis)
        self.matrix = matrix  # FLINT matrix, len(target_basis) x len(source_basis)

    @property
    def shape(self):
        return (len(self.target_basis), len(self.source_basis))

    def rank(self) -> int:
        return self.domain.rank(self.matrix)

    def rows(self) -> list:
        return self.domain.rows_of(self.matrix)

    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        """Composition ``self o other``."""
        if other.target_basis != self.source_basis or other.target_degree != self.source_degree:
            raise ValueError("maps are not composable")
        return GradedMap(self.domain, other.source_degree, self.target_degree,
                         other.source_basis, self.target_basis, self.matrix * other.matrix)

    def __eq__(self, other):
        if not isinstance(other, GradedMap):
            return NotImplemented
        return (self.source_degree == other.source_degree
                and self.target_degree == other.target_degree
                and self.source_basis == other.source_basis
                and self.target_basis == other.target_basis
                and self.rows() == other.rows())

    def __repr__(self):
        return f"GradedMap(R_{self.source_degree} -> R_{self.target_degree}, shape={self.shape})"


class QuotientRing:
    """S / (generators) with a per-degree cache of slices."""

    def __init__(self, ring: RingDescriptor, generators):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatch("generator lives in a different ring")
            if not g.is_homogeneous:
                raise NotHomogeneous(f"generator {g} is not homogeneous")
            if not g.is_zero:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._by_degree = {}
        for g in gens:
            self._by_degree.setdefault(g.degree, []).append(g)
        self._slices = {}
        self._lock = threading.RLock()

    @classmethod
    def jacobian(cls, F: Polynomial) -> "QuotientRing":
        """The Jacobian ring S / (dF/dx_0, ..., dF/dx_N)."""
        return cls(F.ring, jacobian_generators([F]))

    @property
    def domain(self) -> Domain:
        return self.ring.domain

    # -- slices -----------------------------------------------------------

    def slice(self, k: int) -> Slice:
        s = self._slices.get(k)
        if s is not None:
            return s
        with self._lock:
            for d in range(0, k + 1):
                if d not in self._slices:
                    self._slices[d] = self._build(d)
        return self._slices[k]

    def _build(self, k: int) -> Slice:
        ring = self.ring
        dom = ring.domain
        p = dom.prime
        n = ring.num_vars
        w = ring.weights
        mons = ring.monomials(k)
        in_cols = {}
        reps = {}
        for u in mons:
            keep = k == 0
            ureps = []
            for j in range(n):
                if not u[j]:
                    continue
                low = self._slices[k - w[j]]
                up = u[:j] + (u[j] - 1,) + u[j + 1:]
                if up in low.std_index:
                    keep = True
                    continue
                rep = {}
                for idx, c in low.nf[up]:
                    s = low.standard[idx]
                    rep[s[:j] + (s[j] + 1,) + s[j + 1:]] = c
                ureps.append(rep)
            in_cols[u] = keep
            reps[u] = ureps

        columns = tuple(u for u in mons if in_cols[u])
        col_index = {u: i for i, u in enumerate(columns)}

        rows = []
        seen = set()

        def push(row):
            if p:
                row = {c: v % p for c, v in row.items() if v % p}
            else:
                row = {c: v for c, v in row.items() if v}
            if row:
                key = frozenset(row.items())
                if key not in seen:
                    seen.add(key)
                    rows.append(row)

        for u in mons:
            ureps = reps[u]
            if in_cols[u]:
                for rep in ureps:
                    row = {col_index[u]: 1}
                    for v, c in rep.items():
                        row[col_index[v]] = row.get(col_index[v], 0) - c
                    push(row)
            else:
                base = ureps[0]
                for rep in ureps[1:]:
                    row = {}
                    for v, c in rep.items():
                        row[col_index[v]] = c
                    for v, c in base.items():
                        row[col_index[v]] = row.get(col_index[v], 0) - c
                    push(row)
        for g in self._by_degree.get(k, ()):
            row = {}
            for u, c in g.terms.items():
                if in_cols[u]:
                    row[col_index[u]] = row.get(col_index[u], 0) + c
                else:
                    for v, cv in reps[u][0].items():
                        i = col_index[v]
                        row[i] = row.get(i, 0) + c * cv
            push(row)

        ncols = len(columns)
        pivot_cols = []
        tails = []
        if rows and ncols:
            R, rank = dom.rref(dom.matrix_from_sparse(rows, ncols))
            scalar = dom._scalar
            start = 0
            for r in range(rank):
                c = start
                while not R[r, c]:
                    c += 1
                pivot_cols.append(c)
                tails.append({cc: scalar(R[r, cc]) for cc in range(c + 1, ncols) if R[r, cc]})
                start = c + 1
        pivot_set = set(pivot_cols)
        std_cols = [c for c in range(ncols) if c not in pivot_set]
        std_pos = {c: i for i, c in enumerate(std_cols)}
        standard = tuple(columns[c] for c in std_cols)
        std_index = {u: i for i, u in enumerate(standard)}

        nf = {}
        for c in std_cols:
            nf[columns[c]] = ((std_pos[c], 1),)
        neg = dom.neg
        for c, tail in zip(pivot_cols, tails):
            nf[columns[c]] = tuple((std_pos[cc], neg(v)) for cc, v in tail.items())
        for u in mons:
            if in_cols[u]:
                continue
            acc = {}
            for v, cv in reps[u][0].items():
                for idx, c in nf[v]:
                    acc[idx] = acc.get(idx, 0) + cv * c
            if p:
                nf[u] = tuple((i, c % p) for i, c in sorted(acc.items()) if c % p)
            else:
                nf[u] = tuple((i, c) for i, c in sorted(acc.items()) if c)

        return Slice(k, tuple(mons), columns, tuple(columns[c] for c in pivot_cols),
                     standard, std_index, nf)

    # -- public API ------------------------------------------------------

    def graded_dim(self, k: int) -> int:
        if k < 0:
            return 0
        return self.slice(k).dim

    def standard_monomials(self, k: int) -> list:
        if k < 0:
            return []
        return list(self.slice(k).standard)

    def hilbert_function(self, upto: int) -> list:
        return [self.graded_dim(k) for k in range(upto + 1)]

    def normal_form(self, f: Polynomial, degree: int | None = None) -> list:
        """Coordinates of the class of ``f`` over the standard monomials of its degree."""
        if f.ring != self.ring:
            raise RingMismatch("polynomial lives in a different ring")
        if not f.is_homogeneous:
            raise NotHomogeneous(f"{f} is not homogeneous")
        k = f.degree if not f.is_zero else degree
        if k is None:
            raise ValueError("degree required for the zero polynomial")
        if k < 0:
            return []
        sl = self.slice(k)
        return self._reduce(sl, f.terms.items())

    def _reduce(self, sl: Slice, terms) -> list:
        p = self.domain.prime
        acc = [0] * sl.dim
        nf = sl.nf
        for u, c in terms:
            for idx, v in nf[u]:
                acc[idx] += c * v
        if p:
            return [x % p for x in acc]
        return acc

    def element(self, coords, k: int) -> Polynomial:
        """Polynomial representative of a coordinate vector in R_k."""
        basis = self.standard_monomials(k)
        return Polynomial(self.ring, {m: c for m, c in zip(basis, coords) if c})

    def multiplication_matrix(self, g: Polynomial, k: int, degree: int | None = None) -> GradedMap:
        """The map ``x -> g*x`` from R_k to R_{k+deg g}."""
        if g.ring != self.ring:
            raise RingMismatch("multiplier lives in a different ring")
        if not g.is_homogeneous:
            raise NotHomogeneous(f"multiplier {g} is not homogeneous")
        m = g.degree if not g.is_zero else degree
        if m is None:
            raise ValueError("degree required for the zero multiplier")
        dom = self.domain
        src = self.standard_monomials(k)
        tgt = self.standard_monomials(k + m)
        if not src or not tgt:
            return GradedMap(dom, k, k + m, src, tgt, dom.matrix(len(tgt), len(src)))
        sl = self.slice(k + m)
        gterms = list(g.terms.items())
        ncols = len(src)
        flat = [0] * (len(tgt) * ncols)
        p = dom.prime
        nf = sl.nf
        for j, b in enumerate(src):
            for e, c in gterms:
                u = tuple(x + y for x, y in zip(e, b))
                for idx, v in nf[u]:
                    flat[idx * ncols + j] += c * v
        if p:
            flat = [x % p for x in flat]
        return GradedMap(dom, k, k + m, src, tgt, dom.matrix(len(tgt), ncols, flat))

    def power_map(self, ell: Polynomial, k: int, m: int) -> GradedMap:
        """``x -> ell^m * x`` from R_k to R_{k+m*deg ell}."""
        return self.multiplication_matrix(ell ** m, k, degree=m * (ell.degree or 0))

    def top_degree(self, cap: int | None = None) -> int:
        """Largest k with R_k != 0; raises NotArtinian if none is found below ``cap``."""
        if cap is None:
            cap = default_degree_cap(self)
        window = max(2, max(self.ring.weights))
        zeros = 0
        top = -1
        for k in range(cap + 1):
            if self.graded_dim(k):
                top = k
                zeros = 0
            else:
                zeros += 1
                if zeros >= window:
                    return top
        raise NotArtinian(f"graded dimensions still nonzero at degree cap {cap}",
                          dims={k: self.graded_dim(k) for k in range(max(0, cap - window + 1), cap + 1)})


def socle_dims(Q: QuotientRing, top: int) -> list:
    """Per-degree dimension of the socle {r : x_j r = 0 for all j}, degrees 0..top."""
    ring = Q.ring
    dom = Q.domain
    out = []
    for k in range(top + 1):
        dim = Q.graded_dim(k)
        if not dim:
            out.append(0)
            continue
        rows = []
        for j in range(ring.num_vars):
            rows.extend(Q.multiplication_matrix(ring.variable(j), k).rows())
        ncols = dim
        M = dom.matrix(len(rows), ncols, [x for r in rows for x in r]) if rows else dom.matrix(0, ncols)
        out.append(dim - dom.rank(M))
    return out


def default_degree_cap(Q: QuotientRing) -> int:
    return max(4 * sum(g.degree for g in Q.generators), 4)


class NotCIShape(ValueError):
    pass


def ci_hilbert_series(gen_degrees, ring: RingDescriptor) -> list:
    """Coefficients of prod(1 - t^e_i) / prod(1 - t^w_j), the Hilbert function of a
    complete intersection with generators of the given degrees."""
    gen_degrees = [int(e) for e in gen_degrees]
    if len(gen_degrees) != ring.num_vars:
        raise NotCIShape(f"need {ring.num_vars} generator degrees, got {len(gen_degrees)}")
    if any(e < 1 for e in gen_degrees):
        raise NotCIShape("generator degrees must be positive")
    num = [1]
    for e in gen_degrees:
        nxt = num + [0] * e
        for i, a in enumerate(num):
            nxt[i + e] -= a
        num = nxt
    for w in ring.weights:
        top = len(num) - 1
        q = [0] * (top - w + 1) if top >= w else []
        for i in range(len(q)):
            q[i] = num[i] + (q[i - w] if i >= w else 0)
        for i in range(len(q), top + 1):
            if num[i] + (q[i - w] if 0 <= i - w < len(q) else 0) != 0:
                raise NotCIShape(f"series is not a polynomial: weights {ring.weights} vs degrees {gen_degrees}")
        num = q
    while num and num[-1] == 0:
        num.pop()
    if any(c < 0 for c in num):
        raise NotCIShape("series has negative coefficients")
    return num


@dataclass(frozen=True)
class ArtinianCheck:
    artinian: bool
    sigma: int
    dims: dict   # degree -> dim at sigma+1, sigma+2

    def __bool__(self):
        return self.artinian

    @property
    def stabilized_dim_estimate(self) -> int:
        return self.dims[self.sigma + 2]


def artinian_check(Q: QuotientRing, sigma: int) -> ArtinianCheck:
    if sigma < 0:
        raise ValueError("sigma must be nonnegative")
    dims = {sigma + 1: Q.graded_dim(sigma + 1), sigma + 2: Q.graded_dim(sigma + 2)}
    return ArtinianCheck(all(v == 0 for v in dims.values()), sigma, dims)
