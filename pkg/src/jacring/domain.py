"""Exact coefficient domains and the dense linear algebra used on graded slices.

Two domains are supported: the prime field F_p (elements are ``int`` in
``[0, p)``) and the rationals (elements are :class:`fractions.Fraction`).
Matrix work is delegated to FLINT through python-flint (``nmod_mat`` and
``fmpq_mat``).
"""

from __future__ import annotations

from fractions import Fraction

import flint

# largest prime below 2**62
DEFAULT_PRIME = 4611686018427387847
# used for multi-prime agreement checks
AGREEMENT_PRIMES = (4611686018427387847, 4611686018427387817, 4611686018427387787)


def is_prime(n: int) -> bool:
    return n >= 2 and bool(flint.fmpz(n).is_prime())


class Domain:
    """A coefficient domain: ``Domain(p)`` is F_p, ``Domain(None)`` is Q."""

    __slots__ = ("prime",)

    def __init__(self, prime: int | None = DEFAULT_PRIME):
        if prime is not None:
            prime = int(prime)
            if not is_prime(prime):
                raise ValueError(f"{prime} is not prime")
            if prime >= 1 << 64:
                raise ValueError("prime must fit in a machine word (< 2**64)")
        object.__setattr__(self, "prime", prime)

    def __setattr__(self, name, value):
        raise AttributeError("Domain is immutable")

    @classmethod
    def rationals(cls) -> "Domain":
        return cls(None)

    @property
    def is_rational(self) -> bool:
        return self.prime is None

    def __eq__(self, other):
        return isinstance(other, Domain) and other.prime == self.prime

    def __hash__(self):
        return hash(("Domain", self.prime))

    def __repr__(self):
        return "Domain(QQ)" if self.prime is None else f"Domain(p={self.prime})"

    # -- scalars ---------------------------------------------------------

    def __call__(self, x):
        """Coerce an int or Fraction into the domain."""
        p = self.prime
        if p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"denominator {x.denominator} vanishes mod {p}")
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def add(self, a, b):
        return (a + b) % self.prime if self.prime else a + b

    def mul(self, a, b):
        return a * b % self.prime if self.prime else a * b

    def neg(self, a):
        return -a % self.prime if self.prime else -a

    def inv(self, a):
        if self.prime:
            return pow(a, -1, self.prime)
        return 1 / Fraction(a)

    def symmetric(self, a):
        """Signed representative of ``a``; used for printing."""
        p = self.prime
        if p is None:
            return a
        return a - p if a > p // 2 else a

    # -- matrices --------------------------------------------------------

    def matrix(self, nrows: int, ncols: int, entries=None):
        """A FLINT matrix from a flat row-major list (zeros when ``entries`` is None)."""
        if self.prime is None:
            if entries is None:
                return flint.fmpq_mat(nrows, ncols)
            return flint.fmpq_mat(nrows, ncols, [_to_fmpq(x) for x in entries])
        if entries is None:
            return flint.nmod_mat(nrows, ncols, self.prime)
        return flint.nmod_mat(nrows, ncols, entries, self.prime)

    def matrix_from_rows(self, rows, ncols: int):
        flat = [x for row in rows for x in row]
        return self.matrix(len(rows), ncols, flat)

    def matrix_from_sparse(self, rows, ncols: int):
        """Rows given as ``{column: value}`` dicts."""
        flat = [0] * (len(rows) * ncols)
        for i, row in enumerate(rows):
            base = i * ncols
            for j, v in row.items():
                flat[base + j] = v
        return self.matrix(len(rows), ncols, flat)

    def rows_of(self, M) -> list[list]:
        """Entries of a FLINT matrix as nested lists of domain elements."""
        n, m = M.nrows(), M.ncols()
        flat = [self._scalar(x) for x in M.entries()]
        return [flat[i * m:(i + 1) * m] for i in range(n)]

    def _scalar(self, x):
        if self.prime is None:
            return Fraction(int(x.p), int(x.q))
        return int(x)

    def rref(self, M):
        """Reduced row-echelon form and rank."""
        if M.nrows() == 0 or M.ncols() == 0:
            return M, 0
        R, rank = M.rref()
        return R, int(rank)

    def rank(self, M) -> int:
        if M.nrows() == 0 or M.ncols() == 0:
            return 0
        return int(M.rank())


def _to_fmpq(x):
    if isinstance(x, Fraction):
        return flint.fmpq(x.numerator, x.denominator)
    return flint.fmpq(int(x))


def agree_across_primes(fn, primes=AGREEMENT_PRIMES):
    """Evaluate ``fn(Domain(p))`` for several primes.

    Returns ``(values, agree)``. A rank over F_p never exceeds the rank over
    Q, and equals it for all but finitely many p, so agreement across
    independent large primes is strong evidence for the characteristic-zero
    answer.
    """
    values = [fn(Domain(p)) for p in primes]
    return values, all(v == values[0] for v in values)
