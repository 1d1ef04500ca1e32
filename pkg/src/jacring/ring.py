"""Sparse weighted-homogeneous polynomials over F_p or Q.

Monomials are exponent tuples. The monomial order is graded lexicographic
with ``x0 > x1 > ...``; "graded" uses the weighted degree.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .domain import DEFAULT_PRIME, Domain
from .errors import CharacteristicError, NotHomogeneous, ParseError, RingMismatch


@dataclass(frozen=True)
class RingDescriptor:
    num_vars: int
    weights: tuple = None
    domain: Domain = field(default_factory=lambda: Domain(DEFAULT_PRIME))

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("num_vars must be at least 1")
        weights = (1,) * self.num_vars if self.weights is None else tuple(int(w) for w in self.weights)
        if len(weights) != self.num_vars:
            raise ValueError(f"expected {self.num_vars} weights, got {len(weights)}")
        if any(w < 1 for w in weights):
            raise ValueError("weights must be positive")
        object.__setattr__(self, "weights", weights)

    @property
    def standard_grading(self) -> bool:
        return all(w == 1 for w in self.weights)

    def degree_of(self, exps) -> int:
        return sum(w * e for w, e in zip(self.weights, exps))

    def monomials(self, k: int) -> list:
        """All monomials of weighted degree ``k``, largest first."""
        return list(_monomials(self.weights, k))

    def dim(self, k: int) -> int:
        if k < 0:
            return 0
        if self.standard_grading:
            return comb(k + self.num_vars - 1, self.num_vars - 1)
        return len(_monomials(self.weights, k))

    def variable(self, j: int) -> "Polynomial":
        exps = [0] * self.num_vars
        exps[j] = 1
        return Polynomial(self, {tuple(exps): 1})

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.num_vars: c})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def with_domain(self, domain: Domain) -> "RingDescriptor":
        return RingDescriptor(self.num_vars, self.weights, domain)


@lru_cache(maxsize=None)
def _monomials(weights: tuple, k: int) -> tuple:
    if k < 0:
        return ()
    n = len(weights)
    out = []

    def rec(i, remaining, prefix):
        w = weights[i]
        if i == n - 1:
            if remaining % w == 0:
                out.append(prefix + (remaining // w,))
            return
        for e in range(remaining // w, -1, -1):
            rec(i + 1, remaining - e * w, prefix + (e,))

    rec(0, k, ())
    return tuple(out)


class Polynomial:
    """Immutable sparse polynomial: a map from exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_degrees")

    def __init__(self, ring: RingDescriptor, terms=None):
        dom = ring.domain
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != ring.num_vars:
                raise ValueError(f"exponent vector {exps} has wrong length")
            c = dom(c)
            if c:
                clean[exps] = c
        self.ring = ring
        self.terms = clean
        self._degrees = None

    @classmethod
    def _raw(cls, ring, terms):
        # terms already reduced and free of zeros
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        obj._degrees = None
        return obj

    # -- grading -----------------------------------------------------------

    @property
    def degrees(self) -> frozenset:
        if self._degrees is None:
            self._degrees = frozenset(self.ring.degree_of(e) for e in self.terms)
        return self._degrees

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_homogeneous(self) -> bool:
        return len(self.degrees) <= 1

    @property
    def degree(self):
        """Weighted degree of a nonzero homogeneous polynomial; ``None`` for zero."""
        if not self.terms:
            return None
        if not self.is_homogeneous:
            raise NotHomogeneous(f"polynomial has terms in degrees {sorted(self.degrees)}")
        return next(iter(self.degrees))

    def require_homogeneous(self, what="polynomial"):
        if not self.is_homogeneous:
            raise NotHomogeneous(f"{what} is not homogeneous (degrees {sorted(self.degrees)})")
        return self

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Polynomial):
            return self.ring.constant(other)
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        dom = self.ring.domain
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = dom.add(out.get(e, 0), c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.domain.neg
        return Polynomial._raw(self.ring, {e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        dom = self.ring.domain
        c = dom(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {e: dom.mul(v, c) for e, v in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.constant(1)
        base = self
        while k:
            if k & 1:
                result = multiply(result, base)
            k >>= 1
            if k:
                base = multiply(base, base)
        return result

    def derivative(self, j: int) -> "Polynomial":
        dom = self.ring.domain
        out = {}
        for e, c in self.terms.items():
            if e[j]:
                v = dom.mul(c, dom(e[j]))
                if v:
                    out[e[:j] + (e[j] - 1,) + e[j + 1:]] = v
        return Polynomial._raw(self.ring, out)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self):
        ring = self.ring
        return sorted(self.terms.items(), key=lambda t: (ring.degree_of(t[0]), t[0]), reverse=True)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def multiply(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    p = a.ring.domain.prime
    out = {}
    get = out.get
    if len(a.terms) > len(b.terms):
        a, b = b, a
    bt = list(b.terms.items())
    for ea, ca in a.terms.items():
        for eb, cb in bt:
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = get(e, 0) + ca * cb
    if p:
        out = {e: c % p for e, c in out.items() if c % p}
    else:
        out = {e: c for e, c in out.items() if c}
    return Polynomial._raw(a.ring, out)


def jacobian_generators(polys) -> list:
    """All nonzero partial derivatives of the given homogeneous polynomials."""
    polys = list(polys)
    if not polys:
        raise ValueError("need at least one polynomial")
    ring = polys[0].ring
    gens = []
    for F in polys:
        if F.ring != ring:
            raise RingMismatch("all polynomials must share a ring")
        F.require_homogeneous()
        for j in range(ring.num_vars):
            dF = F.derivative(j)
            if not dF.is_zero:
                gens.append(dF)
    return gens


def euler_identity_holds(F: Polynomial) -> bool:
    """Check sum_j w_j x_j dF/dx_j == deg(F) * F."""
    F.require_homogeneous()
    if F.is_zero:
        return True
    d = F.degree
    p = F.ring.domain.prime
    if p and d % p == 0:
        raise CharacteristicError(f"p={p} divides the degree {d}")
    ring = F.ring
    lhs = ring.zero()
    for j in range(ring.num_vars):
        lhs = lhs + ring.variable(j).scale(ring.weights[j]) * F.derivative(j)
    return lhs == F.scale(d)


def substitute(f: Polynomial, images) -> Polynomial:
    """f(images[0], ..., images[n-1]); all images live in ``f.ring``."""
    images = list(images)
    ring = f.ring
    if len(images) != ring.num_vars:
        raise ValueError("one image per variable")
    powers = [{0: ring.constant(1)} for _ in images]

    def power(j, e):
        cache = powers[j]
        if e not in cache:
            cache[e] = power(j, e - 1) * images[j]
        return cache[e]

    out = ring.zero()
    for exps, c in f.terms.items():
        term = ring.constant(c)
        for j, e in enumerate(exps):
            if e:
                term = term * power(j, e)
        out = out + term
    return out


def linear_form(ring: RingDescriptor, coeffs) -> Polynomial:
    coeffs = list(coeffs)
    if len(coeffs) != ring.num_vars:
        raise ValueError("one coefficient per variable")
    terms = {}
    for j, c in enumerate(coeffs):
        e = [0] * ring.num_vars
        e[j] = 1
        terms[tuple(e)] = c
    return Polynomial(ring, terms)


def random_homogeneous(ring: RingDescriptor, degree: int, rng: random.Random, *, coeff_bound=None) -> Polynomial:
    """Dense random homogeneous polynomial.

    Over F_p coefficients are uniform in the field; over Q (or when
    ``coeff_bound`` is given) they are uniform integers in ``[-bound, bound]``.
    """
    p = ring.domain.prime
    terms = {}
    for m in ring.monomials(degree):
        if coeff_bound is None and p:
            terms[m] = rng.randrange(p)
        else:
            b = coeff_bound or 10
            terms[m] = rng.randint(-b, b)
    return Polynomial(ring, terms)


# -- text format ---------------------------------------------------------------


def format_polynomial(f: Polynomial) -> str:
    if f.is_zero:
        return "0"
    dom = f.ring.domain
    pieces = []
    for exps, c in f.sorted_terms():
        c = dom.symmetric(c)
        sign = "-" if c < 0 else "+"
        c = abs(c)
        factors = [f"x{j}" if e == 1 else f"x{j}^{e}" for j, e in enumerate(exps) if e]
        if not factors:
            body = str(c)
        elif c == 1:
            body = "*".join(factors)
        else:
            body = f"{c}*" + "*".join(factors)
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^()/]))")


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    # Works over Q with exponent slots for x0..x{n-1} followed by the parameters.

    def __init__(self, text, num_vars, params):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.num_vars = num_vars
        self.params = tuple(params)
        self.width = num_vars + len(self.params)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.take()
        if val != value:
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", pos, self.text)

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty polynomial", 0, self.text)
        result = self.poly()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", pos, self.text)
        return result

    def poly(self):
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        acc = _scale(self.term(), sign)
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
            acc = _add(acc, _scale(self.term(), sign))
        return acc

    def term(self):
        acc = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            acc = _mul(acc, self.factor())
        return acc

    def factor(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError(f"exponent must be a nonnegative integer, found {val or 'end of input'!r}", pos, self.text)
            result = {(0,) * self.width: Fraction(1)}
            for _ in range(int(val)):
                result = _mul(result, base)
            return result
        return base

    def atom(self):
        kind, val, pos = self.take()
        zero = (0,) * self.width
        if kind == "int":
            value = Fraction(int(val))
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                k2, v2, p2 = self.take()
                if k2 != "int" or int(v2) == 0:
                    raise ParseError(f"bad denominator {v2 or 'end of input'!r}", p2, self.text)
                value /= int(v2)
            return {zero: value} if value else {}
        if kind == "var":
            j = int(val[1:])
            if j >= self.num_vars:
                raise ParseError(f"variable {val} out of range (ring has x0..x{self.num_vars - 1})", pos, self.text)
            e = list(zero)
            e[j] = 1
            return {tuple(e): Fraction(1)}
        if kind == "name":
            if val not in self.params:
                raise ParseError(f"unknown symbol {val!r}", pos, self.text)
            e = list(zero)
            e[self.num_vars + self.params.index(val)] = 1
            return {tuple(e): Fraction(1)}
        if kind == "op" and val == "(":
            inner = self.poly()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected token {val or 'end of input'!r}", pos, self.text)


def _add(a, b):
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _scale(a, s):
    return {e: c * s for e, c in a.items()} if s != 1 else a


def _mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def parse_polynomial(text: str, ring: RingDescriptor, *, require_homogeneous=False) -> Polynomial:
    """Parse ``text`` (variables ``x0 .. x{n-1}``) into a polynomial of ``ring``."""
    raw = _Parser(text, ring.num_vars, ()).parse()
    f = Polynomial(ring, raw)
    if require_homogeneous and not f.is_homogeneous:
        raise NotHomogeneous(f"{text!r} is not homogeneous (degrees {sorted(f.degrees)})")
    return f


class FamilyTemplate:
    """A polynomial whose coefficients are polynomials in one rational parameter."""

    def __init__(self, text: str, ring: RingDescriptor, param: str = "t"):
        self.text = text
        self.ring = ring
        self.param = param
        n = ring.num_vars
        raw = _Parser(text, n, (param,)).parse()
        # exps -> {power of t: rational coefficient}
        self.coefficients = {}
        for e, c in raw.items():
            self.coefficients.setdefault(e[:n], {})[e[n]] = c

    @property
    def depends_on_parameter(self) -> bool:
        return any(k for cs in self.coefficients.values() for k in cs)

    def at(self, value) -> Polynomial:
        value = Fraction(value)
        terms = {}
        for e, cs in self.coefficients.items():
            c = sum((a * value ** k for k, a in cs.items()), Fraction(0))
            if c:
                terms[e] = c
        return Polynomial(self.ring, terms)

    def __repr__(self):
        return f"FamilyTemplate({self.text!r}, param={self.param!r})"
