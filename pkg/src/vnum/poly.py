"""Exact sparse multivariate polynomials in x_1..x_n, y_1..y_n (and t).

The ambient ring for a graph on n vertices has 2n variables; ideal
operations that eliminate introduce one auxiliary variable t.  A monomial
is a dense exponent tuple whose width is 2n (or 2n+1 when t is present),
coefficients are exact rationals stored as int when integral and
fractions.Fraction otherwise.  No floating point enters this module.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import GraphFormatError, PreconditionError


# ---------------------------------------------------------------------------
# variable indexing
# ---------------------------------------------------------------------------

def width_for(n, with_t=False):
    """Number of exponent slots for the ring on n vertices."""
    return 2 * n + (1 if with_t else 0)


def ring_size(width):
    """Recover n from a monomial width (t occupies the odd slot)."""
    return width // 2


def width_has_t(width):
    return width % 2 == 1


def x_index(i, n):
    """Slot of x_i (vertices are 1-based)."""
    if not 1 <= i <= n:
        raise PreconditionError(f"x{i} outside ring on {n} vertices")
    return i - 1


def y_index(i, n):
    if not 1 <= i <= n:
        raise PreconditionError(f"y{i} outside ring on {n} vertices")
    return n + i - 1


def t_index(n):
    return 2 * n


def variable_name(v, width):
    n = ring_size(width)
    if v < n:
        return f"x{v + 1}"
    if v < 2 * n:
        return f"y{v - n + 1}"
    return "t"


# ---------------------------------------------------------------------------
# monomials (dense exponent tuples)
# ---------------------------------------------------------------------------

def mono_one(width):
    return (0,) * width


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True when a | b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a):
    return sum(a)


def mono_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def mono_is_squarefree(a):
    return all(e <= 1 for e in a)


def monomial(width, exps):
    """Build a monomial from a {variable slot: exponent} map."""
    m = [0] * width
    for v, e in exps.items():
        if e < 0:
            raise PreconditionError("negative exponent")
        m[v] = e
    return tuple(m)


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

class MonomialOrder:
    """Pure lexicographic order induced by a vertex permutation sigma.

    Variables compare as
    x_{sigma^-1(1)} > ... > x_{sigma^-1(n)} > y_{sigma^-1(1)} > ... > y_{sigma^-1(n)},
    and with elim_t the auxiliary variable t is greatest, which makes the
    order an elimination order for t.  sigma = identity gives the default
    lex order x1 > ... > xn > y1 > ... > yn.
    """

    __slots__ = ("n", "sigma", "elim_t", "width", "priority")

    def __init__(self, n, sigma=None, elim_t=False):
        if sigma is None:
            sigma = tuple(range(1, n + 1))
        else:
            sigma = tuple(sigma)
        if sorted(sigma) != list(range(1, n + 1)):
            raise PreconditionError(f"sigma is not a permutation of 1..{n}")
        self.n = n
        self.sigma = sigma
        self.elim_t = bool(elim_t)
        self.width = width_for(n, elim_t)
        # x-slot of the greatest variable first; sigma[j] is the rank of vertex j+1
        xs = sorted(range(n), key=lambda j: sigma[j])
        head = (2 * n,) if elim_t else ()
        self.priority = head + tuple(xs) + tuple(n + j for j in xs)

    def key(self, m):
        """Sort key: tuple comparison of keys is the lex comparison."""
        return tuple(m[v] for v in self.priority)

    def greater(self, a, b):
        return self.key(a) > self.key(b)

    def same_as(self, other):
        return (self.n, self.sigma, self.elim_t) == (other.n, other.sigma, other.elim_t)

    def __repr__(self):
        tag = ", elim_t" if self.elim_t else ""
        return f"MonomialOrder(n={self.n}, sigma={self.sigma}{tag})"


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

def _clean_coeff(c):
    """Normalise exact coefficients: integral Fractions become int."""
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return c
    if isinstance(c, int):
        return c
    raise PreconditionError(f"coefficient {c!r} is not an exact rational")


class Polynomial:
    """Immutable sparse polynomial: {monomial tuple: nonzero coefficient}."""

    __slots__ = ("width", "terms")

    def __init__(self, width, terms=None):
        tidy = {}
        for m, c in (terms or {}).items():
            c = _clean_coeff(c)
            if c:
                if len(m) != width:
                    raise PreconditionError("monomial width mismatch")
                tidy[m] = c
        object.__setattr__(self, "width", width)
        object.__setattr__(self, "terms", tidy)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def __reduce__(self):
        return (Polynomial, (self.width, self.terms))

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, width):
        return cls(width)

    @classmethod
    def constant(cls, width, c):
        return cls(width, {mono_one(width): c})

    @classmethod
    def variable(cls, width, v):
        return cls(width, {monomial(width, {v: 1}): 1})

    # -- ring operations ----------------------------------------------------

    def _check(self, other):
        if self.width != other.width:
            raise PreconditionError("polynomials live in different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.width, other)
        self._check(other)
        res = dict(self.terms)
        for m, c in other.terms.items():
            nc = res.get(m, 0) + c
            if nc:
                res[m] = nc
            else:
                res.pop(m, None)
        return Polynomial(self.width, res)

    def __neg__(self):
        return Polynomial(self.width, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.width, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial.zero(self.width)
            return Polynomial(self.width, {m: c * other for m, c in self.terms.items()})
        self._check(other)
        res = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                nc = res.get(m, 0) + c1 * c2
                if nc:
                    res[m] = nc
                else:
                    res.pop(m, None)
        return Polynomial(self.width, res)

    __rmul__ = __mul__

    def mul_term(self, m, c):
        """Multiply by a single term c * m."""
        if not c:
            return Polynomial.zero(self.width)
        return Polynomial(self.width, {mono_mul(mm, m): cc * c for mm, cc in self.terms.items()})

    # -- queries ------------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def is_homogeneous(self):
        degs = {mono_degree(m) for m in self.terms}
        return len(degs) <= 1

    def is_constant(self):
        return all(mono_degree(m) == 0 for m in self.terms)

    def leading_monomial(self, order):
        if not self.terms:
            raise PreconditionError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coeff(self, order):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order):
        lc = self.leading_coeff(order)
        if lc == 1:
            return self
        inv = Fraction(1, 1) / lc
        return Polynomial(self.width, {m: c * inv for m, c in self.terms.items()})

    def sorted_terms(self, order=None):
        order = order or MonomialOrder(ring_size(self.width), elim_t=width_has_t(self.width))
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    def sort_key(self, order=None):
        """Canonical key for deterministic sorting of polynomial lists."""
        return tuple(
            (order.key(m) if order else m, Fraction(c).numerator, Fraction(c).denominator)
            for m, c in self.sorted_terms(order)
        )

    # -- t extension --------------------------------------------------------

    def with_t(self):
        if width_has_t(self.width):
            raise PreconditionError("ring already has t")
        return Polynomial(self.width + 1, {m + (0,): c for m, c in self.terms.items()})

    def drop_t(self):
        if not width_has_t(self.width):
            raise PreconditionError("ring has no t")
        for m in self.terms:
            if m[-1]:
                raise PreconditionError("polynomial involves t")
        return Polynomial(self.width - 1, {m[:-1]: c for m, c in self.terms.items()})

    def t_free(self):
        return all(m[-1] == 0 for m in self.terms) if width_has_t(self.width) else True

    # -- equality / hashing -------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.width == other.width and self.terms == other.terms

    def __hash__(self):
        return hash((self.width, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Polynomial({poly_to_text(self)!r})"


# ---------------------------------------------------------------------------
# convenience builders
# ---------------------------------------------------------------------------

def x_poly(i, n, with_t=False):
    return Polynomial.variable(width_for(n, with_t), x_index(i, n))


def y_poly(i, n, with_t=False):
    return Polynomial.variable(width_for(n, with_t), y_index(i, n))


def t_poly(n):
    return Polynomial.variable(width_for(n, True), t_index(n))


def one_poly(n, with_t=False):
    return Polynomial.constant(width_for(n, with_t), 1)


def edge_binomial(i, j, n):
    """x_i*y_j - x_j*y_i, the 2-minor on columns i, j of the generic 2 x n matrix."""
    if i == j:
        raise PreconditionError("minor needs two distinct columns")
    w = width_for(n)
    return Polynomial(w, {
        monomial(w, {x_index(i, n): 1, y_index(j, n): 1}): 1,
        monomial(w, {x_index(j, n): 1, y_index(i, n): 1}): -1,
    })


def xy_monomial(cset, dset, n):
    """g_{C,D} = prod_{k in C} x_k * prod_{k in D} y_k as a polynomial."""
    exps = {}
    for k in cset:
        v = x_index(k, n)
        exps[v] = exps.get(v, 0) + 1
    for k in dset:
        v = y_index(k, n)
        exps[v] = exps.get(v, 0) + 1
    w = width_for(n)
    return Polynomial(w, {monomial(w, exps): 1})


# ---------------------------------------------------------------------------
# text format: "3/2*x1^2*y3 - x2*y4"
# ---------------------------------------------------------------------------

_FACTOR_RE = re.compile(r"^(x|y|t)(\d*)(?:\^(\d+))?$")
_NUMBER_RE = re.compile(r"^\d+(?:/\d+)?$")


def poly_to_text(p):
    """Canonical text form: terms descending in the identity lex order."""
    if p.is_zero:
        return "0"
    parts = []
    for m, c in p.sorted_terms():
        factors = []
        for v, e in enumerate(m):
            if e:
                name = variable_name(v, p.width)
                factors.append(name if e == 1 else f"{name}^{e}")
        mag = abs(c) if isinstance(c, int) else abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = str(mag) + "*" + "*".join(factors)
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_from_text(text, n, with_t=False):
    """Parse the text format; whitespace-insensitive; inverse of poly_to_text."""
    width = width_for(n, with_t)
    s = text.replace(" ", "").replace("\t", "")
    if not s:
        raise GraphFormatError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    tokens = re.findall(r"[+-][^+-]+", s)
    if "".join(tokens) != s:
        raise GraphFormatError(f"cannot tokenise polynomial {text!r}")
    terms = {}
    for tok in tokens:
        sign = -1 if tok[0] == "-" else 1
        body = tok[1:]
        if not body:
            raise GraphFormatError(f"dangling sign in {text!r}")
        coeff = Fraction(sign)
        exps = {}
        for factor in body.split("*"):
            if _NUMBER_RE.match(factor):
                coeff *= Fraction(factor)
                continue
            m = _FACTOR_RE.match(factor)
            if not m:
                raise GraphFormatError(f"bad factor {factor!r} in {text!r}")
            kind, idx, exp = m.group(1), m.group(2), m.group(3)
            e = int(exp) if exp else 1
            if kind == "t":
                if idx:
                    raise GraphFormatError(f"bad factor {factor!r}: t takes no index")
                if not with_t:
                    raise GraphFormatError("t not allowed in this ring")
                v = t_index(n)
            else:
                if not idx:
                    raise GraphFormatError(f"bad factor {factor!r}: missing index")
                i = int(idx)
                if not 1 <= i <= n:
                    raise GraphFormatError(f"variable {factor!r} outside ring on {n} vertices")
                v = x_index(i, n) if kind == "x" else y_index(i, n)
            exps[v] = exps.get(v, 0) + e
        m = monomial(width, exps)
        nc = terms.get(m, 0) + coeff
        if nc:
            terms[m] = nc
        else:
            terms.pop(m, None)
    return Polynomial(width, terms)
