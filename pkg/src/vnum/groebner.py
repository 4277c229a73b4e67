"""Buchberger engine over the rationals with lex orders and resource caps.

Pair selection uses the normal strategy (smallest lcm first); the pair set
is maintained with the Gebauer-Moeller criteria, so the engine never
computes an S-polynomial it can prove redundant.  All output bases are
reduced (monic, tail-reduced, pairwise non-dividing leading terms), which
makes them unique for their ideal and order, hence deterministic.

Exceeding a configured cap raises ResourceLimitError; the engine never
returns a partial basis.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import PreconditionError, ResourceLimitError
from .poly import (
    MonomialOrder,
    Polynomial,
    mono_coprime,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


@dataclass(frozen=True)
class Limits:
    """Resource caps for a single computation (one prime, one verification)."""

    max_polys: int = 20000
    max_degree: int = 40
    time_budget_secs: float = 300.0
    deadline: float | None = None

    def start_clock(self):
        """Return a copy whose wall-clock deadline starts now."""
        return replace(self, deadline=time.monotonic() + self.time_budget_secs)

    def check_time(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise ResourceLimitError("time budget exceeded")


DEFAULT_LIMITS = Limits()


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple
    order: MonomialOrder
    reduced: bool = False

    @property
    def contains_one(self):
        return any(not g.is_zero and g.is_constant() for g in self.generators)

    def normal_form(self, f):
        return normal_form(f, self)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def _is_unit_basis(gens):
    return any(not g.is_zero and g.is_constant() for g in gens)


# ---------------------------------------------------------------------------
# division
# ---------------------------------------------------------------------------

def _prepared(basis, order):
    """[(lm, lc, terms)] sorted by ascending leading monomial."""
    if isinstance(basis, GroebnerBasis):
        if not basis.order.same_as(order):
            raise PreconditionError("basis order does not match requested order")
        polys = basis.generators
    else:
        polys = basis
    prep = []
    for g in polys:
        if g.is_zero:
            continue
        lm = g.leading_monomial(order)
        prep.append((lm, g.terms[lm], g.terms))
    prep.sort(key=lambda t: order.key(t[0]))
    return prep


def _nf_terms(terms, prep, okey):
    """Remainder of full multivariate division, operating on raw term dicts."""
    p = dict(terms)
    rem = {}
    while p:
        lm_p = max(p, key=okey)
        c_p = p.pop(lm_p)
        for lm_g, lc_g, terms_g in prep:
            if mono_divides(lm_g, lm_p):
                shift = mono_div(lm_p, lm_g)
                factor = c_p if lc_g == 1 else Fraction(c_p, 1) / lc_g
                for m, c in terms_g.items():
                    if m == lm_g:
                        continue
                    mm = mono_mul(m, shift)
                    nc = p.get(mm, 0) - factor * c
                    if nc:
                        p[mm] = nc
                    else:
                        p.pop(mm, None)
                break
        else:
            rem[lm_p] = c_p
    return rem


def normal_form(f, basis, order=None):
    """Full division remainder of f modulo a basis (zero iff f in the ideal,
    when the basis is a Groebner basis for the order)."""
    if isinstance(basis, GroebnerBasis) and order is None:
        order = basis.order
    if order is None:
        raise PreconditionError("order required when basis is a plain list")
    prep = _prepared(basis, order)
    return Polynomial(f.width, _nf_terms(f.terms, prep, order.key))


def s_polynomial(f, g, order):
    """lcm(in f, in g)/in(f) * f - lcm(in f, in g)/in(g) * g."""
    if f.is_zero or g.is_zero:
        raise PreconditionError("S-polynomial of the zero polynomial")
    lmf, lmg = f.leading_monomial(order), g.leading_monomial(order)
    lcf, lcg = f.terms[lmf], g.terms[lmg]
    l = mono_lcm(lmf, lmg)
    a = f.mul_term(mono_div(l, lmf), Fraction(1, 1) / lcf if lcf != 1 else 1)
    b = g.mul_term(mono_div(l, lmg), Fraction(1, 1) / lcg if lcg != 1 else 1)
    return a - b


# ---------------------------------------------------------------------------
# Buchberger with Gebauer-Moeller pair pruning
# ---------------------------------------------------------------------------

def _gm_update(G, lms, pairs, t, order):
    """Add index t to the pair set, applying the Gebauer-Moeller criteria."""
    lmt = lms[t]
    lcms = {i: mono_lcm(lms[i], lmt) for i in range(t)}

    # criterion M: drop (i,t) when another new pair has a strictly smaller lcm
    survivors = []
    for i in range(t):
        li = lcms[i]
        dominated = False
        for j in range(t):
            if j == i:
                continue
            lj = lcms[j]
            if lj != li and mono_divides(lj, li):
                dominated = True
                break
        if not dominated:
            survivors.append(i)

    # criterion F: one pair per lcm value; drop the class when a coprime pair exists
    by_lcm = {}
    for i in survivors:
        by_lcm.setdefault(lcms[i], []).append(i)
    new_pairs = set()
    for l, idxs in by_lcm.items():
        if any(mono_coprime(lms[i], lmt) for i in idxs):
            continue
        new_pairs.add((min(idxs), t))

    # criterion B: prune old pairs strictly refined by the new leading term
    keep = set()
    for (i, j) in pairs:
        lij = mono_lcm(lms[i], lms[j])
        if mono_divides(lmt, lij) and lcms[i] != lij and lcms[j] != lij:
            continue
        keep.add((i, j))
    keep |= new_pairs
    return keep


def buchberger(gens, order, limits=DEFAULT_LIMITS):
    """Reduced Groebner basis of the ideal generated by gens.

    An empty generator list (the zero ideal) yields an empty basis.  Raises
    ResourceLimitError when a cap is exceeded, never a wrong answer.
    """
    start = [g for g in gens if not g.is_zero]
    for g in start:
        if g.width != order.width:
            raise PreconditionError("generator width does not match order")
    start = sorted(set(g.monic(order) for g in start), key=lambda p: p.sort_key(order))
    if _is_unit_basis(start):
        return GroebnerBasis((Polynomial.constant(order.width, 1),), order, reduced=True)

    G = []
    lms = []
    pairs = set()

    def push(h):
        limits.check_time()
        if len(G) >= limits.max_polys:
            raise ResourceLimitError(f"basis size cap {limits.max_polys} exceeded")
        if h.degree() > limits.max_degree:
            raise ResourceLimitError(f"degree cap {limits.max_degree} exceeded")
        t = len(G)
        G.append(h)
        lms.append(h.leading_monomial(order))
        return _gm_update(G, lms, pairs, t, order)

    for g in start:
        pairs = push(g)

    okey = order.key
    while pairs:
        i, j = min(
            pairs,
            key=lambda ij: (
                mono_degree(mono_lcm(lms[ij[0]], lms[ij[1]])),
                okey(mono_lcm(lms[ij[0]], lms[ij[1]])),
                ij,
            ),
        )
        pairs.discard((i, j))
        if mono_coprime(lms[i], lms[j]):
            continue
        limits.check_time()
        s = s_polynomial(G[i], G[j], order)
        h = normal_form(s, G, order)
        if h.is_zero:
            continue
        if h.is_constant():
            return GroebnerBasis((Polynomial.constant(order.width, 1),), order, reduced=True)
        pairs = push(h.monic(order))

    return GroebnerBasis(tuple(reduce_basis(G, order)), order, reduced=True)


def reduce_basis(polys, order):
    """Turn a Groebner basis into the reduced one: minimal, monic, tail-reduced."""
    nonzero = [p.monic(order) for p in polys if not p.is_zero]
    if _is_unit_basis(nonzero):
        return [Polynomial.constant(order.width, 1)]
    nonzero.sort(key=lambda p: order.key(p.leading_monomial(order)))
    minimal = []
    min_lms = []
    for p in nonzero:
        lm = p.leading_monomial(order)
        if any(mono_divides(q, lm) for q in min_lms):
            continue
        minimal.append(p)
        min_lms.append(lm)
    out = []
    for idx, p in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        r = normal_form(p, others, order)
        assert not r.is_zero, "basis element reduced to zero during tail reduction"
        out.append(r.monic(order))
    out.sort(key=lambda p: order.key(p.leading_monomial(order)))
    return out


def is_groebner_basis(polys, order, skip_coprime=True, limits=DEFAULT_LIMITS):
    """Buchberger criterion: every S-pair reduces to zero modulo the set.

    With skip_coprime the pairs with coprime leading terms are skipped;
    their S-polynomials reduce to zero by Buchberger's first criterion, so
    the verdict is unaffected.  Pass skip_coprime=False for the exhaustive
    check.
    """
    ps = [p for p in polys if not p.is_zero]
    lms = [p.leading_monomial(order) for p in ps]
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            if skip_coprime and mono_coprime(lms[i], lms[j]):
                continue
            limits.check_time()
            s = s_polynomial(ps[i], ps[j], order)
            if not normal_form(s, ps, order).is_zero:
                return False
    return True
