"""Rank-two matroids attached to cuts, dependency-difference families, and
minimum-weight transversals.

The matroid of a cut S has S as loops and the components of the graph minus
S as parallel classes; a subset is dependent exactly when it meets a loop,
hits some class twice, or has three or more elements.  Family members below
are sets of "small dependents": subsets of the vertex set of size one or
two, encoded as frozensets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NoTransversalError, PreconditionError
from .graphs import (
    connected_components,
    induced_subgraph,
    is_connected_dominating,
    is_minimal_kcut,
)
from .poly import edge_binomial, one_poly, xy_monomial


@dataclass(frozen=True)
class RankTwoMatroid:
    """Loops plus a partition of the remaining ground set into parallel classes."""

    n: int
    loops: frozenset
    parallel_classes: tuple

    def __post_init__(self):
        cover = set(self.loops)
        for cls in self.parallel_classes:
            if cover & cls:
                raise PreconditionError("loops and classes must be disjoint")
            cover |= cls
        if cover != set(range(1, self.n + 1)):
            raise PreconditionError("loops and classes must cover the ground set")

    def is_dependent(self, b):
        b = frozenset(b)
        if b & self.loops:
            return True
        if any(len(b & cls) >= 2 for cls in self.parallel_classes):
            return True
        return len(b) >= 3

    def small_dependents(self):
        """All dependent subsets of size one or two."""
        out = set()
        for i in range(1, self.n + 1):
            if self.is_dependent({i}):
                out.add(frozenset({i}))
        for i, j in itertools.combinations(range(1, self.n + 1), 2):
            if self.is_dependent({i, j}):
                out.add(frozenset({i, j}))
        return out


def _require_in_min(g, s):
    s = frozenset(s)
    if s:
        ok, _ = is_minimal_kcut(g, s)
        if not ok:
            raise PreconditionError(f"{sorted(s)} is not the empty set or a minimal k-cut")
    return s


def matroid_of_cut(g, s):
    """Matroid with loops s and the components of g minus s as classes."""
    s = _require_in_min(g, s)
    comps = connected_components(induced_subgraph(g, g.vertices - s))
    return RankTwoMatroid(g.n, s, tuple(comps))


def small_dependent_diff(m1, m2):
    """Singletons and pairs dependent in m1 but independent in m2."""
    if m1.n != m2.n:
        raise PreconditionError("matroids live on different ground sets")
    return frozenset(e for e in m1.small_dependents() if not m2.is_dependent(e))


@dataclass(frozen=True)
class TransversalFamily:
    """Per other minimal cut S', the small dependents of M(S') that are
    independent in M(S); sources[i] is the S' that produced members[i]."""

    n: int
    members: tuple
    sources: tuple


@dataclass(frozen=True)
class Transversal:
    """A set of singletons and pairs meeting every member of a family."""

    singles: frozenset
    pairs: frozenset

    @property
    def weight(self):
        return len(self.singles) + 2 * len(self.pairs)

    def elements(self):
        return frozenset({frozenset({v}) for v in self.singles}) | self.pairs


def _element_key(e):
    return (len(e), tuple(sorted(e)))


def _set_key(elements):
    return tuple(sorted(_element_key(e) for e in elements))


def _split(elements):
    singles = frozenset(next(iter(e)) for e in elements if len(e) == 1)
    pairs = frozenset(e for e in elements if len(e) == 2)
    return Transversal(singles, pairs)


def delta_family(g, s):
    """One member per other minimal prime: D(M(S')) minus D(M(S))."""
    from .graphs import enumerate_min_cuts

    s = _require_in_min(g, s)
    base = matroid_of_cut(g, s)
    members = []
    sources = []
    for rec in enumerate_min_cuts(g):
        if rec.s == s:
            continue
        other = matroid_of_cut(g, rec.s)
        members.append(small_dependent_diff(other, base))
        sources.append(rec.s)
    return TransversalFamily(g.n, tuple(members), tuple(sources))


def _weight(e):
    return 1 if len(e) == 1 else 2


def min_transversal_weight(family):
    """Exact minimum of |singles| + 2|pairs| over all transversals.

    Branch and bound over members ordered by ascending size, branching on
    elements by descending coverage; ties between optimal witnesses break
    toward the lexicographically least element set.
    """
    members = sorted((frozenset(m) for m in family.members), key=lambda m: (len(m), _set_key(m)))
    if not members:
        return 0, Transversal(frozenset(), frozenset())
    if any(not m for m in members):
        raise NoTransversalError("a family member is empty; no transversal exists")

    universe = sorted(set().union(*members), key=_element_key)
    coverage = {e: sum(1 for m in members if e in m) for e in universe}
    best = [sum(_weight(e) for e in universe) + 1, None]

    def lower_bound(unhit):
        # pairwise-disjoint unhit members must be hit by distinct elements
        used = set()
        lb = 0
        for m in unhit:
            if not (m & used):
                lb += 1
                used |= m
        return lb

    def search(chosen, weight):
        unhit = [m for m in members if not (m & chosen)]
        if not unhit:
            key = _set_key(chosen)
            if weight < best[0] or (weight == best[0] and key < _set_key(best[1])):
                best[0], best[1] = weight, frozenset(chosen)
            return
        if weight + lower_bound(unhit) > best[0]:
            return
        branch = min(unhit, key=lambda m: (len(m), _set_key(m)))
        for e in sorted(branch, key=lambda e: (-coverage[e], _element_key(e))):
            search(chosen | {e}, weight + _weight(e))

    search(frozenset(), 0)
    assert best[1] is not None
    return best[0], _split(best[1])


def minimal_transversals(family):
    """All inclusion-minimal transversals, canonically sorted."""
    members = sorted((frozenset(m) for m in family.members), key=lambda m: (len(m), _set_key(m)))
    if not members:
        return [frozenset()]
    if any(not m for m in members):
        raise NoTransversalError("a family member is empty; no transversal exists")
    found = set()

    def is_minimal(chosen):
        for e in chosen:
            rest = chosen - {e}
            if all(m & rest for m in members):
                return False
        return True

    def search(chosen, idx):
        while idx < len(members) and members[idx] & chosen:
            idx += 1
        if idx == len(members):
            if is_minimal(chosen):
                found.add(chosen)
            return
        for e in sorted(members[idx], key=_element_key):
            search(chosen | {e}, idx + 1)

    search(frozenset(), 0)
    return sorted(found, key=_set_key)


# ---------------------------------------------------------------------------
# generators of the transversal ideal
# ---------------------------------------------------------------------------

def _pair_product(pairs, n):
    p = one_poly(n)
    for e in sorted(pairs, key=_element_key):
        i, j = sorted(e)
        p = p * edge_binomial(i, j, n)
    return p


def generator_for(transversal_elements, cset, dset, n):
    """g = prod_C x * prod_D y * prod_pairs (x_i y_j - x_j y_i)."""
    t = _split(transversal_elements)
    return xy_monomial(cset, dset, n) * _pair_product(t.pairs, n)


def _sorted_gens(gens, n):
    uniq = sorted(set(gens), key=lambda p: (p.degree(), p.sort_key()))
    return uniq


def transversal_ideal_generic(g, s):
    """Generators over the inclusion-minimal transversals of the family.

    Any transversal contains a minimal one and its generator is then a
    multiple of the minimal one's, so restricting to minimal transversals
    leaves the ideal unchanged.  The empty family (no other minimal primes)
    gives the unit ideal.
    """
    s = _require_in_min(g, s)
    fam = delta_family(g, s)
    gens = []
    for elements in minimal_transversals(fam):
        t = _split(elements)
        singles = sorted(t.singles)
        for r in range(len(singles) + 1):
            for cset in itertools.combinations(singles, r):
                dset = [v for v in singles if v not in cset]
                gens.append(generator_for(elements, cset, dset, g.n))
    return _sorted_gens(gens, g.n)


def _cut_sides(g, s):
    s = frozenset(s)
    ok, k = is_minimal_kcut(g, s)
    if not ok or k != 2:
        raise PreconditionError(f"{sorted(s)} is not a minimal 2-cut")
    v1, v2 = connected_components(induced_subgraph(g, g.vertices - s))
    return v1, v2


def _side_dominating_sets(g, side, cut, minimal_only):
    """Subsets of side that connect-dominate the graph on side union cut."""
    h = induced_subgraph(g, frozenset(side) | frozenset(cut))
    verts = sorted(side)
    all_sets = [
        frozenset(combo)
        for size in range(1, len(verts) + 1)
        for combo in itertools.combinations(verts, size)
        if is_connected_dominating(h, combo)
    ]
    if not minimal_only:
        return all_sets
    return [b for b in all_sets if not any(c < b for c in all_sets)]


def pair_dominating_sets(g, s, minimal_only=True):
    """Elements of D_c(V1, V2): traces on each side connect-dominate that
    side plus the cut.  With minimal_only, just the inclusion-minimal ones
    (these are exactly the unions of minimal sets per side)."""
    v1, v2 = _cut_sides(g, s)
    out = []
    for b1 in _side_dominating_sets(g, v1, s, minimal_only):
        for b2 in _side_dominating_sets(g, v2, s, minimal_only):
            out.append((b1, b2))
    return v1, v2, out


def _cut_generators(g, s, minimal_only):
    n = g.n
    _, _, doms = pair_dominating_sets(g, s, minimal_only)
    gens = set()
    for b1, b2 in doms:
        a = sorted(b1 | b2)
        for i in sorted(b1):
            for j in sorted(b2):
                rest = [v for v in a if v != i and v != j]
                for r in range(len(rest) + 1):
                    for cset in itertools.combinations(rest, r):
                        dset = [v for v in rest if v not in cset]
                        lo, hi = min(i, j), max(i, j)
                        gens.add(xy_monomial(cset, dset, n) * edge_binomial(lo, hi, n))
    return _sorted_gens(gens, n)


def concise_cut_generators(g, s):
    """g_{C,D} * f_{i,j} over the inclusion-minimal members of D_c(V1, V2).

    Together with the edge ideal this generates the same ideal as the
    generic transversal generators (the concise generating set); on its own
    it may be smaller.
    """
    return _cut_generators(g, s, minimal_only=True)


def cut_generators_full(g, s):
    """Same recipe over every member of D_c(V1, V2); this is the finite
    generating set whose union with the admissible-path basis is checked
    against the Buchberger criterion."""
    return _cut_generators(g, s, minimal_only=False)
