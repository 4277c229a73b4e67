"""Simple graphs on 1..n: cuts, components, and connected domination.

Everything here is exhaustive search at desk scale (n up to roughly 12);
correctness over speed.  Induced subgraphs keep their original vertex
labels, so a Graph carries an explicit vertex set alongside the ambient n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import GraphFormatError, PreconditionError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; vertices is a subset of 1..n (all of it for
    top-level inputs, smaller for induced subgraphs)."""

    n: int
    edges: frozenset
    vertices: frozenset

    @staticmethod
    def make(n, edges, vertices=None):
        if n < 0:
            raise GraphFormatError("vertex count must be nonnegative")
        verts = frozenset(range(1, n + 1)) if vertices is None else frozenset(vertices)
        for v in verts:
            if not 1 <= v <= n:
                raise GraphFormatError(f"vertex {v} out of range 1..{n}")
        norm = set()
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop at {u}")
            if u > v:
                u, v = v, u
            if u not in verts or v not in verts:
                raise GraphFormatError(f"edge {{{u},{v}}} leaves the vertex set")
            if (u, v) in norm:
                raise GraphFormatError(f"duplicate edge {{{u},{v}}}")
            norm.add((u, v))
        return Graph(n, frozenset(norm), verts)

    def has_edge(self, u, v):
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def neighbors(self, v):
        return _adjacency(self)[v]

    def is_complete(self):
        k = len(self.vertices)
        return len(self.edges) == k * (k - 1) // 2

    def degree_of(self, v):
        return len(self.neighbors(v))


@lru_cache(maxsize=4096)
def _adjacency(g):
    adj = {v: set() for v in g.vertices}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return {v: frozenset(ns) for v, ns in adj.items()}


def path_graph(n):
    return Graph.make(n, [(i, i + 1) for i in range(1, n)])


def complete_graph(n):
    return Graph.make(n, list(itertools.combinations(range(1, n + 1), 2)))


def induced_subgraph(g, w):
    """Subgraph on w with original labels and exactly the edges inside w."""
    w = frozenset(w)
    if not w <= g.vertices:
        raise PreconditionError(f"{sorted(w - g.vertices)} not vertices of the graph")
    edges = frozenset(e for e in g.edges if e[0] in w and e[1] in w)
    return Graph(g.n, edges, w)


def connected_components(g):
    """Maximal connected pieces, sorted by least vertex."""
    seen = set()
    comps = []
    adj = _adjacency(g)
    for start in sorted(g.vertices):
        if start in seen:
            continue
        stack = [start]
        comp = {start}
        seen.add(start)
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in comp:
                    comp.add(u)
                    seen.add(u)
                    stack.append(u)
        comps.append(frozenset(comp))
    return comps


def is_connected(g):
    return len(connected_components(g)) <= 1


def _require_connected(g):
    if not is_connected(g):
        raise PreconditionError("graph must be connected")


def is_cut_point(g, i):
    """i is a cut point of g when deleting it increases the component count."""
    if i not in g.vertices:
        raise PreconditionError(f"{i} is not a vertex")
    before = len(connected_components(g))
    after = len(connected_components(induced_subgraph(g, g.vertices - {i})))
    return before < after


def is_minimal_kcut(g, s):
    """(flag, k): s disconnects g into k >= 2 parts and every vertex of s is
    a cut point of the graph induced on the complement plus that vertex."""
    _require_connected(g)
    s = frozenset(s)
    if not s or s >= g.vertices:
        raise PreconditionError("cut must be a nonempty proper vertex subset")
    if not s <= g.vertices:
        raise PreconditionError("cut contains non-vertices")
    rest = g.vertices - s
    comps = connected_components(induced_subgraph(g, rest))
    k = len(comps)
    if k < 2:
        return False, k
    for i in s:
        if not is_cut_point(induced_subgraph(g, rest | {i}), i):
            return False, k
    return True, k


@dataclass(frozen=True)
class CutRecord:
    """One element of min(G): the cut, its component count and components."""

    s: frozenset
    k: int
    components: tuple


def enumerate_min_cuts(g):
    """{empty set} plus every minimal k-cut, sorted lexicographically."""
    _require_connected(g)
    verts = sorted(g.vertices)
    records = [CutRecord(frozenset(), 1, tuple(connected_components(g)))]
    for size in range(1, len(verts)):
        for combo in itertools.combinations(verts, size):
            s = frozenset(combo)
            rest = g.vertices - s
            comps = connected_components(induced_subgraph(g, rest))
            if len(comps) < 2:
                continue
            ok, k = is_minimal_kcut(g, s)
            if ok:
                records.append(CutRecord(s, k, tuple(comps)))
    records.sort(key=lambda r: tuple(sorted(r.s)))
    return records


def is_connected_dominating(g, b):
    """b induces a connected subgraph and dominates every outside vertex."""
    b = frozenset(b)
    if not b:
        raise PreconditionError("connected dominating sets are nonempty")
    if not b <= g.vertices:
        raise PreconditionError("set contains non-vertices")
    if not is_connected(induced_subgraph(g, b)):
        return False
    adj = _adjacency(g)
    return all(adj[v] & b for v in g.vertices - b)


def gamma_c(g):
    """Connected domination number with its lexicographically least witness.

    The one-vertex graph gets gamma_c = 1 (its sole vertex dominates
    vacuously); the search never needs the empty set.
    """
    _require_connected(g)
    verts = sorted(g.vertices)
    for size in range(1, len(verts) + 1):
        for combo in itertools.combinations(verts, size):
            if is_connected_dominating(g, combo):
                return size, frozenset(combo)
    raise AssertionError("a connected graph dominates itself")


def _side_domination(g, side, cut):
    """Least subset of side that connect-dominates the graph induced on
    side union cut; returns (size, lexicographically least witness)."""
    h = induced_subgraph(g, frozenset(side) | frozenset(cut))
    verts = sorted(side)
    for size in range(1, len(verts) + 1):
        for combo in itertools.combinations(verts, size):
            if is_connected_dominating(h, combo):
                return size, frozenset(combo)
    raise AssertionError("the whole side always connect-dominates side plus cut")


def gamma_c_pair(g, s):
    """Least size of A inside V1 u V2 whose trace on each side
    connect-dominates that side plus the cut; s must be a minimal 2-cut."""
    s = frozenset(s)
    ok, k = is_minimal_kcut(g, s)
    if not ok or k != 2:
        raise PreconditionError(f"{sorted(s)} is not a minimal 2-cut")
    v1, v2 = connected_components(induced_subgraph(g, g.vertices - s))
    n1, w1 = _side_domination(g, v1, s)
    n2, w2 = _side_domination(g, v2, s)
    return n1 + n2, w1 | w2


# ---------------------------------------------------------------------------
# graph text format
# ---------------------------------------------------------------------------

def parse_graph(text):
    """First non-comment line `n <count>`, then one `u v` line per edge with
    u < v; `#` starts a comment; duplicates are an error."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphFormatError(f"line {lineno}: expected 'n <count>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad vertex count {parts[1]!r}")
            if n < 1:
                raise GraphFormatError(f"line {lineno}: vertex count must be positive")
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: bad edge {line!r}")
        if not (1 <= u < v <= n):
            raise GraphFormatError(f"line {lineno}: edge needs 1 <= u < v <= n")
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing 'n <count>' line")
    if len(set(edges)) != len(edges):
        raise GraphFormatError("duplicate edge")
    return Graph.make(n, edges)


def format_graph(g):
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"
