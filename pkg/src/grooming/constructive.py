"""Explicit partitions achieving the ADM counts for maximum degree 2 and 3."""

from __future__ import annotations

from typing import Iterable, Optional

from .graph import Edge, Graph, PreconditionError, _norm, components
from .matching import perfect_matching_cubic, remove_matching_cycles
from .partition import AdmAssignment, Partition


class SearchExhausted(RuntimeError):
    """A search whose success is guaranteed by a theorem came back empty."""


# -- maximum degree 2 -------------------------------------------------------------


def _walk(g: Graph, comp: list[int]) -> tuple[list[int], bool]:
    """Vertices of a path/cycle component in traversal order, and whether it is a cycle."""
    ends = [v for v in comp if g.degree(v) < 2]
    cyclic = not ends
    start = comp[0] if cyclic else min(ends)
    seq = [start]
    if g.degree(start) == 0:
        return seq, False
    prev, cur = start, min(g.neighbors(start))
    while cur != start:
        seq.append(cur)
        nxt = [w for w in g.neighbors(cur) if w != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
    return seq, cyclic


def _chunks(run: list[Edge], C: int) -> list[list[Edge]]:
    return [run[i : i + C] for i in range(0, len(run), C)]


def singles_assignment(g: Graph, singles: Iterable[int]) -> AdmAssignment:
    """Caps used with :func:`decompose_degree2`: 1 on degree-2 singles, 2 elsewhere."""
    s = set(singles)
    return AdmAssignment([1 if v in s and g.degree(v) == 2 else 2 for v in range(g.n)])


def decompose_degree2(g: Graph, C: int, singles: Iterable[int] = ()) -> Partition:
    """Partition a graph of maximum degree 2 so each degree-2 single sits inside one part.

    Per component: if it fits in one part it becomes one part. Otherwise each
    maximal run a_0..a_{t-1} of consecutive singles is wrapped with its two
    outer neighbours into a path of t+1 edges, and the edges left between
    wrapped runs are cut greedily into paths of at most C edges. Every other
    vertex ends up in at most two parts.
    """
    singles = set(singles)
    if C < 2:
        raise PreconditionError("need C >= 2")
    if g.m and g.max_degree() > 2:
        raise PreconditionError("graph has a vertex of degree > 2")
    if len(singles) > C - 1:
        raise PreconditionError(f"{len(singles)} single-ADM vertices exceed C-1={C - 1}")
    if any(not 0 <= v < g.n for v in singles):
        raise PreconditionError("single-ADM vertex out of range")

    parts: list[list[Edge]] = []
    for comp in components(g):
        if len(comp) == 1:
            continue
        seq, cyclic = _walk(g, comp)
        k = len(seq)
        m = k if cyclic else k - 1
        edges = [_norm(seq[i], seq[(i + 1) % k]) for i in range(m)]
        if m <= C:
            parts.append(edges)
            continue
        # join[i]: edges i-1 and i must share a part (vertex seq[i] is a single)
        interior = range(k) if cyclic else range(1, k - 1)
        join = [False] * k
        for i in interior:
            join[i] = seq[i] in singles
        if cyclic:
            # rotate so edge 0 starts a group (a vertex that is not a single exists: m > C > |singles|)
            r = next(i for i in range(k) if not join[i])
            seq = seq[r:] + seq[:r]
            join = join[r:] + join[:r]
            edges = [_norm(seq[i], seq[(i + 1) % k]) for i in range(m)]
        groups: list[list[Edge]] = []
        for i, e in enumerate(edges):
            if i > 0 and join[i]:
                groups[-1].append(e)
            else:
                groups.append([e])
        free: list[Edge] = []
        for grp in groups:
            if len(grp) > 1:
                parts.extend(_chunks(free, C))
                free = []
                parts.append(grp)
            else:
                free.extend(grp)
        parts.extend(_chunks(free, C))
    return Partition.build(g, C, parts)


# -- bridgeless cubic ---------------------------------------------------------------


def decompose_bridgeless_cubic(g: Graph) -> Partition:
    """Paths of three edges, every vertex in exactly two of them.

    Remove a perfect matching, orient the remaining cycles in their
    traversal order, and pair each matching edge uv with the cycle edges
    entering u and v.
    """
    matching = perfect_matching_cubic(g)
    cycles = remove_matching_cycles(g, matching)
    pred = [-1] * g.n
    for cyc in cycles:
        for i, v in enumerate(cyc):
            pred[v] = cyc[i - 1]
    parts = [[(pred[u], u), (u, v), (pred[v], v)] for u, v in matching]
    return Partition.build(g, 3, parts)


# -- linear 5-forests -------------------------------------------------------------------


def linear_forest_colouring(g: Graph, max_path: int = 5) -> Optional[list[int]]:
    """2-colour the edges so each colour class is a disjoint union of paths of at most
    ``max_path`` edges. Backtracking in edge order; the first edge is fixed to colour 0."""
    m = len(g.edges)
    colour = [-1] * m
    cadj: list[list[list[int]]] = [[[] for _ in range(g.n)] for _ in range(2)]

    def end_of(c: int, v: int) -> tuple[int, int]:
        prev, cur, length = -1, v, 0
        while True:
            nxt = [w for w in cadj[c][cur] if w != prev]
            if not nxt:
                return cur, length
            prev, cur = cur, nxt[0]
            length += 1

    def fits(c: int, u: int, v: int) -> bool:
        if len(cadj[c][u]) >= 2 or len(cadj[c][v]) >= 2:
            return False
        eu, lu = end_of(c, u)
        if eu == v:
            return False
        _, lv = end_of(c, v)
        return lu + lv + 1 <= max_path

    def rec(i: int) -> bool:
        if i == m:
            return True
        u, v = g.edges[i]
        for c in ((0,) if i == 0 else (0, 1)):
            if fits(c, u, v):
                colour[i] = c
                cadj[c][u].append(v)
                cadj[c][v].append(u)
                if rec(i + 1):
                    return True
                cadj[c][u].pop()
                cadj[c][v].pop()
        colour[i] = -1
        return False

    return colour if rec(0) else None


def decompose_linear_forest(g: Graph, C: int = 5) -> Partition:
    """Every monochromatic path of a linear 5-forest 2-colouring becomes one part."""
    if C < 5:
        raise PreconditionError("paths may have 5 edges; need C >= 5")
    if g.m and g.max_degree() > 3:
        raise PreconditionError("graph has a vertex of degree > 3")
    colour = linear_forest_colouring(g)
    if colour is None:
        raise SearchExhausted("no 2-colouring into paths of length <= 5 found for a subcubic graph")
    parts = []
    for c in (0, 1):
        sub = Graph(g.n, [e for e, k in zip(g.edges, colour) if k == c])
        for comp in components(sub):
            if len(comp) > 1:
                s = set(comp)
                parts.append([e for e in sub.edges if e[0] in s])
    return Partition.build(g, C, parts)
