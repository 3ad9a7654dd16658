"""Isomorph-free graph generation.

Two generators share the canonical labeller:

* :func:`enumerate_graphs_max_degree` grows graphs one vertex at a time.
  A child is kept only when the new vertex has the smallest
  (degree, neighbour-degree) key among the vertices whose deletion leaves
  a valid parent, then children are deduplicated by canonical form.
* :func:`enumerate_cubic_graphs` grows connected cubic graphs from K4 by
  edge insertion (subdivide two distinct edges, join the two new vertices),
  deduplicating each level by canonical form.

Results are cached per argument tuple, so repeated scans are cheap.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterator

from .canon import canonical_graph, canonical_order
from .graph import Graph, complete_graph, cut_vertices, disjoint_union, is_connected


def _key(g: Graph, v: int) -> tuple:
    return (g.degree(v), tuple(sorted(g.degree(w) for w in g.neighbors(v))))


def _accept(child: Graph, new: int, connected: bool) -> bool:
    if connected:
        cuts = cut_vertices(child)
        eligible = [v for v in range(child.n) if v not in cuts]
    else:
        eligible = range(child.n)
    k = _key(child, new)
    return all(k <= _key(child, v) for v in eligible)


@lru_cache(maxsize=None)
def _level(n: int, max_deg: int, connected: bool) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    out: dict = {}
    for parent in _level(n - 1, max_deg, connected):
        free = [v for v in range(parent.n) if parent.degree(v) < max_deg]
        lo = 1 if connected else 0
        for size in range(lo, min(max_deg, len(free)) + 1):
            for nbrs in combinations(free, size):
                child = Graph(n, parent.edges + tuple((u, n - 1) for u in nbrs))
                if not _accept(child, n - 1, connected):
                    continue
                cert, order = canonical_order(child)
                if cert not in out:
                    perm = [0] * n
                    for i, v in enumerate(order):
                        perm[v] = i
                    out[cert] = child.relabel(perm)
    return tuple(out[c] for c in sorted(out))


def enumerate_graphs_max_degree(n: int, max_deg: int, connected_only: bool = False) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, in a fixed order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if max_deg < 0:
        raise ValueError("degree bound must be non-negative")
    yield from _level(n, min(max_deg, n - 1), connected_only)


def count_graphs(n: int, max_deg: int, connected_only: bool = False) -> int:
    return len(_level(n, min(max_deg, n - 1), connected_only))


def _insert_edge(g: Graph, e: tuple[int, int], f: tuple[int, int]) -> Graph:
    x, y = g.n, g.n + 1
    rest = [d for d in g.edges if d != e and d != f]
    rest += [(e[0], x), (x, e[1]), (f[0], y), (y, f[1]), (x, y)]
    return Graph(g.n + 2, rest)


def _insert_diamond(g: Graph, e: tuple[int, int]) -> Graph:
    a, b, c, d = range(g.n, g.n + 4)
    rest = [x for x in g.edges if x != e]
    rest += [(e[0], a), (a, c), (a, d), (c, d), (c, b), (d, b), (b, e[1])]
    return Graph(g.n + 4, rest)


def _insert_pendant(g: Graph, e: tuple[int, int]) -> Graph:
    # subdivide e by x and hang a subdivided K4 off x through a bridge
    x, y, r, s, t, u = range(g.n, g.n + 6)
    rest = [d for d in g.edges if d != e]
    rest += [(e[0], x), (x, e[1]), (x, y), (y, r), (y, s), (r, t), (r, u), (s, t), (s, u), (t, u)]
    return Graph(g.n + 6, rest)


def _edge_key(g: Graph, u: int, v: int) -> tuple[int, int]:
    nu, nv = g.neighbors(u) - {v}, g.neighbors(v) - {u}
    squares = sum(1 for a in nu for b in nv if a != b and g.has_edge(a, b))
    return (len(nu & nv), squares)


def _reducible(g: Graph, u: int, v: int) -> bool:
    """Deleting uv and suppressing u, v leaves a simple connected cubic graph."""
    a, b = sorted(g.neighbors(u) - {v})
    c, d = sorted(g.neighbors(v) - {u})
    new = [(a, b), (c, d)]
    if (a, b) == (c, d) or g.has_edge(a, b) or g.has_edge(c, d):
        return False
    edges = [e for e in g.edges if u not in e and v not in e]
    if any(x in (u, v) for e in new for x in e):
        return False
    keep = [w for w in range(g.n) if w not in (u, v)]
    idx = {w: i for i, w in enumerate(keep)}
    h = Graph(len(keep), [(idx[p], idx[q]) for p, q in edges + new])
    return is_connected(h)


def _has_reducible_edge(g: Graph) -> bool:
    return any(_reducible(g, u, v) for u, v in g.edges)


def _diamonds(g: Graph) -> list[tuple[int, int, int, int, int, int]]:
    """Reducible diamonds as (x, a, c, d, b, y): x-a, b-y external, x != y non-adjacent."""
    out = []
    for c, d in g.edges:
        common = sorted(g.neighbors(c) & g.neighbors(d))
        if len(common) != 2:
            continue
        a, b = common
        if g.has_edge(a, b):
            continue
        (x,) = g.neighbors(a) - {c, d}
        (y,) = g.neighbors(b) - {c, d}
        if x == y or x in (b, c, d) or y in (a, c, d) or g.has_edge(x, y):
            continue
        out.append((x, a, c, d, b, y))
    return out


@lru_cache(maxsize=None)
def _cubic_level(n: int) -> tuple[Graph, ...]:
    if n < 4 or n % 2:
        return ()
    if n == 4:
        return (complete_graph(4),)
    out: dict = {}

    def keep(child: Graph) -> None:
        cert, order = canonical_order(child)
        if cert not in out:
            perm = [0] * n
            for i, v in enumerate(order):
                perm[v] = i
            out[cert] = child.relabel(perm)

    # edge insertion, filtered: the new edge must carry the least local
    # invariant among the reducible edges of the child
    for g in _cubic_level(n - 2):
        for e, f in combinations(g.edges, 2):
            child = _insert_edge(g, e, f)
            k = _edge_key(child, n - 2, n - 1)
            if any(_edge_key(child, u, v) < k and _reducible(child, u, v) for u, v in child.edges):
                continue
            keep(child)
    # children with no reducible edge come from diamond or pendant insertion
    for g in _cubic_level(n - 4):
        for e in g.edges:
            child = _insert_diamond(g, e)
            if not _has_reducible_edge(child):
                keep(child)
    for g in _cubic_level(n - 6):
        for e in g.edges:
            child = _insert_pendant(g, e)
            if not _has_reducible_edge(child) and not _diamonds(child):
                keep(child)
    return tuple(out[c] for c in sorted(out))


def _partitions(n: int, smallest: int) -> Iterator[list[int]]:
    # non-decreasing even parts >= smallest summing to n
    if n == 0:
        yield []
        return
    for first in range(smallest, n + 1, 2):
        for rest in _partitions(n - first, first):
            yield [first] + rest


def enumerate_cubic_graphs(n: int, connected_only: bool = True) -> Iterator[Graph]:
    """Cubic graphs on ``n`` vertices up to isomorphism.

    With ``connected_only=False`` disjoint unions of connected ones are
    included too (as multisets of components, so still one per class).
    """
    if connected_only:
        yield from _cubic_level(n)
        return
    if n < 4 or n % 2:
        return
    for sizes in _partitions(n, 4):
        groups: dict[int, int] = {}
        for s in sizes:
            groups[s] = groups.get(s, 0) + 1
        choices = [list(combinations_with_replacement(range(len(_cubic_level(s))), k)) for s, k in sorted(groups.items())]
        yield from _unions(sorted(groups.items()), choices, 0, [])


def _unions(groups, choices, i, acc) -> Iterator[Graph]:
    if i == len(groups):
        yield canonical_graph(disjoint_union(*acc))
        return
    size, _ = groups[i]
    level = _cubic_level(size)
    for pick in choices[i]:
        yield from _unions(groups, choices, i + 1, acc + [level[j] for j in pick])


def enumerate_connected_subcubic(max_n: int) -> Iterator[Graph]:
    """Connected graphs with maximum degree <= 3 on 1..max_n vertices."""
    for n in range(1, max_n + 1):
        yield from enumerate_graphs_max_degree(n, 3, connected_only=True)


def one_deficient_blocks(k: int) -> tuple[Graph, ...]:
    """Connected graphs on ``k`` vertices, one vertex of degree 2 (labelled 0) and the rest cubic,
    obtained by subdividing an edge of a connected cubic graph on ``k - 1`` vertices."""
    return _blocks(k)


@lru_cache(maxsize=None)
def _blocks(k: int) -> tuple[Graph, ...]:
    out: dict = {}
    for g in _cubic_level(k - 1):
        for a, b in g.edges:
            h = Graph(k, [e for e in g.edges if e != (a, b)] + [(a, k - 1), (k - 1, b)])
            perm = list(range(1, k)) + [0]  # subdivision vertex becomes 0
            h = h.relabel(perm)
            # the attachment point is the unique degree-2 vertex, so the plain
            # canonical form already distinguishes attachment choices
            cert = canonical_order(h)[0]
            if cert not in out:
                out[cert] = h
    return tuple(out[c] for c in sorted(out))


def claw_of_blocks(blocks: tuple[Graph, Graph, Graph]) -> Graph:
    """Cubic graph: a centre vertex joined by bridges to the degree-2 vertex of three blocks."""
    edges = []
    off = 1
    for b in blocks:
        edges += [(u + off, v + off) for u, v in b.edges]
        edges.append((0, off))
        off += b.n
    return Graph(off, edges)


def claw_family(n: int) -> Iterator[Graph]:
    """All claw-of-blocks cubic graphs on ``n`` vertices, up to isomorphism."""
    seen = set()
    sizes = [k for k in range(5, n, 2)]
    for a in sizes:
        for b in sizes:
            c = n - 1 - a - b
            if not (a <= b <= c) or c not in sizes:
                continue
            for x in _blocks(a):
                for y in _blocks(b):
                    for z in _blocks(c):
                        g = claw_of_blocks((x, y, z))
                        cert, _ = canonical_order(g)
                        if cert in seen:
                            continue
                        seen.add(cert)
                        yield canonical_graph(g)
