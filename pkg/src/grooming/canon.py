"""Canonical labelling by colour refinement and individualisation.

Components are labelled independently and concatenated in sorted order;
a dense component is labelled through its complement. Within a connected
component the search tree individualises vertices of the first smallest
non-singleton cell and keeps the lexicographically least edge list among
the leaves. Automorphisms discovered at equal leaves prune siblings that
lie in the same orbit under the part of the group fixing the current path.
"""

from __future__ import annotations

from .graph import Graph, components

Cert = tuple


def _refine(adj: list[frozenset[int]], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition (colour refinement).

    New cells are ordered by (old cell, multiset of neighbour cells), which
    keeps the result isomorphism-invariant.
    """
    color = {}
    for i, c in enumerate(cells):
        for v in c:
            color[v] = i
    k = len(cells)
    while True:
        sig = {v: (c, tuple(sorted([color[w] for w in adj[v]]))) for v, c in color.items()}
        keys = sorted(set(sig.values()))
        if len(keys) == k:
            break
        rank = {s: i for i, s in enumerate(keys)}
        color = {v: rank[sig[v]] for v in color}
        k = len(keys)
    out: list[list[int]] = [[] for _ in range(k)]
    for v, c in color.items():
        out[c].append(v)
    return out


def _certificate(adj: list[frozenset[int]], order: list[int]) -> Cert:
    pos = {v: i for i, v in enumerate(order)}
    return tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u in order for v in adj[u] if u < v))


def _orbits_fixing(autos: list[dict[int, int]], fixed: list[int], cell: list[int]) -> dict[int, int]:
    """Union-find orbit representative for ``cell`` under automorphisms fixing ``fixed`` pointwise."""
    parent = {v: v for v in cell}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in autos:
        if any(a[f] != f for f in fixed):
            continue
        for v in cell:
            w = a[v]
            if w in parent:
                rv, rw = find(v), find(w)
                if rv != rw:
                    parent[max(rv, rw)] = min(rv, rw)
    return {v: find(v) for v in cell}


def _canon_connected(verts: list[int], adj: list[frozenset[int]]) -> tuple[Cert, list[int]]:
    init: dict[int, list[int]] = {}
    for v in verts:
        init.setdefault(len(adj[v]), []).append(v)
    cells = _refine(adj, [init[k] for k in sorted(init)])

    best: list = [None, None]  # certificate, order
    autos: list[dict[int, int]] = []

    def search(cells: list[list[int]], path: list[int]) -> None:
        target = None
        for c in cells:
            if len(c) > 1 and (target is None or len(c) < len(target)):
                target = c
        if target is None:
            order = [c[0] for c in cells]
            cert = _certificate(adj, order)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            elif cert == best[0]:
                autos.append(dict(zip(best[1], order)))
            return
        idx = cells.index(target)
        tried: list[int] = []
        for v in sorted(target):
            if tried:
                rep = _orbits_fixing(autos, path, target)
                if any(rep[v] == rep[t] for t in tried):
                    continue
            tried.append(v)
            rest = [w for w in target if w != v]
            child = cells[:idx] + [[v], rest] + cells[idx + 1 :]
            search(_refine(adj, child), path + [v])

    search(cells, [])
    return best[0], best[1]


def canonical_order(g: Graph) -> tuple[Cert, list[int]]:
    """(certificate, order) where ``order[i]`` is the vertex receiving label ``i``."""
    adj = [g.neighbors(v) for v in range(g.n)]
    pieces = []
    for comp in components(g):
        k = len(comp)
        if k == 1:
            pieces.append(((1, 0, ()), comp))
            continue
        m = sum(len(adj[v]) for v in comp) // 2
        if 4 * m > k * (k - 1):
            # dense: label through the complement (which may split further)
            sub = {v: i for i, v in enumerate(comp)}
            comp_g = Graph(k, ((sub[u], sub[v]) for u in comp for v in comp if u < v and v not in adj[u]))
            cc, corder = canonical_order(comp_g)
            pieces.append(((k, 1, cc), [comp[i] for i in corder]))
        else:
            cert, order = _canon_connected(comp, adj)
            pieces.append(((k, 0, cert), order))
    pieces.sort(key=lambda p: p[0])
    cert = (g.n, tuple(p[0] for p in pieces))
    order = [v for p in pieces for v in p[1]]
    return cert, order


def canonical_form(g: Graph) -> Cert:
    return canonical_order(g)[0]


def canonical_graph(g: Graph) -> Graph:
    _, order = canonical_order(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and a.m == b.m and canonical_form(a) == canonical_form(b)
