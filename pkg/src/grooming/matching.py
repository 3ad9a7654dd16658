"""Maximum cardinality matching (Edmonds' blossom contraction) and 1-factor cycle splitting."""

from __future__ import annotations

from collections import deque

from .graph import Edge, Graph, PreconditionError, components, find_bridges, is_regular


def maximum_matching(g: Graph) -> list[Edge]:
    """Maximum cardinality matching of an arbitrary simple graph.

    Classic O(V^3) formulation: grow an alternating BFS tree from each free
    vertex, shrinking odd cycles by relabelling their vertices with a
    common base until an augmenting path is found.
    """
    n = g.n
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        used = [False] * n
        while True:
            a = base[a]
            used[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_path(root: int) -> int:
        nonlocal parent, base
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    q.append(match[to])
        return -1

    # greedy warm start
    for u, v in g.edges:
        if match[u] == -1 and match[v] == -1:
            match[u], match[v] = v, u

    for root in range(n):
        if match[root] != -1:
            continue
        v = find_path(root)
        while v != -1:
            pv = parent[v]
            ppv = match[pv]
            match[v], match[pv] = pv, v
            v = ppv
    return sorted((u, match[u]) for u in range(n) if match[u] > u)


def check_cubic_bridgeless(g: Graph) -> None:
    if not is_regular(g, 3):
        raise PreconditionError("graph is not cubic")
    bridges = find_bridges(g)
    if bridges:
        raise PreconditionError(f"graph has bridge(s): {sorted(bridges)}")


def perfect_matching_cubic(g: Graph) -> list[Edge]:
    """A 1-factor of a bridgeless cubic graph (Petersen guarantees one exists)."""
    check_cubic_bridgeless(g)
    m = maximum_matching(g)
    if 2 * len(m) != g.n:
        raise AssertionError("bridgeless cubic graph without a perfect matching")
    return m


def is_matching(g: Graph, m: list[Edge]) -> bool:
    seen: set[int] = set()
    for u, v in m:
        if not g.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def remove_matching_cycles(g: Graph, m: list[Edge]) -> list[list[int]]:
    """Cycles left after deleting a perfect matching from a cubic graph.

    Each cycle starts at its lowest vertex and steps first to that vertex's
    lower-indexed neighbour; this order is the orientation used downstream.
    """
    if not is_regular(g, 3):
        raise PreconditionError("graph is not cubic")
    if not is_matching(g, m) or 2 * len(m) != g.n:
        raise PreconditionError("not a perfect matching of the graph")
    rest = g.remove_edges(m)
    cycles = []
    for comp in components(rest):
        if any(rest.degree(v) != 2 for v in comp):
            raise PreconditionError(f"component {comp} is not a cycle")
        start = comp[0]
        prev, cur = start, min(rest.neighbors(start))
        cyc = [start]
        while cur != start:
            cyc.append(cur)
            a, b = rest.neighbors(cur)
            prev, cur = cur, (b if a == prev else a)
        if len(cyc) != len(comp):
            raise PreconditionError(f"component {comp} is not a single cycle")
        cycles.append(cyc)
    return cycles
