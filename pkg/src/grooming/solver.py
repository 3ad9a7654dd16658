"""Exact solvers over edge partitions.

Every search here restricts parts to connected edge sets. That loses
nothing: splitting a disconnected part into its components keeps every
vertex's appearance count and every part's size within bounds. Parts are
chosen as whole connected blocks containing a designated uncovered edge,
which fixes the search order and removes part-permutation symmetry.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .enumerate import enumerate_graphs_max_degree
from .graph import Graph
from .partition import AdmAssignment, Partition

DEFAULT_MAX_N = 8
DEFAULT_MAX_EDGES = 24
# the capped search prunes far harder than the cost DP; cubic witnesses need ~33 edges
DEFAULT_MAX_CAPPED_EDGES = 48


class SearchTimeout(Exception):
    pass


class InstanceTooLarge(ValueError):
    pass


@dataclass
class SolveResult:
    optimum: Optional[int]
    feasible: bool = True
    witness: Optional[Partition] = None
    assignment: Optional[AdmAssignment] = None
    refutations: list = field(default_factory=list)
    nodes_explored: int = 0


class _EdgeSearch:
    def __init__(self, g: Graph, C: int, timeout: Optional[float] = None) -> None:
        if C < 1:
            raise ValueError("C must be positive")
        self.g = g
        self.C = C
        self.ends = g.edges
        self.inc = [0] * g.n
        for i, (u, v) in enumerate(g.edges):
            self.inc[u] |= 1 << i
            self.inc[v] |= 1 << i
        self.nodes = 0
        self.deadline = None if timeout is None else time.monotonic() + timeout

    def tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and not self.nodes & 63 and time.monotonic() > self.deadline:
            raise SearchTimeout(f"search exceeded its time budget after {self.nodes} nodes")

    def blocks(self, e: int, mask: int) -> dict[int, frozenset[int]]:
        """Connected edge sets inside ``mask`` containing edge ``e``, at most C edges."""
        ends, inc = self.ends, self.inc
        start = 1 << e
        out = {start: frozenset(ends[e])}
        frontier = [(start, out[start])]
        for _ in range(self.C - 1):
            nxt = []
            for bits, verts in frontier:
                adj = 0
                for x in verts:
                    adj |= inc[x]
                adj &= mask & ~bits
                while adj:
                    low = adj & -adj
                    adj ^= low
                    nb = bits | low
                    if nb in out:
                        continue
                    nv = verts | frozenset(ends[low.bit_length() - 1])
                    out[nb] = nv
                    nxt.append((nb, nv))
            frontier = nxt
        return out

    def to_partition(self, chosen: list[int]) -> Partition:
        parts = [[self.ends[i] for i in range(len(self.ends)) if bits >> i & 1] for bits in chosen]
        return Partition.build(self.g, self.C, parts)


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def min_cost_partition(g: Graph, C: int, max_edges: int = DEFAULT_MAX_EDGES) -> SolveResult:
    """Least total of part vertex counts over partitions into parts of at most C edges.

    Memoised search over the set of uncovered edges; each state branches on
    the blocks containing its lowest uncovered edge. Branches whose running
    cost plus the count of vertices still touching uncovered edges cannot
    beat the incumbent are cut.
    """
    if g.m > max_edges:
        raise InstanceTooLarge(f"{g.m} edges exceeds the exhaustive limit of {max_edges}")
    s = _EdgeSearch(g, C)
    memo: dict[int, tuple[int, int]] = {0: (0, 0)}

    def touched(mask: int) -> int:
        return sum(1 for v in range(g.n) if s.inc[v] & mask)

    def best(mask: int) -> int:
        if mask in memo:
            return memo[mask][0]
        s.tick()
        top = float("inf")
        pick = 0
        for bits, verts in sorted(s.blocks(_lowest(mask), mask).items(), key=lambda kv: -len(kv[1])):
            rest = mask & ~bits
            if len(verts) + touched(rest) >= top:
                continue
            c = len(verts) + best(rest)
            if c < top:
                top, pick = c, bits
        memo[mask] = (int(top), pick)
        return int(top)

    full = (1 << g.m) - 1
    opt = best(full)
    chosen = []
    mask = full
    while mask:
        bits = memo[mask][1]
        chosen.append(bits)
        mask &= ~bits
    return SolveResult(opt, True, s.to_partition(chosen), nodes_explored=s.nodes)


def feasible_under_caps(
    g: Graph,
    C: int,
    a: AdmAssignment,
    timeout: Optional[float] = None,
    max_edges: int = DEFAULT_MAX_CAPPED_EDGES,
) -> SolveResult:
    """Is there a partition into parts of at most C edges with each v in at most A(v) parts?

    Branching picks the most constrained vertex (fewest remaining appearances,
    then most uncovered edges) and tries the blocks through one of its edges,
    largest first. A vertex allowed one more appearance must have all its
    uncovered edges inside the block that uses it. Failed states are memoised
    on (uncovered edges, remaining caps of vertices still in play).
    """
    if len(a) != g.n:
        raise ValueError("assignment length does not match the graph")
    if g.m > max_edges:
        raise InstanceTooLarge(f"{g.m} edges exceeds the exhaustive limit of {max_edges}")
    s = _EdgeSearch(g, C, timeout)
    n, inc = g.n, s.inc
    caps = list(a.counts)
    failed: set = set()
    chosen: list[int] = []

    def rec(mask: int) -> bool:
        if not mask:
            return True
        s.tick()
        pivot, pkey = -1, None
        for v in range(n):
            rem = inc[v] & mask
            if not rem:
                continue
            d = bin(rem).count("1")
            if caps[v] * C < d:
                return False
            k = (caps[v], -d)
            if pkey is None or k < pkey:
                pivot, pkey = v, k
        key = (mask, tuple(caps[v] if inc[v] & mask else -1 for v in range(n)))
        if key in failed:
            return False
        e = _lowest(inc[pivot] & mask)
        options = sorted(s.blocks(e, mask).items(), key=lambda kv: (-bin(kv[0]).count("1"), kv[0]))
        for bits, verts in options:
            rest = mask & ~bits
            if any(caps[x] == 1 and inc[x] & rest for x in verts):
                continue
            for x in verts:
                caps[x] -= 1
            chosen.append(bits)
            if rec(rest):
                return True
            chosen.pop()
            for x in verts:
                caps[x] += 1
        failed.add(key)
        return False

    if any(caps[v] == 0 and inc[v] for v in range(n)):
        return SolveResult(None, False, nodes_explored=0)
    ok = rec((1 << g.m) - 1)
    witness = s.to_partition(chosen) if ok else None
    return SolveResult(witness.cost() if witness else None, ok, witness, a, nodes_explored=s.nodes)


# -- worst case over request graphs ---------------------------------------------


def _multiset_perms(values: list[int]) -> Iterator[tuple[int, ...]]:
    counts: dict[int, int] = {}
    for x in values:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)
    out: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(out) == len(values):
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out.append(k)
                yield from rec()
                out.pop()
                counts[k] += 1

    yield from rec()


def _sorted_vectors(n: int, total: int, lo: int, hi: int) -> Iterator[list[int]]:
    # non-decreasing vectors of length n, entries in [lo, hi], summing to total
    if n == 0:
        if total == 0:
            yield []
        return
    for first in range(lo, hi + 1):
        if first * n > total:
            break
        if first + hi * (n - 1) < total:
            continue
        for rest in _sorted_vectors(n - 1, total - first, first, hi):
            yield [first] + rest


def _placements(g: Graph, vec: list[int]) -> Iterator[tuple[int, ...]]:
    # the greedy adversary first: smallest caps on the busiest vertices
    by_deg = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    greedy = [0] * g.n
    for v, c in zip(by_deg, sorted(vec)):
        greedy[v] = c
    first = tuple(greedy)
    yield first
    for p in _multiset_perms(vec):
        if p != first:
            yield p


def _edge_maximal(g: Graph, d: int) -> bool:
    low = [v for v in range(g.n) if g.degree(v) < d]
    return all(g.has_edge(u, v) for i, u in enumerate(low) for v in low[i + 1 :])


class Adversary:
    """Request graphs on n vertices and a memory of cap placements known to fail."""

    def __init__(self, C: int, graphs: list[Graph]) -> None:
        self.C = C
        self.graphs = sorted(graphs, key=lambda g: (-g.m, g.edges))
        self.bad: dict[int, list[tuple[int, ...]]] = {}
        self.nodes = 0

    def _dominated(self, i: int, caps: tuple[int, ...]) -> bool:
        # pointwise fewer ADMs than a failing placement fails as well
        return any(all(c <= b for c, b in zip(caps, known)) for known in self.bad.get(i, ()))

    def refute(self, vec: list[int]) -> Optional[tuple[Graph, tuple[int, ...]]]:
        """A (graph, placement of ``vec``) with no feasible partition, or None."""
        for i, g in enumerate(self.graphs):
            for caps in _placements(g, vec):
                if self._dominated(i, caps):
                    return g, caps
                r = feasible_under_caps(g, self.C, AdmAssignment(caps))
                self.nodes += r.nodes_explored
                if not r.feasible:
                    self.bad.setdefault(i, []).append(caps)
                    return g, caps
        return None


def adversary_graphs(n: int, delta: int, member: Optional[Callable[[Graph], bool]] = None) -> list[Graph]:
    """Request graphs to try. Without a class only edge-maximal ones matter:
    restricting a partition to a subgraph never raises an appearance count."""
    d = min(delta, n - 1)
    if d < 1:
        return [Graph(n)]
    if member is None:
        return [g for g in enumerate_graphs_max_degree(n, d) if _edge_maximal(g, d)]
    return [g for g in enumerate_graphs_max_degree(n, d) if member(g)]


def _worst_case(n: int, C: int, delta: int, graphs: list[Graph]) -> SolveResult:
    d = min(delta, n - 1)
    if d <= 0 or all(g.m == 0 for g in graphs):
        floor_cap = 1 if d >= 1 else 0
        return SolveResult(n * floor_cap, True, assignment=AdmAssignment([floor_cap] * n))
    adv = Adversary(C, graphs)
    refutations = []
    for total in range(n, n * d + 1):
        for vec in _sorted_vectors(n, total, 1, d):
            hit = adv.refute(vec)
            if hit is None:
                return SolveResult(
                    total, True, assignment=AdmAssignment(vec), refutations=refutations, nodes_explored=adv.nodes
                )
            refutations.append((tuple(vec), hit[0], hit[1]))
    raise AssertionError("assignment with delta ADMs per node must always be feasible")


def worst_case_A(n: int, C: int, delta: int, max_n: int = DEFAULT_MAX_N) -> SolveResult:
    """Least total ADMs on an n-ring serving every request graph of maximum degree <= delta.

    Node caps range over 1..min(delta, n-1) (one ADM per node is the floor,
    and single-edge parts never need more than the degree). Only the sorted
    cap vector matters, since the adversary may relabel its graph freely;
    totals are tried upward and the first cap vector that no placement of
    any request graph refutes is optimal. Only edge-maximal request graphs
    are tried: a subgraph of a feasible graph is feasible.
    """
    if n < 1 or C < 1 or delta < 1:
        raise ValueError("need n, C, delta >= 1")
    if n > max_n:
        raise InstanceTooLarge(f"n={n} exceeds the exhaustive limit {max_n}; raise the limit to run it")
    return _worst_case(n, C, delta, adversary_graphs(n, delta))


def min_cost_with_class(
    n: int,
    C: int,
    delta: int,
    member: Callable[[Graph], bool],
    max_n: int = DEFAULT_MAX_N,
) -> SolveResult:
    """As :func:`worst_case_A`, quantifying only over request graphs accepted by ``member``."""
    if n < 1 or C < 1 or delta < 1:
        raise ValueError("need n, C, delta >= 1")
    if n > max_n:
        raise InstanceTooLarge(f"n={n} exceeds the exhaustive limit {max_n}; raise the limit to run it")
    graphs = adversary_graphs(n, delta, member)
    if not graphs:
        raise ValueError(f"no request graph on {n} vertices belongs to the class")
    return _worst_case(n, C, delta, graphs)
