"""Edge partitions, ADM assignments and the feasibility checker."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import Edge, Graph, _norm


@dataclass(frozen=True)
class Partition:
    """Parts of a parent graph's edge set, each holding at most ``C`` edges.

    Parts are stored with sorted edges and ordered by their smallest edge.
    Nothing is validated on construction; use :func:`verify_partition`.
    """

    graph: Graph
    C: int
    parts: tuple[tuple[Edge, ...], ...]

    @classmethod
    def build(cls, graph: Graph, C: int, parts: Iterable[Iterable[Edge]]) -> Partition:
        norm = [tuple(sorted(_norm(*e) for e in p)) for p in parts]
        norm.sort(key=lambda p: p[0] if p else (-1, -1))
        return cls(graph, C, tuple(norm))

    def vertices(self, i: int) -> set[int]:
        return {x for e in self.parts[i] for x in e}

    def appearances(self) -> list[int]:
        app = [0] * self.graph.n
        for i in range(len(self.parts)):
            for v in self.vertices(i):
                app[v] += 1
        return app

    def cost(self) -> int:
        return sum(self.appearances())

    def max_appearances(self) -> int:
        return max(self.appearances(), default=0)

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class AdmAssignment:
    counts: tuple[int, ...]

    def __init__(self, counts: Sequence[int]) -> None:
        if any(c < 0 for c in counts):
            raise ValueError("ADM counts must be non-negative")
        object.__setattr__(self, "counts", tuple(counts))

    @classmethod
    def uniform(cls, n: int, k: int) -> AdmAssignment:
        return cls([k] * n)

    def total(self) -> int:
        return sum(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, v: int) -> int:
        return self.counts[v]


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_partition(p: Partition, a: AdmAssignment) -> Verdict:
    """Check capacity, exact cover of the parent's edges, and per-vertex caps.

    The first violation found is reported, in that order.
    """
    g = p.graph
    if len(a) != g.n:
        return Verdict(False, f"assignment has {len(a)} entries for {g.n} vertices")
    own = set(g.edges)
    for i, part in enumerate(p.parts):
        if not part:
            return Verdict(False, f"part {i} is empty")
        for e in part:
            if e not in own:
                return Verdict(False, f"part {i} uses non-edge {e}")
        if len(part) > p.C:
            return Verdict(False, f"part {i} has {len(part)} edges > C={p.C}")
    seen: dict[Edge, int] = {}
    for i, part in enumerate(p.parts):
        for e in part:
            if e in seen:
                return Verdict(False, f"edge {e} in parts {seen[e]} and {i}")
            seen[e] = i
    missing = sorted(own - seen.keys())
    if missing:
        return Verdict(False, f"edge {missing[0]} not covered")
    for v, k in enumerate(p.appearances()):
        if k > a[v]:
            return Verdict(False, f"vertex {v} appears in {k} parts > A={a[v]}")
    return Verdict(True)


def format_partition(p: Partition) -> str:
    lines = ["B: " + " ".join(f"({u},{v})" for u, v in part) for part in p.parts]
    lines.append(f"cost {p.cost()} max-appearances {p.max_appearances()}")
    return "\n".join(lines) + "\n"


def parse_partition(g: Graph, C: int, text: str) -> Partition:
    parts = []
    for line in text.splitlines():
        line = line.strip()
        if not line.startswith("B:"):
            continue
        part = []
        for tok in line[2:].split():
            u, v = tok.strip("()").split(",")
            part.append((int(u), int(v)))
        parts.append(part)
    return Partition.build(g, C, parts)
