from __future__ import annotations

import itertools
from typing import Iterator, Optional, Sequence

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from grooming.graph import Edge, Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


# -- strategies -------------------------------------------------------------------------


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, max_edges: Optional[int] = None, max_deg: Optional[int] = None) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges) if pairs else st.just([]))
    if max_deg is not None:
        deg = [0] * n
        kept = []
        for u, v in chosen:
            if deg[u] < max_deg and deg[v] < max_deg:
                kept.append((u, v))
                deg[u] += 1
                deg[v] += 1
        chosen = kept
    return Graph(n, chosen)


@st.composite
def permutations_of(draw, n: int) -> list[int]:
    return draw(st.permutations(list(range(n))))


# -- brute-force oracles ------------------------------------------------------------------


def set_partitions(items: Sequence[Edge], max_block: int) -> Iterator[list[list[Edge]]]:
    """Every partition of ``items`` into blocks of size at most ``max_block``."""
    if not items:
        yield []
        return
    first, rest = items[0], list(items[1:])
    for k in range(0, min(max_block - 1, len(rest)) + 1):
        for combo in itertools.combinations(range(len(rest)), k):
            block = [first] + [rest[i] for i in combo]
            left = [e for i, e in enumerate(rest) if i not in combo]
            for tail in set_partitions(left, max_block):
                yield [block] + tail


def appearances_of(n: int, blocks: list[list[Edge]]) -> list[int]:
    app = [0] * n
    for b in blocks:
        for v in {x for e in b for x in e}:
            app[v] += 1
    return app


def brute_min_cost(g: Graph, C: int) -> int:
    return min(sum(appearances_of(g.n, p)) for p in set_partitions(list(g.edges), C))


def brute_feasible(g: Graph, C: int, caps: Sequence[int]) -> bool:
    return any(
        all(a <= c for a, c in zip(appearances_of(g.n, p), caps)) for p in set_partitions(list(g.edges), C)
    )


def is_connected_brute(n: int, edges) -> bool:
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x] - seen:
            seen.add(y)
            stack.append(y)
    return len(seen) == n


def brute_canonical(g: Graph) -> tuple:
    """Lexicographically least sorted edge list over all relabellings."""
    return min(tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in g.edges)) for p in itertools.permutations(range(g.n)))


# -- acceptance reporting ---------------------------------------------------------------------


_REPORT: list[str] = []


@pytest.fixture
def criterion():
    def record(number: int, title: str, ok: bool, detail: str = "") -> None:
        line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}" + (f" :: {detail}" if detail else "")
        _REPORT.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter) -> None:
    if _REPORT:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_REPORT, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
