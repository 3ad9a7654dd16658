"""Simple undirected graphs on dense integer vertices, plus the edge-list text format."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Malformed edge-list text; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class PreconditionError(ValueError):
    pass


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Edges are stored normalised (``u < v``) and sorted, so iteration order
    is deterministic and two equal graphs compare equal.
    """

    n: int
    edges: tuple[Edge, ...]
    _adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[Edge] = ()) -> None:
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            e = _norm(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in seen:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def max_degree(self) -> int:
        return max(len(a) for a in self._adj)

    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def remove_edges(self, drop: Iterable[Edge]) -> Graph:
        gone = {_norm(*e) for e in drop}
        return Graph(self.n, (e for e in self.edges if e not in gone))

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def degree_profile(g: Graph) -> list[int]:
    return [g.degree(v) for v in range(g.n)]


def is_regular(g: Graph, k: int) -> bool:
    return all(g.degree(v) == k for v in range(g.n))


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def _lowlink(g: Graph) -> tuple[set[Edge], set[int]]:
    # iterative DFS; returns (bridges, cut vertices)
    pre = [-1] * g.n
    low = [0] * g.n
    bridges: set[Edge] = set()
    cuts: set[int] = set()
    counter = 0
    for root in range(g.n):
        if pre[root] != -1:
            continue
        pre[root] = low[root] = counter
        counter += 1
        root_children = 0
        stack = [(root, -1, iter(sorted(g.neighbors(root))))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if pre[w] == -1:
                    pre[w] = low[w] = counter
                    counter += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(sorted(g.neighbors(w)))))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], pre[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] > pre[parent]:
                    bridges.add(_norm(parent, v))
                if parent != root and low[v] >= pre[parent]:
                    cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return bridges, cuts


def find_bridges(g: Graph) -> set[Edge]:
    """Edges lying on no cycle."""
    return _lowlink(g)[0]


def cut_vertices(g: Graph) -> set[int]:
    return _lowlink(g)[1]


def is_bridgeless(g: Graph) -> bool:
    return not find_bridges(g)


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = float("inf")
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.neighbors(u):
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


# -- edge-list text format ---------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Read ``n <N>`` followed by ``e <u> <v>`` lines; ``#`` starts a comment line.

    Lines starting with other tags (e.g. the ``A`` cap lines used by the
    ``check`` command) are left to the caller; see :func:`parse_sections`.
    """
    g, _ = parse_sections(text)
    return g


def parse_sections(text: str, extra: tuple[str, ...] = ()) -> tuple[Graph, list[tuple[int, list[str]]]]:
    """Parse a graph, returning also any lines whose tag is listed in ``extra``."""
    n = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    others: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "n":
            if n is not None:
                raise GraphFormatError(lineno, "second header line")
            if len(parts) != 2:
                raise GraphFormatError(lineno, "expected 'n <N>'")
            n = _int(parts[1], lineno)
            if n < 1:
                raise GraphFormatError(lineno, "vertex count must be positive")
        elif tag == "e":
            if n is None:
                raise GraphFormatError(lineno, "edge before header")
            if len(parts) != 3:
                raise GraphFormatError(lineno, "expected 'e <u> <v>'")
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            if u == v:
                raise GraphFormatError(lineno, f"self-loop at vertex {u}")
            for x in (u, v):
                if not 0 <= x < n:
                    raise GraphFormatError(lineno, f"vertex {x} out of range (n={n})")
            e = _norm(u, v)
            if e in seen:
                raise GraphFormatError(lineno, f"duplicate edge {u} {v}")
            seen.add(e)
            edges.append(e)
        elif tag in extra:
            others.append((lineno, parts))
        else:
            raise GraphFormatError(lineno, f"unknown line tag {tag!r}")
    if n is None:
        raise GraphFormatError(0, "missing 'n <N>' header")
    return Graph(n, edges), others


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(lineno, f"not an integer: {tok!r}") from None


def write_graph(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"e {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def compact(g: Graph) -> str:
    """One-line form ``n=4:0-1,0-2`` used inside certificate trailers."""
    return f"n={g.n}:" + ",".join(f"{u}-{v}" for u, v in g.edges)


def parse_compact(s: str) -> Graph:
    head, _, body = s.partition(":")
    n = int(head.removeprefix("n="))
    edges = [tuple(int(x) for x in tok.split("-")) for tok in body.split(",") if tok]
    return Graph(n, edges)  # type: ignore[arg-type]


# -- standard graphs -----------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def disjoint_union(*gs: Graph) -> Graph:
    edges = []
    off = 0
    for g in gs:
        edges += [(u + off, v + off) for u, v in g.edges]
        off += g.n
    return Graph(off, edges)
