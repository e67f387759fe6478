"""Small simple graphs stored as adjacency bitmasks, plus canonical labeling.

Vertices are ``0..n-1`` with ``n <= 32``; row ``i`` of :attr:`Graph.rows` is an
int whose bit ``j`` is set when ``ij`` is an edge. Graphs are immutable, so every
edit returns a new object.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

MAX_ORDER = 32


class GraphError(ValueError):
    """Invalid graph input or an operation applied outside its domain."""


class GraphClass(str, enum.Enum):
    TREE = "Tree"
    UNICYCLIC = "Unicyclic"
    BICYCLIC = "Bicyclic"
    OTHER = "Other"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.rows) != self.n:
            raise GraphError("need one adjacency row per vertex")

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.rows[u] >> v & 1]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
    rows = [0] * n
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint of ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if rows[u] >> v & 1:
            raise GraphError(f"duplicate edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or g.has_edge(u, v):
        raise GraphError(f"cannot add ({u}, {v})")
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def delete_vertices(g: Graph, vs: Iterable[int]) -> Graph:
    """Induced subgraph on the surviving vertices, relabelled in their original order."""
    gone = set(vs)
    for v in gone:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    keep = [v for v in range(g.n) if v not in gone]
    return induced_subgraph(g, keep)


def induced_subgraph(g: Graph, keep: Sequence[int]) -> Graph:
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        r = 0
        for w in _bits(g.rows[v]):
            i = pos.get(w)
            if i is not None:
                r |= 1 << i
        rows.append(r)
    return Graph(len(keep), tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_ORDER:
        raise GraphError(f"union order {g.n + h.n} exceeds {MAX_ORDER}")
    return Graph(g.n + h.n, g.rows + tuple(r << g.n for r in h.rows))


def union(*graphs: Graph) -> Graph:
    out = empty_graph(0)
    for h in graphs:
        out = disjoint_union(out, h)
    return out


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph in which old vertex ``v`` becomes ``perm[v]``."""
    rows = [0] * g.n
    for v in range(g.n):
        r = 0
        for w in _bits(g.rows[v]):
            r |= 1 << perm[w]
        rows[perm[v]] = r
    return Graph(g.n, tuple(rows))


# -- structure ---------------------------------------------------------------

def components(g: Graph) -> list[list[int]]:
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in _bits(g.rows[v]):
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _require_connected(g: Graph, what: str) -> None:
    if not is_connected(g):
        raise GraphError(f"{what} needs a connected graph")


def diameter(g: Graph) -> int:
    _require_connected(g, "diameter")
    return max(max(bfs_distances(g, v)) for v in range(g.n))


def classify(g: Graph) -> GraphClass:
    _require_connected(g, "classify")
    rank = g.m - g.n + 1
    return {0: GraphClass.TREE, 1: GraphClass.UNICYCLIC, 2: GraphClass.BICYCLIC}.get(rank, GraphClass.OTHER)


@dataclass(frozen=True)
class BicyclicStructure:
    """Two chosen cycles of a bicyclic graph.

    ``t`` counts shared edges. With ``t >= 1`` the third cycle has length
    ``c = a + b - 2t``; with ``t == 0``, ``l`` is the distance between the cycles.
    """

    a: int
    b: int
    t: int
    c: Optional[int] = None
    l: Optional[int] = None


def _edge_index(g: Graph) -> dict[tuple[int, int], int]:
    return {e: i for i, e in enumerate(g.edges())}


def cycle_space_cycles(g: Graph) -> list[frozenset[tuple[int, int]]]:
    """Every simple cycle of a graph with cycle rank <= 2, as an edge set."""
    comps = components(g)
    rank = g.m - g.n + len(comps)
    if rank > 2:
        raise GraphError("cycle listing supports cycle rank <= 2 only")
    # fundamental cycles from a BFS forest
    parent = [-1] * g.n
    depth = [0] * g.n
    tree_edges = set()
    for comp in comps:
        root = comp[0]
        parent[root] = root
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in _bits(g.rows[v]):
                if parent[w] < 0:
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    tree_edges.add((min(v, w), max(v, w)))
                    queue.append(w)
    basis = []
    for u, v in g.edges():
        if (u, v) in tree_edges:
            continue
        cyc = {(u, v)}
        x, y = u, v
        while x != y:
            if depth[x] < depth[y]:
                x, y = y, x
            p = parent[x]
            cyc.add((min(x, p), max(x, p)))
            x = p
        basis.append(frozenset(cyc))
    candidates = list(basis)
    if len(basis) == 2:
        candidates.append(basis[0] ^ basis[1])
    return [c for c in candidates if _is_simple_cycle(c)]


def _is_simple_cycle(edge_set: frozenset) -> bool:
    if not edge_set:
        return False
    deg: dict[int, int] = {}
    for u, v in edge_set:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if any(d != 2 for d in deg.values()):
        return False
    # connected 2-regular edge set
    verts = list(deg)
    sub = from_edge_list(len(verts), [(verts.index(u), verts.index(v)) for u, v in edge_set])
    return is_connected(sub)


def cycle_structure(g: Graph) -> BicyclicStructure:
    if classify(g) is not GraphClass.BICYCLIC:
        raise GraphError("cycle_structure needs a bicyclic graph")
    cycles = cycle_space_cycles(g)
    if len(cycles) == 2:
        c1, c2 = sorted(cycles, key=len)
        v1 = {v for e in c1 for v in e}
        v2 = {v for e in c2 for v in e}
        gap = min(d for s in v1 for t, d in enumerate(bfs_distances(g, s)) if t in v2)
        return BicyclicStructure(len(c1), len(c2), 0, l=gap)
    best = None
    for x, y in combinations(cycles, 2):
        t = len(x & y)
        a, b = sorted((len(x), len(y)))
        if a - t >= t and b - t >= t:
            cand = (t, a, b)
            if best is None or cand < best:
                best = cand
    assert best is not None, "theta graph always admits an admissible pair"
    t, a, b = best
    return BicyclicStructure(a, b, t, c=a + b - 2 * t)


# -- canonical labeling ------------------------------------------------------

def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; splits are ordered by neighbour-count signature."""
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple((rows[v] & mk).bit_count() for mk in masks) for v in cell}
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            changed = True
            out.extend(groups[s] for s in sorted(groups))
        cells = out
        if not changed:
            return cells


def _certificate(rows: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(rows)
    for i, v in enumerate(order):
        pos[v] = i
    cert = []
    for v in order:
        r = 0
        for w in _bits(rows[v]):
            r |= 1 << pos[w]
        cert.append(r)
    return tuple(cert)


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Adjacency rows under a labeling that depends only on the isomorphism class.

    Individualization-refinement search; interchangeable twin vertices are tried
    once per twin class, which keeps stars and pendant bundles cheap.
    """
    rows = g.rows
    if g.n == 0:
        return ()
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(rows[v].bit_count(), []).append(v)
    start = [by_degree[k] for k in sorted(by_degree)]
    best: list = [None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(rows, cells)
        target = None
        for i, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = i
        if target is None:
            cert = _certificate(rows, [c[0] for c in cells])
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(_twins(rows, v, u) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search(start)
    return best[0]


def _twins(rows: tuple[int, ...], u: int, v: int) -> bool:
    mask = ~((1 << u) | (1 << v))
    return rows[u] & mask == rows[v] & mask


def canonical_key(g: Graph) -> bytes:
    """Compact byte string: order, then the upper triangle of the canonical adjacency matrix."""
    cert = canonical_form(g)
    bits = 0
    k = 0
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if cert[i] >> j & 1:
                bits |= 1 << k
            k += 1
    return bytes([g.n]) + bits.to_bytes((k + 7) // 8, "little")


def key_hex(g: Graph) -> str:
    return canonical_key(g).hex()


def canonical_graph(g: Graph) -> Graph:
    return Graph(g.n, canonical_form(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_key(g) == canonical_key(h)


# -- text format -------------------------------------------------------------

def parse_graph_text(text: str) -> Graph:
    """Parse ``n`` on the first line then one ``u v`` edge per line; ``#`` comments."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphError("empty graph description")
    try:
        n = int(lines[0])
        edges = []
        for line in lines[1:]:
            u, v = line.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise GraphError(f"malformed graph text: {exc}") from None
    return from_edge_list(n, edges)


def format_graph_text(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"
