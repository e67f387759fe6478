"""Isomorphism-free generation of trees, unicyclic and bicyclic graphs.

Trees grow by one leaf at a time; unicyclic graphs are trees plus a non-edge;
bicyclic graphs are unicyclic graphs plus a non-edge. Each stage is
deduplicated by canonical key, so every isomorphism class appears exactly once.
Streams are sorted by canonical key.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional

from .graph import (Graph, GraphClass, GraphError, add_edge, canonical_graph, canonical_key,
                    diameter, empty_graph, is_connected)

MAX_CLASS_ORDER = 12
MAX_CONNECTED_ORDER = 7


class EnumerationLimitError(GraphError):
    pass


@dataclass(frozen=True)
class EnumQuery:
    kind: GraphClass
    n: int
    d: Optional[int] = None


@dataclass(frozen=True)
class _Entry:
    key: bytes
    graph: Graph
    diameter: int


def _dedup(candidates) -> dict[bytes, Graph]:
    out: dict[bytes, Graph] = {}
    for g in candidates:
        key = canonical_key(g)
        if key not in out:
            out[key] = canonical_graph(g)
    return out


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (empty_graph(1),)
    if n == 2:
        return (Graph(2, (2, 1)),)

    def grow():
        for t in _trees(n - 1):
            for v in range(n - 1):
                rows = list(t.rows) + [1 << v]
                rows[v] |= 1 << (n - 1)
                yield Graph(n, tuple(rows))

    found = _dedup(grow())
    return tuple(found[k] for k in sorted(found))


@lru_cache(maxsize=None)
def _add_one_edge(kind: GraphClass, n: int) -> tuple[Graph, ...]:
    base = _trees(n) if kind is GraphClass.UNICYCLIC else _class_graphs(GraphClass.UNICYCLIC, n)
    found = _dedup(add_edge(g, u, v) for g in base for u, v in g.non_edges())
    return tuple(found[k] for k in sorted(found))


def _class_graphs(kind: GraphClass, n: int) -> tuple[Graph, ...]:
    if kind is GraphClass.TREE:
        return _trees(n)
    if kind is GraphClass.UNICYCLIC:
        return _add_one_edge(kind, n) if n >= 3 else ()
    if kind is GraphClass.BICYCLIC:
        return _add_one_edge(kind, n) if n >= 4 else ()
    raise EnumerationLimitError(f"cannot enumerate class {kind.value}")


@lru_cache(maxsize=None)
def _entries(kind: GraphClass, n: int) -> tuple[_Entry, ...]:
    return tuple(_Entry(canonical_key(g), g, diameter(g)) for g in _class_graphs(kind, n))


def _check(q: EnumQuery) -> None:
    if q.kind not in (GraphClass.TREE, GraphClass.UNICYCLIC, GraphClass.BICYCLIC):
        raise EnumerationLimitError(f"class {q.kind.value} is not enumerable")
    if not 1 <= q.n <= MAX_CLASS_ORDER:
        raise EnumerationLimitError(f"class enumeration supports 1 <= n <= {MAX_CLASS_ORDER}")


def enumerate_class(q: EnumQuery) -> Iterator[Graph]:
    _check(q)
    for e in _entries(q.kind, q.n):
        if q.d is None or e.diameter == q.d:
            yield e.graph


def count_class(q: EnumQuery) -> int:
    _check(q)
    return sum(1 for e in _entries(q.kind, q.n) if q.d is None or e.diameter == q.d)


def class_members(kind: GraphClass, n: int, d: Optional[int] = None) -> list[Graph]:
    return list(enumerate_class(EnumQuery(kind, n, d)))


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    """Every graph on ``n`` vertices up to isomorphism, by single-edge augmentation."""
    level = {canonical_key(empty_graph(n)): empty_graph(n)}
    out = dict(level)
    for _ in range(n * (n - 1) // 2):
        level = _dedup(add_edge(g, u, v) for g in level.values() for u, v in g.non_edges())
        out.update(level)
    return tuple(out[k] for k in sorted(out))


def enumerate_connected(n: int) -> Iterator[Graph]:
    if not 1 <= n <= MAX_CONNECTED_ORDER:
        raise EnumerationLimitError(f"connected-graph oracle supports 1 <= n <= {MAX_CONNECTED_ORDER}")
    for g in _all_graphs(n):
        if is_connected(g):
            yield g


def labeled_connected_brute_force(n: int) -> list[Graph]:
    """Connected graphs by scanning all labeled edge subsets (slow; n <= 6 in practice)."""
    pairs = list(combinations(range(n), 2))
    found: dict[bytes, Graph] = {}
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        g = Graph(n, tuple(rows))
        if is_connected(g):
            found.setdefault(canonical_key(g), g)
    return [found[k] for k in sorted(found)]


def dump_jsonl(graphs, fh) -> int:
    count = 0
    for g in graphs:
        fh.write(json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()],
                             "key": canonical_key(g).hex()}) + "\n")
        count += 1
    return count
