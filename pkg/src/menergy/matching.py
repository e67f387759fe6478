"""Exact k-matching counts and matching polynomials.

The counts come from the edge-deletion recurrence
``m_k(G) = m_k(G - uv) + m_{k-1}(G - u - v)``, memoised on the canonical key of
each connected component. A disconnected graph's vector is the convolution of
its components' vectors.
"""

from __future__ import annotations

import os
import threading
from itertools import combinations
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .graph import Graph, canonical_key, components, delete_edge, delete_vertices, induced_subgraph

MatchingVector = tuple[int, ...]


class MatchingCache:
    """Canonical key -> trimmed matching vector of a connected graph.

    Writes are idempotent (a key always maps to the same vector) so concurrent
    threads may race on ``put`` without harm.
    """

    def __init__(self):
        self._data: dict[bytes, MatchingVector] = {}
        self._loaded: set[bytes] = set()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def __len__(self):
        return len(self._data)

    def __contains__(self, key):
        return key in self._data

    def get(self, key: bytes) -> Optional[MatchingVector]:
        vec = self._data.get(key)
        if vec is None:
            self.misses += 1
        else:
            self.hits += 1
        return vec

    def put(self, key: bytes, vec: MatchingVector) -> MatchingVector:
        with self._lock:
            return self._data.setdefault(key, vec)

    def clear(self):
        with self._lock:
            self._data.clear()
            self._loaded.clear()

    def load(self, path) -> int:
        """Read ``hexkey:m0,m1,...,`` records; returns how many were new."""
        path = Path(path)
        if not path.exists():
            return 0
        added = 0
        with path.open() as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                hexkey, _, body = line.partition(":")
                key = bytes.fromhex(hexkey)
                vec = tuple(int(x) for x in body.split(",") if x)
                if key not in self._data:
                    added += 1
                self.put(key, vec)
                self._loaded.add(key)
        return added

    def save(self, path) -> int:
        """Append every record not already present in ``path``."""
        fresh = [k for k in sorted(self._data) if k not in self._loaded]
        if not fresh:
            return 0
        path = Path(path)
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True)
        with path.open("a") as fh:
            for key in fresh:
                fh.write(f"{key.hex()}:{''.join(f'{x},' for x in self._data[key])}\n")
        self._loaded.update(fresh)
        return len(fresh)


DEFAULT_CACHE = MatchingCache()


def default_cache_path() -> Optional[str]:
    return os.environ.get("MENERGY_CACHE")


def add_vectors(a: Sequence[int], b: Sequence[int]) -> MatchingVector:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


def shift(a: Sequence[int]) -> MatchingVector:
    """``k -> k+1``: the contribution of a fixed edge to the larger graph."""
    return (0,) + tuple(a)


def convolve(a: Sequence[int], b: Sequence[int]) -> MatchingVector:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def trim(a: Sequence[int]) -> MatchingVector:
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return tuple(a)


def pad(a: Sequence[int], length: int) -> MatchingVector:
    return tuple(a) + (0,) * (length - len(a))


def _pivot_edge(g: Graph) -> tuple[int, int]:
    degs = g.degrees()
    u = max(range(g.n), key=lambda v: (degs[v], -v))
    v = max(g.neighbors(u), key=lambda w: (degs[w], -w))
    return u, v


def _connected_vector(g: Graph, cache: MatchingCache) -> MatchingVector:
    if g.m == 0:
        return (1,)
    if g.m == 1:
        return (1, 1)
    key = canonical_key(g)
    vec = cache.get(key)
    if vec is not None:
        return vec
    degs = g.degrees()
    if g.m == g.n - 1 and max(degs) == g.n - 1:
        vec = (1, g.m)
    else:
        u, v = _pivot_edge(g)
        vec = trim(add_vectors(_vector(delete_edge(g, u, v), cache),
                               shift(_vector(delete_vertices(g, (u, v)), cache))))
    return cache.put(key, vec)


def _vector(g: Graph, cache: MatchingCache) -> MatchingVector:
    out: MatchingVector = (1,)
    for comp in components(g):
        if len(comp) == 1:
            continue
        sub = g if len(comp) == g.n else induced_subgraph(g, comp)
        out = convolve(out, _connected_vector(sub, cache))
    return out


def matching_vector(g: Graph, cache: Optional[MatchingCache] = None) -> MatchingVector:
    """``(m_0, ..., m_{n//2})`` with exact integers; trailing zeros kept to length n//2 + 1."""
    vec = _vector(g, DEFAULT_CACHE if cache is None else cache)
    return pad(vec, g.n // 2 + 1)


def matching_number(vec: Sequence[int]) -> int:
    return len(trim(vec)) - 1


def hosoya_index(g: Graph, cache: Optional[MatchingCache] = None) -> int:
    return sum(matching_vector(g, cache))


@dataclass(frozen=True)
class IntPolynomial:
    """Exact integer polynomial, coefficients in descending degree."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> int:
        i = self.degree - power
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        a = (0,) * (size - len(self.coeffs)) + self.coeffs
        b = (0,) * (size - len(other.coeffs)) + other.coeffs
        diff = [x - y for x, y in zip(a, b)]
        while len(diff) > 1 and diff[0] == 0:
            diff.pop(0)
        return IntPolynomial(tuple(diff))

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def format(self, var: str = "u") -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = self.degree - i
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + var + (f"^{power}" if power > 1 else "")
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts) or "0"

    def __str__(self) -> str:
        return self.format()


def polynomial_from_vector(vec: Sequence[int], n: int) -> IntPolynomial:
    coeffs = [0] * (n + 1)
    for k, mk in enumerate(vec):
        if mk:
            if 2 * k > n:
                raise ValueError("k-matching count beyond n/2")
            coeffs[2 * k] = (-1) ** k * mk
    return IntPolynomial(tuple(coeffs))


def matching_polynomial(g: Graph, cache: Optional[MatchingCache] = None) -> IntPolynomial:
    return polynomial_from_vector(matching_vector(g, cache), g.n)


def brute_force_vector(g: Graph) -> MatchingVector:
    """Count edge subsets of each size that are matchings (test oracle)."""
    edges = g.edges()
    out = [1]
    for k in range(1, g.n // 2 + 1):
        count = 0
        for subset in combinations(edges, k):
            used = 0
            ok = True
            for u, v in subset:
                bit = (1 << u) | (1 << v)
                if used & bit:
                    ok = False
                    break
                used |= bit
            count += ok
        out.append(count)
    return tuple(out)


def vectors_of(graphs: Iterable[Graph], cache: Optional[MatchingCache] = None) -> list[MatchingVector]:
    return [matching_vector(g, cache) for g in graphs]
