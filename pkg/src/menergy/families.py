"""Named graph families and the ``ID:key=value,...`` spec grammar used by the CLI.

Labeling conventions (all constructors are deterministic):

* ``U_{n,d}``: quadrangle ``0-1-2-3-0``; a path of ``d-3`` vertices hangs from
  vertex 2; vertex 0 carries ``n-d-1`` pendant vertices.
* ``B_{n,d}``: ``U_{n,d}`` plus an edge from vertex 2 to the first pendant of
  vertex 0, so the core is ``K_{2,3}`` on parts ``{0, 2}`` and ``{1, 3, d+1}``.
* ``B_n^s``: path ``0..n-2`` plus vertex ``n-1`` joined to ``s, s+1, s+2``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph, GraphError, empty_graph, from_edge_list


class FamilyError(GraphError):
    pass


class Family(str, enum.Enum):
    PATH = "P"
    STAR = "S"
    CYCLE = "C"
    COMPLETE = "K"
    BROOM = "T"
    UNI_MIN = "U"
    BI_MIN = "B"
    BI_PATH = "Bs"
    TRI_MIN_D2 = "Tri"
    U42A = "U42a"
    U42B = "U42b"
    BN2A = "Bn2a"
    BN2B = "Bn2b"


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int
    d: Optional[int] = None
    s: Optional[int] = None

    def __str__(self) -> str:
        parts = [f"n={self.n}"]
        if self.d is not None:
            parts.append(f"d={self.d}")
        if self.s is not None:
            parts.append(f"s={self.s}")
        return f"{self.family.value}:{','.join(parts)}"


@dataclass(frozen=True)
class FamilyTemplate:
    family: Family
    name: str
    params: tuple[str, ...]
    constraint: str
    description: str = field(default="", compare=False)

    def to_dict(self) -> dict:
        return {"id": self.family.value, "name": self.name, "params": list(self.params),
                "constraint": self.constraint, "description": self.description}


_CATALOG = (
    FamilyTemplate(Family.PATH, "Path", ("n",), "n >= 0", "path P_n (P_0 is the empty graph)"),
    FamilyTemplate(Family.STAR, "Star", ("n",), "n >= 1", "star S_n, one centre and n-1 leaves"),
    FamilyTemplate(Family.CYCLE, "Cycle", ("n",), "n >= 3", "cycle C_n"),
    FamilyTemplate(Family.COMPLETE, "Complete", ("n",), "n >= 1", "complete graph K_n"),
    FamilyTemplate(Family.BROOM, "Broom", ("n", "d"), "1 <= d <= n-1",
                   "T_{n,d}: n-d pendants at an end of P_d; T_{n,1} = T_{n,2} = S_n"),
    FamilyTemplate(Family.UNI_MIN, "UniMin", ("n", "d"), "3 <= d <= n-2",
                   "U_{n,d}: quadrangle, path of d-3 at one vertex, n-d-1 pendants at the opposite one"),
    FamilyTemplate(Family.BI_MIN, "BiMin", ("n", "d"), "3 <= d <= n-3",
                   "B_{n,d}: U_{n,d} plus an edge closing a second quadrangle through a pendant"),
    FamilyTemplate(Family.BI_PATH, "BiPath", ("n", "s"), "n >= 5, 0 <= s <= floor(n/2)-2",
                   "B_n^s: P_{n-1} plus a vertex adjacent to path vertices s, s+1, s+2"),
    FamilyTemplate(Family.TRI_MIN_D2, "TriMinD2", ("n",), "n >= 5",
                   "triangle with n-3 pendants at one vertex"),
    FamilyTemplate(Family.U42A, "U42a", (), "n = 4", "triangle with a pendant"),
    FamilyTemplate(Family.U42B, "U42b", (), "n = 4", "C_4"),
    FamilyTemplate(Family.BN2A, "Bn2a", ("n",), "n >= 6",
                   "two triangles sharing a vertex, n-5 pendants at the shared vertex"),
    FamilyTemplate(Family.BN2B, "Bn2b", ("n",), "n >= 6",
                   "K_4 minus an edge, n-4 pendants at a degree-3 vertex"),
)


def list_supported() -> list[FamilyTemplate]:
    return list(_CATALOG)


def _check(ok: bool, spec: FamilySpec, constraint: str) -> None:
    if not ok:
        raise FamilyError(f"{spec}: parameters violate {constraint}")


def path(n: int) -> Graph:
    if n < 0:
        raise FamilyError("path order must be >= 0")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    if n < 1:
        raise FamilyError("star order must be >= 1")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyError("cycle order must be >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise FamilyError("complete graph order must be >= 1")
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def broom(n: int, d: int) -> Graph:
    """``T_{n,d}``: path ``0..d-1`` with ``n-d`` pendants on vertex 0."""
    if not 1 <= d <= n - 1:
        raise FamilyError(f"T:n={n},d={d}: need 1 <= d <= n-1")
    if d <= 2:
        return star(n)
    edges = [(i, i + 1) for i in range(d - 1)] + [(0, v) for v in range(d, n)]
    return from_edge_list(n, edges)


def _uni_min_edges(n: int, d: int) -> list[tuple[int, int]]:
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    prev = 2
    for v in range(4, d + 1):
        edges.append((prev, v))
        prev = v
    edges += [(0, v) for v in range(d + 1, n)]
    return edges


def uni_min(n: int, d: int) -> Graph:
    if not 3 <= d <= n - 2:
        raise FamilyError(f"U:n={n},d={d}: need 3 <= d <= n-2")
    return from_edge_list(n, _uni_min_edges(n, d))


def bi_min(n: int, d: int) -> Graph:
    if not 3 <= d <= n - 3:
        raise FamilyError(f"B:n={n},d={d}: need 3 <= d <= n-3")
    return from_edge_list(n, _uni_min_edges(n, d) + [(2, d + 1)])


def bi_path(n: int, s: int) -> Graph:
    if n < 5 or not 0 <= s <= n // 2 - 2:
        raise FamilyError(f"Bs:n={n},s={s}: need n >= 5 and 0 <= s <= floor(n/2)-2")
    return _bi_path_any(n, s)


def _bi_path_any(n: int, s: int) -> Graph:
    """``B_n^s`` for any attachment position ``0 <= s <= n-4`` (mirror images included)."""
    w = n - 1
    edges = [(i, i + 1) for i in range(n - 2)] + [(w, s), (w, s + 1), (w, s + 2)]
    return from_edge_list(n, edges)


def tri_min_d2(n: int) -> Graph:
    if n < 5:
        raise FamilyError("Tri: need n >= 5")
    return from_edge_list(n, [(0, 1), (1, 2), (2, 0)] + [(0, v) for v in range(3, n)])


def butterfly_pendants(n: int) -> Graph:
    if n < 6:
        raise FamilyError("Bn2a: need n >= 6")
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)] + [(0, v) for v in range(5, n)]
    return from_edge_list(n, edges)


def diamond_pendants(n: int) -> Graph:
    """K_4 minus edge 2-3, pendants on vertex 0 (degree 3 in the diamond)."""
    if n < 6:
        raise FamilyError("Bn2b: need n >= 6")
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)] + [(0, v) for v in range(4, n)]
    return from_edge_list(n, edges)


def build(spec: FamilySpec) -> Graph:
    f, n, d, s = spec.family, spec.n, spec.d, spec.s
    if f in (Family.BROOM, Family.UNI_MIN, Family.BI_MIN):
        _check(d is not None, spec, "d is required")
    if f is Family.BI_PATH:
        _check(s is not None, spec, "s is required")
    try:
        if f is Family.PATH:
            return path(n)
        if f is Family.STAR:
            return star(n)
        if f is Family.CYCLE:
            return cycle(n)
        if f is Family.COMPLETE:
            return complete(n)
        if f is Family.BROOM:
            return broom(n, d)
        if f is Family.UNI_MIN:
            return uni_min(n, d)
        if f is Family.BI_MIN:
            return bi_min(n, d)
        if f is Family.BI_PATH:
            return bi_path(n, s)
        if f is Family.TRI_MIN_D2:
            return tri_min_d2(n)
        if f in (Family.U42A, Family.U42B):
            _check(n == 4, spec, "n = 4")
            if f is Family.U42A:
                return from_edge_list(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
            return cycle(4)
        if f is Family.BN2A:
            return butterfly_pendants(n)
        if f is Family.BN2B:
            return diamond_pendants(n)
    except FamilyError:
        raise
    except GraphError as exc:
        raise FamilyError(f"{spec}: {exc}") from None
    raise FamilyError(f"unknown family {f}")


_SPEC_RE = re.compile(r"^\s*([A-Za-z0-9]+)\s*(?::\s*(.*))?$")


def parse_family_spec(text: str) -> FamilySpec:
    """Parse ``"U:n=8,d=6"``; ``U42a`` and ``U42b`` need no parameters."""
    match = _SPEC_RE.match(text)
    if not match:
        raise FamilyError(f"malformed family spec {text!r}")
    ident, body = match.group(1), match.group(2) or ""
    try:
        family = Family(ident)
    except ValueError:
        raise FamilyError(f"unknown family id {ident!r}") from None
    params: dict[str, int] = {}
    for item in filter(None, (p.strip() for p in body.split(","))):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in ("n", "d", "s"):
            raise FamilyError(f"bad parameter {item!r} in {text!r}")
        try:
            params[key] = int(value)
        except ValueError:
            raise FamilyError(f"non-integer value in {item!r}") from None
    if family in (Family.U42A, Family.U42B):
        params.setdefault("n", 4)
    if "n" not in params:
        raise FamilyError(f"{text!r}: n is required")
    return FamilySpec(family, params["n"], params.get("d"), params.get("s"))


def build_from_text(text: str) -> Graph:
    return build(parse_family_spec(text))


def empty() -> Graph:
    return empty_graph(0)
