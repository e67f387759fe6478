"""Component-wise quasi-orders on matching vectors and on |charpoly| coefficients."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, GraphError
from .matching import MatchingCache, matching_vector
from .spectral import char_poly


class Outcome(str, enum.Enum):
    EQUAL = "Equal"
    DOMINATES = "Dominates"
    STRICTLY_DOMINATES = "StrictlyDominates"
    DOMINATED_BY = "DominatedBy"
    STRICTLY_DOMINATED_BY = "StrictlyDominatedBy"
    INCOMPARABLE = "Incomparable"

    def mirror(self) -> "Outcome":
        return _MIRROR[self]


_MIRROR = {
    Outcome.EQUAL: Outcome.EQUAL,
    Outcome.DOMINATES: Outcome.DOMINATED_BY,
    Outcome.DOMINATED_BY: Outcome.DOMINATES,
    Outcome.STRICTLY_DOMINATES: Outcome.STRICTLY_DOMINATED_BY,
    Outcome.STRICTLY_DOMINATED_BY: Outcome.STRICTLY_DOMINATES,
    Outcome.INCOMPARABLE: Outcome.INCOMPARABLE,
}


@dataclass(frozen=True)
class QuasiOrderResult:
    """Outcome of comparing two sequences index by index.

    ``witness`` is the highest index where the left side is larger (or, for
    ``StrictlyDominatedBy``, smaller). ``witness_other`` is only set for
    ``Incomparable`` and points at the highest index going the other way.
    """

    outcome: Outcome
    witness: Optional[int] = None
    witness_other: Optional[int] = None
    left: tuple[int, ...] = ()
    right: tuple[int, ...] = ()
    orders: tuple[int, int] = (0, 0)
    sizes: tuple[int, int] = (0, 0)

    @property
    def weakly_dominates(self) -> bool:
        return self.outcome in (Outcome.EQUAL, Outcome.DOMINATES, Outcome.STRICTLY_DOMINATES)

    @property
    def strictly_dominates(self) -> bool:
        return self.outcome is Outcome.STRICTLY_DOMINATES

    def mirror(self) -> "QuasiOrderResult":
        if self.outcome is Outcome.INCOMPARABLE:
            w, wo = self.witness_other, self.witness
        else:
            w, wo = self.witness, None
        return QuasiOrderResult(self.outcome.mirror(), w, wo, self.right, self.left,
                                self.orders[::-1], self.sizes[::-1])

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "witness": self.witness,
            "witness_other": self.witness_other,
            "left": list(self.left),
            "right": list(self.right),
            "orders": list(self.orders),
            "sizes": list(self.sizes),
        }


def compare_sequences(a: Sequence[int], b: Sequence[int]) -> QuasiOrderResult:
    """Six-way comparison with zero padding to a common length."""
    size = max(len(a), len(b))
    a = tuple(a) + (0,) * (size - len(a))
    b = tuple(b) + (0,) * (size - len(b))
    up = next((i for i in reversed(range(size)) if a[i] > b[i]), None)
    down = next((i for i in reversed(range(size)) if a[i] < b[i]), None)
    if up is None and down is None:
        return QuasiOrderResult(Outcome.EQUAL, left=a, right=b)
    if down is None:
        return QuasiOrderResult(Outcome.STRICTLY_DOMINATES, up, left=a, right=b)
    if up is None:
        return QuasiOrderResult(Outcome.STRICTLY_DOMINATED_BY, down, left=a, right=b)
    return QuasiOrderResult(Outcome.INCOMPARABLE, up, down, left=a, right=b)


def _with_shape(res: QuasiOrderResult, g: Graph, h: Graph) -> QuasiOrderResult:
    return QuasiOrderResult(res.outcome, res.witness, res.witness_other, res.left, res.right,
                            (g.n, h.n), (g.m, h.m))


def compare_matching(g: Graph, h: Graph, cache: Optional[MatchingCache] = None) -> QuasiOrderResult:
    """``g`` against ``h`` under m_k(g) >= m_k(h) for all k. No order/size precondition."""
    res = compare_sequences(matching_vector(g, cache), matching_vector(h, cache))
    return _with_shape(res, g, h)


def compare_coeff(g: Graph, h: Graph) -> QuasiOrderResult:
    """``g`` against ``h`` under b_i(g) >= b_i(h), ``b_i = |a_i|`` of the characteristic polynomial."""
    if g.n != h.n:
        raise GraphError(f"coefficient order needs equal orders, got {g.n} and {h.n}")
    res = compare_sequences(char_poly(g).b, char_poly(h).b)
    return _with_shape(res, g, h)
