"""Characteristic polynomial, adjacency spectrum, graph energy and matching energy."""

from __future__ import annotations

import enum
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

import numpy as np

from .graph import Graph
from .matching import MatchingCache, matching_vector, trim
from .roots import positive_real_roots


class QuadratureError(ArithmeticError):
    pass


class Method(str, enum.Enum):
    ROOTS = "roots"
    QUADRATURE = "quad"
    BOTH = "both"


@dataclass(frozen=True)
class CharPoly:
    """``det(xI - A)`` as exact integers, descending degree."""

    a: tuple[int, ...]

    @property
    def b(self) -> tuple[int, ...]:
        return tuple(abs(x) for x in self.a)


def adjacency_matrix(g: Graph) -> np.ndarray:
    A = np.zeros((g.n, g.n))
    for u, v in g.edges():
        A[u, v] = A[v, u] = 1.0
    return A


def char_poly(g: Graph) -> CharPoly:
    """Faddeev-LeVerrier over the integers.

    Each step divides an integer trace by ``k``; a nonzero remainder means an
    arithmetic bug and aborts.
    """
    n = g.n
    A = [[1 if g.has_edge(i, j) else 0 for j in range(n)] for i in range(n)]
    coeffs = [1]
    M = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[-1]
        # M_k = A M_{k-1} + c_{k-1} I
        AM = [[sum(A[i][t] * M[t][j] for t in range(n) if A[i][t]) for j in range(n)] for i in range(n)]
        for i in range(n):
            AM[i][i] += c_prev
        M = AM
        tr = sum(A[i][t] * M[t][i] for i in range(n) for t in range(n) if A[i][t])
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError(f"non-integral characteristic coefficient at step {k}")
        coeffs.append(q)
    return CharPoly(tuple(coeffs))


def jacobi_eigenvalues(S: np.ndarray, tol: float = 1e-15, max_sweeps: int = 100) -> np.ndarray:
    """Cyclic Jacobi rotations on a dense symmetric matrix; eigenvalues in descending order."""
    A = np.array(S, dtype=float)
    n = A.shape[0]
    if n == 0:
        return np.zeros(0)
    scale = max(np.abs(A).max(), 1.0)
    for _ in range(max_sweeps):
        off = math.sqrt(float(np.sum(np.triu(A, 1) ** 2)))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                ap = A[:, p].copy()
                aq = A[:, q].copy()
                A[:, p] = c * ap - s * aq
                A[:, q] = s * ap + c * aq
                rp = A[p, :].copy()
                rq = A[q, :].copy()
                A[p, :] = c * rp - s * rq
                A[q, :] = s * rp + c * rq
                A[p, q] = A[q, p] = 0.0
    else:
        raise ArithmeticError("Jacobi iteration did not converge")
    return np.sort(np.diag(A))[::-1]


def eigenvalues(g: Graph) -> list[float]:
    return [float(x) for x in jacobi_eigenvalues(adjacency_matrix(g))]


def graph_energy(g: Graph) -> float:
    return float(sum(abs(x) for x in eigenvalues(g)))


def _reduced_polynomial(vec: Sequence[int]) -> list[int]:
    """``q(x) = sum_k (-1)^k m_k x^(M-k)``, so that the matching polynomial is ``mu^(n-2M) q(mu^2)``."""
    return [(-1) ** k * mk for k, mk in enumerate(vec)]


def matching_roots_from_vector(vec: Sequence[int]) -> list[float]:
    """Nonnegative roots ``mu`` of the matching polynomial (one sign of each +/- pair), with multiplicity."""
    vec = trim(vec)
    if len(vec) == 1:
        return []
    out = []
    for x, mult in positive_real_roots(_reduced_polynomial(vec)):
        out.extend([math.sqrt(x)] * mult)
    return sorted(out, reverse=True)


def me_from_roots(vec: Sequence[int]) -> float:
    return 2.0 * math.fsum(matching_roots_from_vector(vec))


def _adaptive_simpson(f, a: float, b: float, tol: float, budget: int) -> float:
    evals = [0]

    def F(x):
        evals[0] += 1
        if evals[0] > budget:
            raise QuadratureError(f"quadrature exceeded {budget} integrand evaluations")
        return f(x)

    def step(a, fa, m, fm, b, fb, whole, tol, depth):
        lm, rm = (a + m) / 2, (m + b) / 2
        flm, frm = F(lm), F(rm)
        left = (m - a) / 6 * (fa + 4 * flm + fm)
        right = (b - m) / 6 * (fm + 4 * frm + fb)
        delta = left + right - whole
        if depth <= 0:
            raise QuadratureError("quadrature hit the recursion depth limit")
        if abs(delta) <= 15 * tol or (b - a) < 1e-12:
            return left + right + delta / 15
        return (step(a, fa, lm, flm, m, fm, left, tol / 2, depth - 1)
                + step(m, fm, rm, frm, b, fb, right, tol / 2, depth - 1))

    # start from a few panels so narrow features are not missed
    panels = 8
    total = 0.0
    h = (b - a) / panels
    for i in range(panels):
        x0, x1 = a + i * h, a + (i + 1) * h
        xm = (x0 + x1) / 2
        f0, fm, f1 = F(x0), F(xm), F(x1)
        whole = (x1 - x0) / 6 * (f0 + 4 * fm + f1)
        total += step(x0, f0, xm, fm, x1, f1, whole, tol / panels, 60)
    return total


def me_from_quadrature(vec: Sequence[int], tol: float = 1e-8, budget: int = 2_000_000) -> float:
    """Integral representation ``(2/pi) int_0^inf x^-2 ln(sum_k m_k x^2k) dx``.

    Split at 1; on ``[1, inf)`` substitute ``u = 1/x`` and integrate the
    ``-2M ln u`` part analytically (it contributes ``2M``), leaving smooth
    integrands on ``[0, 1]``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = [float(x) for x in trim(vec)]
    M = len(m) - 1
    if M == 0:
        return 0.0

    def inner(x):
        if x == 0.0:
            return m[1]
        x2 = x * x
        s = 0.0
        for mk in reversed(m[1:]):
            s = (s + mk) * x2
        return math.log1p(s) / x2

    def outer(u):
        u2 = u * u
        s = 0.0
        for mk in m:
            s = s * u2 + mk
        return math.log(s)

    part = _adaptive_simpson(inner, 0.0, 1.0, tol / 4, budget) + _adaptive_simpson(outer, 0.0, 1.0, tol / 4, budget)
    return 2.0 / math.pi * (part + 2 * M)


def _round12(x):
    if x is None:
        return None
    if isinstance(x, list):
        return [_round12(v) for v in x]
    return float(f"{x:.12g}")


@dataclass
class EnergyReport:
    eigenvalues: Optional[list[float]] = None
    energy: Optional[float] = None
    matching_energy: Optional[float] = None
    matching_roots: list[float] = field(default_factory=list)
    tre: Optional[float] = None
    method_gap: Optional[float] = None

    def to_dict(self) -> dict:
        return {k: _round12(v) for k, v in asdict(self).items()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def matching_energy(g: Graph, method: Method | str = Method.ROOTS, tol: float = 1e-8,
                    cache: Optional[MatchingCache] = None) -> EnergyReport:
    """Matching energy by certified roots, by the integral, or both (roots value returned)."""
    if g.n < 1:
        raise ValueError("matching energy needs n >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    method = Method(method)
    vec = matching_vector(g, cache)
    report = EnergyReport()
    if method in (Method.ROOTS, Method.BOTH):
        mu = matching_roots_from_vector(vec)
        # full root list: each positive mu and its negative, plus zeros
        report.matching_roots = mu + [0.0] * (g.n - 2 * len(mu)) + [-x for x in reversed(mu)]
        report.matching_energy = 2.0 * math.fsum(mu)
    if method in (Method.QUADRATURE, Method.BOTH):
        quad = me_from_quadrature(vec, tol)
        if method is Method.QUADRATURE:
            report.matching_energy = quad
        else:
            report.method_gap = abs(report.matching_energy - quad)
    return report


def me(g: Graph, cache: Optional[MatchingCache] = None) -> float:
    return me_from_roots(matching_vector(g, cache))


def tre(g: Graph, cache: Optional[MatchingCache] = None) -> float:
    return graph_energy(g) - me(g, cache)


def energy_report(g: Graph, method: Method | str = Method.ROOTS, tol: float = 1e-8,
                  cache: Optional[MatchingCache] = None) -> EnergyReport:
    report = matching_energy(g, method, tol, cache)
    report.eigenvalues = eigenvalues(g)
    report.energy = math.fsum(abs(x) for x in report.eigenvalues)
    report.tre = report.energy - report.matching_energy
    return report
