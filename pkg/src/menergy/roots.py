"""Certified real-root isolation for integer polynomials.

Squarefree decomposition (Yun) followed by Sturm-sequence bisection on dyadic
rationals, all in exact arithmetic. Coefficient lists are descending.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


class RootIsolationError(ArithmeticError):
    """The polynomial does not have the expected real roots."""


def _strip(p) -> list:
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return list(p[i:])


def _is_zero(p) -> bool:
    return all(c == 0 for c in p)


def derivative(p) -> list:
    deg = len(p) - 1
    if deg == 0:
        return [0]
    return [c * (deg - i) for i, c in enumerate(p[:-1])]


def divmod_poly(a, b) -> tuple[list[Fraction], list[Fraction]]:
    a = [Fraction(x) for x in _strip(a)]
    b = [Fraction(x) for x in _strip(b)]
    if _is_zero(b):
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    r = a[:]
    for i in range(len(q)):
        coef = r[i] / b[0]
        q[i] = coef
        if coef:
            for j, bj in enumerate(b):
                r[i + j] -= coef * bj
    rem = _strip(r[len(q):]) if len(b) > 1 else [Fraction(0)]
    return q, rem


def _monic(p) -> list[Fraction]:
    p = _strip([Fraction(x) for x in p])
    return [c / p[0] for c in p]


def poly_gcd(a, b) -> list[Fraction]:
    """Monic gcd over the rationals."""
    a, b = _strip(a), _strip(b)
    while not _is_zero(b):
        _, r = divmod_poly(a, b)
        a, b = b, r
    return _monic(a)


def _sub(a, b) -> list:
    size = max(len(a), len(b))
    a = [0] * (size - len(a)) + list(a)
    b = [0] * (size - len(b)) + list(b)
    return _strip([x - y for x, y in zip(a, b)])


def primitive(p) -> list[int]:
    """Integer multiple of ``p`` with content 1 and positive leading coefficient."""
    p = [Fraction(c) for c in _strip(p)]
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g == 0:
        return [0]
    ints = [c // g for c in ints]
    return [-c for c in ints] if ints[0] < 0 else ints


def squarefree_decomposition(p) -> list[tuple[list[int], int]]:
    """Yun's algorithm: ``p = const * prod f_i**i`` with squarefree, pairwise coprime ``f_i``."""
    p = _monic(p)
    if len(p) == 1:
        return []
    dp = derivative(p)
    a = poly_gcd(p, dp)
    b, _ = divmod_poly(p, a)
    c, _ = divmod_poly(dp, a)
    d = _sub(c, derivative(b))
    out = []
    mult = 1
    while len(_strip(b)) > 1:
        f = poly_gcd(b, d) if not _is_zero(d) else _monic(b)
        if len(f) > 1:
            out.append((primitive(f), mult))
        b, _ = divmod_poly(b, f)
        c, _ = divmod_poly(d, f) if not _is_zero(d) else ([Fraction(0)], None)
        d = _sub(c, derivative(b))
        mult += 1
    return out


def sturm_chain(p) -> list[list[int]]:
    """Sturm sequence of ``p``; each member rescaled by a positive constant to integers."""
    cur = [Fraction(x) for x in _strip(p)]
    nxt = [Fraction(x) for x in derivative(cur)]
    chain = [_positive_scale(cur), _positive_scale(nxt)]
    while len(nxt) > 1:
        _, r = divmod_poly(cur, nxt)
        if _is_zero(r):
            break
        cur, nxt = nxt, [-x for x in r]
        chain.append(_positive_scale(nxt))
    return chain


def _positive_scale(p) -> list[int]:
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g else ints


def sign_at(p: Sequence[int], num: int, exp: int) -> int:
    """Sign of ``p(num / 2**exp)`` via the homogenised integer Horner scheme."""
    step = 1 << exp
    scale = 1
    acc = 0
    for c in p:
        acc = acc * num + c * scale
        scale *= step
    return (acc > 0) - (acc < 0)


def _variations(chain, num: int, exp: int) -> int:
    count = 0
    last = 0
    for q in chain:
        s = sign_at(q, num, exp)
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


def _variations_at_infinity(chain, direction: int) -> int:
    count = 0
    last = 0
    for q in chain:
        s = (1 if q[0] > 0 else -1) * (direction ** (len(q) - 1))
        if last and s != last:
            count += 1
        last = s
    return count


def count_real_roots(p) -> int:
    """Number of distinct real roots (Sturm's theorem over the whole line)."""
    chain = sturm_chain(p)
    return _variations_at_infinity(chain, -1) - _variations_at_infinity(chain, 1)


def _bound_exponent(p: Sequence[int]) -> int:
    """``e`` with every root of ``p`` inside ``(-2**e, 2**e)`` (Cauchy bound)."""
    lead = abs(p[0])
    bound = 1 + -(-max((abs(c) for c in p[1:]), default=0) // lead)
    return bound.bit_length()


def isolate_positive_roots(p: Sequence[int]) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals ``(lo, hi]``, one per distinct positive root of squarefree ``p``."""
    chain = sturm_chain(p)
    stack = [(0, 1 << _bound_exponent(p), 0)]
    found = []
    while stack:
        lo, hi, exp = stack.pop()
        count = _variations(chain, lo, exp) - _variations(chain, hi, exp)
        if count == 0:
            continue
        if count == 1:
            found.append((Fraction(lo, 1 << exp), Fraction(hi, 1 << exp)))
            continue
        if exp > 200:
            raise RootIsolationError("roots closer than 2**-200")
        mid = lo + hi
        stack.append((2 * lo, mid, exp + 1))
        stack.append((mid, 2 * hi, exp + 1))
    return sorted(found)


def refine_root(p: Sequence[int], lo: Fraction, hi: Fraction, rel_tol: float = 1e-13) -> float:
    """Bisect an isolating interval ``(lo, hi]`` of squarefree ``p`` to relative width ``rel_tol``."""
    exp = max(lo.denominator, hi.denominator).bit_length() - 1
    a, b = int(lo * (1 << exp)), int(hi * (1 << exp))
    if sign_at(p, b, exp) == 0:
        return float(hi)
    sa = sign_at(p, a, exp)
    if sa == 0:
        # lo is a root owned by the neighbouring interval: shrink with Sturm counts
        chain = sturm_chain(p)
        while sa == 0:
            a, b, exp = 2 * a, 2 * b, exp + 1
            mid = (a + b) // 2
            if _variations(chain, mid, exp) - _variations(chain, b, exp) == 1:
                a = mid
            else:
                b = mid
                if sign_at(p, b, exp) == 0:
                    return b / (1 << exp)
            sa = sign_at(p, a, exp)
    while True:
        width = (b - a) / (1 << exp)
        if width <= rel_tol * (a / (1 << exp)) or width < 1e-30:
            break
        a, b, exp = 2 * a, 2 * b, exp + 1
        mid = (a + b) // 2
        sm = sign_at(p, mid, exp)
        if sm == 0:
            return mid / (1 << exp)
        if sm == sa:
            a = mid
        else:
            b = mid
    return (a + b) / 2 / (1 << exp)


def positive_real_roots(p: Sequence[int], rel_tol: float = 1e-13) -> list[tuple[float, int]]:
    """Distinct positive roots of ``p`` with multiplicities, after dividing out powers of x.

    Raises :class:`RootIsolationError` unless every remaining root is real and positive.
    """
    p = _strip(list(p))
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    out = []
    total = 0
    for factor, mult in squarefree_decomposition(p):
        deg = len(factor) - 1
        intervals = isolate_positive_roots(factor)
        if len(intervals) != deg:
            raise RootIsolationError(
                f"{len(intervals)} positive roots bracketed for a squarefree factor of degree {deg}"
            )
        out.extend((refine_root(factor, lo, hi, rel_tol), mult) for lo, hi in intervals)
        total += deg * mult
    if total != len(p) - 1:
        raise RootIsolationError("multiplicities do not account for the degree")
    return sorted(out)
